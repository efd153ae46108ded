"""Differential operators in theta-form, L = sum_i x**i * P_i(theta).

Multiplication follows the commutation rule theta * x = x * (theta + 1), so
products of factors written in any order normalise to the theta-form.
"""

import re
from fractions import Fraction

from ..errors import MixedVariableError, OperatorSyntaxError
from ..exact.jet import JET_DEPTH, Jet
from ..exact.poly import Poly
from ..exact.rational import as_fraction, format_rational
from ..exact.series import PowerSeries


def _ore_mul(left, right):
    """Multiply two dicts {x-power: Poly in theta}."""
    out = {}
    for i, p in left.items():
        for j, q in right.items():
            term = p.taylor_shift(j) * q
            out[i + j] = out.get(i + j, Poly()) + term
    return {k: v for k, v in out.items() if not v.is_zero()}


def _ore_add(left, right, sign=1):
    out = dict(left)
    for j, q in right.items():
        out[j] = out.get(j, Poly()) + q * sign
    return {k: v for k, v in out.items() if not v.is_zero()}


class ThetaOperator:
    """``sum_i x**i * P_i(theta)`` with exact rational coefficients."""

    __slots__ = ("theta_polys",)

    def __init__(self, theta_polys):
        polys = [p if isinstance(p, Poly) else Poly(p) for p in theta_polys]
        while polys and polys[-1].is_zero():
            polys.pop()
        if not polys:
            raise ValueError("the zero operator is not allowed")
        if max(p.degree for p in polys) < 1:
            raise ValueError("operator of order 0")
        object.__setattr__(self, "theta_polys", tuple(polys))

    def __setattr__(self, name, value):
        raise AttributeError("ThetaOperator is immutable")

    def __reduce__(self):
        return (ThetaOperator, (self.theta_polys,))

    @classmethod
    def from_dict(cls, terms):
        if any(k < 0 for k in terms):
            raise MixedVariableError("negative power of x; not a theta-form operator")
        top = max(terms) if terms else -1
        return cls([terms.get(i, Poly()) for i in range(top + 1)])

    @classmethod
    def parse(cls, text):
        return parse_operator(text)

    @property
    def order(self):
        return max(p.degree for p in self.theta_polys)

    @property
    def degree(self):
        return len(self.theta_polys) - 1

    def P(self, i):
        return self.theta_polys[i] if 0 <= i < len(self.theta_polys) else Poly()

    def as_dict(self):
        return {i: p for i, p in enumerate(self.theta_polys) if not p.is_zero()}

    def __eq__(self, other):
        if isinstance(other, ThetaOperator):
            return self.theta_polys == other.theta_polys
        return NotImplemented

    def __hash__(self):
        return hash(self.theta_polys)

    def __add__(self, other):
        return ThetaOperator.from_dict(_ore_add(self.as_dict(), other.as_dict()))

    def __sub__(self, other):
        return ThetaOperator.from_dict(_ore_add(self.as_dict(), other.as_dict(), -1))

    def __mul__(self, other):
        """Composition ``self * other`` (apply other first), or scaling."""
        if isinstance(other, ThetaOperator):
            return ThetaOperator.from_dict(_ore_mul(self.as_dict(), other.as_dict()))
        c = as_fraction(other)
        return ThetaOperator([p * c for p in self.theta_polys])

    def __rmul__(self, other):
        c = as_fraction(other)
        return ThetaOperator([p * c for p in self.theta_polys])

    def normalized(self):
        """Scale so that the leading theta-coefficient of P_0 is 1."""
        lc = self.P(0).lc
        if lc == 0:
            return self
        return self * (1 / lc)

    def scale_x(self, c):
        """Substitute x -> c*x."""
        c = as_fraction(c)
        return ThetaOperator([p * c**i for i, p in enumerate(self.theta_polys)])

    def leading_x_poly(self):
        """The x-polynomial multiplying theta**order."""
        n = self.order
        return Poly([p[n] for p in self.theta_polys])

    def apply(self, s):
        """Apply to a power series; the result keeps the input order."""
        n = s.order
        out = [Fraction(0)] * (n + 1)
        for i, p in enumerate(self.theta_polys):
            if p.is_zero():
                continue
            for k in range(0, n + 1 - i):
                if s.coeffs[k]:
                    out[k + i] += p(k) * s.coeffs[k]
        return PowerSeries(out, n)

    def apply_log_graded(self, parts):
        """Apply to ``y = sum_j log(x)**j / j! * parts[j]``.

        Returns the series ``g_j`` with ``L y = sum_j log(x)**j / j! * g_j``.
        Uses ``P(theta) x**n log**k/k! = sum_m P^(m)(n)/m! x**n log**(k-m)/(k-m)!``.
        """
        n = min(p.order for p in parts)
        depth = len(parts)
        out = [[Fraction(0)] * (n + 1) for _ in range(depth)]
        for i, p in enumerate(self.theta_polys):
            if p.is_zero():
                continue
            for k in range(0, n + 1 - i):
                taylor = p.taylor_shift(k).coeffs
                for j, part in enumerate(parts):
                    c = part.coeffs[k]
                    if not c:
                        continue
                    for m in range(0, min(j, len(taylor) - 1) + 1):
                        if m < len(taylor) and taylor[m]:
                            out[j - m][k + i] += taylor[m] * c
        return [PowerSeries(row, n) for row in out]

    def jet_poly(self, i, point):
        """Taylor jet of P_i(point + eps)."""
        return Jet.poly_at(self.P(i), point)

    def format(self, var="T", xvar="x"):
        return format_operator(self, var, xvar)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"ThetaOperator({self.format()})"


# --- printing --------------------------------------------------------------

def format_operator(op, var="T", xvar="x"):
    pieces = []
    for i, p in enumerate(op.theta_polys):
        if p.is_zero():
            continue
        xs = "" if i == 0 else (xvar if i == 1 else f"{xvar}^{i}")
        lc = p.lc
        monic = p * (1 / lc)
        nonzero = [c for c in monic.coeffs if c]
        sign = "-" if lc < 0 else "+"
        mag = abs(lc)
        if i == 0 and len(nonzero) > 1:
            # the theta-only part is printed expanded with its own signs
            body = p.format(var, descending=True)
            sign = "+"
            if body.startswith("-"):
                sign, body = "-", body[1:]
            pieces.append((sign, body))
            continue
        factors = []
        if mag != 1:
            factors.append(format_rational(mag))
        if xs:
            factors.append(xs)
        if len(nonzero) == 1:
            if monic.degree > 0:
                factors.append(monic.format(var, descending=True))
        else:
            factors.append(f"({monic.format(var, descending=True)})")
        pieces.append((sign, "*".join(factors) if factors else "1"))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# --- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:\s*/\s*\d+)?)|(\*\*|[-+*^()])|([A-Za-z_θ]+))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise OperatorSyntaxError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos)
        start = m.start(m.lastindex)
        num, sym, name = m.groups()
        if num is not None:
            tokens.append(("num", num.replace(" ", ""), start))
        elif sym is not None:
            tokens.append(("sym", "^" if sym == "**" else sym, start))
        else:
            tokens.append(("name", name, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


_THETA = {0: Poly([0, 1])}
_X = {1: Poly([1])}
_D = {-1: Poly([0, 1])}  # d/dx = x^-1 * theta


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, sym):
        tok = self.take()
        if tok[0] != "sym" or tok[1] != sym:
            raise OperatorSyntaxError(f"expected {sym!r}", tok[2])

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise OperatorSyntaxError(f"unexpected token {tok[1]!r}", tok[2])
        return value

    def expr(self):
        tok = self.peek()
        sign = 1
        if tok[0] == "sym" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        value = self.term()
        if sign < 0:
            value = {k: -v for k, v in value.items()}
        while True:
            tok = self.peek()
            if tok[0] == "sym" and tok[1] in "+-":
                self.take()
                value = _ore_add(value, self.term(), -1 if tok[1] == "-" else 1)
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "sym" and tok[1] == "*":
                self.take()
                value = _ore_mul(value, self.factor())
            elif tok[0] == "name" or (tok[0] == "sym" and tok[1] == "("):
                # implicit product such as 5x(T+1)
                value = _ore_mul(value, self.factor())
            else:
                return value

    def factor(self):
        base = self.base()
        tok = self.peek()
        if tok[0] == "sym" and tok[1] == "^":
            self.take()
            exp = self.take()
            if exp[0] == "sym" and exp[1] == "(":
                exp = self.take()
                self.expect(")")
            if exp[0] != "num" or "/" in exp[1]:
                raise OperatorSyntaxError("exponent must be a nonnegative integer", exp[2])
            k = int(exp[1])
            result = {0: Poly([1])}
            for _ in range(k):
                result = _ore_mul(result, base)
            return result
        return base

    def base(self):
        tok = self.take()
        kind, value, pos = tok
        if kind == "num":
            c = as_fraction(value)
            return {0: Poly([c])} if c else {}
        if kind == "name":
            if value in ("T", "theta", "θ"):
                return dict(_THETA)
            if value == "x":
                return dict(_X)
            if value == "D":
                return dict(_D)
            raise MixedVariableError(f"unknown variable {value!r} at position {pos}")
        if kind == "sym" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            raise OperatorSyntaxError("unexpected end of input", pos)
        raise OperatorSyntaxError(f"unexpected token {value!r}", pos)


def parse_operator(text):
    """Parse an operator written with T (theta), x, rationals, + - * ^ and brackets."""
    terms = _Parser(text).parse()
    if not terms:
        raise OperatorSyntaxError("expression is the zero operator", 0)
    return ThetaOperator.from_dict(terms)


def theta_op(*polys):
    """Build an operator from P_0, P_1, ... given as Polys or coefficient lists."""
    return ThetaOperator(list(polys))


def jet_depth_ok(op):
    return op.order <= JET_DEPTH
