"""Named lower-order operators and the degree-two operators built from them."""

from dataclasses import dataclass
from fractions import Fraction as F

from ..errors import UnknownName
from ..exact.poly import Poly
from ..exact.series import PowerSeries
from ..operator.theta import ThetaOperator

T = Poly([0, 1])


def lin(*shifts, scale=1):
    """scale * prod (theta + s)."""
    return Poly.linear_factors([F(s) for s in shifts], scale)


def _p(*coeffs_desc):
    """Polynomial in theta from coefficients, highest power first."""
    return Poly(list(reversed(coeffs_desc)))


@dataclass(frozen=True)
class NamedOperator:
    key: str
    op: ThetaOperator
    solution_head: tuple = None
    description: str = ""

    def head_series(self):
        if self.solution_head is None:
            return None
        return PowerSeries(self.solution_head)


# -- constructors -----------------------------------------------------------

def hypergeometric(N, exponents):
    """theta^n - N x prod (theta + alpha_i)."""
    n = len(exponents)
    return ThetaOperator([T**n, -lin(*exponents, scale=N)])


def heun2(a, b, c):
    """theta^2 - x (a theta^2 + a theta + b) + c x^2 (theta + 1)^2."""
    return ThetaOperator([T**2, -_p(a, a, b), lin(1, 1, scale=c)])


def heun3(a, b, c, shifts=(1, 1, 1)):
    """theta^3 - x (2 theta + 1)(a theta^2 + a theta + b) + c x^2 prod (theta + s)."""
    return ThetaOperator([T**3, -(_p(2, 1) * _p(a, a, b)), lin(*shifts, scale=c)])


def tilde_operator(N, mu, nu):
    """The fourth-order pull-back of the fifth-order hypergeometric operator.

    theta^4 - 4Nx(2 s^4 + (7/2 - mu^2 - nu^2)/2 s^2 + 1/16 - (mu^2 + 1/4)(nu^2 + 1/4)/4)
    + (4N)^2 x^2 prod (theta + 1 +- (mu +- nu)/2), with s = theta + 1/2.
    """
    N, mu, nu = F(N), F(mu), F(nu)
    s = Poly([F(1, 2), 1])
    m2, n2 = mu * mu, nu * nu
    inner = s**4 * 2 + s**2 * ((F(7, 2) - m2 - n2) / 2) + (F(1, 16) - (m2 + F(1, 4)) * (n2 + F(1, 4)) / 4)
    p, q = (mu + nu) / 2, (mu - nu) / 2
    top = lin(1 + p, 1 - p, 1 + q, 1 - q, scale=(4 * N) ** 2)
    return ThetaOperator([T**4, -(inner * (4 * N)), top])


# -- data -------------------------------------------------------------------

HYP2 = {  # name: (N, alpha, printed head)
    "A": (16, F(1, 2), (1, 4, 36, 400)),
    "B": (27, F(1, 3), (1, 6, 90, 1680)),
    "C": (64, F(1, 4), (1, 12, 420, 18480)),
    "D": (432, F(1, 6), (1, 60, 13860, 4084080)),
}

MU2 = {  # Moebius transforms of A..D: name: (source, a, b, c, head)
    "e": ("A", 32, 12, 16**2, (1, 12, 164)),
    "h": ("B", 54, 21, 27**2, (1, 21, 495)),
    "i": ("C", 128, 52, 64**2, (1, 52, 2980)),
    "j": ("D", 864, 372, 432**2, (1, 372, 148644)),
}

BZB = {  # AZ-name: (a, b, c, head, Q for the twist identity, partner)
    "a": (7, 2, -8, (1, 2, 10, 56)),
    "c": (10, 3, 9, (1, 3, 15, 93)),
    "g": (17, 6, 72, (1, 6, 42, 312)),
    "d": (12, 4, 32, (1, 4, 20, 112)),
    "f": (9, 3, 27, (1, 3, 9, 21)),
    "b": (11, 3, -1, (1, 3, 19, 147)),
}

BZB3 = {
    "delta": (7, 3, 81, (1, 3, 9, 3, -279)),
    "alpha": (10, 4, 64, (1, 4, 28, 256)),
    "gamma": (17, 5, 1, (1, 5, 73, 1445)),
    "epsilon": (12, 4, 16, (1, 4, 40, 544)),
    "eta": (11, 5, 125, (1, 5, 35, 275)),
    "zeta": (9, 3, -27, (1, 3, 27, 309)),
}

# BZB -> BZB' and the polynomial Q(x) of Y0(-x/Q) = Q y0^2
TWIST = {
    "a": ("delta", Poly([1, 1]) * Poly([1, -8])),
    "c": ("alpha", Poly([1, -1]) * Poly([1, -9])),
    "g": ("gamma", Poly([1, -8]) * Poly([1, -9])),
    "d": ("epsilon", Poly([1, -4]) * Poly([1, -8])),
    "f": ("zeta", Poly([1, -9, 27])),
    "b": ("eta", Poly([1, -11, -1])),
}

# symmetric squares: the x^2 part is a^2 (theta + 1 - s)(theta + 1)(theta + 1 + s)
SYM2 = {"A": (16, 8, F(0)), "B": (27, 12, F(1, 3)), "C": (64, 24, F(1, 2)), "D": (432, 120, F(2, 3))}

# transformed symmetric squares: x^2 part a^2 (theta + 1)^3
MSYM2 = {
    "beta": ("A", 16, 8, (1, 8, 88, 1088)),
    "iota": ("B", 27, 15, (1, 15, 297, 6495)),
    "theta": ("C", 64, 40, (1, 40, 2008, 109120)),
    "kappa": ("D", 432, 312, (1, 312, 114264, 44196288)),
}

SPORADIC = {
    1: (ThetaOperator([T**3, -(_p(2, 1) * _p(3, 3, 1)) * 2, -(lin(F(3, 4), 1, F(5, 4), scale=64))]),
        (1, 2, 18, 164, 1810, 21252, 263844)),
    2: (ThetaOperator([T**3, -(_p(2, 1) * _p(13, 13, 4)), -(lin(F(2, 3), 1, F(4, 3), scale=27))]),
        (1, 4, 48, 760, 13840, 273504, 5703096)),
    3: (ThetaOperator([T**3, -(_p(2, 1) * _p(7, 7, 3)) * 2, lin(F(3, 4), 1, F(5, 4), scale=192)]),
        (1, 6, 54, 564, 6390, 76356, 948276)),
}

# the fourteen hypergeometric exponent quadruples and their N
HYP4 = {
    1: ((F(1, 5), F(2, 5), F(3, 5), F(4, 5)), 5**5),
    2: ((F(1, 10), F(3, 10), F(7, 10), F(9, 10)), 2**8 * 5**5),
    3: ((F(1, 2),) * 4, 2**8),
    4: ((F(1, 3), F(1, 3), F(2, 3), F(2, 3)), 3**6),
    5: ((F(1, 3), F(1, 2), F(1, 2), F(2, 3)), 2**4 * 3**3),
    6: ((F(1, 4), F(1, 2), F(1, 2), F(3, 4)), 2**10),
    7: ((F(1, 8), F(3, 8), F(5, 8), F(7, 8)), 2**16),
    8: ((F(1, 6), F(1, 3), F(2, 3), F(5, 6)), 2**4 * 3**6),
    9: ((F(1, 12), F(5, 12), F(7, 12), F(11, 12)), 2**12 * 3**6),
    10: ((F(1, 4), F(1, 4), F(3, 4), F(3, 4)), 2**12),
    11: ((F(1, 4), F(1, 3), F(2, 3), F(3, 4)), 2**6 * 3**3),
    12: ((F(1, 6), F(1, 4), F(3, 4), F(5, 6)), 2**10 * 3**3),
    13: ((F(1, 6), F(1, 6), F(5, 6), F(5, 6)), 2**8 * 3**6),
    14: ((F(1, 6), F(1, 2), F(1, 2), F(5, 6)), 2**8 * 3**3),
}

# infinity exponents of the tilde operators as tabulated
TILDE_INFINITY = {
    1: (F(4, 5), F(9, 10), F(11, 10), F(6, 5)),
    2: (F(7, 10), F(9, 10), F(11, 10), F(13, 10)),
    3: (1, 1, 1, 1),
    4: (F(5, 6), 1, 1, F(7, 6)),
    5: (F(11, 12), F(11, 12), F(13, 12), F(13, 12)),
    6: (F(7, 8), F(7, 8), F(9, 8), F(9, 8)),
    7: (F(3, 4), F(7, 8), F(9, 8), F(5, 4)),
    8: (F(3, 4), F(11, 12), F(13, 12), F(5, 4)),
    9: (F(3, 4), F(5, 6), F(7, 6), F(5, 4)),
    10: (F(3, 4), 1, 1, F(5, 4)),
    11: (F(19, 24), F(23, 24), F(25, 24), F(29, 24)),
    12: (F(17, 24), F(23, 24), F(25, 24), F(31, 24)),
    13: (F(2, 3), 1, 1, F(4, 3)),
    14: (F(5, 6), F(5, 6), F(7, 6), F(7, 6)),
}


def tilde_params(case):
    """(N, mu, nu) with mu = alpha_3 - 1/2 and nu = alpha_4 - 1/2."""
    exps, N = HYP4[case]
    return F(N), exps[2] - F(1, 2), exps[3] - F(1, 2)


def hyp5_operator(case):
    exps, N = HYP4[case]
    a1, a2, a3, a4 = exps
    return hypergeometric(4 * N, (a1, a2, F(1, 2), a3, a4))


# -- registry ---------------------------------------------------------------

def _entries():
    out = {}

    def add(key, op, head=None, desc=""):
        out[key] = NamedOperator(key, op, tuple(head) if head else None, desc)

    add("I", hypergeometric(4, [F(1, 2)]), (1, 2, 6, 20), "central binomial coefficients")
    for name, (N, al, head) in HYP2.items():
        add(name, hypergeometric(N, [al, 1 - al]), head, "second-order hypergeometric")
        add(f"hyp3:{name}", hypergeometric(4 * N, [al, F(1, 2), 1 - al]), None, f"I*{name}")
        a, b, s = SYM2[name]
        add(f"sym2:{name}", heun3(a, b, a * a, (1 - s, 1, 1 + s)), None, f"symmetric square of {name}")
    for name, (src, a, b, c, head) in MU2.items():
        add(f"mu({src})", heun2(a, b, c), head, f"Moebius transform of {src} (AZ name {name})")
    for name, (a, b, c, head) in BZB.items():
        add(f"bzb:{name}", heun2(a, b, c), head, "Beukers-Zagier-Beauville operator")
    for name, (a, b, c, head) in BZB3.items():
        add(f"bzb3:{name}", heun3(a, b, c), head, "third-order BZB' operator")
    for name, (src, a, b, head) in MSYM2.items():
        add(f"msym2:{name}", heun3(a, b, a * a), head, f"transformed symmetric square of {src}")
    for k, (op, head) in SPORADIC.items():
        add(f"sporadic:{k}", op, head, "sporadic third-order operator")
    for k, (exps, N) in HYP4.items():
        add(f"hyp4:{k}", hypergeometric(N, exps), None, "fourth-order hypergeometric")
        add(f"hyp5:{k}", hyp5_operator(k), None, "fifth-order hypergeometric")
        add(f"tilde:{k}", tilde_operator(*tilde_params(k)), None, "tilde operator")
    add("strange3", ThetaOperator([T**3, -(_p(2, 1) * _p(5, 5, 2)) * 4, lin(F(2, 3), F(4, 3), 1, scale=432)]),
        (1, 8, 96, 1280, 17440, 231168), "Bogner's third-order operator L")
    add("strange", ThetaOperator([T**4, -(_p(2, 1) ** 2 * _p(5, 5, 2)) * 8,
                                  _p(2, 1) * _p(3, 2) * _p(3, 4) * _p(2, 3) * 192]),
        (1, 16, 576, 25600, 1220800, 58254336), "I*L with non-integral instanton numbers")
    d = out["D"].op
    add("reducible:DD", d * d, (1, 60, 13860, 4084080, 1338557220, 465817912560), "compositional square of D")
    add("star:I*beta", ThetaOperator([T**4, -(_p(4, 1) * _p(4, 3) * _p(8, 8, 3)) * 16,
                                      _p(4, 1) * _p(4, 3) * _p(4, 5) * _p(4, 7) * 4096]),
        None, "quadratic transform of I*beta")
    return out


ALIASES = {"e": "mu(A)", "h": "mu(B)", "i": "mu(C)", "j": "mu(D)",
           "beta": "msym2:beta", "iota": "msym2:iota", "theta": "msym2:theta", "kappa": "msym2:kappa",
           "mu(sym2:A)": "msym2:beta", "mu(sym2:B)": "msym2:iota",
           "mu(sym2:C)": "msym2:theta", "mu(sym2:D)": "msym2:kappa",
           "A'": "hyp3:A", "B'": "hyp3:B", "C'": "hyp3:C", "D'": "hyp3:D"}
for _k in BZB:
    ALIASES.setdefault(_k, f"bzb:{_k}")
for _k in BZB3:
    ALIASES.setdefault(_k, f"bzb3:{_k}")
for _k in range(1, 4):
    ALIASES[f"Spor{_k}"] = f"sporadic:{_k}"

REGISTRY = _entries()


def registry_keys():
    return sorted(REGISTRY)


def resolve_key(key):
    key = key.strip()
    if key in REGISTRY:
        return key
    if key in ALIASES:
        return ALIASES[key]
    raise UnknownName(f"unknown operator name {key!r}")


def build_named(key):
    return REGISTRY[resolve_key(key)]
