"""Recover a theta-form operator from the head of its holomorphic solution."""

from dataclasses import dataclass
from fractions import Fraction

from ..errors import Ambiguous, NoFit
from ..exact.linalg import rational_linear_solve
from ..exact.poly import Poly
from ..operator.theta import ThetaOperator


@dataclass(frozen=True)
class FitResult:
    op: ThetaOperator
    residual_rank_info: str


def fit_operator(s, order, degree, holdout=5):
    """Solve sum_i P_i(n - i) a_{n-i} = 0 for P_1..P_degree with P_0 = theta^order.

    The last ``holdout`` coefficients are not used for solving, only for
    checking the result.
    """
    if order < 1 or degree < 0:
        raise ValueError("need order >= 1 and degree >= 0")
    a = s.coeffs
    last = s.order - holdout
    unknowns = degree * (order + 1)
    if last < unknowns:
        raise NoFit(f"{s.order + 1} coefficients are too few for {unknowns} unknowns plus {holdout} held out")
    rows, rhs = [], []
    for n in range(1, last + 1):
        row = []
        for i in range(1, degree + 1):
            m = n - i
            for k in range(order + 1):
                row.append(Fraction(m) ** k * a[m] if m >= 0 else Fraction(0))
        rows.append(row)
        rhs.append(-Fraction(n) ** order * a[n])
    if unknowns == 0:
        if any(rhs):
            raise NoFit(f"theta^{order} does not annihilate the series")
        sol = ()
        rank = 0
    else:
        res = rational_linear_solve(rows, rhs)
        if res.status == "inconsistent":
            raise NoFit(f"no operator of order {order} and degree {degree} fits (rank {res.rank})")
        if res.status == "family":
            dim = len(res.nullspace)
            raise Ambiguous(f"solution space of dimension {dim} (rank {res.rank} of {unknowns})", dim)
        sol, rank = res.particular, res.rank
    polys = [Poly.monomial(order)]
    for i in range(degree):
        polys.append(Poly(sol[i * (order + 1):(i + 1) * (order + 1)]))
    op = ThetaOperator(polys)
    if not op.apply(s).is_zero():
        raise NoFit("fitted operator fails on the held-out coefficients")
    info = f"rank {rank} of {unknowns} unknowns from {last} equations; {holdout} held-out coefficients verified"
    return FitResult(op, info)
