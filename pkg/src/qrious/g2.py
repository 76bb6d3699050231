"""Bivariate Laurent polynomials with q-polynomial coefficients and the G2 constant term."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .poly import ONE, ZERO, IntPoly, poly_eval_int

__all__ = [
    "BudgetExceeded",
    "LaurentMonomial",
    "LaurentPoly2",
    "M_BASES",
    "N_BASES",
    "DEFAULT_BUDGET",
    "resolve_budget",
    "lp_mul_factor",
    "pochhammer_factors",
    "g2_product",
    "constant_term",
    "g2_constant_term",
    "verify_g2",
]

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    pass


def resolve_budget(budget: int | None = None) -> int:
    """Explicit budget, else $QRIOUS_BUDGET, else the default."""
    if budget is not None:
        return budget
    env = os.environ.get("QRIOUS_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


@dataclass(frozen=True)
class LaurentMonomial:
    """q^qpow x^xpow y^ypow."""
    qpow: int
    xpow: int
    ypow: int

    def __post_init__(self):
        if self.qpow < 0:
            raise ValueError("q-power must be non-negative")

    def times_q(self, s: int) -> "LaurentMonomial":
        return LaurentMonomial(self.qpow + s, self.xpow, self.ypow)


class LaurentPoly2:
    """Sparse map (xpow, ypow) -> nonzero IntPoly in q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls({(0, 0): ONE})

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, ZERO) + c
        return LaurentPoly2(out)

    def scale(self, c: IntPoly | int) -> "LaurentPoly2":
        if isinstance(c, int):
            c = IntPoly([c])
        return LaurentPoly2({k: v * c for k, v in self.terms.items()})

    def specialize(self, q: int) -> "LaurentPoly2":
        """Replace every coefficient by its value at ``q`` (as a constant polynomial)."""
        return LaurentPoly2({k: IntPoly([poly_eval_int(v, q)]) for k, v in self.terms.items()})

    def exponent_extent(self) -> tuple[int, int]:
        """Largest |xpow| and largest |ypow| among stored terms."""
        xs = max((abs(a) for a, _ in self.terms), default=0)
        ys = max((abs(b) for _, b in self.terms), default=0)
        return xs, ys

    def dump(self) -> str:
        """Sorted text dump, one ``xpow ypow : coefficient`` line per term."""
        return "\n".join(f"{a} {b} : {self.terms[(a, b)]}" for a, b in sorted(self.terms))


def lp_mul_factor(p: LaurentPoly2, m: LaurentMonomial) -> LaurentPoly2:
    """p * (1 - q^s x^a y^b), zero coefficients pruned."""
    out = dict(p.terms)
    for (a, b), c in p.terms.items():
        key = (a + m.xpow, b + m.ypow)
        out[key] = out.get(key, ZERO) - c.shift(m.qpow)
    return LaurentPoly2(out)


def pochhammer_factors(base: LaurentMonomial, count: int) -> list[LaurentMonomial]:
    """The monomials a, aq, ..., aq^(count-1) of (a; q)_count."""
    return [base.times_q(j) for j in range(count)]


# bases in the order they are listed in the product
M_BASES = (
    LaurentMonomial(0, 1, 0),    # x
    LaurentMonomial(1, -1, 0),   # q/x
    LaurentMonomial(0, 0, 1),    # y
    LaurentMonomial(1, 0, -1),   # q/y
    LaurentMonomial(0, -1, 1),   # y/x
    LaurentMonomial(1, 1, -1),   # qx/y
)
N_BASES = (
    LaurentMonomial(0, 1, 1),    # xy
    LaurentMonomial(1, -1, -1),  # q/xy
    LaurentMonomial(0, -2, 1),   # y/x^2
    LaurentMonomial(1, 2, -1),   # qx^2/y
    LaurentMonomial(0, -1, 2),   # y^2/x
    LaurentMonomial(1, 1, -2),   # qx/y^2
)


def g2_product(m: int, n: int, budget: int | None = None,
               specialize_q1: bool = False) -> LaurentPoly2:
    """The 6(m+n)-factor product whose constant term is A_q(m, n).

    With ``specialize_q1`` every coefficient is evaluated at q = 1 after each
    factor, giving the integer Laurent polynomial of the q = 1 case.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    budget = resolve_budget(budget)
    factors = [f for base in M_BASES for f in pochhammer_factors(base, m)]
    factors += [f for base in N_BASES for f in pochhammer_factors(base, n)]
    p = LaurentPoly2.one()
    xbound = ybound = 0
    for f in factors:
        p = lp_mul_factor(p, f)
        if specialize_q1:
            p = p.specialize(1)
        xbound += abs(f.xpow)
        ybound += abs(f.ypow)
        xs, ys = p.exponent_extent()
        assert xs <= xbound and ys <= ybound, "Laurent exponent escaped its bound"
        if len(p) > budget:
            raise BudgetExceeded(
                f"{len(p)} stored terms exceed the budget of {budget} at (m, n) = ({m}, {n})")
    return p


def constant_term(p: LaurentPoly2) -> IntPoly:
    return p.terms.get((0, 0), ZERO)


def g2_constant_term(m: int, n: int, budget: int | None = None,
                     specialize_q1: bool = False) -> IntPoly:
    return constant_term(g2_product(m, n, budget, specialize_q1))


def verify_g2(m: int, n: int, budget: int | None = None) -> bool:
    """Does the constant term of the G2 product equal A_q(m, n) coefficientwise?"""
    from .families import get_family
    from .qratio import q_ratio_poly

    expected = q_ratio_poly(get_family("Aq").spec, (m, n))
    return g2_constant_term(m, n, budget) == expected
