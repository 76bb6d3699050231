"""q-analogues of factorial ratios, assembled as products of cyclotomic polynomials."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .poly import ONE, IntPoly, cyclotomic, poly_mul, poly_pow, warm_cyclotomics
from .ratio import RatioSpec, _check_point, _floor_sum, in_domain

__all__ = [
    "UnbalancedSpec",
    "CyclotomicExponents",
    "NotPolynomial",
    "PointOutcome",
    "PositivityReport",
    "q_integer",
    "q_factorial_direct",
    "q_ratio_exponents",
    "q_ratio_poly",
    "q_ratio_oracle",
    "degree_formula",
    "positivity_scan",
    "reduce_Cq_check",
]

ALL_NON_NEGATIVE = "AllNonNegative"
NEGATIVE_FOUND = "NegativeCoefficientFound"
NOT_POLYNOMIAL_AT = "NotPolynomialAt"


class UnbalancedSpec(ValueError):
    pass


def q_integer(m: int) -> IntPoly:
    """[m] = 1 + q + ... + q^(m-1)."""
    return IntPoly([1] * m)


@lru_cache(maxsize=None)
def q_factorial_direct(m: int) -> IntPoly:
    """[m]! as the plain product of q-integers, independent of the cyclotomic route."""
    if m < 0:
        raise ValueError("q-factorial of a negative number")
    if m <= 1:
        return ONE
    return poly_mul(q_factorial_direct(m - 1), q_integer(m))


def degree_formula(spec: RatioSpec, v: Sequence[int]) -> int:
    def tri(x):
        return x * (x - 1) // 2
    return sum(tri(f(v)) for f in spec.numerator) - sum(tri(f(v)) for f in spec.denominator)


@dataclass(frozen=True)
class CyclotomicExponents:
    exps: dict  # d -> exponent of the d-th cyclotomic polynomial, nonzero only

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self.exps.values())

    def negative(self) -> dict:
        return {d: e for d, e in self.exps.items() if e < 0}

    def max_index(self) -> int:
        return max(self.exps, default=1)

    def factored(self) -> str:
        if not self.exps:
            return "1"
        return "·".join(f"Φ{d}" if e == 1 else f"Φ{d}^{e}" for d, e in self.exps.items())

    def __str__(self):
        return self.factored()


@dataclass(frozen=True)
class NotPolynomial:
    """The q-ratio at a point has a cyclotomic factor with negative exponent."""
    d: int
    exponent: int
    exponents: CyclotomicExponents

    def __str__(self):
        return f"not a polynomial: Φ{self.d} has exponent {self.exponent}"


def _require_balanced(spec):
    if not spec.balanced:
        raise UnbalancedSpec(
            f"spec is not balanced: numerator sums {spec.numerator_sum()}, "
            f"denominator sums {spec.denominator_sum()}")


def q_ratio_exponents(spec: RatioSpec, v: Sequence[int]) -> CyclotomicExponents:
    _require_balanced(spec)
    _check_point(spec, v)
    top = max((f(v) for f in spec.forms()), default=0)
    exps = {}
    for d in range(2, top + 1):
        e = _floor_sum(spec, v, d)
        if e:
            exps[d] = e
    return CyclotomicExponents(exps)


def q_ratio_poly(spec: RatioSpec, v: Sequence[int]) -> IntPoly | NotPolynomial:
    """Assemble the q-ratio at ``v`` as a product of cyclotomic powers in increasing d."""
    exps = q_ratio_exponents(spec, v)
    bad = exps.negative()
    if bad:
        d = min(bad)
        return NotPolynomial(d, bad[d], exps)
    result = ONE
    for d, e in exps.exps.items():
        result = poly_mul(result, poly_pow(cyclotomic(d), e))
    return result


def q_ratio_oracle(spec: RatioSpec, v: Sequence[int]) -> tuple[IntPoly, IntPoly]:
    """Products of direct q-factorials over the numerator and denominator values."""
    _check_point(spec, v)
    num = ONE
    for f in spec.numerator:
        num = poly_mul(num, q_factorial_direct(f(v)))
    den = ONE
    for f in spec.denominator:
        den = poly_mul(den, q_factorial_direct(f(v)))
    return num, den


@dataclass
class PointOutcome:
    point: tuple
    status: str  # "ok", "negative", "not_polynomial"
    degree: int | None = None
    min_value: int | None = None
    min_power: int | None = None
    d: int | None = None
    exponent: int | None = None

    def to_dict(self) -> dict:
        out = {"point": list(self.point), "status": self.status}
        if self.status == "not_polynomial":
            out.update(d=self.d, exponent=self.exponent)
        else:
            out.update(degree=self.degree, min_value=str(self.min_value),
                       min_power=self.min_power)
        return out


@dataclass
class PositivityReport:
    family: str
    box: int
    status: str
    witnesses: list = field(default_factory=list)
    min_coefficient: dict | None = None
    points_checked: int = 0
    skipped: int = 0
    outcomes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        mc = None
        if self.min_coefficient is not None:
            mc = {"value": str(self.min_coefficient["value"]),
                  "point": list(self.min_coefficient["point"]),
                  "power": self.min_coefficient["power"]}
        return {
            "family": self.family,
            "box": self.box,
            "status": self.status,
            "min_coefficient": mc,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "points_checked": self.points_checked,
            "skipped": self.skipped,
        }


def _scan_point(spec: RatioSpec, v: tuple) -> PointOutcome:
    p = q_ratio_poly(spec, v)
    if isinstance(p, NotPolynomial):
        return PointOutcome(v, "not_polynomial", d=p.d, exponent=p.exponent)
    value, power = p.min_coefficient()
    return PointOutcome(v, "negative" if value < 0 else "ok", degree=p.degree,
                        min_value=value, min_power=power)


def _scan_point_star(args):
    return _scan_point(*args)


def positivity_scan(spec: RatioSpec, box: int, family: str | None = None,
                    jobs: int = 1) -> PositivityReport:
    """Assemble the q-ratio at every in-domain point of {0..box}^k and inspect coefficients.

    Points outside the domain (some argument negative) are skipped and counted.
    """
    _require_balanced(spec)
    points, skipped = [], 0
    for v in itertools.product(range(box + 1), repeat=spec.k):
        if in_domain(spec, v):
            points.append(v)
        else:
            skipped += 1
    top = max((f(v) for v in points for f in spec.forms()), default=1)
    # fan-out workers must find the cache already populated
    warm_cyclotomics(top)
    if jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_scan_point_star, [(spec, v) for v in points],
                                     chunksize=max(1, len(points) // (4 * jobs))))
    else:
        outcomes = [_scan_point(spec, v) for v in points]

    witnesses = [o for o in outcomes if o.status != "ok"]
    best = None
    for o in outcomes:
        if o.status == "not_polynomial":
            continue
        if best is None or o.min_value < best["value"]:
            best = {"value": o.min_value, "point": o.point, "power": o.min_power}
    if any(o.status == "not_polynomial" for o in outcomes):
        status = NOT_POLYNOMIAL_AT
    elif witnesses:
        status = NEGATIVE_FOUND
    else:
        status = ALL_NON_NEGATIVE
    return PositivityReport(family or spec.text(), box, status, witnesses, best,
                            len(points), skipped, outcomes)


def reduce_Cq_check(n_max: int) -> bool:
    """Compare C_q(0, n) with the q-Chebyshev ratio coefficientwise for n <= n_max."""
    from .families import get_family

    cq = get_family("Cq").spec
    cheb = get_family("C").spec
    for n in range(n_max + 1):
        if q_ratio_poly(cq, (0, n)) != q_ratio_poly(cheb, (n,)):
            return False
    return True
