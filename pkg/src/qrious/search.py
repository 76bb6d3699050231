"""Enumerate balanced height-one ratios (a_1 n)!...(a_l n)! / (b_1 n)!...(b_{l+1} n)!."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .ratio import LinearForm, NonInteger, RatioSpec, Status, check_integrality_1d, eval_big

__all__ = ["SearchCandidate", "partitions", "enumerate_candidates", "classify", "search"]

REVALIDATE_N = range(1, 6)
WITNESS_SEARCH_LIMIT = 64


@dataclass(frozen=True)
class SearchCandidate:
    numerator: tuple[int, ...]
    denominator: tuple[int, ...]
    verdict: str  # Integral | NonIntegral | Skipped | INTERNAL-ERROR
    witness_n: int | None = None
    witness_x: Fraction | None = None
    reason: str = ""

    @property
    def total(self) -> int:
        return sum(self.numerator)

    def spec(self) -> RatioSpec:
        return _spec_of(self.numerator, self.denominator)

    def label(self) -> str:
        return f"({','.join(map(str, self.numerator))}; {','.join(map(str, self.denominator))})"

    def to_dict(self) -> dict:
        out = {"num": list(self.numerator), "den": list(self.denominator),
               "verdict": self.verdict}
        if self.witness_n is not None:
            out["witness_n"] = self.witness_n
        if self.witness_x is not None:
            out["witness_x"] = f"{self.witness_x.numerator}/{self.witness_x.denominator}"
        if self.reason:
            out["reason"] = self.reason
        return out


def _spec_of(num, den) -> RatioSpec:
    return RatioSpec(("n",), tuple(LinearForm((a,)) for a in num),
                     tuple(LinearForm((b,)) for b in den))


def partitions(total: int, parts: int, largest: int | None = None):
    """Partitions of ``total`` into exactly ``parts`` positive parts, descending, lex-descending."""
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total < parts:
        return
    for first in range(min(largest, total - parts + 1), 0, -1):
        if first * parts < total:
            break
        for rest in partitions(total - first, parts - 1, first):
            yield (first,) + rest


def enumerate_candidates(max_sum: int, max_terms: int):
    """Canonical primitive (numerator, denominator) pairs ordered by (sum, lexicographic)."""
    for s in range(2, max_sum + 1):
        batch = []
        for ell in range(1, max_terms + 1):
            for num in partitions(s, ell):
                for den in partitions(s, ell + 1):
                    if math.gcd(*num, *den) != 1:
                        continue
                    batch.append((num, den))
        batch.sort()
        yield from batch


def classify(num: tuple[int, ...], den: tuple[int, ...]) -> SearchCandidate:
    shared = set(num) & set(den)
    if shared:
        return SearchCandidate(num, den, "Skipped",
                               reason=f"not reduced: shares {sorted(shared)}")
    spec = _spec_of(num, den)
    verdict = check_integrality_1d(spec)
    if verdict.status is Status.INTEGRAL:
        for n in REVALIDATE_N:
            value = eval_big(spec, (n,))
            if isinstance(value, NonInteger):
                return SearchCandidate(num, den, "INTERNAL-ERROR", witness_n=n,
                                       reason=f"criterion says integral, value at n={n} is {value}")
        return SearchCandidate(num, den, "Integral")
    x = verdict.witness["x"]
    for n in range(1, WITNESS_SEARCH_LIMIT + 1):
        if isinstance(eval_big(spec, (n,)), NonInteger):
            return SearchCandidate(num, den, "NonIntegral", witness_n=n, witness_x=x)
    return SearchCandidate(num, den, "NonIntegral", witness_x=x,
                           reason=f"no failing n <= {WITNESS_SEARCH_LIMIT}")


def search(max_sum: int, max_terms: int) -> list[SearchCandidate]:
    if max_sum < 2 or max_terms < 1:
        raise ValueError("need max_sum >= 2 and max_terms >= 1")
    return [classify(num, den) for num, den in enumerate_candidates(max_sum, max_terms)]
