"""Registry of the named factorial ratios (and their q-analogues)."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Sequence

from .ratio import RatioSpec, in_domain, parse_spec

__all__ = ["Family", "known_families", "get_family", "FAMILY_NAMES"]


@dataclass(frozen=True)
class Family:
    name: str
    title: str
    spec: RatioSpec
    domain_note: str = ""

    @property
    def height(self) -> int:
        return self.spec.height

    @property
    def balanced(self) -> bool:
        return self.spec.balanced

    def in_domain(self, v: Sequence[int]) -> bool:
        return in_domain(self.spec, v)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "title": self.title,
            "spec": self.spec.to_dict(),
            "text": self.spec.text(),
            "height": self.height,
            "balanced": self.balanced,
            "domain": self.domain_note or "all non-negative points",
        }


_A = "3m+3n, 3n, 2m, 2n / 2m+3n, m+2n, m+n, m, n, n"

_FAMILIES = (
    Family("A", "Askey's two-parameter ratio A(m,n)", parse_spec(_A)),
    Family("Aq", "q-analogue A_q(m,n) of A(m,n)", parse_spec(_A)),
    Family("C", "Chebyshev's ratio C(n)", parse_spec("30n, n / 15n, 10n, 6n")),
    Family("Cq", "two-parameter family C_q(m,n)",
           parse_spec("6m+30n, n / 3m+15n, 2m+10n, m, 6n")),
    Family("binomial", "binomial coefficients (m+n)!/(m! n!)", parse_spec("m+n / m, n")),
    Family("superCatalan", "super Catalan numbers (2m)!(2n)!/(m! n! (m+n)!)",
           parse_spec("2m, 2n / m, n, m+n")),
    Family("family3", "m! (2n)! / ((2m)! n! (n-m)!)",
           parse_spec("m, 2n / 2m, n, n-m"), domain_note="m <= n"),
)

_REGISTRY = MappingProxyType({f.name: f for f in _FAMILIES})
FAMILY_NAMES = tuple(_REGISTRY)


def known_families() -> tuple[Family, ...]:
    return _FAMILIES


def get_family(name: str) -> Family:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown family {name!r}; known: {', '.join(FAMILY_NAMES)}") from None
