"""Dense univariate polynomials over the integers, plus cyclotomic polynomials.

Coefficients are stored in ascending degree order: ``coeffs[i]`` is the
coefficient of ``q**i``.  The zero polynomial has no coefficients.
"""

from __future__ import annotations

import math
import threading
from typing import Iterable, Sequence

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - pure-int fallback
    _mpz = None

__all__ = [
    "IntPoly",
    "NotDivisible",
    "ZERO",
    "ONE",
    "Q",
    "poly_mul",
    "poly_exact_div",
    "poly_divmod",
    "poly_pow",
    "poly_eval_int",
    "cyclotomic",
    "warm_cyclotomics",
    "factorial_big",
    "divisors",
]

# below this length on the shorter operand schoolbook beats packing
KRONECKER_THRESHOLD = 24


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPoly":
        if coeff == 0:
            return ZERO
        return cls([0] * power + [coeff])

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def coeff(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return poly_pow(self, e)

    def __call__(self, x: int) -> int:
        return poly_eval_int(self, x)

    def shift(self, s: int) -> "IntPoly":
        """Multiply by ``q**s``."""
        if not self.coeffs or s == 0:
            return self
        return IntPoly((0,) * s + self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def min_coefficient(self) -> tuple[int, int]:
        """Return ``(value, power)`` of the smallest coefficient, lowest power on ties."""
        if not self.coeffs:
            return 0, 0
        best = min(range(len(self.coeffs)), key=lambda i: (self.coeffs[i], i))
        return self.coeffs[best], best


ZERO = IntPoly()
ONE = IntPoly([1])
Q = IntPoly([0, 1])


_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def format_poly(p: IntPoly, var: str = "q") -> str:
    """Human-readable rendering such as ``1+2q+2q²+q³``."""
    if not p.coeffs:
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else var + str(i).translate(_SUPERSCRIPTS)
            body = mono if mag == 1 else f"{mag}{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    n = len(a)
    out = [0] * (n + len(b) - 1)
    for j, c in enumerate(b):
        if c == 0:
            continue
        out[j:j + n] = [x + c * y for x, y in zip(out[j:j + n], a)]
    return out


def _pack(coeffs: Sequence[int], nbytes: int) -> int:
    # signed Kronecker packing: sum c_i * 2**(8*nbytes*i)
    zero = bytes(nbytes)
    pos = b"".join(c.to_bytes(nbytes, "little") if c > 0 else zero for c in coeffs)
    neg = b"".join((-c).to_bytes(nbytes, "little") if c < 0 else zero for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _kronecker(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = len(a) + len(b) - 1
    ma, mb = max(abs(c) for c in a), max(abs(c) for c in b)
    # digits must hold both the inputs and every output coefficient
    bound = max(min(len(a), len(b)) * ma * mb, ma, mb)
    # one spare bit for the sign offset
    nbytes = (bound.bit_length() + 2 + 7) // 8
    pa, pb = _pack(a, nbytes), _pack(b, nbytes)
    # GMP multiplies multi-megabit integers several times faster than CPython
    prod = int(_mpz(pa) * _mpz(pb)) if _mpz is not None else pa * pb
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes((bytes(nbytes - 1) + b"\x80") * n, "little")
    raw = (prod + offset).to_bytes(n * nbytes, "little")
    return [
        int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half
        for i in range(n)
    ]


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact product of two integer polynomials."""
    if not a.coeffs or not b.coeffs:
        return ZERO
    if min(len(a.coeffs), len(b.coeffs)) < KRONECKER_THRESHOLD:
        return IntPoly(_schoolbook(a.coeffs, b.coeffs))
    return IntPoly(_kronecker(a.coeffs, b.coeffs))


def poly_divmod(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division over Z.

    Requires every step's leading-coefficient division to be exact, which
    always holds for monic ``b``.  Raises :class:`NotDivisible` otherwise.
    """
    if not b.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lead = b.coeffs[-1]
    if len(rem) - 1 < db:
        return ZERO, a
    quot = [0] * (len(rem) - db)
    bc = b.coeffs
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        t, r = divmod(c, lead)
        if r:
            raise NotDivisible(f"leading coefficient {c} not divisible by {lead}")
        quot[i - db] = t
        base = i - db
        for j, bj in enumerate(bc):
            if bj:
                rem[base + j] -= t * bj
    return IntPoly(quot), IntPoly(rem[:db])


def poly_exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Return ``c`` with ``b * c == a``; raise :class:`NotDivisible` otherwise."""
    quot, rem = poly_divmod(a, b)
    if rem.coeffs:
        raise NotDivisible(f"nonzero remainder {rem}")
    return quot


def poly_pow(p: IntPoly, e: int) -> IntPoly:
    """``p**e`` by repeated squaring."""
    if e < 0:
        raise ValueError("negative exponent")
    result = ONE
    base = p
    while e:
        if e & 1:
            result = poly_mul(result, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return result


def poly_eval_int(p: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def factorial_big(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(n)


def divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


_CYCLOTOMIC: dict[int, IntPoly] = {}
_CYCLOTOMIC_LOCK = threading.Lock()


def cyclotomic(d: int) -> IntPoly:
    """The ``d``-th cyclotomic polynomial, memoized.

    Built as ``q**d - 1`` divided exactly by the product of the cyclotomic
    polynomials of the proper divisors of ``d``.
    """
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    cached = _CYCLOTOMIC.get(d)
    if cached is not None:
        return cached
    denom = ONE
    for e in divisors(d)[:-1]:
        denom = poly_mul(denom, cyclotomic(e))
    phi = poly_exact_div(IntPoly.monomial(d) - ONE, denom)
    with _CYCLOTOMIC_LOCK:
        return _CYCLOTOMIC.setdefault(d, phi)


def warm_cyclotomics(d_max: int) -> None:
    """Populate the cyclotomic cache for every index up to ``d_max``."""
    for d in range(1, d_max + 1):
        cyclotomic(d)
