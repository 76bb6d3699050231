"""Factorial-ratio templates, floor-sum integrality criteria and a big-integer oracle.

A :class:`RatioSpec` describes

    prod_i (<a_i, v>)!  /  prod_j (<b_j, v>)!

where each ``a_i``/``b_j`` is an integer coefficient vector over ``k``
named parameters and ``v`` is a point of non-negative integers.
"""

from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .poly import factorial_big

__all__ = [
    "ParseError",
    "DuplicateParamError",
    "DomainError",
    "UnsupportedSpec",
    "LinearForm",
    "RatioSpec",
    "NonInteger",
    "Status",
    "Verdict",
    "parse_spec",
    "height",
    "is_balanced",
    "in_domain",
    "eval_big",
    "delta",
    "delta_table",
    "check_integrality_1d",
    "check_integrality_scan",
    "default_d_max",
    "default_complete_at",
    "DEFAULT_BOX",
]

DEFAULT_BOX = 8


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class DuplicateParamError(ParseError):
    """A parameter letter occurs twice inside a single factorial argument."""


class DomainError(ValueError):
    """Some factorial argument is negative at the requested point."""


class UnsupportedSpec(ValueError):
    """A criterion was asked to handle a spec outside its preconditions."""


@dataclass(frozen=True)
class LinearForm:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not any(self.coeffs):
            raise ValueError("a linear form needs at least one nonzero coefficient")

    def __call__(self, v: Sequence[int]) -> int:
        return sum(c * x for c, x in zip(self.coeffs, v))

    def render(self, names: Sequence[str]) -> str:
        out = ""
        # positive terms first so n-m does not print as -m+n
        terms = sorted(zip(self.coeffs, names), key=lambda t: t[0] < 0)
        for c, name in terms:
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            if not out:
                out = ("-" if c < 0 else "") + mag + name
            else:
                out += ("-" if c < 0 else "+") + mag + name
        return out


@dataclass(frozen=True)
class RatioSpec:
    params: tuple[str, ...]
    numerator: tuple[LinearForm, ...]
    denominator: tuple[LinearForm, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(self, "numerator", tuple(self.numerator))
        object.__setattr__(self, "denominator", tuple(self.denominator))
        if not self.params:
            raise ValueError("a spec needs at least one parameter")
        if len(set(self.params)) != len(self.params):
            raise ValueError(f"parameter names must be distinct: {self.params}")
        if not self.numerator or not self.denominator:
            raise ValueError("numerator and denominator must both be nonempty")
        for f in self.numerator + self.denominator:
            if len(f.coeffs) != self.k:
                raise ValueError(f"form {f.coeffs} does not have {self.k} coefficients")

    @classmethod
    def from_lists(cls, params, num, den) -> "RatioSpec":
        return cls(tuple(params), tuple(LinearForm(tuple(c)) for c in num),
                   tuple(LinearForm(tuple(c)) for c in den))

    @property
    def k(self) -> int:
        return len(self.params)

    @property
    def height(self) -> int:
        return len(self.denominator) - len(self.numerator)

    @property
    def balanced(self) -> bool:
        return self.numerator_sum() == self.denominator_sum()

    def numerator_sum(self) -> tuple[int, ...]:
        return tuple(map(sum, zip(*(f.coeffs for f in self.numerator))))

    def denominator_sum(self) -> tuple[int, ...]:
        return tuple(map(sum, zip(*(f.coeffs for f in self.denominator))))

    def forms(self):
        return self.numerator + self.denominator

    def all_coefficients(self) -> list[int]:
        return [c for f in self.forms() for c in f.coeffs]

    def to_dict(self) -> dict:
        return {
            "params": list(self.params),
            "num": [list(f.coeffs) for f in self.numerator],
            "den": [list(f.coeffs) for f in self.denominator],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))

    @classmethod
    def from_dict(cls, d: dict) -> "RatioSpec":
        return cls.from_lists(d["params"], d["num"], d["den"])

    def text(self) -> str:
        num = ", ".join(f.render(self.params) for f in self.numerator)
        den = ", ".join(f.render(self.params) for f in self.denominator)
        return f"{num} / {den}"

    def __str__(self):
        return self.text()


# --- parsing -----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.params: list[str] = []

    def error(self, msg, pos=None):
        raise ParseError(msg, self.pos if pos is None else pos, self.text)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self):
        num = self.forms()
        if self.peek() != "/":
            self.error("expected '/' between numerator and denominator")
        self.pos += 1
        den = self.forms()
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")

        def vec(raw):
            return LinearForm(tuple(raw.get(p, 0) for p in self.params))

        return RatioSpec(tuple(self.params), tuple(vec(f) for f, _ in num),
                         tuple(vec(f) for f, _ in den))

    def forms(self):
        out = [self.form()]
        while self.peek() == ",":
            self.pos += 1
            out.append(self.form())
        return out

    def form(self):
        self.skip_ws()
        start = self.pos
        coeffs: dict[str, int] = {}
        sign = 1
        while True:
            term_pos = self.pos
            c, letter = self.term()
            if letter is None:
                # constant offsets have no home in a linear form
                self.error("constant terms are not supported in factorial arguments",
                           term_pos)
            if letter in coeffs:
                raise DuplicateParamError(
                    f"parameter {letter!r} repeated within one argument", term_pos, self.text)
            coeffs[letter] = sign * c
            if letter not in self.params:
                self.params.append(letter)
            nxt = self.peek()
            if nxt in ("+", "-"):
                sign = 1 if nxt == "+" else -1
                self.pos += 1
                continue
            break
        if not any(coeffs.values()):
            self.error("factorial argument is identically zero", start)
        return coeffs, start

    def term(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        # whitespace between a coefficient and its letter is allowed
        self.skip_ws()
        ch = self.text[self.pos] if self.pos < len(self.text) else ""
        if ch.isalpha() and ch.isascii():
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos].isalpha():
                self.error("parameter names are single letters")
            return (int(digits) if digits else 1), ch
        if digits:
            return int(digits), None
        if ch:
            self.error(f"expected a term, found {ch!r}")
        self.error("expected a term, found end of input")


def parse_spec(text: str) -> RatioSpec:
    """Parse ``"3m+3n, 3n / 2m+3n, m+2n"``-style text or canonical JSON.

    Parameters are ordered by first appearance.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            return RatioSpec.from_dict(json.loads(stripped))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"invalid spec JSON: {exc}", 0, text) from exc
    if not stripped:
        raise ParseError("empty spec", 0, text)
    return _Parser(text).parse()


# --- structural predicates ---------------------------------------------------

def height(spec: RatioSpec) -> int:
    return spec.height


def is_balanced(spec: RatioSpec) -> bool:
    return spec.balanced


def in_domain(spec: RatioSpec, v: Sequence[int]) -> bool:
    return len(v) == spec.k and all(x >= 0 for x in v) and all(f(v) >= 0 for f in spec.forms())


def _check_point(spec, v):
    if len(v) != spec.k:
        raise ValueError(f"expected {spec.k} parameter values, got {len(v)}")
    for f in spec.forms():
        if f(v) < 0:
            raise DomainError(
                f"argument {f.render(spec.params)} = {f(v)} is negative at {tuple(v)}")


# --- the direct oracle -------------------------------------------------------

@dataclass(frozen=True)
class NonInteger:
    """The ratio at a point is not an integer; carries the unreduced quotient."""
    numerator: int
    denominator: int

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


def eval_big(spec: RatioSpec, v: Sequence[int]) -> int | NonInteger:
    _check_point(spec, v)
    num = math.prod(factorial_big(f(v)) for f in spec.numerator)
    den = math.prod(factorial_big(f(v)) for f in spec.denominator)
    q, r = divmod(num, den)
    if r:
        return NonInteger(num, den)
    return q


# --- floor sums --------------------------------------------------------------

def _floor_sum(spec: RatioSpec, v: Sequence[int], d: int) -> int:
    return (sum(f(v) // d for f in spec.numerator)
            - sum(f(v) // d for f in spec.denominator))


def delta(spec: RatioSpec, v: Sequence[int], d: int) -> int:
    """Sum of floor(<a_i,v>/d) over the numerator minus the same over the denominator.

    This is the exponent of the d-th cyclotomic polynomial in the q-analogue at v,
    and summing it over d = p, p**2, ... gives the p-adic order of the ratio.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    _check_point(spec, v)
    return _floor_sum(spec, v, d)


def _step_value(spec: RatioSpec, x: Fraction) -> int:
    # Landau step function: sum floor(a x) - sum floor(b x) for k = 1
    num = sum(math.floor(f.coeffs[0] * x) for f in spec.numerator)
    den = sum(math.floor(f.coeffs[0] * x) for f in spec.denominator)
    return num - den


def _require_1d(spec):
    if spec.k != 1:
        raise UnsupportedSpec("the one-parameter criterion needs exactly one parameter")
    if not spec.balanced:
        raise UnsupportedSpec("the one-parameter criterion needs a balanced spec")
    if spec.height < 0:
        raise UnsupportedSpec("the one-parameter criterion needs height >= 0")
    if any(c <= 0 for c in spec.all_coefficients()):
        raise UnsupportedSpec("the one-parameter criterion needs positive coefficients")


def _lcm_of(spec) -> int:
    return math.lcm(*spec.all_coefficients())


def delta_table(spec: RatioSpec) -> list[int]:
    """Values of the step function at t/L for t = 0..L-1, L the lcm of the coefficients."""
    _require_1d(spec)
    L = _lcm_of(spec)
    return [_step_value(spec, Fraction(t, L)) for t in range(L)]


class Status(str, enum.Enum):
    INTEGRAL = "Integral"
    COUNTEREXAMPLE = "Counterexample"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


@dataclass
class Verdict:
    status: Status
    method: str
    witness: dict | None = None
    scan_depth: int | None = None
    detail: str = ""
    checked: dict = field(default_factory=dict)

    @property
    def integral(self) -> bool:
        return self.status is Status.INTEGRAL

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "method": self.method,
            "witness": _jsonable(self.witness),
            "scan_depth": self.scan_depth,
            "detail": self.detail,
            "checked": _jsonable(self.checked),
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        # big integers travel as decimal strings
        return str(obj)
    return str(obj)


def check_integrality_1d(spec: RatioSpec) -> Verdict:
    """Exact integrality test for balanced one-parameter ratios.

    The step function x -> sum floor(a_i x) - sum floor(b_j x) has period 1 and
    only jumps at multiples of 1/c for the coefficients c, all of which are of
    the form t/L.  Evaluating at every jump point in [0, 1) therefore visits
    every value the function takes on the grid t/L, t = 0..L-1.
    """
    _require_1d(spec)
    L = _lcm_of(spec)
    coeffs = sorted(set(spec.all_coefficients()))
    jumps = sorted({Fraction(j, c) for c in coeffs for j in range(c)})
    for x in jumps:
        val = _step_value(spec, x)
        if val < 0:
            t = x.numerator * (L // x.denominator)
            return Verdict(Status.COUNTEREXAMPLE, "criterion",
                           witness={"x": x, "t": t, "L": L, "delta": val},
                           detail=f"step function is {val} at {x}")
    return Verdict(Status.INTEGRAL, "criterion", scan_depth=L,
                   detail=f"step function non-negative on all of [0,1) (L={L})",
                   checked={"breakpoints": len(jumps), "L": L})


def default_d_max(spec: RatioSpec) -> int:
    return 2 * sum(abs(c) for c in spec.all_coefficients())


def default_complete_at(spec: RatioSpec) -> int:
    """Residue-scan depth from which an all-clear is reported as Integral.

    For one parameter this is the lcm of the coefficients, which makes the scan
    exhaustive.  For several parameters no sharp bound is known; the default is
    the largest value any single form takes on the unit cube, a heuristic.
    """
    if spec.k == 1:
        return _lcm_of(spec)
    return max(sum(abs(c) for c in f.coeffs) for f in spec.forms())


def check_integrality_scan(spec: RatioSpec, d_max: int | None = None,
                           box: int | None = None,
                           complete_at: int | None = None) -> Verdict:
    """Residue scan of the floor sums for every modulus up to ``d_max``, plus a box oracle.

    For a balanced spec the floor sum at modulus d depends on v only through
    v mod d, so the residue vectors {0..d-1}^k cover every point.  Residues
    are evaluated with mathematical floors even when a form is negative there;
    periodicity moves them to an in-domain representative with the same value.
    """
    if not spec.balanced:
        raise UnsupportedSpec("the residue scan needs a balanced spec")
    d_max = default_d_max(spec) if d_max is None else d_max
    box = DEFAULT_BOX if box is None else box
    complete_at = default_complete_at(spec) if complete_at is None else complete_at
    if d_max < 2 or box < 1:
        raise ValueError("need d_max >= 2 and box >= 1")

    residues_checked = 0
    for d in range(2, d_max + 1):
        for r in itertools.product(range(d), repeat=spec.k):
            residues_checked += 1
            val = _floor_sum(spec, r, d)
            if val < 0:
                return Verdict(Status.COUNTEREXAMPLE, "residue-scan",
                               witness={"v": list(r), "d": d, "delta": val},
                               scan_depth=d,
                               detail=f"floor sum {val} at v={r} mod {d}")

    points_checked = 0
    for v in itertools.product(range(box + 1), repeat=spec.k):
        if not in_domain(spec, v):
            continue
        points_checked += 1
        value = eval_big(spec, v)
        if isinstance(value, NonInteger):
            return Verdict(Status.COUNTEREXAMPLE, "box-oracle",
                           witness={"point": list(v), "value": str(value)},
                           scan_depth=d_max,
                           detail=f"ratio is {value} at {v}")

    checked = {"residues": residues_checked, "points": points_checked,
               "complete_at": complete_at}
    if d_max >= complete_at:
        return Verdict(Status.INTEGRAL, "residue-scan", scan_depth=d_max,
                       detail=f"floor sums non-negative for all d <= {d_max}; "
                              f"box oracle agrees on {{0..{box}}}^{spec.k}",
                       checked=checked)
    return Verdict(Status.INCONCLUSIVE, "residue-scan", scan_depth=d_max,
                   detail=f"no violation up to d = {d_max}, below the completeness "
                          f"threshold {complete_at}",
                   checked=checked)
