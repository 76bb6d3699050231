import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qrious.families import get_family
from qrious.ratio import (
    DomainError,
    DuplicateParamError,
    LinearForm,
    NonInteger,
    ParseError,
    RatioSpec,
    Status,
    UnsupportedSpec,
    check_integrality_1d,
    check_integrality_scan,
    default_complete_at,
    default_d_max,
    delta,
    delta_table,
    eval_big,
    height,
    in_domain,
    is_balanced,
    parse_spec,
)

A = get_family("A").spec
C = get_family("C").spec
CQ = get_family("Cq").spec
BINOMIAL = parse_spec("m+n / m, n")
BAD = parse_spec("5n, 2n / 3n, 3n, n")


def primes_upto(n):
    sieve = [True] * (n + 1)
    out = []
    for i in range(2, n + 1):
        if sieve[i]:
            out.append(i)
            for j in range(i * i, n + 1, i):
                sieve[j] = False
    return out


# --- parsing ---

def test_parse_binomial():
    s = parse_spec("m+n / m, n")
    assert s.params == ("m", "n")
    assert [f.coeffs for f in s.numerator] == [(1, 1)]
    assert [f.coeffs for f in s.denominator] == [(1, 0), (0, 1)]


def test_parse_chebyshev():
    s = parse_spec("30n, n / 15n, 10n, 6n")
    assert s.params == ("n",)
    assert [f.coeffs for f in s.numerator] == [(30,), (1,)]
    assert [f.coeffs for f in s.denominator] == [(15,), (10,), (6,)]


def test_parse_whitespace_insignificant():
    assert parse_spec("3m+3n,3n/2m+3n") == parse_spec("  3 m + 3 n , 3n /  2m +3n ")


def test_parse_params_in_order_of_first_appearance():
    assert parse_spec("n+m / n, m").params == ("n", "m")
    assert parse_spec("m, 2n / 2m, n, n-m").denominator[2].coeffs == (-1, 1)


@pytest.mark.parametrize("text", ["3m+ / n", "m / ", "/ n", "m n / n", "m / n,", "",
                                  "m / n / n", "mn / n", "m / n+1", "m / 0", "m / n$"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_spec(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_spec("3m+ / n")
    assert info.value.position == 4


def test_duplicate_param():
    with pytest.raises(DuplicateParamError):
        parse_spec("m+2m / m, m, m")


def test_canonical_json_roundtrip():
    text = ('{"params": ["m","n"], "num": [[3,3],[0,3],[2,0],[0,2]], '
            '"den": [[2,3],[1,2],[1,1],[1,0],[0,1],[0,1]]}')
    s = parse_spec(text)
    assert s == A
    assert parse_spec(A.to_json()) == A
    assert parse_spec(A.text()) == A


def test_linear_form_must_be_nonzero():
    with pytest.raises(ValueError):
        LinearForm((0, 0))


# --- height / balance ---

def test_height():
    assert height(A) == 2
    assert height(C) == 1
    assert height(BINOMIAL) == 1


def test_balance():
    assert A.numerator_sum() == (5, 8) == A.denominator_sum()
    assert is_balanced(A)
    assert C.numerator_sum() == (31,)
    assert is_balanced(C)
    assert not is_balanced(parse_spec("2n / n"))


@given(st.randoms())
def test_height_and_balance_permutation_invariant(rnd):
    for spec in (A, CQ, get_family("family3").spec):
        num, den = list(spec.numerator), list(spec.denominator)
        rnd.shuffle(num)
        rnd.shuffle(den)
        shuffled = RatioSpec(spec.params, tuple(num), tuple(den))
        assert height(shuffled) == height(spec)
        assert is_balanced(shuffled) == is_balanced(spec)


# --- eval_big ---

def test_eval_big_examples():
    assert eval_big(A, (0, 0)) == 1
    # 3! 2! / (2! 1! 1! 1!)
    assert eval_big(A, (1, 0)) == math.factorial(3) * 2 // 2
    assert eval_big(A, (1, 0)) == 6
    assert eval_big(A, (0, 1)) == 6
    assert eval_big(BAD, (1,)) == NonInteger(240, 36)


def test_eval_big_domain_error():
    fam3 = get_family("family3").spec
    with pytest.raises(DomainError):
        eval_big(fam3, (2, 1))
    assert not in_domain(fam3, (2, 1))
    assert in_domain(fam3, (1, 2))


# --- delta ---

def test_delta_examples():
    assert delta(C, (1,), 2) == 15 + 0 - 7 - 5 - 3 == 0
    assert delta(C, (1,), 7) == 4 + 0 - 2 - 1 - 0 == 1
    assert delta(BINOMIAL, (1, 1), 2) == 1


def test_delta_rejects_small_d():
    with pytest.raises(ValueError):
        delta(C, (1,), 1)


def test_delta_domain():
    with pytest.raises(DomainError):
        delta(get_family("family3").spec, (3, 1), 2)


def _p_adic_order_via_delta(spec, v, p):
    top = max(f(v) for f in spec.numerator + spec.denominator)
    total, pk = 0, p
    while pk <= max(top, 1):
        total += delta(spec, v, pk)
        pk *= p
    return total


SPECS_FOR_ORACLE = [A, CQ, BINOMIAL, BAD, parse_spec("m, n / m+n"),
                    parse_spec("4m, 2n / m, 3m+n, n"), get_family("superCatalan").spec,
                    get_family("family3").spec, parse_spec("2m+n, m / 2m, m+n")]


@pytest.mark.parametrize("spec", SPECS_FOR_ORACLE, ids=str)
def test_oracle_agreement_with_legendre(spec):
    box = 6 if spec.k == 2 else 30
    for v in itertools.product(range(box + 1), repeat=spec.k):
        if not in_domain(spec, v):
            continue
        top = max(f(v) for f in spec.forms())
        negative_prime = any(_p_adic_order_via_delta(spec, v, p) < 0
                             for p in primes_upto(max(top, 2)))
        value = eval_big(spec, v)
        assert isinstance(value, NonInteger) == negative_prime, v


@pytest.mark.parametrize("spec", [A, CQ, BAD, get_family("family3").spec], ids=str)
def test_delta_periodicity(spec):
    for d in range(2, 8):
        for v in itertools.product(range(2 * d), repeat=spec.k):
            for i in range(spec.k):
                w = list(v)
                w[i] += d
                if in_domain(spec, v) and in_domain(spec, w):
                    assert delta(spec, w, d) == delta(spec, v, d)


# --- one-parameter criterion ---

def test_1d_chebyshev_integral():
    assert check_integrality_1d(C).status is Status.INTEGRAL


def test_1d_counterexample_witness():
    # full floor table over t = 0..29, computed with integer floors only
    table = [(5 * t) // 30 + (2 * t) // 30 - 2 * ((3 * t) // 30) - t // 30 for t in range(30)]
    first = next(t for t, val in enumerate(table) if val < 0)
    assert (first, table[first]) == (10, -1)
    v = check_integrality_1d(BAD)
    assert v.status is Status.COUNTEREXAMPLE
    assert v.witness["x"] == Fraction(1, 3)
    assert v.witness["t"] == first
    assert v.witness["delta"] == -1
    assert delta_table(BAD) == table


def test_1d_central_binomial():
    assert check_integrality_1d(parse_spec("2n / n, n")).status is Status.INTEGRAL


@pytest.mark.parametrize("spec", [
    parse_spec("m+n / m, n"),
    parse_spec("2n / n"),
    parse_spec("3n, n / 4n"),
    RatioSpec.from_lists(("n",), [[2]], [[3], [-1]]),
], ids=str)
def test_1d_preconditions(spec):
    with pytest.raises(UnsupportedSpec):
        check_integrality_1d(spec)


@st.composite
def one_d_pairs(draw):
    num = draw(st.lists(st.integers(1, 6), min_size=1, max_size=3))
    total = sum(num)
    parts = min(total, len(num) + draw(st.integers(0, 2)))
    cuts = sorted(draw(st.sets(st.integers(1, total - 1), min_size=parts - 1,
                               max_size=parts - 1))) if parts > 1 else []
    bounds = [0] + cuts + [total]
    den = [b - a for a, b in zip(bounds, bounds[1:])]
    return num, den


def _one_d_spec(num, den):
    return RatioSpec(("n",), tuple(LinearForm((a,)) for a in num),
                     tuple(LinearForm((b,)) for b in den))


@given(one_d_pairs())
def test_1d_agrees_with_eval_big(pair):
    spec = _one_d_spec(*pair)
    verdict = check_integrality_1d(spec)
    L = math.lcm(*spec.all_coefficients())
    table = delta_table(spec)
    assert verdict.integral == (min(table) >= 0)
    fails = [n for n in range(L + 1) if isinstance(eval_big(spec, (n,)), NonInteger)]
    if verdict.integral:
        assert fails == []
    else:
        # the jump point t/L with negative value is realised at a large prime p
        # with n = t p / L when L | t p; small n already exposes most cases
        x = verdict.witness["x"]
        p = next(p for p in primes_upto(10 * L + 100) if p > max(L, 6))
        n = math.ceil(x * p)
        assert isinstance(eval_big(spec, (n,)), NonInteger)


def test_delta_table_chebyshev():
    table = delta_table(C)
    assert len(table) == 30
    assert min(table) >= 0


# --- residue scan ---

def test_scan_A():
    v = check_integrality_scan(A, d_max=16, box=12)
    assert v.status is Status.INTEGRAL


def test_scan_Cq():
    v = check_integrality_scan(CQ, d_max=37, box=4)
    assert v.status is Status.INTEGRAL


def test_scan_counterexample():
    v = check_integrality_scan(BAD, d_max=6, box=2)
    assert v.status is Status.COUNTEREXAMPLE
    assert v.witness == {"v": [1], "d": 3, "delta": -1}


def test_scan_inconclusive_below_threshold():
    v = check_integrality_scan(CQ, d_max=10, box=2)
    assert v.status is Status.INCONCLUSIVE


def test_scan_rejects_unbalanced():
    with pytest.raises(UnsupportedSpec):
        check_integrality_scan(parse_spec("2n / n"), 4, 2)


def test_scan_family3_domain():
    v = check_integrality_scan(get_family("family3").spec, box=6)
    assert v.status is Status.INTEGRAL


def test_defaults():
    assert default_d_max(A) == 2 * (6 + 3 + 2 + 2 + 5 + 3 + 2 + 1 + 1 + 1)
    assert default_complete_at(C) == 30
    assert default_complete_at(CQ) == 36


def test_scan_one_parameter_complete_at_lcm():
    assert check_integrality_scan(C, d_max=30, box=3).status is Status.INTEGRAL
    assert check_integrality_scan(C, d_max=29, box=3).status is Status.INCONCLUSIVE
