import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrious.poly import (
    ONE,
    ZERO,
    IntPoly,
    NotDivisible,
    _kronecker,
    _schoolbook,
    cyclotomic,
    divisors,
    factorial_big,
    format_poly,
    poly_divmod,
    poly_eval_int,
    poly_exact_div,
    poly_mul,
    poly_pow,
)


def convolve(a, b):
    # independent oracle: textbook double loop
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


coeff_lists = st.lists(st.integers(-10**6, 10**6), max_size=60)
polys = coeff_lists.map(IntPoly)
nonzero_polys = polys.filter(bool)


def test_normalization_strips_trailing_zeros():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).coeffs == ()
    assert IntPoly([0, 0]).degree == -1
    assert IntPoly([5, 0, 3]).degree == 2


def test_mul_examples():
    a, b = IntPoly([1, 1]), IntPoly([1, 1, 1])
    assert poly_mul(a, b).coeffs == tuple(convolve([1, 1], [1, 1, 1]))
    assert poly_mul(a, b).coeffs == (1, 2, 2, 1)
    p = IntPoly([3, -1, 4])
    assert poly_mul(p, ONE) == p
    assert poly_mul(p, ZERO) == ZERO


@given(coeff_lists, coeff_lists)
def test_mul_matches_convolution(a, b):
    assert list(poly_mul(IntPoly(a), IntPoly(b)).coeffs) == convolve(
        list(IntPoly(a).coeffs), list(IntPoly(b).coeffs))


@given(st.lists(st.integers(-2**70, 2**70), min_size=1, max_size=80),
       st.lists(st.integers(-2**70, 2**70), min_size=1, max_size=80))
def test_kronecker_matches_schoolbook(a, b):
    assert _kronecker(a, b) == _schoolbook(a, b)


@given(nonzero_polys, nonzero_polys)
def test_degree_adds(a, b):
    assert poly_mul(a, b).degree == a.degree + b.degree


def test_exact_div_examples():
    q2m1 = IntPoly([-1, 0, 1])
    assert poly_exact_div(q2m1, IntPoly([-1, 1])) == IntPoly([1, 1])
    q6m1 = IntPoly([-1, 0, 0, 0, 0, 0, 1])
    den = poly_mul(poly_mul(IntPoly([-1, 1]), IntPoly([1, 1])), IntPoly([1, 1, 1]))
    assert poly_exact_div(q6m1, den) == IntPoly([1, -1, 1])
    with pytest.raises(NotDivisible):
        poly_exact_div(IntPoly([1, 0, 1]), IntPoly([-1, 1]))


def test_divmod_remainder():
    quot, rem = poly_divmod(IntPoly([1, 0, 1]), IntPoly([-1, 1]))
    assert rem == IntPoly([2])
    assert poly_mul(quot, IntPoly([-1, 1])) + rem == IntPoly([1, 0, 1])


def test_exact_div_non_monic_divisor():
    assert poly_exact_div(IntPoly([2, 4, 2]), IntPoly([2, 2])) == IntPoly([1, 1])
    with pytest.raises(NotDivisible):
        poly_exact_div(IntPoly([1, 1]), IntPoly([0, 2]))


def test_division_by_zero_polynomial():
    with pytest.raises(ZeroDivisionError):
        poly_exact_div(ONE, ZERO)


@given(polys, nonzero_polys)
def test_div_roundtrip(a, b):
    # keep the divisor monic up to sign so every product is divisible over Z
    b = IntPoly(list(b.coeffs[:-1]) + [1])
    assert poly_exact_div(poly_mul(a, b), b) == a


@given(polys, polys, st.integers(-5, 5))
def test_eval_is_multiplicative(a, b, x):
    assert poly_eval_int(poly_mul(a, b), x) == poly_eval_int(a, x) * poly_eval_int(b, x)


def test_eval_examples():
    assert poly_eval_int(IntPoly([1, 2, 2, 1]), 1) == 6
    assert poly_eval_int(IntPoly([7, 3, 9]), 0) == 7
    assert poly_eval_int(IntPoly([1, 1]), -1) == 0
    assert IntPoly([1, 1])(2) == 3


def test_pow_matches_repeated_mul():
    p = IntPoly([1, -2, 3])
    acc = ONE
    for e in range(7):
        assert poly_pow(p, e) == acc
        acc = poly_mul(acc, p)


def test_factorial():
    assert factorial_big(0) == 1
    assert factorial_big(3) == 6
    incremental = 1
    for i in range(1, 31):
        incremental *= i
    assert factorial_big(30) == incremental
    assert factorial_big(30) // (factorial_big(29) * 30) == 1


def test_cyclotomic_examples():
    assert cyclotomic(1) == IntPoly([-1, 1])
    assert cyclotomic(2) == IntPoly([1, 1])
    assert cyclotomic(12) == IntPoly([1, 0, -1, 0, 1])


def test_cyclotomic_against_sympy():
    sympy = pytest.importorskip("sympy")
    q = sympy.Symbol("q")
    for d in list(range(1, 40)) + [105, 120]:
        expected = sympy.Poly(sympy.cyclotomic_poly(d, q), q).all_coeffs()[::-1]
        assert list(cyclotomic(d).coeffs) == [int(c) for c in expected], d


@pytest.mark.parametrize("d", range(1, 61))
def test_divisor_product_identity(d):
    prod = ONE
    for e in divisors(d):
        prod = poly_mul(prod, cyclotomic(e))
    assert prod == IntPoly.monomial(d) - ONE


@pytest.mark.parametrize("d", range(2, 61))
def test_cyclotomic_shape(d):
    phi = cyclotomic(d)
    assert phi.is_monic()
    assert phi.coeff(0) == 1
    assert phi.is_palindromic()


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert divisors(49) == [1, 7, 49]


def test_format():
    assert format_poly(IntPoly([1, 2, 2, 1])) == "1+2q+2q²+q³"
    assert format_poly(IntPoly([1, -1, 1])) == "1-q+q²"
    assert format_poly(IntPoly([0, -3])) == "-3q"
    assert format_poly(ZERO) == "0"
    assert format_poly(IntPoly([0] * 12 + [1])) == "q¹²"


def test_immutable():
    p = IntPoly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (3,)
    assert {p: 1}[IntPoly([1, 2, 0])] == 1


@settings(max_examples=50)
@given(polys)
def test_shift(p):
    assert p.shift(3) == poly_mul(p, IntPoly.monomial(3))


def test_kronecker_without_gmpy2(monkeypatch):
    import qrious.poly as poly
    a = [3, -7, 2**80, 0, -1] * 10
    b = [1, 0, -1] * 12
    expected = _schoolbook(a, b)
    monkeypatch.setattr(poly, "_mpz", None)
    assert _kronecker(a, b) == expected
