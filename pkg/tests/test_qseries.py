import pytest
from hypothesis import given, settings, strategies as st

from eulergas.qseries import (
    FactorFamily, TruncatedSeries, add, apply_binomial, binomial_factor, expand_exponents,
    expand_product, family, invert, make_series, mul, one, sub, substitute, theta4_series,
)

ORDER = 12
coeff = st.integers(min_value=-50, max_value=50)


def series(order=ORDER, unit=False):
    body = st.lists(coeff, min_size=order + 1, max_size=order + 1)
    if unit:
        body = body.map(lambda cs: [1] + cs[1:])
    return body.map(lambda cs: make_series(cs, order))


def naive_mul(a, b):
    N = a.order
    return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(N + 1)]


def test_make_series_pads_and_rejects_overflow():
    s = make_series([1, 2], 4)
    assert s.coeffs == (1, 2, 0, 0, 0)
    with pytest.raises(ValueError):
        make_series([1, 2, 3], 1)
    with pytest.raises(ValueError):
        make_series([], -1)


def test_truncated_series_validates_length():
    with pytest.raises(ValueError):
        TruncatedSeries(2, (1, 2))


def test_order_mismatch_is_an_error():
    with pytest.raises(ValueError):
        add(one(3), one(4))
    with pytest.raises(ValueError):
        mul(one(3), one(4))


def test_invert_requires_unit_constant():
    with pytest.raises(ValueError):
        invert(make_series([2, 1], 3))


def test_invert_of_one_minus_x_is_geometric():
    assert invert(make_series([1, -1], 6)).coeffs == (1,) * 7


def test_substitute_examples():
    s = make_series([1, 1, 1, 1], 6)
    assert substitute(s, 1, 2).coeffs == (1, 0, 1, 0, 1, 0, 1)
    assert substitute(s, -1, 1).coeffs == (1, -1, 1, -1, 0, 0, 0)
    with pytest.raises(ValueError):
        substitute(s, 2, 1)
    with pytest.raises(ValueError):
        substitute(s, 1, 0)


def test_truncate():
    s = make_series([1, 2, 3], 2)
    assert s.truncate(1).coeffs == (1, 2)
    with pytest.raises(ValueError):
        s.truncate(3)


def test_str_shows_order():
    assert str(make_series([1, 0, -2], 2)) == "1 + -2*x^2 + O(x^3)"


@pytest.mark.parametrize("spec, expected", [
    ("1-x^k", FactorFamily(-1, 1, 0, 1)),
    ("1/(1-x^k)", FactorFamily(-1, 1, 0, -1)),
    ("1+x^(2k-1)", FactorFamily(1, 2, -1, 1)),
    ("1 - x^(6k-5)", FactorFamily(-1, 6, -5, 1)),
    ("1/(1+x^(3k))", FactorFamily(1, 3, 0, -1)),
])
def test_family_parser(spec, expected):
    assert family(spec) == expected


@pytest.mark.parametrize("spec", ["x^k", "1*x^k", "2-x^k", "1-x^(k-1)"])
def test_family_parser_rejects(spec):
    with pytest.raises(ValueError):
        family(spec)


def test_family_exponents():
    assert list(family("1-x^(6k-5)").exponents(20)) == [1, 7, 13, 19]


def test_euler_pentagonal_prefix():
    # prod (1-x^k) = 1 - x - x^2 + x^5 + x^7 - x^12 - x^15 + ...
    s = expand_product([family("1-x^k")], 15)
    nz = {n: c for n, c in enumerate(s.coeffs) if c}
    assert nz == {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1, 15: -1}


def test_partition_numbers():
    s = expand_product([family("1/(1-x^k)")], 20)
    assert s[10] == 42 and s[20] == 627


def test_binomial_factor_matches_invert():
    for sign in (1, -1):
        for e in (1, 2, 5):
            direct = make_series(binomial_factor(e, sign, -1, 15), 15)
            via_invert = invert(make_series(binomial_factor(e, sign, 1, 15), 15))
            assert direct == via_invert


def test_expand_exponents_agrees_with_family():
    fam = family("1+x^(2k-1)")
    assert expand_exponents(fam.exponents(30), 1, 1, 30) == expand_product([fam], 30)
    with pytest.raises(ValueError):
        expand_exponents([0], 1, 1, 5)


def test_theta4_series():
    assert theta4_series(9).coeffs == (1, -2, 0, 0, 2, 0, 0, 0, 0, -2)


@settings(max_examples=60, deadline=None)
@given(series(), series())
def test_mul_matches_naive_convolution(a, b):
    assert list(mul(a, b).coeffs) == naive_mul(a, b)


@settings(max_examples=60, deadline=None)
@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert mul(a, one(ORDER)) == a
    assert sub(add(a, b), b) == a


@settings(max_examples=60, deadline=None)
@given(series(unit=True))
def test_inverse_is_two_sided(a):
    inv = invert(a)
    assert mul(a, inv) == one(ORDER)
    assert invert(inv) == a


@settings(max_examples=60, deadline=None)
@given(series(), series(), st.sampled_from([1, -1]), st.integers(1, 4))
def test_substitute_is_a_ring_homomorphism(a, b, sign, m):
    assert substitute(mul(a, b), sign, m) == mul(substitute(a, sign, m), substitute(b, sign, m))
    assert substitute(add(a, b), sign, m) == add(substitute(a, sign, m), substitute(b, sign, m))


@settings(max_examples=60, deadline=None)
@given(series(), st.integers(1, ORDER + 3), st.sampled_from([1, -1]), st.sampled_from([1, -1]))
def test_apply_binomial_is_multiplication(a, e, sign, power):
    coeffs = list(a.coeffs)
    apply_binomial(coeffs, e, sign, power)
    expected = mul(a, make_series(binomial_factor(e, sign, power, ORDER), ORDER))
    assert tuple(coeffs) == expected.coeffs


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.sampled_from([1, -1]), st.integers(1, 4), st.integers(0, 3),
                          st.sampled_from([1, -1])), min_size=1, max_size=4))
def test_expand_product_is_order_independent(raw):
    fams = [FactorFamily(sg, step, off - step + 1, pw) for sg, step, off, pw in raw]
    N = 25
    expected = one(N)
    for f in fams:
        expected = mul(expected, expand_exponents(f.exponents(N), f.sign, f.power, N))
    assert expand_product(fams, N) == expected
    assert expand_product(list(reversed(fams)), N) == expected
