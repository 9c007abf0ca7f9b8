import pytest

from eulergas import identities as I
from eulergas.partitions import gen_series, named_constraint
from eulergas.qseries import expand_product, family, invert, mul, substitute, theta4_series
from eulergas.verdict import MATCH, MISMATCH, Verdict, compare


def test_catalog_ids_are_unique_and_stable():
    ids = I.catalog_ids()
    assert len(ids) == len(set(ids)) == 97
    assert ids[0] == "euler_distinct_odd" and ids[-1] == "two_modular"
    assert [r.id for r in I.catalog()] == ids


def test_every_record_has_independent_builders():
    for rec in I.catalog():
        assert len(rec.builders) >= 2
        assert rec.anchor and rec.description
        assert rec.claim == (rec.id == "two_modular")


def test_record_rejects_duplicate_builders():
    b = I.product("1+x^k")
    with pytest.raises(ValueError):
        I.IdentityRecord("x", "d", (("a", b), ("a", b)), 5, "anchor")
    with pytest.raises(ValueError):
        I.IdentityRecord("x", "d", (("a", b),), 5, "anchor")


@pytest.mark.parametrize("rec", I.catalog(), ids=lambda r: r.id)
def test_catalog_matches_at_reduced_order(rec):
    N = min(rec.default_order, 40)
    assert I.verify_record(rec, N).ok


def test_get_record_parses_parameters_outside_defaults():
    rec = I.get_record("prop2_s11")
    assert rec.id == "prop2_s11"
    assert I.verify_record(rec, 40).ok
    assert I.get_record("thm_2r_gons_r9").id == "thm_2r_gons_r9"
    with pytest.raises(KeyError):
        I.get_record("prop2_x3")
    with pytest.raises(KeyError):
        I.get_record("nothing")


def test_instantiate():
    assert I.instantiate("parafermion_multiplicity", 10).id == "parafermion_multiplicity_s10"
    with pytest.raises(ValueError):
        I.instantiate("parafermion_multiplicity")
    with pytest.raises(KeyError):
        I.instantiate("nope", 2)
    assert I.families()["andrews_multi"] == tuple(range(2, 9))


def test_verify_reports_smallest_mismatch():
    rec = I.IdentityRecord("bad", "deliberately false", (
        ("distinct", I.product("1+x^k")),
        ("all", I.product("1/(1-x^k)")),
    ), 10, "test")
    v = I.verify_record(rec)
    assert v.status == MISMATCH
    assert v.first_diff == (2, 1, 2)
    with pytest.raises(ValueError):
        I.verify_record(rec, -1)


def test_verify_all_keeps_catalog_order_with_threads():
    recs = I.catalog()[:12]
    serial = I.verify_all(recs, scale=0.1)
    threaded = I.verify_all(recs, scale=0.1, threads=4)
    assert [r.id for r, *_ in threaded] == [r.id for r in recs]
    assert [(n, v) for _, n, v, _ in serial] == [(n, v) for _, n, v, _ in threaded]


def test_verify_all_scale_rounds_orders():
    (rec, N, v, ms), = I.verify_all([I.get_record("euler_distinct_odd")], scale=0.01)
    assert N == 5 and v.ok and ms >= 0


# sequences: published prefixes and independently computed values

def test_parafermion3_values():
    seq = I.sequence("parafermion3", 31)
    assert seq[:3] == [1, 1, 2]
    assert seq[7] == 9 and seq[8] == 13 and seq[30] == 1225


def test_igppf_prefixes():
    assert I.sequence("igppf3", 18) == [1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 4, 5, 6, 7, 8, 9, 10, 12]
    assert I.sequence("igppf4", 12) == [1, 1, 1, 2, 3, 4, 5, 7, 10, 13, 16, 21]
    # values below differ from a printed list by one typo and one omission
    assert I.sequence("igppf5", 20) == [1, 1, 1, 2, 2, 2, 3, 4, 4, 6, 7, 8, 10, 12, 14, 16, 19,
                                        22, 26, 30]
    assert I.sequence("igppf6", 16) == [1, 1, 1, 2, 2, 3, 5, 6, 7, 10, 12, 15, 21, 25, 30, 39]


def test_theta_sequences():
    assert I.sequence("theta4_inv", 10) == [1, 2, 4, 8, 14, 24, 40, 64, 100, 154]
    assert I.sequence("theta_ratio2", 6) == [1, 2, 2, 4, 6, 8]
    assert I.sequence("theta_ratio3", 15) == [1, 2, 4, 6, 10, 16, 24, 36, 52, 74, 104, 144,
                                              198, 268, 360]


def test_sequence_errors():
    with pytest.raises(KeyError):
        I.sequence("nope", 3)
    with pytest.raises(ValueError):
        I.sequence("igppf4", 0)


def test_two_modular_product_prefix():
    assert I.sequence("two_modular", 7) == [1, 1, 1, 2, 3, 4, 5]


# q-hypergeometric sums

def test_cauchy_sum_is_inverse_theta4():
    N = 60
    assert I.gauss_cauchy_sum(N) == invert(theta4_series(N))


def test_lebesgue_and_andrews_s2_agree_termwise():
    N = 40
    assert I.andrews_multisum(2, N) == I.lebesgue_sum(N)


def test_slater6_sum_matches_product():
    assert I.verify("slater6", 60).ok


def test_overpartition_double_sum():
    N = 30
    want = mul(expand_product([family("1+x^k")], N), expand_product([family("1/(1-x^k)")], N))
    assert I.overpartition_double_sum(N) == want


def test_theta_ratio_definition():
    N = 30
    assert I.theta_ratio(1, N).coeffs == (1,) + (0,) * N
    ratio = I.theta_ratio(2, N)
    assert mul(ratio, theta4_series(N)) == substitute(theta4_series(N), 1, 2)


def test_graded_parafermion_inverse_counts_distinct_prime_to():
    N = 40
    got = invert(I.graded_parafermion_product(5, N))
    assert got == gen_series(named_constraint("distinct-prime-to-5"), N)


def test_two_modular_readings():
    N = 40
    target = expand_product([family("1+x^(2k-1)"), family("1/(1-x^(2k))")], N)
    assert I.two_modular_sum(N, "all") == target
    for reading in ("min", "max"):
        v = compare(I.two_modular_sum(N, reading).coeffs, target.coeffs)
        assert v.first_diff == (9, 12, 13)
    with pytest.raises(ValueError):
        I.two_modular_sum(5, "median")
    assert I.two_modular_record("min").claim
    with pytest.raises(ValueError):
        I.two_modular_record("median")


def test_catalog_constraints_resolve():
    names = I.catalog_constraints()
    assert "prime-to-3" in names and "theta-ratio-2" in names
    for name in names:
        named_constraint(name)


# verdicts

def test_verdict_roundtrip_and_validation():
    v = Verdict(MISMATCH, (3, 1, 2), "note")
    assert Verdict.from_dict(v.to_dict()) == v
    ok = Verdict(MATCH)
    assert ok.ok and Verdict.from_dict(ok.to_dict()) == ok
    with pytest.raises(ValueError):
        Verdict("maybe")
    with pytest.raises(ValueError):
        Verdict(MATCH, (1, 2, 3))
    with pytest.raises(ValueError):
        Verdict(MISMATCH)


def test_compare():
    assert compare([1, 2], [1, 2]).ok
    assert compare([1, 2, 3], [1, 5, 4], start=1).first_diff == (2, 2, 5)
    with pytest.raises(ValueError):
        compare([1], [1, 2])
