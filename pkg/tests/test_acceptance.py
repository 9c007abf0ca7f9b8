"""End-to-end acceptance run: eleven criteria at their stated orders and
tolerances.  Each prints a PASS/FAIL line in the terminal summary."""

import random
import time
from fractions import Fraction
from itertools import product as cartesian

from eulergas import analytic as A
from eulergas import dirichlet as D
from eulergas import identities as I
from eulergas import partitions as P
from eulergas import schur as S
from eulergas.qseries import (
    add, expand_product, family, invert, make_series, mul, one, substitute, theta4_series,
)
from eulergas.verdict import compare


def test_criterion_01_euler(criterion):
    with criterion(1, "distinct parts = odd parts to N=500") as c:
        t0 = time.perf_counter()
        v = I.verify("euler_distinct_odd", 500)
        elapsed = time.perf_counter() - t0
        c.note(f"{v.status}, {elapsed * 1000:.0f} ms")
        assert v.ok
        assert elapsed < 1.0


def test_criterion_02_parafermion(criterion):
    with criterion(2, "multiplicity <= s-1 vs parts not divisible by s, s=2..10, N=300") as c:
        for s in range(2, 11):
            v = I.verify_record(I.instantiate("parafermion_multiplicity", s), 300)
            assert v.ok, (s, v)
        c.note("9 values of s match")


def test_criterion_03_prefixes(criterion):
    with criterion(3, "printed sequence prefixes") as c:
        p3 = I.sequence("parafermion3", 31)
        assert p3[:3] == [1, 1, 2] and p3[7] == 9 and p3[8] == 13 and p3[30] == 1225
        assert I.sequence("igppf3", 18) == [1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 4, 5, 6, 7, 8, 9, 10, 12]
        assert I.sequence("igppf4", 12) == [1, 1, 1, 2, 3, 4, 5, 7, 10, 13, 16, 21]
        assert I.sequence("theta4_inv", 10) == [1, 2, 4, 8, 14, 24, 40, 64, 100, 154]
        assert I.sequence("theta_ratio3", 15) == [1, 2, 4, 6, 10, 16, 24, 36, 52, 74, 104, 144,
                                                  198, 268, 360]
        assert I.sequence("theta_ratio2", 6) == [1, 2, 2, 4, 6, 8]
        c.note("6 prefixes reproduced")


def test_criterion_04_point_counts(criterion):
    with criterion(4, "point counts") as c:
        assert P.count_restricted(7, P.named_constraint("prime-to-3")) == 9
        assert P.count_restricted(10, P.named_constraint("distinct-prime-to-3")) == 4
        assert P.count_restricted(11, P.named_constraint("mod-6-in-0,1,3,5")) == 15
        assert P.overpartition_count(3) == 8 and P.overpartition_count(4) == 14
        assert P.overpartition_count(4, 2) == 6 and P.overpartition_count(3, 2) == 4
        assert D.arith_value("two_nu", 20) == 4
        # a(9) for distinct parts prime to 5: the oracle lists every partition
        listed = P.enumerate_restricted(9, P.named_constraint("distinct-prime-to-5"))
        assert len(listed) == 6
        printed = [[8, 1], [7, 2], [6, 3], [6, 2, 1], [4, 3, 2]]
        missing = [p for p in listed if p not in printed]
        assert missing == [[9]]
        c.note(f"a(9)=6 confirmed; a five-item listing omits {missing[0]}")


def test_criterion_05_theorems(criterion):
    with criterion(5, "excluded-polygon theorems") as c:
        assert I.verify("thm_squares", 200).ok
        for r in (2, 3, 4):
            assert I.verify(f"thm_2r_gons_r{r}", 150).ok, r
            assert I.verify(f"thm_2r1_gons_r{r}", 150).ok, r
        N = 200
        for a, b in (("thm2-mult-2", "at-most-k-minus-1"), ("no-4-gons", "no-squares")):
            left = P.gen_series(P.named_constraint(a), N)
            right = P.gen_series(P.named_constraint(b), N)
            assert left == right, (a, b)
        c.note("r=2 case coincides with the squares theorem")


def test_criterion_06_sums(criterion):
    with criterion(6, "q-hypergeometric sums vs products") as c:
        N = 200
        over = expand_product([family("1+x^k"), family("1/(1-x^k)")], N)
        assert I.gauss_cauchy_sum(N) == over
        assert I.verify("lebesgue", 200).ok
        assert I.verify("slater6", 120).ok
        for s in (2, 3, 4, 5):
            assert I.verify(f"andrews_multi_s{s}", 60).ok, s
        assert I.andrews_multisum(2, 60) == I.lebesgue_sum(60)
        assert I.verify("over_double_sum", 60).ok
        v = I.verify_record(I.two_modular_record("all"), 40)
        assert v.status in ("match", "mismatch")
        c.note(f"2-modular proposal, all-m reading, N=40: {v.status}")


CLAIMS_AT_SCALE = (
    [("d56", None), ("d64", None), ("d65", None), ("d_s1", None)]
    + [("d57", s) for s in range(2, 7)]
    + [("d58", s) for s in range(2, 8, 2)] + [("d59", s) for s in range(3, 8, 2)]
    + [("d60", s) for s in (4, 6)] + [("d62", s) for s in (3, 5)]
    + [("d68", s) for s in (3, 5)]
    + [("d69", s) for s in (3, 5)] + [("d70", s) for s in (2, 4)]
)


def test_criterion_07_dirichlet(criterion):
    with criterion(7, "Dirichlet-series claims to N=10^4") as c:
        t0 = time.perf_counter()
        for claim, s in CLAIMS_AT_SCALE:
            v = D.verify_dirichlet(claim, 10 ** 4, s)
            assert v.ok, (claim, s, v)
        elapsed = time.perf_counter() - t0
        c.note(f"{len(CLAIMS_AT_SCALE)} instances in {elapsed:.1f} s")
        assert elapsed < 30


def test_criterion_08_mellin_theta(criterion):
    with criterion(8, "Mellin quadrature and theta functional equations") as c:
        errs = [A.mellin_theta4(s).abs_err for s in (1.0, 2.0, 3.0)]
        assert max(errs) < 1e-6
        r1, r2 = A.theta_residuals()
        assert r1 < 1e-12 and r2 < 1e-10
        c.note(f"max Mellin error {max(errs):.1e}; theta residuals {r1:.1e}, {r2:.1e}")


def test_criterion_09_hagis(criterion):
    with criterion(9, "growth rate of bounded-multiplicity partitions") as c:
        r = A.hagis_check(2, 4000)
        assert abs(r.empirical - r.standard_candidate) < abs(r.empirical - r.alternative_candidate)
        big = A.hagis_check(10, 4000)
        assert abs(big.empirical - big.alternative_candidate) / big.alternative_candidate < 0.1
        assert abs(big.empirical - big.standard_candidate) / big.standard_candidate < 0.1
        c.note(f"s=2: {r.empirical:.4f} vs {r.standard_candidate:.4f} / {r.alternative_candidate:.4f}; "
               f"s=10: {big.empirical:.4f}")


def test_criterion_10_schur(criterion):
    with criterion(10, "Schur suite") as c:
        for M in (2, 3):
            assert S.bialternant_check(6, M, points=20, seed=M).ok
        for s, M in cartesian((1, 2, 3), (2, 3)):
            assert S.parafermi_det_check(s, M, points=20, seed=10 * s + M).ok, (s, M)
        for M in (2, 3):
            assert S.littlewood_check(M, 6).ok
        c.note("all exact")


def _random_series(rng, N, unit=False):
    cs = [rng.randint(-9, 9) for _ in range(N + 1)]
    if unit:
        cs[0] = 1
    return make_series(cs, N)


def test_criterion_11_properties(criterion):
    with criterion(11, "property suite") as c:
        names = I.catalog_constraints()
        for name in names:
            con = P.named_constraint(name)
            dp = P.restricted_counts(30, con)
            assert list(P.gen_series(con, 30).coeffs) == dp, name
            assert [len(P.enumerate_restricted(n, con)) for n in range(31)] == dp, name

        rng = random.Random(2024)
        N = 20
        for _ in range(200):
            a, b = _random_series(rng, N), _random_series(rng, N)
            sign, m = rng.choice((1, -1)), rng.randint(1, 4)
            assert substitute(mul(a, b), sign, m) == mul(substitute(a, sign, m), substitute(b, sign, m))
            assert substitute(add(a, b), sign, m) == add(substitute(a, sign, m), substitute(b, sign, m))
            u = _random_series(rng, N, unit=True)
            assert mul(u, invert(u)) == one(N)
        assert mul(theta4_series(N), invert(theta4_series(N))) == one(N)

        seqs = 0
        for claim, s in CLAIMS_AT_SCALE:
            cl = D.CLAIMS[claim]
            right = [D.arith_value(cl.fn, n, s) for n in range(1, 2001)]
            assert D.is_multiplicative(D.ArithmeticSequence(2000, tuple(right)), pairs=1000), claim
            if cl.spec is not None:
                left = D.zeta_quotient_coeffs(cl.spec(s), 2000)
                assert D.is_multiplicative(left, pairs=1000), claim
            seqs += 1
        c.note(f"{len(names)} constraints three-way; 200 random series; {seqs} Dirichlet sequences")
