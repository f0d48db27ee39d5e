"""Acceptance gate: the package's exit criteria, one test per criterion.

Every check is exact (zero tolerance); the two large sweeps also carry the
wall-clock budgets they are expected to meet. Each criterion prints one
PASS/FAIL line, visible with ``pytest tests/test_acceptance.py -s``.
"""

import time
from contextlib import contextmanager

from overcubic.counting import (
    count_gen_overcubic_brute,
    count_gen_overcubic_dp,
    count_partitions,
    decompose,
    tau_even,
    tau_odd,
)
from overcubic.eta import gen_overcubic_gf
from overcubic.verify import (
    CongruenceFamily,
    check_named_identity,
    expected_mod4_residue,
    verify_conjectured_families,
    verify_family,
    verify_mod4_classification,
)


@contextmanager
def criterion(number, label):
    try:
        yield
    except BaseException:
        print(f"\n[criterion {number}] FAIL - {label}")
        raise
    print(f"\n[criterion {number}] PASS - {label}")


def test_criterion_1_oracle_equivalence():
    with criterion(1, "brute force = DP = series coefficient, c <= 4, n <= 25"):
        start = time.monotonic()
        for c in (1, 2, 3, 4):
            series = gen_overcubic_gf(c, 25)
            for n in range(26):
                brute = count_gen_overcubic_brute(c, n)
                dp = count_gen_overcubic_dp(c, n)
                assert brute == dp == series[n], (c, n, brute, dp, series[n])
        elapsed = time.monotonic() - start
        assert elapsed < 30.0, f"oracle sweep took {elapsed:.1f}s, budget 30s"


def test_criterion_2_mod4_classification_sweep():
    with criterion(2, "mod-4 residues match classification, c <= 10, n <= 2000"):
        start = time.monotonic()
        report = verify_mod4_classification(10, 2000, 2000)
        assert report.passed, report.counterexamples[:5]
        checked = (report.i_range[1] - report.i_range[0] + 1) * (
            report.n_range[1] - report.n_range[0] + 1
        )
        assert checked == 20000
        elapsed = time.monotonic() - start
        assert elapsed < 120.0, f"sweep took {elapsed:.1f}s, budget 120s"


def test_criterion_3_decomposition_identities():
    with criterion(3, "single-size decomposition identities, c <= 4, n <= 25"):
        for c in (1, 2, 3, 4):
            for n in range(1, 26):
                dec = decompose(c, n)
                assert dec.p_geq2 % 4 == 0, (c, n, dec)
                assert dec.kappa22 % 4 == 0, (c, n, dec)
                assert dec.kappa1 == tau_odd(n), (c, n, dec)
                assert dec.kappa21 == tau_even(n) * c, (c, n, dec)
                assert dec.p1 % 4 == expected_mod4_residue(c, n), (c, n, dec)
                assert dec.total == count_gen_overcubic_dp(c, n), (c, n, dec)


def test_criterion_4_identity_suite():
    suite = [
        ("psi", 500),
        ("psi-neg", 500),
        ("psi-3dissection", 300),
        ("f-neg-q-q2", 300),
        ("toh", 300),
        ("ramanujan-p5", 100),
        ("chan-a2", 100),
    ]
    with criterion(4, "identity suite exact to stated orders"):
        for name, order in suite:
            report = check_named_identity(name, order)
            assert report.passed, (name, report.counterexamples)
            assert report.order == order


def test_criterion_5_proved_congruence_families():
    with criterion(5, "proved families: mod 6 at 3n+2 and mod 12 at 9n+3"):
        start = time.monotonic()
        r1 = verify_family(CongruenceFamily(3, 2, 3, 2, 6), 5, 300, 3 * 300 + 2)
        assert r1.passed, r1.counterexamples[:5]
        for family in (CongruenceFamily(9, 5, 9, 3, 12), CongruenceFamily(9, 8, 9, 3, 12)):
            rep = verify_family(family, 3, 100, 9 * 100 + 3)
            assert rep.passed, (family.describe(), rep.counterexamples[:5])
        elapsed = time.monotonic() - start
        assert elapsed < 120.0, f"family sweeps took {elapsed:.1f}s, budget 120s"


def test_criterion_6_conjectured_families():
    with criterion(6, "all five conjectured families, i <= 3, n <= 100"):
        reports = verify_conjectured_families(3, 100, 9 * 100 + 8)
        assert len(reports) == 5
        for rep in reports:
            assert rep.passed, (rep.description, rep.counterexamples[:5])


def test_criterion_7_mod3_proof_steps():
    with criterion(7, "mod-3 vanishing along 3n+2 (c=3i+2) and 9n+3 (c=9i+5)"):
        for i in range(1, 5):
            series = gen_overcubic_gf(3 * i + 2, 300, modulus=3)
            assert series.extract_progression(3, 2).is_zero(), i
        for i in range(1, 3):
            series = gen_overcubic_gf(9 * i + 5, 909, modulus=3)
            chained = series.extract_progression(3, 0).extract_progression(3, 1)
            assert chained.is_zero(), i


def test_criterion_8_negative_control():
    with criterion(8, "seeded false family is reported as failing"):
        fake = CongruenceFamily(1, 1, 1, 0, 5)
        report = verify_family(fake, 3, 20, 60)
        assert not report.passed
        first = report.counterexamples[0]
        # the counterexample must be concrete and genuinely violate the claim
        observed = gen_overcubic_gf(fake.c_for(first.i), 60)[first.n] % 5
        assert observed == first.observed != 0


def test_criterion_9_ramanujan_congruences_by_enumeration():
    with criterion(9, "p(5n+4), p(7n+5), p(11n+6) divisibility for n <= 20"):
        for step, offset, modulus in ((5, 4, 5), (7, 5, 7), (11, 6, 11)):
            for n in range(21):
                value = count_partitions(step * n + offset)
                assert value % modulus == 0, (step, n, value)
