import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubic_genus.conductor import Species
from cubic_genus.genus import (
    ALPHA,
    BETA,
    GAMMA,
    GenusReport,
    InconsistencyError,
    ambiguous_rank,
    classify,
    match_theorem_forms,
    norm_witnesses,
    pft_possible,
    q_star,
    q_star_lambda,
    ramified_count,
)
from cubic_genus.radicand import conjugate_radicand, cubefree_part, iter_factorizations, signature, signature_from_factors

radicands = st.integers(min_value=2, max_value=10**8).map(cubefree_part).filter(lambda d: d > 1)


def is_prime(n):
    return n > 1 and all(n % k for k in range(2, int(n**0.5) + 1))


class TestRamifiedCount:
    @pytest.mark.parametrize("d, t", [(38, 4), (57, 3), (2, 2), (3, 1), (17, 1), (323, 3)])
    def test_examples(self, d, t):
        assert ramified_count(signature(d)) == t


class TestQStar:
    @pytest.mark.parametrize("d, q", [(57, 1), (38, 0), (323, 1), (3, 1), (9, 1), (2, 0)])
    def test_examples(self, d, q):
        sig = signature(d)
        assert q_star(sig) == q
        assert q_star_lambda(sig) == q

    def test_witness_path(self):
        ws = norm_witnesses(signature(38))
        assert [w.prime for w in ws] == [2, 19]
        assert [w.ok for w in ws] == [False, True]
        assert len(ws[1].factors) == 2


class TestRank:
    @pytest.mark.parametrize("d, rank", [(57, 2), (19, 1), (2, 0), (5, 0), (3, 0)])
    def test_examples(self, d, rank):
        assert ambiguous_rank(signature(d)) == rank

    def test_clamp_never_needed(self):
        for d, parts in iter_factorizations(2, 10**6):
            if any(k >= 3 for _, k in parts):
                continue
            sig = signature_from_factors(d, parts)
            assert ramified_count(sig) - 2 + q_star(sig) >= 0, d


class TestForms:
    @pytest.mark.parametrize("d, form", [(57, 1), (874, 6), (19, None), (9519, 5), (323, 2), (38, 3), (190, 6)])
    def test_examples(self, d, form):
        assert match_theorem_forms(signature(d)) == form

    @pytest.mark.parametrize(
        "d, form",
        [
            (3 * 19, 1),
            (19 * 17, 2),
            (7 * 2, 3),
            (7 * 13, 4),  # 91 = 1 (mod 9)
            (3 * 7 * 2, 5),
            (19 * 2 * 5, 6),
            (7 * 2 * 11, 7),
            (7 * 17 * 5, 8),
            (3 * 17 * 53, 9),
            (17 * 53 * 71, 10),
            (2 * 5 * 11, 11),
            (3 * 2 * 5 * 11, 12),
            (2 * 5 * 11 * 23, 13),
        ],
    )
    def test_each_form_has_a_witness(self, d, form):
        d = cubefree_part(d)
        sig = signature(d)
        assert match_theorem_forms(sig) == form
        assert ambiguous_rank(sig) == 2

    def test_rank_three_exclusion(self):
        # smallest p*q1*q2 with p = -q1 = -q2 = 1 (mod 9)
        ps = [p for p in range(2, 200) if is_prime(p) and p % 9 == 1]
        qs = [q for q in range(2, 200) if is_prime(q) and q % 9 == 8]
        d = min(p * q1 * q2 for p in ps for q1 in qs for q2 in qs if q1 < q2)
        assert d == 19 * 17 * 53
        sig = signature(d)
        assert ambiguous_rank(sig) == 3
        assert match_theorem_forms(sig) is None

    @settings(max_examples=400)
    @given(radicands)
    def test_equivalence_random(self, d):
        sig = signature(d)
        assert (match_theorem_forms(sig) is not None) == (ambiguous_rank(sig) == 2)


class TestPft:
    def test_examples(self):
        assert pft_possible(1) == {ALPHA, GAMMA}
        assert pft_possible(4) == {ALPHA}
        assert pft_possible(12) == {BETA}
        assert pft_possible(9) == {BETA, GAMMA}

    @pytest.mark.parametrize("bad", [0, 14, -1])
    def test_out_of_range(self, bad):
        with pytest.raises(ValueError):
            pft_possible(bad)


class TestClassify:
    def test_57(self):
        c = classify(57)
        assert (c.profile.f, c.profile.species, c.profile.m) == (171, Species.ONE_A, 2)
        r = c.report
        assert (r.t, r.q_star, r.rank, r.matched_form) == (3, 1, 2, 1)
        assert r.pft_possible == {ALPHA, GAMMA}
        assert r.multiplet_kind == "doublet"

    def test_190(self):
        c = classify(190)
        assert (c.profile.f, c.profile.species, c.profile.m) == (190, Species.TWO, 2)
        r = c.report
        assert (r.t, r.q_star, r.rank, r.matched_form) == (4, 0, 2, 6)
        assert r.pft_possible == {ALPHA}
        assert r.multiplet_kind == "doublet"

    def test_5(self):
        r = classify(5).report
        assert (r.rank, r.matched_form) == (0, None)

    def test_normalizes(self):
        c = classify(16)
        assert c.d == 2 and c.warnings

    def test_rejects(self):
        with pytest.raises(ValueError):
            classify(1)
        with pytest.raises(ValueError):
            classify(27)

    def test_bound_only_flag(self):
        # w = 2 with 3 ramified
        assert classify(3 * 7 * 13).report.rank_bound_only
        assert not classify(57).report.rank_bound_only

    def test_report_invariants_enforced(self):
        with pytest.raises(InconsistencyError):
            GenusReport(t=3, q_star=1, rank=1, matched_form=None, pft_possible=frozenset(), multiplet_kind="doublet")
        with pytest.raises(InconsistencyError):
            GenusReport(t=3, q_star=0, rank=1, matched_form=4, pft_possible=frozenset({ALPHA}), multiplet_kind="singulet")

    @settings(max_examples=200)
    @given(radicands)
    def test_conjugate_invariance(self, d):
        a, b = classify(d), classify(conjugate_radicand(d))
        assert a.canonical == b.canonical
        assert a.profile == b.profile
        ra, rb = a.report, b.report
        assert (ra.t, ra.q_star, ra.rank, ra.matched_form) == (rb.t, rb.q_star, rb.rank, rb.matched_form)
