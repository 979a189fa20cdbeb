from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubic_genus.conductor import (
    ConductorProfile,
    Species,
    conductor_of,
    conductor_profile,
    enumerate_multiplets,
    multiplet_kind,
    multiplicity,
    species_of,
    x_sequence,
)
from cubic_genus.radicand import conjugate_radicand, cubefree_part

radicands = st.integers(min_value=2, max_value=10**9).map(cubefree_part).filter(lambda d: d > 1)


def brute_multiplicity(f):
    """Count fields with conductor f by building every radicand on the primes of f."""
    ells = [p for p in range(2, f + 1) if f % p == 0 and all(p % k for k in range(2, p)) and p != 3]
    threes = {0: [0], 1: [0], 2: [1, 2]}[sum(1 for k in (3, 9) if f % k == 0)]
    fields = set()
    for t in threes:
        for exps in product((1, 2), repeat=len(ells)):
            d = 3**t
            for p, k in zip(ells, exps):
                d *= p**k
            if d < 2:
                continue
            pm1 = d % 9 in (1, 8)
            three_part = 9 if t else (1 if pm1 else 3)
            rad = 1
            for p in ells:
                rad *= p
            if three_part * rad == f:
                fields.add(min(d, conjugate_radicand(d)))
    return len(fields)


class TestConductor:
    def test_57(self):
        assert conductor_of(57) == 171 == 9 * 19

    def test_323(self):
        assert conductor_of(323) == 323

    def test_38(self):
        assert conductor_of(38) == 114 == 3 * 2 * 19

    def test_12(self):
        assert conductor_of(12) == 18

    @given(radicands)
    def test_conjugate_invariance(self, d):
        assert conductor_of(d) == conductor_of(conjugate_radicand(d))

    @given(radicands)
    def test_species_criterion(self, d):
        s = species_of(conductor_of(d))
        if d % 3 == 0:
            assert s is Species.ONE_A
        elif d % 9 in (1, 8):
            assert s is Species.TWO
        else:
            assert s is Species.ONE_B


class TestSpecies:
    @pytest.mark.parametrize("f, s", [(171, Species.ONE_A), (114, Species.ONE_B), (323, Species.TWO)])
    def test_examples(self, f, s):
        assert species_of(f) is s


class TestXSequence:
    def test_listed_values(self):
        assert [x_sequence(k) for k in range(-1, 6)] == [Fraction(1, 2), 0, 1, 1, 3, 5, 11]

    def test_recurrence(self):
        for k in range(0, 40):
            assert x_sequence(k + 1) == 2 * x_sequence(k) + (-1) ** k

    def test_domain(self):
        with pytest.raises(ValueError):
            x_sequence(-2)


class TestMultiplicity:
    def test_9p(self):
        assert conductor_profile(9 * 19).m == 2

    def test_3qqq(self):
        prof = conductor_profile(3 * 2 * 5 * 11)
        assert (prof.species, prof.u, prof.v, prof.m) == (Species.ONE_B, 0, 3, 3)

    def test_9qqq(self):
        prof = conductor_profile(9 * 2 * 5 * 11)
        assert (prof.species, prof.n, prof.m) == (Species.ONE_A, 3, 8)

    def test_single_prime(self):
        prof = conductor_profile(19)
        assert (prof.species, prof.u, prof.v, prof.m) == (Species.TWO, 1, 0, 1)

    def test_empty(self):
        with pytest.raises(ValueError, match="empty conductor"):
            conductor_profile(1)

    def test_not_a_conductor(self):
        # 7 = 7 (mod 9): neither 7 nor 49 is +-1 mod 9
        with pytest.raises(ValueError):
            conductor_profile(7)
        with pytest.raises(ValueError):
            conductor_profile(27 * 2)

    def test_conductor_above_64_bits(self):
        # 3 * p exceeds 2**64 but only p needs factoring
        p = 18446744073709551557
        prof = conductor_profile(3 * p)
        assert (prof.species, prof.n, prof.m) == (Species.ONE_B, 1, 1)

    def test_profile_matches_function(self):
        for f in (6, 18, 171, 323, 630, 210):
            prof = conductor_profile(f)
            assert multiplicity(prof) == prof.m
            assert prof.u + prof.v == prof.n

    def test_against_brute_force(self):
        checked = 0
        for f in range(2, 3000):
            b = brute_multiplicity(f)
            if b == 0:
                with pytest.raises(ValueError):
                    conductor_profile(f)
            else:
                assert conductor_profile(f).m == b, f
                checked += 1
        assert checked > 500


class TestMultiplets:
    def test_small(self):
        groups = {g.f: g for g in enumerate_multiplets(20)}
        assert groups[18].members == [6, 12]
        assert groups[18].kind == "doublet"

    def test_171(self):
        groups = {g.f: g for g in enumerate_multiplets(3300)}
        assert len(groups[171].members) == 2

    def test_trivial(self):
        groups = enumerate_multiplets(2)
        assert [(g.f, g.members, g.complete) for g in groups] == [(6, [2], False)]

    def test_sorted_and_distinct(self):
        groups = enumerate_multiplets(5000)
        fs = [g.f for g in groups]
        assert fs == sorted(fs)
        members = [d for g in groups for d in g.members]
        assert len(members) == len(set(members))

    def test_parallel_matches_sequential(self):
        seq = enumerate_multiplets(20000)
        par = enumerate_multiplets(20000, jobs=3)
        assert [(g.f, g.members, g.complete) for g in seq] == [(g.f, g.members, g.complete) for g in par]

    def test_kind_names(self):
        assert [multiplet_kind(k) for k in (1, 2, 3, 4, 8, 5)] == [
            "singulet", "doublet", "triplet", "quartet", "octet", "other(5)"
        ]
