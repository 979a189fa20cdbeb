"""Ambiguous 3-class rank of N = Q(cbrt(D), w) over K = Q(w), and the thirteen rank-2 radicand forms.

The rank is ``t - 2 + q*`` where ``t`` counts primes of K ramified in N/K
and ``q*`` records whether w is a norm from N. ``q*`` is computed twice:
from residues of the rational primes mod 9, and from the lambda-adic
congruences of their primary Eisenstein factors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .conductor import ConductorProfile, conductor_of, conductor_profile, multiplet_kind
from .eisenstein import EisensteinInt, is_one_mod_lambda_cubed, primary_associate, split_rational_prime
from .radicand import (
    INERT_MINUS_ONE,
    INERT_OTHER,
    SPLIT_ONE,
    SPLIT_OTHER,
    RadicandSignature,
    canonical_radicand,
    cubefree_part,
    signature,
)

ALPHA, BETA, GAMMA = "alpha", "beta", "gamma"
PFT_ORDER = (ALPHA, BETA, GAMMA)


class FormOverlapError(RuntimeError):
    """A radicand satisfied more than one rank-2 form."""


class InconsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed."""


def ramified_count(sig: RadicandSignature) -> int:
    """Number ``t`` of primes of K ramified in N/K.

    Split primes contribute two primes of K, inert primes one, and lambda
    one when 3 ramifies (``d != +-1 mod 9``).
    """
    return 2 * sig.w + sig.J + (0 if sig.is_pm_one_mod_9 else 1)


def q_star(sig: RadicandSignature) -> int:
    """1 iff every prime ``l != 3`` dividing ``d`` is ``+-1 (mod 9)``."""
    return int(all(p % 9 in (1, 8) for p in sig.primes()))


@dataclass(frozen=True)
class NormWitness:
    prime: int
    factors: tuple[EisensteinInt, ...]
    one_mod_lambda_cubed: tuple[bool, ...]

    @property
    def ok(self) -> bool:
        return all(self.one_mod_lambda_cubed)


def norm_witnesses(sig: RadicandSignature) -> list[NormWitness]:
    """Primary Eisenstein primes above each ``l | d`` (``l != 3``) with their lambda**3 test."""
    out = []
    for p in sig.primes():
        if p % 3 == 1:
            factors = split_rational_prime(p)
        else:
            factors = (primary_associate(EisensteinInt(-p)),)
        out.append(NormWitness(p, factors, tuple(is_one_mod_lambda_cubed(pi) for pi in factors)))
    return out


def q_star_lambda(sig: RadicandSignature) -> int:
    """``q*`` from the congruences: 1 iff every primary factor is ``1 (mod lambda**3)``."""
    return int(all(w.ok for w in norm_witnesses(sig)))


def ambiguous_rank(sig: RadicandSignature) -> int:
    return max(0, ramified_count(sig) + q_star(sig) - 2)


# -- the thirteen rank-2 forms ------------------------------------------------


def _tags(items) -> list[str]:
    return [tag for _, tag in items]


def _form_predicates(sig: RadicandSignature) -> list[bool]:
    e, w, J = sig.e, sig.w, sig.J
    pm1 = sig.is_pm_one_mod_9
    ps = _tags(sig.split_primes)
    qs = _tags(sig.inert_primes)
    p_one = ps.count(SPLIT_ONE)
    q_m1 = qs.count(INERT_MINUS_ONE)

    def shape(nw, nj, with_three):
        return w == nw and J == nj and (e >= 1) == with_three

    # one prime p, one prime q: "p != 1 (mod 9) or q != -1 (mod 9)"
    pq_not_both = w == 1 and J == 1 and not (p_one == 1 and q_m1 == 1)
    return [
        # 1: 3^e p^e1 != +-1, p = 1 (mod 9)
        shape(1, 0, True) and not pm1 and p_one == 1,
        # 2: p^e1 q^f1, p = -q = 1 (mod 9)
        shape(1, 1, False) and p_one == 1 and q_m1 == 1,
        # 3: p^e1 q^f1 != +-1
        e == 0 and pq_not_both and not pm1,
        # 4: p1^e1 p2^e2 = +-1, some p_i != 1 (mod 9)
        shape(2, 0, False) and pm1 and p_one < 2,
        # 5: 3^e p^e1 q^f1 != +-1
        e >= 1 and pq_not_both and not pm1,
        # 6: p q1 q2 = +-1, p = 1, q1, q2 = 2 or 5 (mod 9)
        shape(1, 2, False) and pm1 and ps == [SPLIT_ONE] and qs == [INERT_OTHER, INERT_OTHER],
        # 7: p q1 q2 = +-1, p, -q1, -q2 = 4 or 7 (mod 9)
        shape(1, 2, False) and pm1 and ps == [SPLIT_OTHER] and qs == [INERT_OTHER, INERT_OTHER],
        # 8: p q1 q2 = +-1, p, -q2 = 4 or 7, q1 = -1 (mod 9)
        shape(1, 2, False) and pm1 and ps == [SPLIT_OTHER] and qs == [INERT_MINUS_ONE, INERT_OTHER],
        # 9: 3^e q1 q2 != +-1, q1 = q2 = -1 (mod 9)
        shape(0, 2, True) and not pm1 and q_m1 == 2,
        # 10: q1 q2 q3, all = -1 (mod 9)
        shape(0, 3, False) and q_m1 == 3,
        # 11: q1 q2 q3 != +-1, some q_i != -1
        shape(0, 3, False) and not pm1 and q_m1 < 3,
        # 12: 3^e q1 q2 q3 != +-1, some q_i != -1
        shape(0, 3, True) and not pm1 and q_m1 < 3,
        # 13: q1 q2 q3 q4 = +-1, some q_i != -1
        shape(0, 4, False) and pm1 and q_m1 < 4,
    ]


def match_theorem_forms(sig: RadicandSignature) -> int | None:
    """Index 1..13 of the rank-2 radicand form that ``sig`` satisfies, else ``None``."""
    hits = [i + 1 for i, ok in enumerate(_form_predicates(sig)) if ok]
    if len(hits) > 1:
        raise FormOverlapError(f"d = {sig.d} matches forms {hits}")
    return hits[0] if hits else None


_PFT = {
    **dict.fromkeys((1, 2), frozenset({ALPHA, GAMMA})),
    **dict.fromkeys(range(3, 9), frozenset({ALPHA})),
    **dict.fromkeys((9, 10), frozenset({BETA, GAMMA})),
    **dict.fromkeys(range(11, 14), frozenset({BETA})),
}


def pft_possible(form_id: int) -> frozenset[str]:
    """Principal factorization types that can occur for fields of the given form."""
    try:
        return _PFT[form_id]
    except KeyError:
        raise ValueError(f"form id must be in 1..13, got {form_id}") from None


def sorted_pft(types) -> list[str]:
    return [t for t in PFT_ORDER if t in types]


@dataclass(frozen=True)
class GenusReport:
    t: int
    q_star: int
    rank: int
    matched_form: int | None
    pft_possible: frozenset[str]
    multiplet_kind: str
    # w >= 2 with 3 ramified: the rank is only known to be >= 3 by the case analysis
    rank_bound_only: bool = False

    def __post_init__(self):
        if self.rank != max(0, self.t - 2 + self.q_star):
            raise InconsistencyError("rank differs from t - 2 + q*")
        if (self.matched_form is not None) != (self.rank == 2):
            raise InconsistencyError(f"form {self.matched_form} but rank {self.rank}")
        if self.matched_form is not None and not self.pft_possible:
            raise InconsistencyError("matched form without principal factorization types")


def genus_report(sig: RadicandSignature, profile: ConductorProfile) -> GenusReport:
    t = ramified_count(sig)
    qs = q_star(sig)
    if q_star_lambda(sig) != qs:
        raise InconsistencyError(f"q* paths disagree for d = {sig.d}")
    form = match_theorem_forms(sig)
    return GenusReport(
        t=t,
        q_star=qs,
        rank=max(0, t - 2 + qs),
        matched_form=form,
        pft_possible=pft_possible(form) if form is not None else frozenset(),
        multiplet_kind=multiplet_kind(profile.m),
        rank_bound_only=sig.w >= 2 and not sig.is_pm_one_mod_9,
    )


@dataclass(frozen=True)
class Classification:
    input: int
    d: int
    canonical: int
    signature: RadicandSignature
    profile: ConductorProfile
    report: GenusReport
    warnings: tuple[str, ...] = field(default_factory=tuple)


def classify(d: int) -> Classification:
    """Full classification of the field Q(cbrt(d)); non-cube-free input is normalized."""
    if d < 2:
        raise ValueError(f"radicand must exceed 1, got {d}")
    warnings = []
    radicand = cubefree_part(d)
    if radicand != d:
        if radicand == 1:
            raise ValueError(f"{d} is a perfect cube")
        warnings.append(f"normalized {d} to its cube-free part {radicand}")
    sig = signature(radicand)
    profile = conductor_profile(conductor_of(radicand))
    return Classification(
        input=d,
        d=radicand,
        canonical=canonical_radicand(radicand),
        signature=sig,
        profile=profile,
        report=genus_report(sig, profile),
        warnings=tuple(warnings),
    )
