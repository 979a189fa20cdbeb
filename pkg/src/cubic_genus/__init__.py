"""Classification of pure cubic fields Q(cbrt(D)) by conductor, multiplicity and ambiguous 3-class rank."""

from .conductor import (
    ConductorProfile,
    MultipletGroup,
    Species,
    conductor_of,
    conductor_profile,
    enumerate_multiplets,
    multiplet_kind,
    multiplicity,
    species_of,
    x_sequence,
)
from .eisenstein import (
    EisensteinInt,
    divrem,
    gcd,
    is_one_mod_lambda_cubed,
    norm,
    primary_associate,
    split_rational_prime,
)
from .genus import (
    Classification,
    GenusReport,
    ambiguous_rank,
    classify,
    match_theorem_forms,
    pft_possible,
    q_star,
    q_star_lambda,
    ramified_count,
)
from .radicand import (
    PrimePower,
    RadicandSignature,
    canonical_radicand,
    conjugate_radicand,
    cubefree_part,
    factor,
    signature,
)

__version__ = "0.1.0"
