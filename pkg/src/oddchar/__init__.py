"""Exact combinatorics of odd-degree character correspondences.

Partitions, hooks and rim hooks; brute-force symmetric-group oracles
(hook-length degrees, Murnaghan-Nakayama values, Littlewood-Richardson
coefficients, explicit Sylow 2-subgroups); the canonical odd-degree
correspondences for symmetric groups, their odd-index maximal subgroups and
Sylow 2-subgroups; and the label-level correspondences for finite general
linear and unitary groups with Galois/outer equivariance.
"""

from .errors import DomainError, EnumerationCapError, OddcharError, TheoremViolationError
from .partitions import (
    HookPartition,
    Partition,
    RimHook,
    attach_unique_gamma,
    binom_is_odd,
    m_core,
    nu2,
    odd_multinomial_order,
    partitions,
    rim_hooks_of_length,
    two_adic,
    unique_descent,
)
from .characters import (
    CycleType,
    branch_restrict,
    class_size,
    degree,
    is_odd_partition,
    lr_coefficient,
    mn_value,
    odd_partitions,
)
from .permgroups import (
    PermutationGroup,
    restriction_multiplicities,
    sylow2_subgroup,
)
from .sym import (
    SylowLinearLabel,
    ThetaLabel,
    WreathOddLabel,
    alpha_sn,
    alpha_sn_inverse,
    count_odd_irr_sn,
    sharp_sn,
    sharp_sn_inverse,
    star_sn,
    theorem_d_star,
    wreath_odd_labels,
    young_star,
)
from .glu import (
    GLabel,
    ParabolicCorrespondent,
    canonical_order,
    count_odd_irr_gl,
    enumerate_odd_labels,
    is_odd_label,
    levi_star,
    parabolic_star,
    sl_correspondence_data,
    sl_label_census,
)
from .omega import (
    NormalizerLocalLabel,
    OmegaLabel,
    count_real_odd,
    enumerate_omega_labels,
    galois_act,
    local_to_omega,
    omega_to_local,
    outer_act,
    sharp_glu,
    sharp_glu_inverse,
)

__version__ = "0.1.0"
