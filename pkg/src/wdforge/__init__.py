"""Exact local computations: (phi, N)-modules, Weil-Deligne representations, GL2 parameters
and mod-l image diagnostics."""

from .compat import (
    LocalAutomorphicDatum,
    compat_check,
    rec_steinberg_twist,
    rec_unramified_ps,
)
from .errors import WDForgeError
from .fields import GF, QQ, FiniteField, NumberField, adjoin_root, field_from_descriptor
from .functor import tau_independence_check, wd_of
from .matrix import Matrix, char_poly, eigen_split, jordan_chevalley, min_poly
from .modl import (
    MatGroup,
    ad0_action,
    close_group,
    exists_scalar_outside_cyclotomic,
    h0_h1_ad0,
    is_decomposed_generic_at,
    is_enormous,
)
from .phin import (
    FilStep,
    FilteredPhiNModule,
    PhiNModule,
    hodge_tate_weights,
    is_monodromy_module,
    is_weakly_admissible,
    is_weight_zero_type,
    l_invariant,
    validate_phin,
)
from .poly import Poly
from .weil_deligne import (
    Segment,
    WDRep,
    direct_sum,
    from_segments,
    frobenius_semisimplify,
    is_generic_parameter,
    is_isomorphic,
    monodromy_dominates,
    segments,
    semisimplify,
    sp,
    twist_unramified,
    validate_wd,
)

__version__ = "0.1.0"
