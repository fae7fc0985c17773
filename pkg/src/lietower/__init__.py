"""Exact-arithmetic toolkit for the rotation algebras so(p,q), their
Cartan-Weyl structure, and the weight-tower model of the periodic system.

Everything is computed over the Gaussian rationals, so every identity
checked by the verification suites is decided exactly, with no tolerance.
"""

from .exact import (
    ExactMatrix,
    GaussianRational,
    commutator,
    expand_in_basis,
    rank,
    scalar_multiple_of,
)
from .sopq import GeneratorSet, Metric, build_generators, verify_commutation
from .cartan import (
    CartanSet,
    NamedOperator,
    RootVector,
    casimir,
    extract_root,
    find_cartan,
    ladder_operators,
    root_system,
    subalgebra_basis,
    weyl_generators,
    yao_basis,
)
from .labels import (
    CARTAN_QUANTUM_NUMBERS,
    DottedKet,
    MadelungKet,
    WeightKet,
    apply_ladder,
    dotted_to_madelung,
    mass_sl2c,
    mass_so42,
    multiplet_states,
    sym_dim,
)
from .periodic import (
    Element,
    TowerSlice,
    antimatter_mirror,
    assign_elements,
    haenzel_stats,
    madelung_sequence,
    period_lengths,
    projection_slice,
)

__version__ = "0.1.0"

__all__ = [
    "CARTAN_QUANTUM_NUMBERS",
    "CartanSet",
    "DottedKet",
    "Element",
    "ExactMatrix",
    "GaussianRational",
    "GeneratorSet",
    "MadelungKet",
    "Metric",
    "NamedOperator",
    "RootVector",
    "TowerSlice",
    "WeightKet",
    "antimatter_mirror",
    "apply_ladder",
    "assign_elements",
    "build_generators",
    "casimir",
    "commutator",
    "dotted_to_madelung",
    "expand_in_basis",
    "extract_root",
    "find_cartan",
    "haenzel_stats",
    "ladder_operators",
    "madelung_sequence",
    "mass_sl2c",
    "mass_so42",
    "multiplet_states",
    "period_lengths",
    "projection_slice",
    "rank",
    "root_system",
    "scalar_multiple_of",
    "subalgebra_basis",
    "sym_dim",
    "verify_commutation",
    "weyl_generators",
    "yao_basis",
]
