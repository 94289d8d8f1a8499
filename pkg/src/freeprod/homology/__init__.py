from .assembly import (
    AssemblyReport,
    assemble_reduced_HC,
    assemble_reduced_PHC,
    char0_side_contribution,
    char0_side_periodic,
)
from .chains import NotAComplex, chain_homology, integral_homology, periodic_resolution
from .cyclic import TruncatedSum, cyclic_group_homology, k_star, t_star
from .rings import (
    INTEGERS,
    RATIONALS,
    CoefficientRing,
    GradedModule,
    ModuleExpr,
    UnsupportedRing,
    integers_mod,
    parse_ring,
    prime_field,
)
from .snf import smith_normal_form
