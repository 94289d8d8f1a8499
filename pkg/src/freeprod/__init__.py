"""Exact computation in the free product of two finite groups."""
from .conjugacy import (
    ClassId,
    ClassKind,
    CyclicForm,
    are_conjugate,
    canonical_class,
    cyclic_reduce,
    enumerate_U_classes,
)
from .errors import FreeProdError, MixedContexts
from .groups import (
    GroupTable,
    NonGroup,
    Side,
    element_order,
    finite_centralizer,
    finite_conjugacy_classes,
    finite_max_root,
    load_group,
    preset,
)
from .roots import (
    RootData,
    centralizer,
    class_invariants,
    commutes,
    lemma1_decompose,
    primitive_root,
)
from .words import (
    FreeProduct,
    Letter,
    ReducedWord,
    SyllableType,
    classify_type,
    concat_mul,
    invert,
    power,
    reduce,
    syllable_length,
)

__version__ = "0.1.0"
