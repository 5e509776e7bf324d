"""Exact signature, inverse and orbifold invariants of plane vector sequences."""
from .core import (
    DegenerateSequence,
    PlaneSeqError,
    ReductionReport,
    Vec2,
    VectorSequence,
    cross,
    flip,
    reduce,
    satisfies_assumption,
)
from .gram import SymMatrix, build_gram, det_product, leading_minors
from .inertia import Inertia, MinorVanishes, inertia_congruence, negatives_by_minors, signature
from .tridiag import (
    ComponentLabel,
    TriDiagSym,
    TypeLabel,
    classify,
    cofactor_tridiag,
    inverse_closed_form,
    realize,
    reconstruct,
    type_label,
)
from .winding import WindingReport, corollary_check, rotation_number, s_value, verify_main_theorem

__version__ = "0.1.0"
