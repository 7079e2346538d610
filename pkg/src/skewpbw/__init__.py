"""Exact computer algebra for skew PBW extension presentations:
normal-form arithmetic, tensor/opposite/enveloping constructions,
structural classification, and desk-scale isomorphism certification.
"""

from ._kernel import BACKEND as kernel_backend
from .commring import (
    CommPoly,
    PolyRing,
    QQ,
    Rational,
    RingEndo,
    SigmaDerivation,
    apply_derivation,
    apply_endo,
    poly_arith,
    rat,
    verify_endo_inverse,
)
from .errors import (
    NotBijectiveError,
    ParseError,
    PresentationError,
    PresentationMismatchError,
    RingMismatchError,
    SkewPBWError,
    UnsupportedOperationError,
)
from .pbwcore import (
    DEGLEX,
    MonomialOrder,
    Presentation,
    RelationTail,
    SkewElement,
    commute_past,
    homogeneous_components,
    leading_data,
    linear_ops,
    mono_mul,
    mul,
    normal_form,
    normal_form_rightfold,
    sigma_power,
)
from .constructors import (
    ConstructionRecord,
    GeneratorProvenance,
    change_of_scalars,
    enveloping,
    opposite,
    opposite_map,
    tensor_k,
    tensor_same_ring,
)
from .classify import (
    ClassReport,
    CyVerdict,
    OreTower,
    classify_flags,
    connected_check,
    cy_precondition,
    diamond_check,
    graded_check,
    growth,
    ore_tower,
)
from .homcheck import DenseMatrix, GeneratorImages, check_graded_iso, check_hom
from . import catalog, presfile

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
