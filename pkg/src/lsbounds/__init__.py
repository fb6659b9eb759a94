"""Exact cup-length, zero-divisor cup-length, LS category and topological
complexity bounds for spaces with even-degree rational cohomology rings."""

from .algebra import AlgebraElement, QuotientAlgebra, build
from .bounds import BoundsReport, SpaceInfo, cat_bounds, report, tc_bounds
from .errors import (
    DuplicateGenerator,
    InconsistentSpace,
    InhomogeneousRelation,
    InvalidParameter,
    LSBoundsError,
    OddDegree,
    PresentationError,
    PresentationSyntaxError,
    Truncated,
    UnboundedAlgebra,
    UnknownGenerator,
)
from .invariants import CupResult, ZclResult, cup_length, zcl
from .presentation import (
    GeneratorSpec,
    RelationPoly,
    RingPresentation,
    cpn_presentation,
    fcpn_presentation,
    parse_presentation,
    product_presentation,
)
from .spaces import (
    betti_closed_form,
    cpn_space,
    cw_cell_counts,
    fcpn_space,
    kunneth_betti,
    product_space,
)
from .tensor import TensorElement, is_zero, t_multiply, t_power, tensor, zero_divisor

__version__ = "0.1.0"
