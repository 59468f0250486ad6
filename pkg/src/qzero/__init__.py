"""Exact heights over definite quaternion algebras and certified small zeros of hermitian forms."""

from .constants import A_K, B_K, C_K, BoundValue, certify_leq, r_real, s_t_constants, verdict
from .errors import CapExceeded, DegenerateRestriction, InvalidInput, QZeroError
from .exact import ExactHeight
from .heights import SubspaceD, h_D, height_subspace_D, orthogonal_complement
from .instances import Instance
from .orders import Order, hurwitz_order, make_order, standard_order
from .quaternion import Algebra, HermitianForm, Quat, coord_map, coord_unmap
from .solver import SolverConfig, ZeroBasisCertificate, solve
from .trace_form import TraceFormQ, build_trace_matrix, form_heights, subspace_image

__version__ = "0.1.0"

__all__ = [
    "A_K",
    "Algebra",
    "B_K",
    "BoundValue",
    "C_K",
    "CapExceeded",
    "DegenerateRestriction",
    "ExactHeight",
    "HermitianForm",
    "Instance",
    "InvalidInput",
    "Order",
    "QZeroError",
    "Quat",
    "SolverConfig",
    "SubspaceD",
    "TraceFormQ",
    "ZeroBasisCertificate",
    "build_trace_matrix",
    "certify_leq",
    "coord_map",
    "coord_unmap",
    "form_heights",
    "h_D",
    "height_subspace_D",
    "hurwitz_order",
    "make_order",
    "orthogonal_complement",
    "r_real",
    "s_t_constants",
    "solve",
    "standard_order",
    "subspace_image",
    "verdict",
]
