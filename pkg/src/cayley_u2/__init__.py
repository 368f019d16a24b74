"""Cayley compactification of Minkowski space as U(2), plus integer algebra
for surgery homology and Brauer-Wall group arithmetic."""
from .abelian import (
    FgAbelianGroup,
    GroupHom,
    IntegerMatrix,
    PresentedGroup,
    SmithDecomposition,
    cokernel,
    kernel,
    sequence_exactness,
    smith_normal_form,
)
from .actions import LorentzMatrix, SpinTransform, act, conjugate_unitary, lorentz_matrix
from .boundary import (
    BubblePoint,
    Cone,
    ExtendedComplex,
    Vertex,
    boundary_coordinates,
    boundary_point,
    bubble_v,
    lightcone_point,
    sigma_perp,
    stereographic,
)
from .bw import BwElement, SpaceDescriptor, bw_compose, bw_group_check, bw_structure, registry
from .cayley import Stratum, StratumLabel, cayley, cayley_inverse, classify_stratum
from .config import Tolerances, get_tolerances, set_tolerances, tolerances
from .errors import DomainError
from .matrix2 import Matrix2C
from .rays import LightRay, distance_to_limit, end_line, ray_limit
from .spacetime import MinkowskiEvent, causal_class, event_to_matrix, matrix_to_event, pseudometric
from .surgery import resolution_report, surgery_homology

__version__ = "0.1.0"
