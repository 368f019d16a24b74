"""Exception hierarchy.

Each domain error carries a stable ``code`` used in the CLI's error JSON.
"""


class DomainError(ValueError):
    code = "domain_error"


class NotHermitian(DomainError):
    code = "not_hermitian"


class NotUnitary(DomainError):
    code = "not_unitary"


class OnBoundary(DomainError):
    """The unitary has 1 as an eigenvalue, so it is not in the image of the Cayley transform."""

    code = "on_boundary"


class NotOnBoundary(DomainError):
    code = "not_on_boundary"


class InvalidSpinTransform(DomainError):
    code = "invalid_spin_transform"


class NotSpecialUnitary(InvalidSpinTransform):
    code = "not_special_unitary"


class DegenerateDirection(DomainError):
    code = "degenerate_direction"


class NotSymmetric(DomainError):
    code = "not_symmetric"


class SpaceMismatch(DomainError):
    code = "space_mismatch"


class InvalidDescriptor(DomainError):
    code = "invalid_descriptor"


class IllDefinedHom(DomainError):
    code = "ill_defined_hom"


class ExactnessError(DomainError):
    code = "not_exact"


class CompositionNonzero(ExactnessError):
    """g o f is not zero, so image(f) cannot equal kernel(g)."""

    code = "composition_nonzero"
