"""Global numerical tolerances.

Every checking operation takes an optional ``tol`` override; when omitted the
active :class:`Tolerances` are used.  The active set lives in a context
variable so that :func:`tolerances` overrides are safe across threads.
"""
from __future__ import annotations

import contextlib
import contextvars
import dataclasses
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    hermitian: float = 1e-9
    unitary: float = 1e-9
    eigen: float = 1e-9
    sl2: float = 1e-9
    su2: float = 1e-9

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if not (0.0 < value <= 1e-3):
                raise ValueError(f"tolerance {field.name}={value!r} outside (0, 1e-3]")


_ACTIVE: contextvars.ContextVar[Tolerances] = contextvars.ContextVar(
    "cayley_u2_tolerances", default=Tolerances()
)


def get_tolerances() -> Tolerances:
    return _ACTIVE.get()


def set_tolerances(**overrides: float) -> Tolerances:
    """Replace the active tolerances in the current context and return them."""
    new = dataclasses.replace(_ACTIVE.get(), **overrides)
    _ACTIVE.set(new)
    return new


@contextlib.contextmanager
def tolerances(**overrides: float):
    token = _ACTIVE.set(dataclasses.replace(_ACTIVE.get(), **overrides))
    try:
        yield _ACTIVE.get()
    finally:
        _ACTIVE.reset(token)
