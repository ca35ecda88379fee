"""Weight polytopes of irreducible representations and root-datum recovery.

All functions operate on plain Python data: a root datum is a dict with keys
``label``, ``rank``, ``roots``, ``coroots``; a character is a list of
``(weight, multiplicity)`` pairs with weights as integer lists.
"""

from ._core import (
    ArgumentError,
    DimensionError,
    InconsistencyError,
    MissingDataError,
    PreconditionError,
    ResourceError,
    blind,
    character,
    construct,
    decompose,
    dimension,
    polytope,
    transport_check,
    validate,
    weights,
)

__all__ = [
    "ArgumentError",
    "DimensionError",
    "InconsistencyError",
    "MissingDataError",
    "PreconditionError",
    "ResourceError",
    "blind",
    "character",
    "construct",
    "decompose",
    "dimension",
    "polytope",
    "transport_check",
    "validate",
    "weights",
]
