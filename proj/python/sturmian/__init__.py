from ._core import (
    Error,
    Subshift,
    cf_expand,
    conjugate,
    flow_equivalent,
    k0_positive,
    run,
)

__all__ = [
    "Error",
    "Subshift",
    "cf_expand",
    "conjugate",
    "flow_equivalent",
    "k0_positive",
    "run",
]
