"""Regular dessins d'enfants as finite groups with ordered generating pairs.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (
    DEFAULT_ORDER_CAP,
    Group,
    OrderCapError,
    SpecParseError,
    UnsupportedInputError,
    ValidationError,
    __version__,
    abelian_baseline,
    build_group,
    count_automorphisms,
    decom_check,
    dessins,
    is_unique_dessin_group,
    lift_unit,
    psi,
    theorem_sweep,
    universal,
    validate_group,
    verify_family,
)

__all__ = [
    "DEFAULT_ORDER_CAP",
    "Group",
    "OrderCapError",
    "SpecParseError",
    "UnsupportedInputError",
    "ValidationError",
    "__version__",
    "abelian_baseline",
    "build_group",
    "count_automorphisms",
    "decom_check",
    "dessins",
    "is_unique_dessin_group",
    "lift_unit",
    "psi",
    "theorem_sweep",
    "universal",
    "validate_group",
    "verify_family",
]
