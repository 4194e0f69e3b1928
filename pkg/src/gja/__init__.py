"""Term rewriting and axiom checks for a graded deformation of the quaternions."""

from .algebra import (
    A,
    BUILTINS,
    C,
    H,
    AlgebraTable,
    Element,
    Generator,
    binary_product,
    format_element,
    load_algebra,
    parity_of,
)

__version__ = "0.1.0"

__all__ = [
    "A",
    "BUILTINS",
    "C",
    "H",
    "AlgebraTable",
    "Element",
    "Generator",
    "binary_product",
    "format_element",
    "load_algebra",
    "parity_of",
    "__version__",
]
