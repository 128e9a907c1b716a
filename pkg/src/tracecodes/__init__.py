"""Trace codes over GF(q)(x): exact construction, analysis and bounds."""

from .gf import (FieldDescriptor, FieldElem, GF, artin_schreier_solve,
                 field_from_spec, frobenius, trace_to_subfield)

__version__ = "0.1.0"

__all__ = [
    "FieldDescriptor",
    "FieldElem",
    "GF",
    "artin_schreier_solve",
    "field_from_spec",
    "frobenius",
    "trace_to_subfield",
    "__version__",
]
