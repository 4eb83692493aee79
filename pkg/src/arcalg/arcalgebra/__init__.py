"""Khovanov's extended arc algebra K^m_n and its truncation H^m_n."""

from .algebra import (
    AlgebraContext,
    AlgebraElement,
    default_field,
    get_context,
    multiply,
    schur_idempotent,
    star_elem,
    truncate,
)
from .basis import BasisDiagram, enumerate_basis, rotate, try_diagram
from .surgery import Layer, Picture, reduce_layer

__all__ = [
    "AlgebraContext",
    "AlgebraElement",
    "BasisDiagram",
    "Layer",
    "Picture",
    "default_field",
    "enumerate_basis",
    "get_context",
    "multiply",
    "reduce_layer",
    "rotate",
    "schur_idempotent",
    "star_elem",
    "truncate",
]
