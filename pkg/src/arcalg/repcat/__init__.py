"""Module categories of K^m_n and H^m_n."""

from .homological import (
    DeltaMultiplicities,
    Resolution,
    comp_mult,
    delta_filtration_mults,
    ext_dim,
    ext_dims,
    ext_dims_from,
    hom_dim,
    hom_space,
    injective_hull,
    is_iso,
    minimal_resolution,
    projective_cover,
)
from .module import (
    ModuleMap,
    ModuleRep,
    cokernel,
    direct_sum,
    dual,
    image,
    kernel,
    projective,
    quotient,
    regular_module,
    simple,
    standard,
    submodule,
    trace_submodule,
    zero_module,
)
from .series import (
    is_rigid,
    is_uniserial,
    layer_multisets,
    loewy_length,
    radical,
    radical_layers,
    radical_series,
    socle,
    socle_layers,
    socle_series,
    top,
)

__all__ = [
    "DeltaMultiplicities",
    "ModuleMap",
    "ModuleRep",
    "Resolution",
    "cokernel",
    "comp_mult",
    "delta_filtration_mults",
    "direct_sum",
    "dual",
    "ext_dim",
    "ext_dims",
    "ext_dims_from",
    "hom_dim",
    "hom_space",
    "image",
    "injective_hull",
    "is_iso",
    "is_rigid",
    "is_uniserial",
    "kernel",
    "layer_multisets",
    "loewy_length",
    "minimal_resolution",
    "projective",
    "projective_cover",
    "quotient",
    "radical",
    "radical_layers",
    "radical_series",
    "regular_module",
    "simple",
    "socle",
    "socle_layers",
    "socle_series",
    "standard",
    "submodule",
    "top",
    "trace_submodule",
    "zero_module",
]
