"""Weights, partitions and cup diagrams."""

from .diagrams import (
    CupDiagram,
    arrow_rel,
    arrow_successors,
    ascents,
    cup_diagram,
    defect,
    degree,
    descents,
    ell,
    insert_pair,
    is_clockwise,
    is_oriented,
    is_regular,
    lambda_circ,
    min_ell_on_ups,
    remove_pair,
    render_ascii,
    sign_at,
    staircase_contains,
)
from .weights import (
    DOWN,
    UP,
    Partition,
    Weight,
    check_enumeration_cap,
    covers,
    empty_weight,
    enumerate_weights,
    full_weight,
    leq,
    less,
    partition_to_weight,
    sort_descending,
    upward_closure,
    weight_to_partition,
)

__all__ = [
    "DOWN",
    "UP",
    "CupDiagram",
    "Partition",
    "Weight",
    "arrow_rel",
    "arrow_successors",
    "ascents",
    "check_enumeration_cap",
    "covers",
    "cup_diagram",
    "defect",
    "degree",
    "descents",
    "ell",
    "empty_weight",
    "enumerate_weights",
    "full_weight",
    "insert_pair",
    "is_clockwise",
    "is_oriented",
    "is_regular",
    "lambda_circ",
    "leq",
    "less",
    "min_ell_on_ups",
    "partition_to_weight",
    "remove_pair",
    "render_ascii",
    "sign_at",
    "sort_descending",
    "staircase_contains",
    "upward_closure",
    "weight_to_partition",
]
