"""Character degree graphs of small finite groups."""

from ._core import (
    ChargraphError,
    analyze_degrees,
    analyze_graph,
    analyze_group,
    build_graph,
    char_poly,
    character_degrees,
    class_sizes,
    group_order,
    is_solvable,
    list_fixtures,
    load_fixture,
    psl2_2n_degrees,
    rho,
    screen,
    spectrum,
)

__all__ = [
    "ChargraphError",
    "analyze_degrees",
    "analyze_graph",
    "analyze_group",
    "build_graph",
    "char_poly",
    "character_degrees",
    "class_sizes",
    "group_order",
    "is_solvable",
    "list_fixtures",
    "load_fixture",
    "psl2_2n_degrees",
    "rho",
    "screen",
    "spectrum",
]
