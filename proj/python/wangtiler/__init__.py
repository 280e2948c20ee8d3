"""Bounded Wang tiling: exact solvers, cover heuristics and ILP models."""

from ._wangtiler import (
    Tile,
    TileSet,
    builtin_set,
    builtin_set_names,
    complete_stochastic_set,
    corner_to_wang,
    cover,
    emit_lp,
    format_tileset,
    is_valid,
    load_tileset,
    parallel_arcs,
    parse_tileset,
    render_svg,
    smallest_torus,
    solve,
)

__all__ = [
    "Tile",
    "TileSet",
    "builtin_set",
    "builtin_set_names",
    "complete_stochastic_set",
    "corner_to_wang",
    "cover",
    "emit_lp",
    "format_tileset",
    "is_valid",
    "load_tileset",
    "parallel_arcs",
    "parse_tileset",
    "render_svg",
    "smallest_torus",
    "solve",
]
