"""Lattice maze generation, rasterization, and I/O."""

from mazelab.maze.generate import (
    Endpoints,
    LatticeMaze,
    MazeConfig,
    gen_dfs,
    has_cycle,
    percolate,
    sample_endpoints,
)
from mazelab.maze.io import (
    maze_from_json,
    maze_to_json,
    read_ppm,
    write_ppm,
)
from mazelab.maze.raster import (
    COLOR_CORRIDOR,
    COLOR_END,
    COLOR_START,
    COLOR_WALL,
    derasterize,
    rasterize,
    rasterize_solution,
    solution_to_rgb,
)
from mazelab.maze.dataset import MazeSample, generate_sample

__all__ = [
    "COLOR_CORRIDOR",
    "COLOR_END",
    "COLOR_START",
    "COLOR_WALL",
    "Endpoints",
    "LatticeMaze",
    "MazeConfig",
    "MazeSample",
    "derasterize",
    "gen_dfs",
    "generate_sample",
    "has_cycle",
    "maze_from_json",
    "maze_to_json",
    "percolate",
    "rasterize",
    "rasterize_solution",
    "read_ppm",
    "sample_endpoints",
    "solution_to_rgb",
    "write_ppm",
]
