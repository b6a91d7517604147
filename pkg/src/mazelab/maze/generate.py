"""Maze generation on the grid lattice: RDFS spanning trees plus percolation.

Nodes are (row, col) pairs on the grid_n x grid_n lattice; edges join
lattice-adjacent nodes and are stored with their endpoints in sorted order.
Randomized depth-first search produces a spanning tree (acyclic, connected,
unique paths); percolation then turns each remaining wall into an edge
independently with probability p, which is what introduces cycles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from mazelab.errors import NoValidStartError, RangeError
from mazelab.rng import generator

Node = tuple[int, int]
Edge = tuple[Node, Node]

__all__ = [
    "Edge",
    "Endpoints",
    "LatticeMaze",
    "MazeConfig",
    "Node",
    "gen_dfs",
    "has_cycle",
    "percolate",
    "sample_endpoints",
]


def edge_between(a: Node, b: Node) -> Edge:
    """Canonical (sorted) form of the edge joining two nodes."""
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class MazeConfig:
    """Generation parameters for one maze distribution."""

    grid_n: int
    p: float = 0.0
    deadend_start: bool = True
    seed: int = 0

    def __post_init__(self):
        if self.grid_n < 1:
            raise RangeError(f"grid_n must be >= 1, got {self.grid_n}")
        if not 0.0 <= self.p <= 1.0:
            raise RangeError(f"percolation p must lie in [0, 1], got {self.p}")

    @property
    def raster_side(self) -> int:
        """Side length of the raster image: one pixel per node and per wall slot."""
        return 2 * self.grid_n - 1


@dataclass(frozen=True)
class LatticeMaze:
    """Undirected subgraph of the grid_n x grid_n lattice."""

    grid_n: int
    edges: frozenset = field(default_factory=frozenset)

    @cached_property
    def adjacency(self) -> dict:
        adj: dict[Node, list[Node]] = {n: [] for n in self.nodes()}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for nbrs in adj.values():
            nbrs.sort()
        return adj

    def nodes(self) -> list[Node]:
        return [(r, c) for r in range(self.grid_n) for c in range(self.grid_n)]

    def neighbors(self, node: Node) -> list[Node]:
        return self.adjacency[node]

    def degree(self, node: Node) -> int:
        return len(self.adjacency[node])

    def has_edge(self, a: Node, b: Node) -> bool:
        return edge_between(a, b) in self.edges

    def lattice_neighbors(self, node: Node) -> list[Node]:
        """Lattice-adjacent nodes in N, E, S, W order, whether or not joined."""
        r, c = node
        out = []
        for nr, nc in ((r - 1, c), (r, c + 1), (r + 1, c), (r, c - 1)):
            if 0 <= nr < self.grid_n and 0 <= nc < self.grid_n:
                out.append((nr, nc))
        return out


@dataclass(frozen=True)
class Endpoints:
    start: Node
    end: Node


def all_lattice_edges(grid_n: int) -> list[Edge]:
    """Every edge of the full lattice, in canonical sorted order."""
    edges = []
    for r in range(grid_n):
        for c in range(grid_n):
            if c + 1 < grid_n:
                edges.append(((r, c), (r, c + 1)))
            if r + 1 < grid_n:
                edges.append(((r, c), (r + 1, c)))
    edges.sort()
    return edges


def gen_dfs(grid_n: int, seed: int) -> LatticeMaze:
    """Spanning tree of the lattice via randomized depth-first search.

    Starts from a random node and, at each expansion, picks uniformly among
    the unvisited lattice neighbors of the stack top, backtracking when none
    remain.  Deterministic given the seed.
    """
    if grid_n < 1:
        raise RangeError(f"grid_n must be >= 1, got {grid_n}")
    rng = generator(seed)
    start = (int(rng.integers(grid_n)), int(rng.integers(grid_n)))
    visited = {start}
    stack = [start]
    edges = set()
    target = grid_n * grid_n
    while stack and len(visited) < target:
        cur = stack[-1]
        r, c = cur
        nbrs = []
        for nr, nc in ((r - 1, c), (r, c + 1), (r + 1, c), (r, c - 1)):
            if 0 <= nr < grid_n and 0 <= nc < grid_n and (nr, nc) not in visited:
                nbrs.append((nr, nc))
        if not nbrs:
            stack.pop()
            continue
        nxt = nbrs[int(rng.integers(len(nbrs)))]
        edges.add(edge_between(cur, nxt))
        visited.add(nxt)
        stack.append(nxt)
    return LatticeMaze(grid_n=grid_n, edges=frozenset(edges))


def percolate(maze: LatticeMaze, p: float, seed: int) -> LatticeMaze:
    """OR the maze with an independent Bernoulli(p) graph on all lattice edges.

    Every wall (lattice edge absent from the maze) becomes an edge with
    probability p; existing edges are kept.  One uniform draw is consumed
    per lattice edge in canonical order, so the stream is independent of
    the input maze's shape.
    """
    if not 0.0 <= p <= 1.0:
        raise RangeError(f"percolation p must lie in [0, 1], got {p}")
    rng = generator(seed)
    edges = set(maze.edges)
    for edge in all_lattice_edges(maze.grid_n):
        if rng.random() < p:
            edges.add(edge)
    return LatticeMaze(grid_n=maze.grid_n, edges=frozenset(edges))


def sample_endpoints(maze: LatticeMaze, deadend_start: bool, seed: int) -> Endpoints:
    """Sample the end uniformly over all nodes, then the start over valid nodes.

    Valid start nodes are those not equal to the end and not lattice-adjacent
    to it; with deadend_start the start is further restricted to degree-1
    nodes.  Raises NoValidStartError when the valid set is empty (the caller
    owns any resampling policy).
    """
    rng = generator(seed)
    nodes = maze.nodes()
    end = nodes[int(rng.integers(len(nodes)))]
    er, ec = end
    valid = [
        n for n in nodes
        if n != end and abs(n[0] - er) + abs(n[1] - ec) != 1
    ]
    if deadend_start:
        valid = [n for n in valid if maze.degree(n) == 1]
    if not valid:
        raise NoValidStartError(
            f"no valid start node (deadend_start={deadend_start}, end={end})"
        )
    start = valid[int(rng.integers(len(valid)))]
    return Endpoints(start=start, end=end)


def has_cycle(maze: LatticeMaze) -> bool:
    """True iff edge count exceeds node count minus component count (union-find)."""
    parent: dict[Node, Node] = {n: n for n in maze.nodes()}

    def find(x: Node) -> Node:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in sorted(maze.edges):
        ra, rb = find(a), find(b)
        if ra == rb:
            return True
        parent[ra] = rb
    return False
