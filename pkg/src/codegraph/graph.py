"""Graphs realized by generating codes, distances, and class recognition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import kernels
from .code import GeneratingCode
from .errors import DisconnectedGraph

__all__ = [
    "Graph",
    "INDEPENDENT",
    "COMPLETE",
    "from_edges",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "build_threshold",
    "build_chain",
    "distance_matrix",
    "diameter",
    "is_connected",
    "recognize_threshold",
    "recognize_chain",
    "twin_classes",
    "to_edge_list",
    "read_edge_list",
    "to_dot",
]

INDEPENDENT = "independent"
COMPLETE = "complete"


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``cells`` tags each vertex with ``(string index, part)`` when the graph
    was realized from a code; vertices are then in construction order.
    """

    adjacency: np.ndarray
    cells: tuple[tuple[int, str], ...] | None = None
    origin_code: GeneratingCode | None = None
    family: str | None = None

    def __post_init__(self) -> None:
        adj = np.array(self.adjacency, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        if adj.diagonal().any():
            raise ValueError("adjacency has a loop")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency is not symmetric")
        if self.cells is not None and len(self.cells) != adj.shape[0]:
            raise ValueError("cells must tag every vertex")
        adj.setflags(write=False)
        object.__setattr__(self, "adjacency", adj)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def m(self) -> int:
        return int(self.adjacency.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def u8(self) -> np.ndarray:
        """Adjacency as a contiguous uint8 array, the kernel input format."""
        return np.ascontiguousarray(self.adjacency, dtype=np.uint8)

    def __repr__(self) -> str:
        origin = f", code={self.origin_code}" if self.origin_code is not None else ""
        return f"Graph(n={self.n}, m={self.m}{origin})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        adj[u, v] = adj[v, u] = True
    return Graph(adj)


def path_graph(n: int) -> Graph:
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(~np.eye(n, dtype=bool))


def _cells(code: GeneratingCode) -> tuple[tuple[int, str], ...]:
    tags: list[tuple[int, str]] = []
    for i, (s, t) in enumerate(code.strings, start=1):
        tags.extend([(i, INDEPENDENT)] * s)
        tags.extend([(i, COMPLETE)] * t)
    return tuple(tags)


def build_threshold(code: GeneratingCode) -> Graph:
    """Each 1-bit vertex is joined to every earlier vertex."""
    bits = np.frombuffer(code.bits.encode(), dtype=np.uint8) == ord("1")
    n = bits.size
    earlier = np.tri(n, k=-1, dtype=bool)  # [i, j] true iff j < i
    lower = earlier & bits[:, None]
    return Graph(lower | lower.T, _cells(code), code, "threshold")


def build_chain(code: GeneratingCode) -> Graph:
    """Each 1-bit vertex is joined to every earlier 0-bit vertex."""
    bits = np.frombuffer(code.bits.encode(), dtype=np.uint8) == ord("1")
    n = bits.size
    earlier = np.tri(n, k=-1, dtype=bool)
    lower = earlier & bits[:, None] & ~bits[None, :]
    return Graph(lower | lower.T, _cells(code), code, "chain")


def _raw_distances(g: Graph) -> np.ndarray:
    return kernels.bfs_distances(g.u8())


def is_connected(g: Graph) -> bool:
    return g.n == 0 or bool((_raw_distances(g)[0] >= 0).all())


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop distances; raises :class:`DisconnectedGraph`."""
    dist = _raw_distances(g)
    if (dist < 0).any():
        raise DisconnectedGraph(f"graph on {g.n} vertices is not connected")
    return dist


def diameter(g: Graph) -> int:
    return int(distance_matrix(g).max()) if g.n else 0


def recognize_threshold(g: Graph) -> bool:
    """True iff no induced P4, C4 or 2K2."""
    return not kernels.has_forbidden_threshold(g.u8())


def recognize_chain(g: Graph) -> bool:
    """True iff no induced 2K2, C3 or C5."""
    return not kernels.has_forbidden_chain(g.u8())


def twin_classes(g: Graph) -> list[list[int]]:
    """Partition into twin classes (equal neighborhoods up to each other).

    u, v are twins when N(u) - {v} == N(v) - {u}; this is an equivalence
    relation, and swapping two twins is an automorphism.
    """
    adj = g.adjacency
    n = g.n
    label = [-1] * n
    classes: list[list[int]] = []
    for u in range(n):
        if label[u] >= 0:
            continue
        label[u] = len(classes)
        members = [u]
        for v in range(u + 1, n):
            if label[v] >= 0:
                continue
            nu = adj[u].copy()
            nv = adj[v].copy()
            nu[v] = nv[u] = False
            if np.array_equal(nu, nv):
                label[v] = label[u]
                members.append(v)
        classes.append(members)
    return classes


def to_edge_list(g: Graph) -> str:
    """``n m`` header, then one ``u v`` line per edge (0-indexed)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge list must start with an 'n m' header")
    n, m = (int(x) for x in rows[0])
    edges = []
    for r in rows[1:]:
        if len(r) != 2:
            raise ValueError(f"bad edge line {' '.join(r)!r}")
        u, v = int(r[0]), int(r[1])
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        edges.append((u, v))
    g = from_edges(n, edges)
    if g.m != m:
        raise ValueError(f"header says {m} edges, found {g.m} distinct edges")
    return g


def _vertex_name(g: Graph, v: int) -> str:
    if g.cells is None:
        return str(v)
    i, part = g.cells[v]
    return f"{'x' if part == INDEPENDENT else 'y'}{i}"


def to_dot(g: Graph, name: str = "G") -> str:
    """Graphviz DOT text; independent cells are white, complete cells black."""
    out = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = [f'label="{_vertex_name(g, v)}"']
        if g.cells is not None:
            i, part = g.cells[v]
            fill = "white" if part == INDEPENDENT else "black"
            font = "black" if part == INDEPENDENT else "white"
            attrs += ["style=filled", f"fillcolor={fill}", f"fontcolor={font}", f"string={i}", f"part={part}"]
        out.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
