"""Explicit Q_n, Fibonacci-cube and Lucas-cube graphs with BFS distances."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from .bitstring import BitString, Family, generate, hamming
from .exceptions import DomainError, ResourceError

MAX_GRAPH_N = 24


@dataclass(frozen=True)
class CubeGraph:
    n: int
    family: Family
    vertices: Tuple[BitString, ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    _index: Dict[int, int] = field(repr=False, compare=False, default_factory=dict)

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> Iterable[Tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def index_of(self, s: "BitString | str") -> int:
        if isinstance(s, str):
            s = BitString.from_str(s)
        if s.n != self.n or s.word not in self._index:
            raise DomainError(f"{s!s} is not a vertex of {self.family.value} cube n={self.n}")
        return self._index[s.word]

    def to_dot(self, highlight: Iterable[BitString] = (), name: Optional[str] = None) -> str:
        """DOT source with bit strings as labels; ``highlight`` vertices are double circles."""
        marked = {s.word for s in highlight}
        name = name or f"{self.family.symbol}_{self.n}"
        lines = [f"graph {name} {{"]
        for i, v in enumerate(self.vertices):
            attrs = f'label="{v.csv_token()}"'
            if v.word in marked:
                attrs += ", shape=doublecircle"
            lines.append(f"  v{i} [{attrs}];")
        lines.extend(f"  v{u} -- v{v};" for u, v in self.edges())
        lines.append("}")
        return "\n".join(lines) + "\n"


def build(n: int, family: "Family | str") -> CubeGraph:
    """Graph on ``generate(n, family)`` joining strings at Hamming distance 1."""
    family = Family.parse(family)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n > MAX_GRAPH_N:
        raise ResourceError(f"graph materialization capped at n <= {MAX_GRAPH_N}, got {n}")
    vertices = tuple(generate(n, family))
    index = {v.word: i for i, v in enumerate(vertices)}
    adjacency = []
    for v in vertices:
        nbrs = []
        for bit in range(n):
            j = index.get(v.word ^ (1 << bit))
            if j is not None:
                nbrs.append(j)
        adjacency.append(tuple(sorted(nbrs)))
    return CubeGraph(n, family, vertices, tuple(adjacency), index)


def bfs_distances(g: CubeGraph, source: int) -> List[int]:
    """Distances from vertex index ``source``; -1 marks unreachable vertices."""
    dist = [-1] * len(g.vertices)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def bfs_distance(g: CubeGraph, u: "BitString | str", v: "BitString | str") -> int:
    i, j = g.index_of(u), g.index_of(v)
    d = bfs_distances(g, i)[j]
    if d < 0:
        raise RuntimeError(f"{u!s} and {v!s} are in different components")
    return d


def verify_isometric(n: int, family: "Family | str") -> bool:
    """True iff every pair's BFS distance equals its Hamming distance."""
    g = build(n, family)
    for i, u in enumerate(g.vertices):
        dist = bfs_distances(g, i)
        for j, v in enumerate(g.vertices):
            if dist[j] != hamming(u, v):
                return False
    return True
