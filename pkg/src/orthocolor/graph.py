"""Orthogonality graphs of vector configurations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .exact import RationalLike, Vec, dot, parallel


class ParallelVectors(ValueError):
    pass


@dataclass(frozen=True)
class VectorConfig:
    vectors: tuple[Vec, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        vectors = tuple(v if isinstance(v, Vec) else Vec.of(v) for v in self.vectors)
        object.__setattr__(self, "vectors", vectors)
        for i, v in enumerate(vectors):
            if v.is_zero():
                raise ValueError(f"vector {i} is zero")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(len(vectors))))
        elif len(self.labels) != len(vectors):
            raise ValueError("one label per vector required")

    @classmethod
    def from_coords(cls, rows: Sequence[Sequence[RationalLike]], labels: Sequence[str] = ()) -> VectorConfig:
        return cls(tuple(Vec.of(r) for r in rows), tuple(labels))

    def __len__(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class OrthoGraph:
    """Undirected simple graph; ``members[i]`` lists the input vectors behind vertex ``i``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    members: tuple[tuple[int, ...], ...] = ()
    vectors: tuple[Vec, ...] = ()
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = sorted({(min(a, b), max(a, b)) for a, b in self.edges})
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge ({a}, {b}) out of range")
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in adj))
        if not self.members:
            object.__setattr__(self, "members", tuple((i,) for i in range(self.n)))

    @classmethod
    def from_edges(cls, n: int, edges) -> OrthoGraph:
        return cls(n, tuple(edges))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj[a]

    def triangles(self) -> list[tuple[int, int, int]]:
        out = []
        for a, b in self.edges:
            for c in sorted(self.adj[a] & self.adj[b]):
                if c > b:
                    out.append((a, b, c))
        return out

    def to_dot(self, labels: Sequence[str] | None = None) -> str:
        lines = ["graph ortho {"]
        for i in range(self.n):
            name = labels[i] if labels else str(i)
            lines.append(f'  {i} [label="{name}"];')
        for a, b in self.edges:
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "vertices": self.n,
            "edges": [list(e) for e in self.edges],
            "adjacency": [sorted(s) for s in self.adj],
            "members": [list(m) for m in self.members],
            "vectors": [[str(c) for c in v] for v in self.vectors],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


DECORTE13 = (
    (1, 0, 0), (0, 1, 0), (0, 0, 1),
    (0, 1, 1), (1, 0, 1), (1, 1, 0),
    (0, 1, -1), (1, 0, -1), (1, -1, 0),
    (-1, 1, 1), (1, -1, 1), (1, 1, -1),
    (1, 1, 1),
)


def builtin_decorte13() -> VectorConfig:
    """The 13-vector configuration whose orthogonality graph has chromatic number 4."""
    return VectorConfig.from_coords(DECORTE13, [f"v{i + 1}" for i in range(len(DECORTE13))])


def line_representative(v: Vec) -> Vec:
    """``v`` or ``-v``, whichever has a positive first nonzero coordinate."""
    for c in v:
        if c != 0:
            return v if c > 0 else -v
    raise ValueError("zero vector")


def build_graph(config: VectorConfig, projective: bool = False) -> OrthoGraph:
    """Orthogonality graph of ``config``.

    In projective mode a vector and its exact negative collapse into one vertex
    (represented by :func:`line_representative`); any other parallel pair raises
    :class:`ParallelVectors`.
    """
    if projective:
        index: dict[Vec, int] = {}
        reps: list[Vec] = []
        members: list[list[int]] = []
        for i, v in enumerate(config.vectors):
            r = line_representative(v)
            if r in index:
                members[index[r]].append(i)
                continue
            for j, other in enumerate(reps):
                if parallel(r, other):
                    raise ParallelVectors(
                        f"vectors {members[j][0]} and {i} are parallel but not opposite"
                    )
            index[r] = len(reps)
            reps.append(r)
            members.append([i])
        vertices = reps
        member_t = tuple(tuple(m) for m in members)
    else:
        vertices = list(config.vectors)
        member_t = tuple((i,) for i in range(len(vertices)))
    edges = [
        (i, j)
        for i in range(len(vertices))
        for j in range(i + 1, len(vertices))
        if dot(vertices[i], vertices[j]) == 0
    ]
    return OrthoGraph(len(vertices), tuple(edges), member_t, tuple(vertices))


def greedy_clique(graph: OrthoGraph) -> list[int]:
    """A maximal clique grown greedily from every start vertex; the largest one wins.

    Candidates are added by descending degree within the remaining common
    neighbourhood, ties to the lower index.
    """
    if graph.n == 0:
        return []
    best: list[int] = []
    order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    for start in order:
        clique = [start]
        cand = set(graph.adj[start])
        while cand:
            v = max(cand, key=lambda u: (len(graph.adj[u] & cand), graph.degree(u), -u))
            clique.append(v)
            cand &= graph.adj[v]
        if len(clique) > len(best):
            best = sorted(clique)
    return best
