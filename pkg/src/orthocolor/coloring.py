"""Exact chromatic number, coloring validation and 010 (Kochen-Specker) colorability."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exact import Vec
from .graph import OrthoGraph, VectorConfig, build_graph, greedy_clique


class TooLarge(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


BRUTE_FORCE_LIMIT = 12
KS_LIMIT = 40


@dataclass(frozen=True)
class Coloring:
    """Per-vertex labels in ``1..k``."""

    labels: tuple[int, ...]

    @property
    def k(self) -> int:
        return max(self.labels, default=0)

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class Validation:
    valid: bool
    edge: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class ChromaticResult:
    k: int
    witness: Coloring
    nodes_explored: int
    lower_bound: int
    upper_bound_initial: int

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "witness": list(self.witness.labels),
            "nodes_explored": self.nodes_explored,
            "lower_bound": self.lower_bound,
            "upper_bound_initial": self.upper_bound_initial,
        }


def validate_coloring(graph: OrthoGraph, coloring: Coloring | tuple[int, ...] | list[int]) -> Validation:
    labels = coloring.labels if isinstance(coloring, Coloring) else tuple(coloring)
    if len(labels) != graph.n:
        raise SizeMismatch(f"{len(labels)} labels for {graph.n} vertices")
    for a, b in graph.edges:
        if labels[a] == labels[b]:
            return Validation(False, (a, b))
    return Validation(True)


def dsatur(graph: OrthoGraph) -> list[int]:
    """Greedy DSATUR coloring with 0-based colors.

    Ties: highest saturation, then highest degree, then lowest index.
    """
    n = graph.n
    colors = [-1] * n
    seen: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = min(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (-len(seen[u]), -graph.degree(u), u),
        )
        c = 0
        while c in seen[v]:
            c += 1
        colors[v] = c
        for u in graph.adj[v]:
            seen[u].add(c)
    return colors


def _relabel(colors: list[int]) -> Coloring:
    # first-appearance order, 1-based
    mapping: dict[int, int] = {}
    for c in colors:
        if c not in mapping:
            mapping[c] = len(mapping) + 1
    return Coloring(tuple(mapping[c] for c in colors))


def chromatic_number(graph: OrthoGraph) -> ChromaticResult:
    """Exact chromatic number by DSATUR-ordered branch and bound.

    The greedy clique fixes the first colors and gives the lower bound; greedy
    DSATUR gives the initial upper bound.  A new color is only ever opened as
    the next unused one, so each partition is searched once.
    """
    n = graph.n
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    clique = greedy_clique(graph)
    lower = len(clique)
    greedy = dsatur(graph)
    upper = max(greedy) + 1
    best_k = upper
    best = list(greedy)
    nodes = 0
    if best_k == lower:
        return ChromaticResult(best_k, _relabel(best), nodes, lower, upper)

    adj = [sorted(s) for s in graph.adj]
    deg = [len(a) for a in adj]
    colors = [-1] * n
    # count[v][c] = number of neighbours of v holding color c
    count = [[0] * n for _ in range(n)]
    sat = [0] * n

    def assign(v: int, c: int) -> None:
        colors[v] = c
        for u in adj[v]:
            if count[u][c] == 0:
                sat[u] += 1
            count[u][c] += 1

    def unassign(v: int, c: int) -> None:
        colors[v] = -1
        for u in adj[v]:
            count[u][c] -= 1
            if count[u][c] == 0:
                sat[u] -= 1

    for c, v in enumerate(clique):
        assign(v, c)
    remaining = n - lower

    def search(used: int, left: int) -> bool:
        nonlocal best_k, best, nodes
        nodes += 1
        if left == 0:
            best_k = used
            best = list(colors)
            return best_k == lower
        v = -1
        key = None
        for u in range(n):
            if colors[u] < 0:
                k = (sat[u], deg[u], -u)
                if key is None or k > key:
                    key, v = k, u
        row = count[v]
        for c in range(used):
            if row[c] == 0:
                assign(v, c)
                done = search(used, left - 1)
                unassign(v, c)
                if done:
                    return True
        if used + 1 < best_k:
            assign(v, used)
            done = search(used + 1, left - 1)
            unassign(v, used)
            if done:
                return True
        return False

    search(lower, remaining)
    return ChromaticResult(best_k, _relabel(best), nodes, lower, upper)


def brute_force_chromatic(graph: OrthoGraph) -> int:
    """Chromatic number by exhaustive restricted-growth enumeration (small graphs only)."""
    n = graph.n
    if n > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"{n} vertices exceeds the brute-force limit of {BRUTE_FORCE_LIMIT}")
    if n == 0:
        return 0
    earlier = [[u for u in graph.adj[v] if u < v] for v in range(n)]
    labels = [0] * n

    def extend(v: int, used: int, k: int) -> bool:
        if v == n:
            return True
        for c in range(min(used + 1, k)):
            if all(labels[u] != c for u in earlier[v]):
                labels[v] = c
                if extend(v + 1, max(used, c + 1), k):
                    return True
        return False

    for k in range(1, n + 1):
        if extend(0, 0, k):
            return k
    raise AssertionError("unreachable: n colors always suffice")


@dataclass(frozen=True)
class KSAssignment:
    """One bit per input vector; parallel vectors share their bit."""

    bits: tuple[int, ...]


@dataclass(frozen=True)
class KSResult:
    assignment: KSAssignment | None
    lines: int
    triangles: int
    nodes_explored: int

    @property
    def colorable(self) -> bool:
        return self.assignment is not None


def _direction_key(v: Vec) -> tuple[int, int, int]:
    # primitive integer direction with positive first nonzero coordinate
    m = math.lcm(v.x.denominator, v.y.denominator, v.z.denominator)
    ints = [int(c * m) for c in v]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    first = next(c for c in ints if c != 0)
    if first < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def ks_check(graph: OrthoGraph, bits) -> bool:
    """True iff ``bits`` is an 010-coloring of ``graph`` (used as the oracle side)."""
    if any(bits[a] and bits[b] for a, b in graph.edges):
        return False
    return all(bits[a] + bits[b] + bits[c] == 1 for a, b, c in graph.triangles())


def ks_search(config: VectorConfig) -> KSResult:
    """Exhaustive search for an 010-coloring with unit propagation.

    Rules: no orthogonal pair is both 1, and every mutually orthogonal triple
    has exactly one 1.
    """
    if len(config) > KS_LIMIT:
        raise TooLarge(f"{len(config)} vectors exceeds the KS search limit of {KS_LIMIT}")
    keys: dict[tuple[int, int, int], int] = {}
    line_of: list[int] = []
    reps: list[Vec] = []
    for v in config.vectors:
        key = _direction_key(v)
        if key not in keys:
            keys[key] = len(reps)
            reps.append(Vec.of(key))
        line_of.append(keys[key])
    g = build_graph(VectorConfig(tuple(reps)))
    tris = g.triangles()
    n = g.n
    tri_of: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for t in tris:
        for v in t:
            tri_of[v].append(t)
    val = [-1] * n
    nodes = 0

    def propagate(v: int, b: int, trail: list[int]) -> bool:
        queue = [(v, b)]
        while queue:
            u, bit = queue.pop()
            if val[u] >= 0:
                if val[u] != bit:
                    return False
                continue
            val[u] = bit
            trail.append(u)
            if bit == 1:
                queue.extend((w, 0) for w in g.adj[u])
            else:
                for t in tri_of[u]:
                    others = [w for w in t if w != u]
                    vals = [val[w] for w in others]
                    if vals.count(0) == 2:
                        return False
                    if 1 not in vals and 0 in vals:
                        queue.append((others[vals.index(-1)], 1))
        return True

    order = sorted(range(n), key=lambda u: (-len(tri_of[u]), -g.degree(u), u))

    def solve() -> bool:
        nonlocal nodes
        nodes += 1
        v = next((u for u in order if val[u] < 0), None)
        if v is None:
            return True
        for b in (1, 0):
            trail: list[int] = []
            if propagate(v, b, trail) and solve():
                return True
            for u in trail:
                val[u] = -1
        return False

    if not solve():
        return KSResult(None, n, len(tris), nodes)
    assert ks_check(g, val)
    return KSResult(KSAssignment(tuple(val[line_of[i]] for i in range(len(config)))), n, len(tris), nodes)


def ks_colorable(config: VectorConfig) -> KSAssignment | None:
    return ks_search(config).assignment
