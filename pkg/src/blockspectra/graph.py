"""Undirected simple graphs with dense 1-based vertex labels.

Vertices are always labeled 1..n.  Edges carry strictly positive weights
(default 1.0).  Instances are immutable after construction and safe to share
across threads; every operation in this module is a pure function.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices 1..n."""

    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[float, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        nbrs: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    @cached_property
    def _weight_of(self) -> dict[tuple[int, int], float]:
        return dict(zip(self.edges, self.weights))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._weight_of

    def weight(self, u: int, v: int) -> float:
        return self._weight_of[(min(u, v), max(u, v))]

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self.adjacency[v]) | {v}


@dataclass(frozen=True)
class TwinPartition:
    """Partition of the vertex set into maximal classes of true twins."""

    classes: tuple[tuple[int, ...], ...]

    def class_of(self, v: int) -> tuple[int, ...]:
        for cls in self.classes:
            if v in cls:
                return cls
        raise KeyError(v)


def build_graph(n: int, edges, weights=None) -> Graph:
    """Validate and normalize a graph description.

    `edges` is an iterable of vertex pairs; `weights` an optional mapping from
    a pair to a strictly positive weight (unspecified edges default to 1.0).
    Raises ValueError for self-loops, duplicate or out-of-range edges, and
    non-positive weights.
    """
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    normalized: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for pair in edges:
        u, v = pair
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge ({key[0]},{key[1]})")
        seen.add(key)
        normalized.append(key)
    normalized.sort()

    weight_map: dict[tuple[int, int], float] = {}
    if weights:
        for pair, w in weights.items():
            u, v = pair
            key = (min(u, v), max(u, v))
            if key not in seen:
                raise ValueError(f"weight given for non-edge ({key[0]},{key[1]})")
            if not w > 0:
                raise ValueError(f"non-positive weight {w} on edge ({key[0]},{key[1]})")
            weight_map[key] = float(w)
    return Graph(
        n=n,
        edges=tuple(normalized),
        weights=tuple(weight_map.get(e, 1.0) for e in normalized),
    )


def _bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def is_connected(g: Graph) -> bool:
    return len(_bfs_distances(g, 1)) == g.n


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components of g, each sorted, ordered by smallest contained vertex."""
    seen: set[int] = set()
    comps = []
    for s in g.vertices():
        if s in seen:
            continue
        reached = _bfs_distances(g, s)
        seen |= reached.keys()
        comps.append(tuple(sorted(reached)))
    return comps


def distance(g: Graph, u: int, v: int) -> int:
    """Hop count of a shortest u-v path; weights are ignored."""
    dist = _bfs_distances(g, u)
    if v not in dist:
        raise ValueError(f"vertices {u} and {v} are not connected")
    return dist[v]


def eccentricities(g: Graph) -> dict[int, int]:
    if not is_connected(g):
        raise ValueError("eccentricity requires a connected graph")
    return {v: max(_bfs_distances(g, v).values()) for v in g.vertices()}


def center(g: Graph) -> tuple[int, ...]:
    """All vertices of minimum eccentricity, sorted."""
    ecc = eccentricities(g)
    best = min(ecc.values())
    return tuple(v for v in g.vertices() if ecc[v] == best)


def delete_vertex_components(g: Graph, v: int) -> list[tuple[int, ...]]:
    """Components of g with v removed, ordered by smallest contained vertex."""
    if not (1 <= v <= g.n):
        raise ValueError(f"vertex {v} out of range 1..{g.n}")
    seen = {v}
    comps = []
    for s in g.vertices():
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y != v and y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    return comps


def true_twin_partition(g: Graph) -> TwinPartition:
    """Group vertices whose closed neighborhoods coincide."""
    by_hood: dict[frozenset[int], list[int]] = {}
    for v in g.vertices():
        by_hood.setdefault(g.closed_neighborhood(v), []).append(v)
    classes = sorted(tuple(sorted(c)) for c in by_hood.values())
    return TwinPartition(classes=tuple(classes))


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by `vertices`, relabeled 1..|vertices| in ascending
    order of the original labels.  Returns the subgraph and the old-to-new
    label mapping."""
    keep = sorted(set(vertices))
    if not keep:
        raise ValueError("empty vertex set")
    for v in keep:
        if not (1 <= v <= g.n):
            raise ValueError(f"vertex {v} out of range 1..{g.n}")
    relabel = {old: new for new, old in enumerate(keep, start=1)}
    kept = set(keep)
    edges = []
    weights = {}
    for (u, v), w in zip(g.edges, g.weights):
        if u in kept and v in kept:
            e = (relabel[u], relabel[v])
            edges.append(e)
            weights[e] = w
    return build_graph(len(keep), edges, weights), relabel


def coalesce(g: Graph, u: int, h: Graph, w: int) -> Graph:
    """Disjoint union of g and h with vertex u of g identified with vertex w
    of h.  Labels of g are preserved; the remaining vertices of h become
    n_g+1, n_g+2, ... in ascending order of their labels in h."""
    if not (1 <= u <= g.n):
        raise ValueError(f"vertex {u} out of range 1..{g.n}")
    if not (1 <= w <= h.n):
        raise ValueError(f"vertex {w} out of range 1..{h.n}")
    relabel = {w: u}
    nxt = g.n + 1
    for v in range(1, h.n + 1):
        if v != w:
            relabel[v] = nxt
            nxt += 1
    edges = list(g.edges)
    weights = {e: wt for e, wt in zip(g.edges, g.weights)}
    for (a, b), wt in zip(h.edges, h.weights):
        a2, b2 = relabel[a], relabel[b]
        e = (min(a2, b2), max(a2, b2))
        edges.append(e)
        weights[e] = wt
    return build_graph(g.n + h.n - 1, edges, weights)
