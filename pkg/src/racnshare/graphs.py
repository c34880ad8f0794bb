"""Path-derived graph families used throughout the package.

All graphs here are small, simple, undirected graphs over vertices
``0..n-1``. Three derived families are built from the path P_p:

* shadow: two copies of P_p (written x_1..x_p and y_1..y_p) where each
  copy keeps its own path edges and every x_t is additionally joined to
  the neighbours of its twin, giving edges x_t y_{t+1} and y_t x_{t+1}.
* splitting: a new vertex y_t is added for each x_t and joined to the
  neighbours of x_t only (x-path edges kept, no y-y edges).
* mycielskian: new vertices y_t joined to the neighbours of x_t, plus an
  apex vertex adjacent to every y_t.

Vertex layout is fixed so labelings and serialization are reproducible:
x_1..x_p occupy indices 0..p-1, y_1..y_p occupy p..2p-1, and the apex
(when present) is the last index.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvalidParameterError, NotConnectedError

FAMILIES = ("path", "shadow", "splitting", "mycielski")

# A role tags what a vertex is in its family layout: ("x", t), ("y", t),
# ("apex", None) or ("plain", None). t is 1-based.
Role = tuple[str, "int | None"]

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with named, role-tagged vertices."""

    n: int
    edges: tuple[Edge, ...]
    names: tuple[str, ...]
    roles: tuple[Role, ...]
    family: str | None = None
    p: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameterError("graph needs at least one vertex")
        if len(self.names) != self.n or len(self.roles) != self.n:
            raise InvalidParameterError("names/roles must cover every vertex")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise InvalidParameterError(f"bad edge ({u},{v}) for n={self.n}")
            if (u, v) in seen:
                raise InvalidParameterError(f"duplicate edge ({u},{v})")
            seen.add((u, v))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edge_set

    def display(self, v: int) -> str:
        return self.names[v]

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidParameterError(f"no vertex named {name!r}") from None

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for u in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == self.n


def _family_names_roles(p: int, with_apex: bool) -> tuple[tuple[str, ...], tuple[Role, ...]]:
    names = [f"x{t}" for t in range(1, p + 1)] + [f"y{t}" for t in range(1, p + 1)]
    roles: list[Role] = [("x", t) for t in range(1, p + 1)] + [("y", t) for t in range(1, p + 1)]
    if with_apex:
        names.append("a")
        roles.append(("apex", None))
    return tuple(names), tuple(roles)


def _require_p(p: int) -> None:
    if not isinstance(p, int) or p < 2:
        raise InvalidParameterError(f"p must be an integer >= 2, got {p!r}")


def path_graph(p: int) -> Graph:
    """The path P_p on vertices x_1..x_p."""
    _require_p(p)
    names = tuple(f"x{t}" for t in range(1, p + 1))
    roles = tuple(("x", t) for t in range(1, p + 1))
    edges = tuple((t - 1, t) for t in range(1, p))
    return Graph(p, edges, names, roles, family="path", p=p)


def shadow_of_path(p: int) -> Graph:
    """Shadow of P_p: 2p vertices, 4(p-1) edges."""
    _require_p(p)
    edges: list[Edge] = []
    for t in range(1, p):
        edges.append(_norm_edge(t - 1, t))              # x_t x_{t+1}
        edges.append(_norm_edge(p + t - 1, p + t))      # y_t y_{t+1}
        edges.append(_norm_edge(t - 1, p + t))          # x_t y_{t+1}
        edges.append(_norm_edge(p + t - 1, t))          # y_t x_{t+1}
    names, roles = _family_names_roles(p, with_apex=False)
    return Graph(2 * p, tuple(sorted(edges)), names, roles, family="shadow", p=p)


def splitting_of_path(p: int) -> Graph:
    """Splitting graph of P_p: 2p vertices, 3(p-1) edges, no y-y edges."""
    _require_p(p)
    edges: list[Edge] = []
    for t in range(1, p):
        edges.append(_norm_edge(t - 1, t))
        edges.append(_norm_edge(t - 1, p + t))
        edges.append(_norm_edge(p + t - 1, t))
    names, roles = _family_names_roles(p, with_apex=False)
    return Graph(2 * p, tuple(sorted(edges)), names, roles, family="splitting", p=p)


def mycielski_of_path(p: int) -> Graph:
    """Mycielskian of P_p: 2p+1 vertices (apex last), 4p-3 edges."""
    _require_p(p)
    apex = 2 * p
    edges: list[Edge] = []
    for t in range(1, p):
        edges.append(_norm_edge(t - 1, t))
        edges.append(_norm_edge(t - 1, p + t))
        edges.append(_norm_edge(p + t - 1, t))
    for t in range(1, p + 1):
        edges.append(_norm_edge(apex, p + t - 1))
    names, roles = _family_names_roles(p, with_apex=True)
    return Graph(2 * p + 1, tuple(sorted(edges)), names, roles, family="mycielski", p=p)


_BUILDERS = {
    "path": path_graph,
    "shadow": shadow_of_path,
    "splitting": splitting_of_path,
    "mycielski": mycielski_of_path,
}


def build_graph(family: str, p: int) -> Graph:
    """Build a family graph by name; family must be one of FAMILIES."""
    try:
        builder = _BUILDERS[family]
    except KeyError:
        raise InvalidParameterError(
            f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}"
        ) from None
    return builder(p)


def custom_graph(n: int, edges, names=None, family: str | None = None) -> Graph:
    """An arbitrary graph (for fixtures); vertices are role-tagged plain."""
    names = tuple(names) if names is not None else tuple(str(v + 1) for v in range(n))
    roles: tuple[Role, ...] = tuple(("plain", None) for _ in range(n))
    norm = tuple(sorted(_norm_edge(u, v) for u, v in edges))
    return Graph(n, norm, names, roles, family=family)


def degree_stats(g: Graph) -> tuple[int, int]:
    """(minimum degree, maximum degree)."""
    degs = [g.degree(v) for v in range(g.n)]
    return min(degs), max(degs)


def diameter(g: Graph) -> int:
    """Longest shortest-path distance; graph must be connected."""
    if not g.is_connected():
        raise NotConnectedError("diameter is undefined for disconnected graphs")
    best = 0
    for s in range(g.n):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        best = max(best, max(dist.values()))
    return best
