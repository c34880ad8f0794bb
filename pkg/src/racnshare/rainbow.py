"""Rainbow-path search and the exact minimum-color-count solver.

A path is *rainbow* when its edge weights are pairwise distinct; a coloring
is *rainbow connected* when every vertex pair is joined by some rainbow
path. The minimum, over all bijective labelings whose induced coloring is
rainbow connected, of the number of distinct edge weights is computed
exactly by ``racn_exact`` for small graphs.

All searches are deterministic: neighbors are visited in ascending index
order and ties are broken lexicographically on the vertex sequence, so
repeated runs yield identical witnesses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    BudgetExceededError,
    InstanceTooLargeError,
    InvalidParameterError,
    NotConnectedError,
)
from .graphs import Graph
from .labelings import Labeling, WeightedColoring, distinct_weight_count, edge_weights

DEFAULT_NODE_BUDGET = 1_000_000


@dataclass(frozen=True)
class RainbowPath:
    """A simple path whose edge weights are pairwise distinct."""

    vertices: tuple[int, ...]
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != max(len(self.vertices) - 1, 0):
            raise InvalidParameterError("weights must have one entry per edge")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidParameterError("path repeats a vertex")
        if len(set(self.weights)) != len(self.weights):
            raise InvalidParameterError("path repeats a weight; not rainbow")

    @property
    def edge_count(self) -> int:
        return len(self.weights)

    def display(self, g: Graph) -> str:
        return "-".join(g.display(v) for v in self.vertices)


@dataclass(frozen=True)
class RainbowConnectivity:
    """Outcome of a pairwise rainbow-connectivity check."""

    connected: bool
    witnesses: dict[tuple[int, int], RainbowPath]
    failing_pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.connected


@dataclass(frozen=True)
class RacnCertificate:
    """Result of the exact search: minimum color count plus a witness."""

    value: int
    witness: Labeling
    exhaustive: bool
    examined: int


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int) -> None:
        self.left = limit

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceededError("path-search node budget exhausted")


def exists_rainbow_path(
    g: Graph,
    w: WeightedColoring,
    u: int,
    v: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> RainbowPath | None:
    """First rainbow u-v path in lexicographic DFS order, or None."""
    if u == v:
        raise InvalidParameterError("endpoints must differ")
    for x in (u, v):
        if not 0 <= x < g.n:
            raise InvalidParameterError(f"vertex {x} out of range")
    budget = _Budget(node_budget)
    path = [u]
    seen = {u}
    used: set[int] = set()

    def dfs(a: int) -> bool:
        if a == v:
            return True
        for b in g.adjacency[a]:
            if b in seen:
                continue
            wt = w.weight(a, b)
            if wt in used:
                continue
            budget.spend()
            path.append(b)
            seen.add(b)
            used.add(wt)
            if dfs(b):
                return True
            path.pop()
            seen.remove(b)
            used.remove(wt)
        return False

    if not dfs(u):
        return None
    weights = tuple(w.weight(a, b) for a, b in itertools.pairwise(path))
    return RainbowPath(tuple(path), weights)


def is_rainbow_connected(
    g: Graph,
    w: WeightedColoring,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> RainbowConnectivity:
    """Check every unordered pair; witness map holds one path per pair."""
    if not g.is_connected():
        raise NotConnectedError("graph is not connected")
    witnesses: dict[tuple[int, int], RainbowPath] = {}
    for u, v in itertools.combinations(range(g.n), 2):
        p = exists_rainbow_path(g, w, u, v, node_budget=node_budget)
        if p is None:
            return RainbowConnectivity(False, witnesses, failing_pair=(u, v))
        witnesses[(u, v)] = p
    return RainbowConnectivity(True, witnesses)


def _rc_boolean(g: Graph, weight_of: dict[tuple[int, int], int]) -> bool:
    """Witness-free rainbow-connectivity test on a plain weight map."""
    adjacency = g.adjacency

    def reachable(s: int, t: int) -> bool:
        seen = {s}
        used: set[int] = set()

        def dfs(a: int) -> bool:
            if a == t:
                return True
            for b in adjacency[a]:
                if b in seen:
                    continue
                wt = weight_of[(a, b) if a < b else (b, a)]
                if wt in used:
                    continue
                seen.add(b)
                used.add(wt)
                if dfs(b):
                    return True
                seen.remove(b)
                used.remove(wt)
            return False

        return dfs(s)

    return all(reachable(u, v) for u, v in itertools.combinations(range(g.n), 2))


def max_new_color_path(
    g: Graph,
    w: WeightedColoring,
    collected: frozenset[int] = frozenset(),
    node_budget: int = DEFAULT_NODE_BUDGET,
    max_gain: int | None = None,
) -> RainbowPath:
    """Rainbow path maximizing the number of weights outside ``collected``.

    Ties go to fewer edges, then to the lexicographically smallest vertex
    sequence, making the winner unique and reproducible. ``max_gain`` caps
    the number of newly covered classes a candidate may claim (paths above
    the cap are traversed but not selected).
    """
    all_weights = set(w.classes)
    if not all_weights - set(collected):
        raise InvalidParameterError("every weight class is already collected")
    budget = _Budget(node_budget)
    best: tuple[tuple[int, int, tuple[int, ...]], list[int], list[int]] | None = None

    path: list[int] = []
    weights: list[int] = []
    seen: set[int] = set()
    used: set[int] = set()

    def consider() -> None:
        nonlocal best
        gain = len(set(weights) - collected)
        if max_gain is not None and gain > max_gain:
            return
        key = (-gain, len(weights), tuple(path))
        if best is None or key < best[0]:
            best = (key, list(path), list(weights))

    def dfs(a: int) -> None:
        for b in g.adjacency[a]:
            if b in seen:
                continue
            wt = w.weight(a, b)
            if wt in used:
                continue
            budget.spend()
            path.append(b)
            weights.append(wt)
            seen.add(b)
            used.add(wt)
            consider()
            dfs(b)
            path.pop()
            weights.pop()
            seen.remove(b)
            used.remove(wt)

    for s in range(g.n):
        path = [s]
        weights = []
        seen = {s}
        used = set()
        dfs(s)
    if best is None or -best[0][0] <= 0:
        # only reachable with max_gain <= 0; without a cap a single
        # uncollected edge always yields gain >= 1
        raise InvalidParameterError("no path adds an uncollected weight class")
    return RainbowPath(tuple(best[1]), tuple(best[2]))


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All adjacency-preserving vertex permutations (degree-pruned search)."""
    degs = [g.degree(v) for v in range(g.n)]
    adj = [set(g.adjacency[v]) for v in range(g.n)]
    out: list[tuple[int, ...]] = []
    image = [-1] * g.n
    taken = [False] * g.n

    def extend(v: int) -> None:
        if v == g.n:
            out.append(tuple(image))
            return
        for t in range(g.n):
            if taken[t] or degs[t] != degs[v]:
                continue
            ok = True
            for u in range(v):
                if (u in adj[v]) != (image[u] in adj[t]):
                    ok = False
                    break
            if ok:
                image[v] = t
                taken[t] = True
                extend(v + 1)
                taken[t] = False
                image[v] = -1

    extend(0)
    return out


def vertex_orbits(g: Graph) -> list[int]:
    """orbit representative (smallest member) for each vertex."""
    rep = list(range(g.n))

    def find(a: int) -> int:
        while rep[a] != a:
            rep[a] = rep[rep[a]]
            a = rep[a]
        return a

    for sigma in automorphisms(g):
        for v, tv in enumerate(sigma):
            ra, rb = find(v), find(tv)
            if ra != rb:
                if ra < rb:
                    rep[rb] = ra
                else:
                    rep[ra] = rb
    return [find(v) for v in range(g.n)]


def racn_exact(g: Graph, max_n: int = 8) -> RacnCertificate:
    """Exact minimum color count over rainbow-connected bijective labelings.

    Backtracking over label assignments in vertex order with two sound
    prunes: label 1 is only placed on one representative per vertex orbit
    of the automorphism group, and a partial assignment is abandoned once
    the weights already determined use at least as many distinct values as
    the best complete solution found. ``examined`` counts the complete
    labelings whose coloring was actually tested; pruning makes it smaller
    than n! without affecting exactness.
    """
    if g.n > max_n:
        raise InstanceTooLargeError(
            f"n={g.n} exceeds max_n={max_n}; use racn_upper with a known labeling"
        )
    if not g.is_connected():
        raise NotConnectedError("graph is not connected")

    orbit_rep = vertex_orbits(g)
    n = g.n
    adjacency = g.adjacency
    labels = [0] * n
    free = [True] * (n + 1)
    weight_count: dict[int, int] = {}
    examined = 0
    best_value: int | None = None
    best_witness: tuple[int, ...] | None = None

    def assign(v: int, distinct: int) -> None:
        nonlocal examined, best_value, best_witness
        if best_value is not None and distinct >= best_value:
            return
        if v == n:
            examined += 1
            weight_of = {
                (a, b) if a < b else (b, a): labels[a] + labels[b] for a, b in g.edges
            }
            if _rc_boolean(g, weight_of):
                best_value = distinct
                best_witness = tuple(labels)
            return
        for lab in range(1, n + 1):
            if not free[lab]:
                continue
            if lab == 1 and orbit_rep[v] != v:
                continue
            added: list[int] = []
            d = distinct
            for u in adjacency[v]:
                if u < v:
                    wt = labels[u] + lab
                    c = weight_count.get(wt, 0)
                    weight_count[wt] = c + 1
                    added.append(wt)
                    if c == 0:
                        d += 1
            labels[v] = lab
            free[lab] = False
            assign(v + 1, d)
            free[lab] = True
            labels[v] = 0
            for wt in added:
                c = weight_count[wt] - 1
                if c:
                    weight_count[wt] = c
                else:
                    del weight_count[wt]

    assign(0, 0)
    if best_value is None or best_witness is None:
        # every connected graph admits a rainbow-connected labeling (e.g. one
        # making all weights distinct), so this is unreachable for valid input
        raise InvalidParameterError("no rainbow-connected labeling found")
    return RacnCertificate(
        value=best_value,
        witness=Labeling(best_witness),
        exhaustive=True,
        examined=examined,
    )


def racn_upper(g: Graph, labeling: Labeling) -> int | None:
    """Distinct weight count if the labeling's coloring is rainbow connected."""
    coloring = edge_weights(g, labeling)
    if not is_rainbow_connected(g, coloring):
        return None
    return distinct_weight_count(coloring)
