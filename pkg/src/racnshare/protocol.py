"""End-to-end scheme simulation on a labeled graph.

``distribute`` splits a secret into one share per edge-weight class and
hands every participant the shares of its incident edges. Reconstruction
then walks rainbow paths, collecting the classes seen along each path in
phases, until all shares are gathered and the secret is rebuilt.
``simulate_dissemination`` models the final broadcast: informed
participants forward the payload around closed circuits, round by round,
falling back to plain shortest paths when no circuit reaches anyone new.

Everything here is deterministic; repeated runs produce identical traces.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    BudgetExceededError,
    InstanceTooLargeError,
    InvalidParameterError,
    NotConnectedError,
    RacnShareError,
    UnreachableParticipantsError,
)
from .formulas import SCHEME_FAMILIES, scheme_parameters, SchemeParameters
from .graphs import Graph
from .labelings import Labeling, WeightedColoring, edge_weights
from .rainbow import RainbowPath, max_new_color_path
from .sharing import SecretConfig, Share, reconstruct, split

EMPIRICAL_NODE_BUDGET = 10_000_000
CYCLE_BUDGET = 1_000_000


@dataclass(frozen=True)
class SchemeInstance:
    """A dealt secret: one share per weight class, threshold = class count."""

    graph: Graph
    labeling: Labeling
    coloring: WeightedColoring
    class_to_share: dict[int, Share]
    secret: bytes
    params: SchemeParameters | None

    @property
    def threshold(self) -> int:
        return len(self.class_to_share)

    def shares_of_vertex(self, v: int) -> dict[int, Share]:
        """Shares a participant holds: one per incident edge's class."""
        out = {}
        for u in self.graph.adjacency[v]:
            w = self.coloring.weight(v, u)
            out[w] = self.class_to_share[w]
        return out


def distribute(graph: Graph, labeling: Labeling, secret: bytes, seed: int = 0) -> SchemeInstance:
    """Split ``secret`` into k = #classes shares; class i-th smallest -> index i."""
    if not graph.is_connected():
        raise NotConnectedError("graph is not connected")
    coloring = edge_weights(graph, labeling)
    classes = sorted(coloring.classes)
    k = len(classes)
    shares = split(secret, SecretConfig(threshold=k, share_count=k, seed=seed))
    class_to_share = dict(zip(classes, shares))
    params = None
    if graph.family in SCHEME_FAMILIES and graph.p is not None:
        params = scheme_parameters(graph.family, graph.p)
    return SchemeInstance(
        graph=graph,
        labeling=labeling,
        coloring=coloring,
        class_to_share=class_to_share,
        secret=secret,
        params=params,
    )


@dataclass(frozen=True)
class ReconstructionTrace:
    phases: tuple[tuple[RainbowPath, frozenset[int]], ...]
    collected_after: tuple[frozenset[int], ...]
    participants_used: frozenset[int]
    recovered: bytes

    @property
    def phase_count(self) -> int:
        return len(self.phases)


def simulate_reconstruction(
    instance: SchemeInstance,
    clamp: bool = False,
    optimal: bool = False,
    node_budget: int = EMPIRICAL_NODE_BUDGET,
) -> ReconstructionTrace:
    """Collect all weight classes along rainbow paths, then rebuild the secret.

    Default policy is greedy: each phase takes the path covering the most
    not-yet-collected classes (ties: fewer edges, then lexicographically
    smallest vertex sequence). ``clamp=True`` caps a phase's haul at k-1
    classes. ``optimal=True`` replaces greedy with the exhaustive
    minimum-phase cover used by ``empirical_rp``/``empirical_m``.

    If the path search exhausts its budget, the raised error carries the
    phases finished so far in its ``partial_trace`` attribute.
    """
    g = instance.graph
    coloring = instance.coloring
    all_classes = frozenset(coloring.classes)
    k = len(all_classes)

    if optimal:
        paths = _optimal_cover(g, coloring, node_budget=node_budget)
        ordered: list[RainbowPath] = []
        remaining = list(paths)
        collected: set[int] = set()
        while remaining:
            best = min(
                remaining,
                key=lambda rp: (
                    -len(set(rp.weights) - collected),
                    rp.edge_count,
                    rp.vertices,
                ),
            )
            remaining.remove(best)
            ordered.append(best)
            collected |= set(best.weights)
        chosen = ordered
    else:
        chosen = []
        collected = set()
        max_gain = max(1, k - 1) if clamp else None
        while collected != all_classes:
            try:
                path = max_new_color_path(
                    g,
                    coloring,
                    frozenset(collected),
                    node_budget=node_budget,
                    max_gain=max_gain,
                )
            except BudgetExceededError as err:
                err.partial_trace = _finish_trace(instance, chosen, partial=True)
                raise
            chosen.append(path)
            collected |= set(path.weights)
    return _finish_trace(instance, chosen)


def _finish_trace(
    instance: SchemeInstance, paths: list[RainbowPath], partial: bool = False
) -> ReconstructionTrace:
    phases = []
    cumulative: list[frozenset[int]] = []
    collected: frozenset[int] = frozenset()
    used: set[int] = set()
    for path in paths:
        newly = frozenset(path.weights) - collected
        collected = collected | newly
        phases.append((path, newly))
        cumulative.append(collected)
        used |= set(path.vertices)
    if partial:
        return ReconstructionTrace(
            phases=tuple(phases),
            collected_after=tuple(cumulative),
            participants_used=frozenset(used),
            recovered=b"",
        )
    shares = [instance.class_to_share[w] for w in sorted(collected)]
    recovered = reconstruct(shares, instance.threshold)
    if recovered != instance.secret:
        raise RacnShareError("reconstructed secret does not match the original")
    return ReconstructionTrace(
        phases=tuple(phases),
        collected_after=tuple(cumulative),
        participants_used=frozenset(used),
        recovered=recovered,
    )


def _rainbow_path_signatures(
    g: Graph, coloring: WeightedColoring, node_budget: int
) -> tuple[list[int], dict[tuple[int, int], tuple[int, ...]]]:
    """Enumerate every rainbow path as (class bitmask, vertex bitmask).

    Returns the sorted class values and, per signature pair, the first path
    found in lexicographic DFS order (which is the lex-least with that
    signature). Raises when the step budget runs out.
    """
    classes = sorted(coloring.classes)
    class_bit = {c: 1 << i for i, c in enumerate(classes)}
    found: dict[tuple[int, int], tuple[int, ...]] = {}
    steps = 0

    path: list[int] = []
    used: set[int] = set()

    def dfs(a: int, cmask: int, vmask: int) -> None:
        nonlocal steps
        for b in g.adjacency[a]:
            if (vmask >> b) & 1:
                continue
            wt = coloring.weight(a, b)
            if wt in used:
                continue
            steps += 1
            if steps > node_budget:
                raise InstanceTooLargeError(
                    "rainbow-path cover search exceeded its step budget"
                )
            path.append(b)
            used.add(wt)
            nm = cmask | class_bit[wt]
            vm = vmask | (1 << b)
            found.setdefault((nm, vm), tuple(path))
            dfs(b, nm, vm)
            path.pop()
            used.remove(wt)

    for s in range(g.n):
        path = [s]
        used = set()
        dfs(s, 0, 1 << s)
    return classes, found


def empirical_rp(
    g: Graph, coloring: WeightedColoring, node_budget: int = EMPIRICAL_NODE_BUDGET
) -> int:
    """Minimum number of rainbow paths jointly covering every weight class."""
    classes, found = _rainbow_path_signatures(g, coloring, node_budget)
    full = (1 << len(classes)) - 1
    cmasks = sorted({c for c, _ in found}, key=lambda m: -m.bit_count())
    reached = {0}
    frontier = {0}
    depth = 0
    while full not in reached:
        depth += 1
        nxt = set()
        for m in frontier:
            for cm in cmasks:
                u = m | cm
                if u not in reached:
                    reached.add(u)
                    nxt.add(u)
        if not nxt:
            raise InvalidParameterError("no rainbow-path cover exists")
        frontier = nxt
    return depth


def empirical_m(
    g: Graph, coloring: WeightedColoring, node_budget: int = EMPIRICAL_NODE_BUDGET
) -> int:
    """Fewest distinct vertices over all minimum-phase rainbow-path covers."""
    _, _, best_vertices = _min_vertex_cover_choice(g, coloring, node_budget)
    return len(best_vertices)


def _optimal_cover(
    g: Graph, coloring: WeightedColoring, node_budget: int = EMPIRICAL_NODE_BUDGET
) -> list[RainbowPath]:
    """A minimum-phase cover with fewest distinct vertices, as actual paths."""
    found, chosen_pairs, _ = _min_vertex_cover_choice(g, coloring, node_budget)
    out = []
    for pair in chosen_pairs:
        vertices = found[pair]
        weights = tuple(
            coloring.weight(a, b) for a, b in zip(vertices, vertices[1:])
        )
        out.append(RainbowPath(vertices, weights))
    return out


def _min_vertex_cover_choice(
    g: Graph, coloring: WeightedColoring, node_budget: int
) -> tuple[dict[tuple[int, int], tuple[int, ...]], list[tuple[int, int]], set[int]]:
    classes, found = _rainbow_path_signatures(g, coloring, node_budget)
    rp = empirical_rp(g, coloring, node_budget=node_budget)
    full = (1 << len(classes)) - 1

    by_class_mask: dict[int, list[int]] = {}
    for cmask, vmask in found:
        by_class_mask.setdefault(cmask, []).append(vmask)

    def pareto_min(vmasks: list[int]) -> list[int]:
        vmasks = sorted(vmasks, key=lambda v: (v.bit_count(), v))
        keep: list[int] = []
        for v in vmasks:
            if not any(kv & v == kv for kv in keep):
                keep.append(v)
        return keep

    items = sorted(
        ((c, pareto_min(vs)) for c, vs in by_class_mask.items()),
        key=lambda cv: (-cv[0].bit_count(), cv[0]),
    )
    suffix_union = [0] * (len(items) + 1)
    for i in range(len(items) - 1, -1, -1):
        suffix_union[i] = suffix_union[i + 1] | items[i][0]

    best_count: int | None = None
    best_pick: list[tuple[int, int]] | None = None

    def search(i: int, picked: list[tuple[int, int]], cmask: int, vunion: int) -> None:
        nonlocal best_count, best_pick
        if len(picked) == rp:
            if cmask == full:
                pc = vunion.bit_count()
                if best_count is None or pc < best_count:
                    best_count = pc
                    best_pick = list(picked)
            return
        if i >= len(items) or cmask | suffix_union[i] != full:
            return
        c, vmasks = items[i]
        for v in vmasks:
            trial = vunion | v
            if (
                best_count is not None
                and trial.bit_count() >= best_count
                and cmask | c != full
            ):
                continue
            picked.append((c, v))
            search(i + 1, picked, cmask | c, trial)
            picked.pop()
        search(i + 1, picked, cmask, vunion)

    search(0, [], 0, 0)
    if best_pick is None:
        raise InvalidParameterError("no rainbow-path cover exists")
    vertices = set()
    for _, vmask in best_pick:
        v = 0
        while vmask:
            if vmask & 1:
                vertices.add(v)
            vmask >>= 1
            v += 1
    return found, best_pick, vertices


def enumerate_cycles(
    g: Graph,
    anchor: frozenset[int] | set[int],
    max_len: int | None = None,
    cycle_budget: int = CYCLE_BUDGET,
) -> list[tuple[int, ...]]:
    """All simple cycles through at least one anchor vertex, canonicalized.

    Canonical form starts at the cycle's smallest vertex and takes the
    orientation whose second vertex is smaller than its last; results are
    sorted by (length, vertex sequence). An empty anchor yields [].
    """
    if not anchor:
        return []
    limit = g.n if max_len is None else max_len
    out: set[tuple[int, ...]] = set()
    count = 0

    def grow(start: int, path: list[int], on_path: set[int]) -> None:
        nonlocal count
        v = path[-1]
        for u in g.adjacency[v]:
            if u == start and len(path) >= 3:
                if path[1] < path[-1]:
                    count += 1
                    if count > cycle_budget:
                        raise BudgetExceededError(
                            f"more than {cycle_budget} cycles enumerated"
                        )
                    out.add(tuple(path))
            elif u > start and u not in on_path and len(path) < limit:
                path.append(u)
                on_path.add(u)
                grow(start, path, on_path)
                path.pop()
                on_path.remove(u)

    for s in range(g.n):
        grow(s, [s], {s})
    anchored = [c for c in out if set(c) & set(anchor)]
    return sorted(anchored, key=lambda c: (len(c), c))


def is_chordless(g: Graph, cycle: tuple[int, ...]) -> bool:
    """True when no two non-consecutive cycle vertices are adjacent."""
    k = len(cycle)
    for i in range(k):
        for j in range(i + 1, k):
            if (j - i) % k in (1, k - 1):
                continue
            if g.has_edge(cycle[i], cycle[j]):
                return False
    return True


@dataclass(frozen=True)
class DisseminationRound:
    kind: str  # "cycles" or "fallback"
    circuits: tuple[tuple[int, ...], ...]
    newly_informed: frozenset[int]
    informed_after: frozenset[int]


@dataclass(frozen=True)
class DisseminationTrace:
    informed_start: frozenset[int]
    rounds: tuple[DisseminationRound, ...]

    @property
    def round_count(self) -> int:
        return len(self.rounds)

    @property
    def informed_final(self) -> frozenset[int]:
        return self.rounds[-1].informed_after if self.rounds else self.informed_start


def simulate_dissemination(
    g: Graph,
    informed0: set[int] | frozenset[int],
    cycle_policy: str = "chordless",
    max_len: int | None = None,
) -> DisseminationTrace:
    """Broadcast from ``informed0`` until everyone is informed.

    Each round fires circuits anchored at a vertex informed before the
    round started; within the round, circuits are chosen greedily by most
    newly informed vertices (ties: shorter, then lexicographic) until no
    circuit adds anyone. A round with no useful circuit becomes a fallback
    round that pushes the payload along BFS shortest paths instead.

    ``cycle_policy`` is "chordless" (default: only induced cycles carry)
    or "all" (any simple cycle may fire).
    """
    if not informed0:
        raise InvalidParameterError("informed0 must be nonempty")
    for v in informed0:
        if not 0 <= v < g.n:
            raise InvalidParameterError(f"vertex {v} out of range")
    if cycle_policy not in ("chordless", "all"):
        raise InvalidParameterError(
            f"cycle_policy must be 'chordless' or 'all', got {cycle_policy!r}"
        )
    unreachable = _unreachable_from(g, set(informed0))
    if unreachable:
        raise UnreachableParticipantsError(tuple(sorted(unreachable)))

    informed = set(informed0)
    everyone = set(range(g.n))
    rounds: list[DisseminationRound] = []

    while informed != everyone:
        anchor = frozenset(informed)
        candidates = enumerate_cycles(g, anchor, max_len=max_len)
        if cycle_policy == "chordless":
            candidates = [c for c in candidates if is_chordless(g, c)]
        fired: list[tuple[int, ...]] = []
        newly: set[int] = set()
        while True:
            best = None
            for c in candidates:
                gain = len(set(c) - informed - newly)
                if gain == 0:
                    continue
                key = (-gain, len(c), c)
                if best is None or key < best[0]:
                    best = (key, c)
            if best is None:
                break
            fired.append(best[1])
            newly |= set(best[1]) - informed
        if fired:
            informed |= newly
            rounds.append(
                DisseminationRound(
                    kind="cycles",
                    circuits=tuple(fired),
                    newly_informed=frozenset(newly),
                    informed_after=frozenset(informed),
                )
            )
            continue
        paths, reached = _fallback_paths(g, informed)
        informed |= reached
        rounds.append(
            DisseminationRound(
                kind="fallback",
                circuits=tuple(paths),
                newly_informed=frozenset(reached),
                informed_after=frozenset(informed),
            )
        )
    return DisseminationTrace(informed_start=frozenset(informed0), rounds=tuple(rounds))


def _unreachable_from(g: Graph, sources: set[int]) -> set[int]:
    seen = set(sources)
    dq = deque(sorted(sources))
    while dq:
        v = dq.popleft()
        for u in g.adjacency[v]:
            if u not in seen:
                seen.add(u)
                dq.append(u)
    return set(range(g.n)) - seen


def _fallback_paths(
    g: Graph, informed: set[int]
) -> tuple[list[tuple[int, ...]], set[int]]:
    """BFS shortest paths from the informed set to everyone else.

    Paths that are prefixes of longer delivered paths are dropped — the
    longer traversal already hands the payload to every vertex on the way.
    """
    parent: dict[int, int | None] = {v: None for v in informed}
    dq = deque(sorted(informed))
    order: list[int] = []
    while dq:
        v = dq.popleft()
        for u in g.adjacency[v]:
            if u not in parent:
                parent[u] = v
                dq.append(u)
                order.append(u)
    paths = []
    for t in order:
        seq = [t]
        while parent[seq[-1]] is not None:
            seq.append(parent[seq[-1]])  # type: ignore[arg-type]
        paths.append(tuple(reversed(seq)))
    keep = [
        p for p in paths if not any(q != p and q[: len(p)] == p for q in paths)
    ]
    return keep, set(order)
