"""Independent exact computation at desk scale.

Three searches live here:

* f_exact_search computes the clique-free extremal degree f(t, j, m) by a
  decision-problem ladder.  Feasibility of "K_m-free spanning subgraph with
  minimum degree >= d" is certified at the grouped-witness level d0 by the
  construction itself, and the ladder then asks d0+1, d0+2, ... until the
  backtracking search proves a level infeasible.  Climbing from below
  means the expensive searches are all at the hard top layers.

* star_ramsey_exact resolves m_j(K_m, K_{1,n}) through the degree
  threshold: a coloring of K_{j x t} avoids a blue K_{1,n} exactly when
  every blue degree is at most n-1, i.e. when the red class has minimum
  degree at least (j-1)t - n + 1.  The answer is therefore the least t
  with f(t, j, m) < (j-1)t - n + 1, with f taken from the closed form when
  one applies and from f_exact_search otherwise.

* generic_ramsey_oracle decides m_j(H, G) directly by depth-first search
  over edge colorings, backtracking as soon as the partial coloring
  contains a red H or a blue G.  A probed t forces exactly when no "good"
  coloring survives.

The decision searches branch over host edges in lexicographic order,
trying "include"/"red" before "exclude"/"blue", and prune on (1) degree
potential: a branch dies when some vertex can no longer reach the target
degree even if all its undecided edges are included; (2) clique/pattern
completion: accepting an edge that completes a forbidden subgraph is never
tried; (3) first-branch symmetry canonicalization at the root: part
permutations and within-part permutations act transitively on host edges,
so any nonempty solution can be relabeled to use the first edge (full
orbit pruning is deliberately not attempted; correctness never depends on
pruning strength).

Budgets are enforced by a node counter (and optional wall clock); an
exhausted budget is reported as such, never converted into a bound.
Everything runs single-threaded so node counts are reproducible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .constructions import turan_witness
from .errors import DomainError, InternalInconsistency, PatternTooLarge
from .formulas import f_formula
from .graphcore import (
    BLUE,
    GENERIC_PATTERN_MAX_ORDER,
    RED,
    HostColoring,
    PartiteSpec,
    PatternGraph,
    contains_subgraph,
    has_clique,
    mask_has_clique,
    _generic_find,
)

#: f_exact_search host size cap.
MAX_SEARCH_VERTICES = 24
#: generic_ramsey_oracle host edge cap per probed t.
MAX_SEARCH_EDGES = 28

STATUS_EXACT = "exact"
STATUS_EXHAUSTED = "exhausted-budget"
STATUS_NOT_FOUND = "not-found-up-to-tmax"


@dataclass(frozen=True)
class SearchBudget:
    """Node cap (and optional wall-clock cap) for a whole oracle call."""

    max_nodes: int
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_nodes < 1:
            raise DomainError(f"require max_nodes >= 1, got {self.max_nodes}")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise DomainError(f"require max_seconds > 0, got {self.max_seconds}")


@dataclass(frozen=True)
class OracleOutcome:
    value: int | None
    status: str
    nodes_explored: int
    certificate: HostColoring | None = None

    def __post_init__(self):
        if (self.value is not None) != (self.status == STATUS_EXACT):
            raise InternalInconsistency(
                f"value {self.value!r} inconsistent with status {self.status!r}"
            )


class _Exhausted(Exception):
    pass


class _Meter:
    """Shared node counter; raises _Exhausted past the budget."""

    __slots__ = ("limit", "deadline", "nodes")

    def __init__(self, budget: SearchBudget):
        self.limit = budget.max_nodes
        self.deadline = (
            time.monotonic() + budget.max_seconds
            if budget.max_seconds is not None
            else None
        )
        self.nodes = 0

    def tick(self) -> None:
        if self.nodes >= self.limit:
            raise _Exhausted
        self.nodes += 1
        if (
            self.deadline is not None
            and self.nodes % 1024 == 0
            and time.monotonic() > self.deadline
        ):
            raise _Exhausted


def _min_degree_feasible(
    spec: PartiteSpec, m: int, target: int, meter: _Meter
) -> tuple[int, ...] | None:
    """Red adjacency of a K_m-free spanning subgraph with min degree >= target,
    or None when no such subgraph exists.  Requires target >= 1."""
    n = spec.n_vertices
    if target > spec.host_degree:
        return None
    edges = spec.host_edges()
    n_edges = len(edges)
    adj = [0] * n
    deg = [0] * n
    avail = [spec.host_degree] * n
    need = m - 2
    solution: tuple[int, ...] | None = None

    def search(i: int) -> bool:
        nonlocal solution
        meter.tick()
        if i == n_edges:
            # Degree potentials never dropped below target, and with no
            # undecided edges left the potential equals the degree.
            solution = tuple(adj)
            return True
        u, v = edges[i]
        bu, bv = 1 << u, 1 << v
        # Include: only blocked when the edge would complete a red K_m.
        if not mask_has_clique(adj, adj[u] & adj[v], need):
            adj[u] |= bv
            adj[v] |= bu
            deg[u] += 1
            deg[v] += 1
            avail[u] -= 1
            avail[v] -= 1
            if search(i + 1):
                return True
            adj[u] ^= bv
            adj[v] ^= bu
            deg[u] -= 1
            deg[v] -= 1
            avail[u] += 1
            avail[v] += 1
        if i == 0:
            # Root canonicalization: the host automorphisms map any edge onto
            # the first one, and a solution with target >= 1 has an edge, so
            # some solution uses edge 0.
            return False
        # Exclude: both endpoints lose one unit of degree potential.
        avail[u] -= 1
        avail[v] -= 1
        if deg[u] + avail[u] >= target and deg[v] + avail[v] >= target:
            if search(i + 1):
                return True
        avail[u] += 1
        avail[v] += 1
        return False

    return solution if search(0) else None


def _f_search_value(
    spec: PartiteSpec, m: int, meter: _Meter
) -> tuple[int, tuple[int, ...]]:
    """Ladder for f: returns (value, red adjacency attaining it)."""
    witness = turan_witness(spec.j, spec.t, m)
    if has_clique(witness, RED, m):
        raise InternalInconsistency(
            f"grouped witness for (j={spec.j}, t={spec.t}, m={m}) contains K_{m}"
        )
    best = witness.adjacency(RED)
    d = min(mask.bit_count() for mask in best)
    while d + 1 <= spec.host_degree:
        found = _min_degree_feasible(spec, m, d + 1, meter)
        if found is None:
            return d, best
        best = found
        d += 1
    # Unreachable for j >= m: the full host is the only subgraph of degree
    # (j-1)t and it contains K_j >= K_m.
    return d, best


def f_exact_search(t: int, j: int, m: int, budget: SearchBudget) -> OracleOutcome:
    """Exact f(t, j, m) = max{min degree of R : R within K_{j x t}, K_m-free R}.

    The certificate on the outcome is a coloring whose red class attains the
    value.
    """
    if not j >= m >= 3:
        raise DomainError(f"require j >= m >= 3, got j={j}, m={m}")
    if t < 1:
        raise DomainError(f"require t >= 1, got t={t}")
    spec = PartiteSpec(j, t)
    if spec.n_vertices > MAX_SEARCH_VERTICES:
        raise DomainError(
            f"host has {spec.n_vertices} vertices, search limited to "
            f"{MAX_SEARCH_VERTICES}"
        )
    meter = _Meter(budget)
    try:
        value, adjacency = _f_search_value(spec, m, meter)
    except _Exhausted:
        return OracleOutcome(None, STATUS_EXHAUSTED, meter.nodes)
    certificate = HostColoring.from_red_adjacency(spec, adjacency)
    return OracleOutcome(value, STATUS_EXACT, meter.nodes, certificate=certificate)


def star_ramsey_exact(
    j: int,
    m: int,
    n: int,
    t_max: int,
    budget: SearchBudget,
    want_certificate: bool = False,
) -> OracleOutcome:
    """Least t <= t_max with f(t, j, m) < (j-1)t - n + 1, i.e. m_j(K_m, K_{1,n}).

    f comes from the closed form when exact and from the ladder search
    otherwise.  With want_certificate, the outcome carries a coloring of
    K_{j x (t-1)} avoiding both a red K_m and a blue K_{1,n} (the witness
    that t-1 does not force); no certificate exists when the value is 1.
    """
    if not j >= m >= 3:
        raise DomainError(f"require j >= m >= 3, got j={j}, m={m}")
    if n < 2:
        raise DomainError(f"require n >= 2, got n={n}")
    if t_max < 1:
        raise DomainError(f"require t_max >= 1, got t_max={t_max}")
    meter = _Meter(budget)
    try:
        for t in range(1, t_max + 1):
            threshold = (j - 1) * t - n + 1
            record = f_formula(t, j, m)
            if record.exact is not None:
                f_value = record.exact
            else:
                spec = PartiteSpec(j, t)
                if spec.n_vertices > MAX_SEARCH_VERTICES:
                    raise DomainError(
                        f"f(t={t}, j={j}, m={m}) has no exact closed form and "
                        f"the host exceeds {MAX_SEARCH_VERTICES} vertices"
                    )
                f_value, _ = _f_search_value(spec, m, meter)
            if f_value < threshold:
                certificate = None
                if want_certificate and t > 1:
                    certificate = _star_good_coloring(j, t - 1, m, n, meter)
                return OracleOutcome(
                    t, STATUS_EXACT, meter.nodes, certificate=certificate
                )
        return OracleOutcome(None, STATUS_NOT_FOUND, meter.nodes)
    except _Exhausted:
        return OracleOutcome(None, STATUS_EXHAUSTED, meter.nodes)


def _star_good_coloring(
    j: int, t: int, m: int, n: int, meter: _Meter
) -> HostColoring:
    """A coloring of K_{j x t} with no red K_m and no blue K_{1,n}; only
    called for t at which one is known to exist."""
    spec = PartiteSpec(j, t)
    threshold = (j - 1) * t - n + 1
    if threshold <= 0:
        return HostColoring.all_blue(spec)
    adjacency = _min_degree_feasible(spec, m, threshold, meter)
    if adjacency is None:
        raise InternalInconsistency(
            f"no good coloring at (j={j}, t={t}, m={m}, n={n}) although "
            f"f >= {threshold} was established"
        )
    return HostColoring.from_red_adjacency(spec, adjacency)


# ---------------------------------------------------------------------------
# Generic two-pattern oracle
# ---------------------------------------------------------------------------


def _completion_checker(p: PatternGraph):
    """Closure (adj, u, v) -> True iff coloring edge (u, v) into the class
    with adjacency `adj` would complete a copy of p.

    The caller maintains the invariant that the class does not yet contain
    p, so any new copy must use the new edge; for cliques that is a clique
    in the common neighborhood, for stars a degree bump at an endpoint, and
    for generic patterns a full (tiny) subgraph search on the grown class.
    """
    if p.edge_count == 0:
        raise InternalInconsistency("edgeless patterns are pre-dispatched")
    if p.is_clique:
        need = p.n - 2

        def check_clique(adj, u, v):
            return mask_has_clique(adj, adj[u] & adj[v], need)

        return check_clique
    arms = p.star_arms
    if arms is not None:

        def check_star(adj, u, v):
            return (
                adj[u].bit_count() + 1 >= arms or adj[v].bit_count() + 1 >= arms
            )

        return check_star
    if p.n > GENERIC_PATTERN_MAX_ORDER:
        raise PatternTooLarge(
            f"generic subgraph search limited to {GENERIC_PATTERN_MAX_ORDER} "
            f"vertices, got {p.n}"
        )

    def check_generic(adj, u, v):
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        hit = _generic_find(tuple(adj), len(adj), p) is not None
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        return hit

    return check_generic


def _find_good_coloring(
    spec: PartiteSpec, red_pattern: PatternGraph, blue_pattern: PatternGraph,
    meter: _Meter,
) -> HostColoring | None:
    """A coloring of the host containing neither a red red_pattern nor a blue
    blue_pattern, or None when every coloring contains one (t forces)."""
    n = spec.n_vertices
    # An edgeless pattern is a vertex set; it sits in both (spanning) color
    # classes of every coloring, so the host forces as soon as it is large
    # enough.
    if red_pattern.edge_count == 0 and red_pattern.n <= n:
        return None
    if blue_pattern.edge_count == 0 and blue_pattern.n <= n:
        return None

    # Root canonicalization: a good coloring with at least one red edge can
    # be relabeled so that the first host edge is red (host automorphisms
    # are edge-transitive).  The only good coloring left out is all-blue,
    # checked separately.
    meter.tick()
    all_blue = HostColoring.all_blue(spec)
    if not contains_subgraph(all_blue, BLUE, blue_pattern):
        return all_blue

    red_completes = _completion_checker(red_pattern)
    blue_completes = _completion_checker(blue_pattern)
    edges = spec.host_edges()
    n_edges = len(edges)
    red_adj = [0] * n
    blue_adj = [0] * n

    def search(i: int) -> bool:
        meter.tick()
        if i == n_edges:
            return True
        u, v = edges[i]
        bu, bv = 1 << u, 1 << v
        if not red_completes(red_adj, u, v):
            red_adj[u] |= bv
            red_adj[v] |= bu
            if search(i + 1):
                return True
            red_adj[u] ^= bv
            red_adj[v] ^= bu
        if i > 0 and not blue_completes(blue_adj, u, v):
            blue_adj[u] |= bv
            blue_adj[v] |= bu
            if search(i + 1):
                return True
            blue_adj[u] ^= bv
            blue_adj[v] ^= bu
        return False

    if search(0):
        return HostColoring.from_red_adjacency(spec, tuple(red_adj))
    return None


def generic_ramsey_oracle(
    red_pattern: PatternGraph,
    blue_pattern: PatternGraph,
    j: int,
    t_max: int,
    budget: SearchBudget,
) -> OracleOutcome:
    """Smallest t <= t_max such that every coloring of K_{j x t} contains a
    red red_pattern or a blue blue_pattern.

    Forcing is monotone in t (a bigger host contains the smaller one), so
    probing t = 1, 2, ... and returning the first forced t is exact.  The
    certificate on the outcome is the good coloring found at the largest
    non-forcing t probed, when there was one.
    """
    if j < 2:
        raise DomainError(f"require j >= 2, got j={j}")
    if t_max < 1:
        raise DomainError(f"require t_max >= 1, got t_max={t_max}")
    for p in (red_pattern, blue_pattern):
        if (
            not p.is_clique
            and p.star_arms is None
            and p.edge_count > 0
            and p.n > GENERIC_PATTERN_MAX_ORDER
        ):
            raise PatternTooLarge(
                f"generic subgraph search limited to "
                f"{GENERIC_PATTERN_MAX_ORDER} vertices, got {p.n}"
            )
    meter = _Meter(budget)
    last_good: HostColoring | None = None
    try:
        for t in range(1, t_max + 1):
            spec = PartiteSpec(j, t)
            n_edges = j * (j - 1) // 2 * t * t
            if n_edges > MAX_SEARCH_EDGES:
                raise DomainError(
                    f"host at t={t} has {n_edges} edges, search limited to "
                    f"{MAX_SEARCH_EDGES}"
                )
            good = _find_good_coloring(spec, red_pattern, blue_pattern, meter)
            if good is None:
                return OracleOutcome(
                    t, STATUS_EXACT, meter.nodes, certificate=last_good
                )
            last_good = good
        return OracleOutcome(
            None, STATUS_NOT_FOUND, meter.nodes, certificate=last_good
        )
    except _Exhausted:
        return OracleOutcome(
            None, STATUS_EXHAUSTED, meter.nodes, certificate=last_good
        )
