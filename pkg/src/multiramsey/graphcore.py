"""Multipartite hosts, red/blue edge colorings, and small-graph predicates.

The host is the complete multipartite graph with j parts of t vertices each.
Vertices are indexed part-major: vertex v lies in part v // t, so part
membership is arithmetic and needs no lookup table.  Adjacency is stored as
one Python int bitmask per vertex, which keeps clique search, degree scans
and subgraph matching tight at these sizes (hosts stay well under 64
vertices in every supported mode).

A coloring stores only its red edge set; blue is defined as the host edges
minus red, so the partition invariant (red and blue disjoint, union = host)
holds by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    ColoringFormatError,
    DomainError,
    OrderTooLarge,
    PatternTooLarge,
)

RED = "red"
BLUE = "blue"

#: Exact chromatic number is only computed up to this pattern order.
EXACT_CHROMATIC_MAX_ORDER = 16
#: Generic (non-clique, non-star) subgraph search domain.
GENERIC_PATTERN_MAX_ORDER = 10
#: Hard cap on pattern order (bitmask width).
PATTERN_MAX_ORDER = 64


def _check_color(color: str) -> None:
    if color not in (RED, BLUE):
        raise DomainError(f"color must be {RED!r} or {BLUE!r}, got {color!r}")


@dataclass(frozen=True)
class PartiteSpec:
    """The host K_{j x t}: j parts, each of t vertices."""

    j: int
    t: int

    def __post_init__(self):
        if self.j < 2:
            raise DomainError(f"require j >= 2, got j={self.j}")
        if self.t < 1:
            raise DomainError(f"require t >= 1, got t={self.t}")

    @property
    def n_vertices(self) -> int:
        return self.j * self.t

    @property
    def host_degree(self) -> int:
        """Degree of every vertex in the host: (j-1)*t."""
        return (self.j - 1) * self.t

    def part_of(self, v: int) -> int:
        return v // self.t

    def part_mask(self, p: int) -> int:
        return ((1 << self.t) - 1) << (p * self.t)

    def host_adjacency(self) -> tuple[int, ...]:
        """Bitmask per vertex of all vertices in other parts."""
        full = (1 << self.n_vertices) - 1
        return tuple(
            full ^ self.part_mask(self.part_of(v)) for v in range(self.n_vertices)
        )

    def host_edges(self) -> list[tuple[int, int]]:
        """All cross-part pairs (u, v) with u < v, sorted lexicographically."""
        n = self.n_vertices
        t = self.t
        return [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if u // t != v // t
        ]


class HostColoring:
    """A red/blue 2-coloring of a host's edges.  Immutable.

    Only red adjacency bitmasks are stored; blue adjacency is derived from
    the host on demand.
    """

    __slots__ = ("spec", "_red")

    def __init__(self, spec: PartiteSpec, red_edges: Iterable[tuple[int, int]]):
        n = spec.n_vertices
        red = [0] * n
        for u, v in red_edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"red edge ({u}, {v}) out of range for {n} vertices")
            if u == v or spec.part_of(u) == spec.part_of(v):
                raise DomainError(f"red edge ({u}, {v}) lies inside a part")
            if red[u] >> v & 1:
                raise DomainError(f"duplicate red edge ({u}, {v})")
            red[u] |= 1 << v
            red[v] |= 1 << u
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "_red", tuple(red))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("HostColoring is immutable")

    @classmethod
    def from_red_adjacency(
        cls, spec: PartiteSpec, adjacency: Iterable[int]
    ) -> "HostColoring":
        """Build from per-vertex red bitmasks (must be symmetric host edges)."""
        masks = tuple(adjacency)
        n = spec.n_vertices
        if len(masks) != n:
            raise DomainError(f"expected {n} adjacency masks, got {len(masks)}")
        host = spec.host_adjacency()
        for v, mask in enumerate(masks):
            if mask & ~host[v]:
                raise DomainError(f"vertex {v} has red bits outside the host")
        for v, mask in enumerate(masks):
            rest = mask
            while rest:
                low = rest & -rest
                rest ^= low
                w = low.bit_length() - 1
                if not masks[w] >> v & 1:
                    raise DomainError(f"red adjacency not symmetric at ({v}, {w})")
        coloring = cls.__new__(cls)
        object.__setattr__(coloring, "spec", spec)
        object.__setattr__(coloring, "_red", masks)
        return coloring

    @classmethod
    def all_red(cls, spec: PartiteSpec) -> "HostColoring":
        return cls.from_red_adjacency(spec, spec.host_adjacency())

    @classmethod
    def all_blue(cls, spec: PartiteSpec) -> "HostColoring":
        return cls.from_red_adjacency(spec, (0,) * spec.n_vertices)

    def adjacency(self, color: str) -> tuple[int, ...]:
        """Per-vertex bitmasks of the chosen color class."""
        _check_color(color)
        if color == RED:
            return self._red
        host = self.spec.host_adjacency()
        return tuple(h & ~r for h, r in zip(host, self._red))

    def degree(self, v: int, color: str) -> int:
        return self.adjacency(color)[v].bit_count()

    def red_edges(self) -> list[tuple[int, int]]:
        """Red edges as sorted (u, v) pairs with u < v."""
        out = []
        for u, mask in enumerate(self._red):
            rest = mask >> (u + 1) << (u + 1)
            while rest:
                low = rest & -rest
                rest ^= low
                out.append((u, low.bit_length() - 1))
        return out

    def red_edge_count(self) -> int:
        return sum(m.bit_count() for m in self._red) // 2

    def __eq__(self, other):
        if not isinstance(other, HostColoring):
            return NotImplemented
        return self.spec == other.spec and self._red == other._red

    def __hash__(self):
        return hash((self.spec, self._red))

    def __repr__(self):
        return (
            f"HostColoring(j={self.spec.j}, t={self.spec.t}, "
            f"red_edges={self.red_edge_count()})"
        )


class PatternGraph:
    """A small simple undirected graph used as a forbidden pattern."""

    __slots__ = ("n", "_adj", "_chi")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0 or n > PATTERN_MAX_ORDER:
            raise DomainError(f"pattern order must be in 0..{PATTERN_MAX_ORDER}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"pattern edge ({u}, {v}) out of range")
            if u == v:
                raise DomainError(f"loop ({u}, {v}) not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", tuple(adj))
        object.__setattr__(self, "_chi", None)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("PatternGraph is immutable")

    @classmethod
    def clique(cls, m: int) -> "PatternGraph":
        return cls(m, [(u, v) for u in range(m) for v in range(u + 1, m)])

    @classmethod
    def star(cls, arms: int) -> "PatternGraph":
        """K_{1,arms}: center vertex 0 joined to arms leaves."""
        if arms < 1:
            raise DomainError(f"star needs at least one arm, got {arms}")
        return cls(arms + 1, [(0, i) for i in range(1, arms + 1)])

    @classmethod
    def path(cls, k: int) -> "PatternGraph":
        """Path on k vertices."""
        if k < 1:
            raise DomainError(f"path needs at least one vertex, got {k}")
        return cls(k, [(i, i + 1) for i in range(k - 1)])

    @classmethod
    def cycle(cls, k: int) -> "PatternGraph":
        """Cycle on k vertices."""
        if k < 3:
            raise DomainError(f"cycle needs at least three vertices, got {k}")
        return cls(k, [(i, (i + 1) % k) for i in range(k)])

    def adjacency(self) -> tuple[int, ...]:
        return self._adj

    def neighbors(self, v: int) -> int:
        return self._adj[v]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self._adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def is_clique(self) -> bool:
        return all(d == self.n - 1 for d in self.degrees)

    @property
    def star_arms(self) -> int | None:
        """Number of arms if this is K_{1,arms} (a vertex joined to all others
        and no other edges), else None.  K_1 counts as a star with 0 arms."""
        if self.n == 0:
            return None
        if self.edge_count == self.n - 1 and self.max_degree == self.n - 1:
            return self.n - 1
        return None

    @property
    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                rest ^= low
                nxt |= self._adj[low.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def __eq__(self, other):
        if not isinstance(other, PatternGraph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"PatternGraph(n={self.n}, edges={self.edge_count})"


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------


def _find_clique(adj: tuple[int, ...] | list[int], cand: int, need: int) -> list[int] | None:
    """Vertices of a clique of size `need` inside `cand`, or None.

    Recursive bitset intersection; vertices are consumed in ascending order
    so each clique is visited once.
    """
    if need <= 0:
        return []
    while cand.bit_count() >= need:
        low = cand & -cand
        cand ^= low
        v = low.bit_length() - 1
        rest = _find_clique(adj, cand & adj[v], need - 1)
        if rest is not None:
            return [v] + rest
    return None


def mask_has_clique(adj, cand: int, need: int) -> bool:
    """True iff `cand` contains a clique of size `need` (adjacency in adj)."""
    if need <= 0:
        return True
    if need == 1:
        return cand != 0
    while cand.bit_count() >= need:
        low = cand & -cand
        cand ^= low
        if mask_has_clique(adj, cand & adj[low.bit_length() - 1], need - 1):
            return True
    return False


def has_clique(c: HostColoring, color: str, m: int) -> bool:
    """True iff the chosen color class contains K_m as a subgraph."""
    if m < 2:
        raise DomainError(f"require m >= 2, got m={m}")
    n = c.spec.n_vertices
    if m > n:
        return False
    adj = c.adjacency(color)
    return mask_has_clique(adj, (1 << n) - 1, m)


def max_color_degree(c: HostColoring, color: str) -> int:
    return max(m.bit_count() for m in c.adjacency(color))


def min_color_degree(c: HostColoring, color: str) -> int:
    return min(m.bit_count() for m in c.adjacency(color))


def chromatic_number(p: PatternGraph) -> int:
    """Exact chromatic number by branch-and-bound vertex coloring.

    Colors are introduced in canonical order (vertex may use at most one
    color beyond those already used), which removes color-permutation
    symmetry.  Patterns are capped at 16 vertices.
    """
    if p.n > EXACT_CHROMATIC_MAX_ORDER:
        raise OrderTooLarge(
            f"exact chromatic number limited to {EXACT_CHROMATIC_MAX_ORDER} "
            f"vertices, got {p.n}"
        )
    cached = p._chi
    if cached is not None:
        return cached
    chi = _chromatic_number(p)
    object.__setattr__(p, "_chi", chi)
    return chi


def _chromatic_number(p: PatternGraph) -> int:
    n = p.n
    if n == 0:
        return 0
    if p.edge_count == 0:
        return 1
    adj = p._adj
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())

    # Greedy upper bound in the same order.
    greedy = [-1] * n
    for v in order:
        used = {greedy[w] for w in range(n) if adj[v] >> w & 1 and greedy[w] >= 0}
        color = 0
        while color in used:
            color += 1
        greedy[v] = color
    upper = max(greedy) + 1

    def colorable(k: int) -> bool:
        color_masks = [0] * k

        def assign(i: int, used: int) -> bool:
            if i == n:
                return True
            v = order[i]
            vbit = 1 << v
            limit = min(used + 1, k)
            for color in range(limit):
                if color_masks[color] & adj[v]:
                    continue
                color_masks[color] |= vbit
                if assign(i + 1, max(used, color + 1)):
                    return True
                color_masks[color] ^= vbit
            return False

        return assign(0, 0)

    for k in range(2, upper):
        if colorable(k):
            return k
    return upper


def _match_order(p: PatternGraph) -> list[int]:
    # Anchor on the highest-degree vertex, then grow along edges so each new
    # vertex is constrained by already-mapped neighbors whenever possible.
    remaining = set(range(p.n))
    order: list[int] = []
    placed = 0
    while remaining:
        best = max(
            remaining,
            key=lambda v: ((placed & p._adj[v]).bit_count(), p._adj[v].bit_count(), -v),
        )
        order.append(best)
        remaining.remove(best)
        placed |= 1 << best
    return order


def _generic_find(
    adj: tuple[int, ...], n_host: int, p: PatternGraph
) -> tuple[int, ...] | None:
    """Backtracking (non-induced) subgraph search; returns host vertices in
    pattern-vertex order, or None."""
    if p.n > n_host:
        return None
    full = (1 << n_host) - 1
    host_deg = [m.bit_count() for m in adj]
    pat_deg = p.degrees
    order = _match_order(p)
    mapping = [-1] * p.n

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        pv = order[i]
        cand = full & ~used
        anchored = p._adj[pv]
        rest = anchored
        while rest:
            low = rest & -rest
            rest ^= low
            q = low.bit_length() - 1
            if mapping[q] >= 0:
                cand &= adj[mapping[q]]
        while cand:
            low = cand & -cand
            cand ^= low
            hv = low.bit_length() - 1
            if host_deg[hv] < pat_deg[pv]:
                continue
            mapping[pv] = hv
            if extend(i + 1, used | low):
                return True
            mapping[pv] = -1
        return False

    if extend(0, 0):
        return tuple(mapping)
    return None


def find_subgraph(
    c: HostColoring, color: str, p: PatternGraph
) -> tuple[int, ...] | None:
    """Host vertices of a copy of p in the color class, or None.

    Cliques and stars are dispatched to the specialized degree/clique
    routines regardless of order; other patterns go through generic
    backtracking and are limited to 10 vertices.
    """
    _check_color(color)
    n = c.spec.n_vertices
    if p.n > n:
        return None
    if p.edge_count == 0:
        return tuple(range(p.n))
    adj = c.adjacency(color)
    if p.is_clique:
        verts = _find_clique(adj, (1 << n) - 1, p.n)
        return tuple(verts) if verts is not None else None
    arms = p.star_arms
    if arms is not None:
        for v in range(n):
            if adj[v].bit_count() >= arms:
                leaves = []
                rest = adj[v]
                while len(leaves) < arms:
                    low = rest & -rest
                    rest ^= low
                    leaves.append(low.bit_length() - 1)
                return (v, *leaves)
        return None
    if p.n > GENERIC_PATTERN_MAX_ORDER:
        raise PatternTooLarge(
            f"generic subgraph search limited to {GENERIC_PATTERN_MAX_ORDER} "
            f"vertices, got {p.n}"
        )
    return _generic_find(adj, n, p)


def contains_subgraph(c: HostColoring, color: str, p: PatternGraph) -> bool:
    """True iff the color class contains a (not necessarily induced) copy of p."""
    return find_subgraph(c, color, p) is not None


# ---------------------------------------------------------------------------
# Coloring file format
# ---------------------------------------------------------------------------
#
# line 1:            j t
# following lines:   u v          one red edge per line, 0-based, u < v
#
# Blue is implied.  The parser rejects intra-part edges, duplicates and
# out-of-range indices, reporting the offending line number.


def format_coloring(c: HostColoring) -> str:
    lines = [f"{c.spec.j} {c.spec.t}"]
    lines.extend(f"{u} {v}" for u, v in c.red_edges())
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> HostColoring:
    lines = text.splitlines()
    if not lines:
        raise ColoringFormatError(1, "missing header line 'j t'")
    header = lines[0].split()
    if len(header) != 2:
        raise ColoringFormatError(1, f"expected 'j t', got {lines[0]!r}")
    try:
        j, t = int(header[0]), int(header[1])
    except ValueError:
        raise ColoringFormatError(1, f"expected integers 'j t', got {lines[0]!r}") from None
    try:
        spec = PartiteSpec(j, t)
    except DomainError as exc:
        raise ColoringFormatError(1, str(exc)) from None
    n = spec.n_vertices
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines[1:], start=2):
        if raw.strip() == "":
            raise ColoringFormatError(lineno, "blank line not allowed")
        fields = raw.split()
        if len(fields) != 2:
            raise ColoringFormatError(lineno, f"expected 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ColoringFormatError(lineno, f"expected integers 'u v', got {raw!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ColoringFormatError(lineno, f"vertex out of range 0..{n - 1}: {raw!r}")
        if u >= v:
            raise ColoringFormatError(lineno, f"expected u < v, got {raw!r}")
        if spec.part_of(u) == spec.part_of(v):
            raise ColoringFormatError(lineno, f"edge ({u}, {v}) lies inside a part")
        if (u, v) in seen:
            raise ColoringFormatError(lineno, f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return HostColoring(spec, edges)
