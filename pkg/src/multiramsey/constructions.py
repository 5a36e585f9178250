"""Extremal witness colorings and witness verification.

Both witness builders use the same deterministic grouping scheme: the j
parts are chunked in index order into consecutive blocks of
l = ceil(j / groups) parts (parts 0..l-1 form group 0, parts l..2l-1 group
1, and so on).  Edges between different groups are red, edges inside a
group are blue.  The red class is then properly colorable by group index,
and every blue connected component lives inside one group.

When (groups - 1) * l >= j the trailing chunks come out empty, so the
effective group count drops to ceil(j / l) < groups; that only strengthens
both guarantees (fewer groups means a lower red chromatic number, and the
blue component bound l*t is unchanged).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .formulas import ceil_div
from .graphcore import (
    BLUE,
    RED,
    HostColoring,
    PartiteSpec,
    PatternGraph,
    find_subgraph,
    max_color_degree,
    min_color_degree,
)


@dataclass(frozen=True)
class GroupAssignment:
    """Assignment of each part index to a group index."""

    j: int
    group_of: tuple[int, ...]

    @classmethod
    def balanced(cls, j: int, groups: int) -> "GroupAssignment":
        """Chunk parts into consecutive blocks of ceil(j/groups)."""
        if groups < 1:
            raise DomainError(f"require at least one group, got {groups}")
        size = ceil_div(j, groups)
        return cls(j=j, group_of=tuple(p // size for p in range(j)))

    @property
    def group_count(self) -> int:
        return max(self.group_of) + 1

    def group_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.group_count
        for g in self.group_of:
            sizes[g] += 1
        return tuple(sizes)


def _cross_group_coloring(spec: PartiteSpec, assignment: GroupAssignment) -> HostColoring:
    """Red = host edges between groups, blue = host edges within a group."""
    group = assignment.group_of
    t = spec.t
    red = [
        (u, v)
        for u, v in spec.host_edges()
        if group[u // t] != group[v // t]
    ]
    return HostColoring(spec, red)


def partition_witness(j: int, t: int, chi: int) -> HostColoring:
    """Coloring of K_{j x t} whose red class has chromatic number < chi and
    whose blue components have at most ceil(j/(chi-1)) * t vertices.

    The red class is (chi-1)-partite (classes given by group index), so it
    contains no graph of chromatic number chi; the blue class splits into
    per-group components, so it contains no connected graph on more than
    ceil(j/(chi-1)) * t vertices.
    """
    if not j >= chi >= 2:
        raise DomainError(f"require j >= chi >= 2, got j={j}, chi={chi}")
    spec = PartiteSpec(j, t)
    return _cross_group_coloring(spec, GroupAssignment.balanced(j, chi - 1))


def turan_witness(j: int, t: int, m: int) -> HostColoring:
    """Coloring of K_{j x t} whose red class is K_m-free with minimum degree
    at least (j - ceil(j/(m-1))) * t, and whose blue class has maximum
    degree at most (ceil(j/(m-1)) - 1) * t.

    Same grouping scheme as partition_witness with m-1 groups: the red
    class is (m-1)-partite, hence K_m-free, and every vertex sees in red
    all parts outside its own group.
    """
    if not j >= m >= 3:
        raise DomainError(f"require j >= m >= 3, got j={j}, m={m}")
    spec = PartiteSpec(j, t)
    return _cross_group_coloring(spec, GroupAssignment.balanced(j, m - 1))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a coloring against a red and a blue pattern."""

    red_found: bool
    blue_found: bool
    red_copy: tuple[int, ...] | None
    blue_copy: tuple[int, ...] | None
    min_red_degree: int
    max_blue_degree: int

    @property
    def valid(self) -> bool:
        """A witness is valid iff it avoids both patterns."""
        return not (self.red_found or self.blue_found)


def verify_witness(
    c: HostColoring, red_pattern: PatternGraph, blue_pattern: PatternGraph
) -> VerificationReport:
    """Check that a coloring avoids red_pattern in red and blue_pattern in blue."""
    red_copy = find_subgraph(c, RED, red_pattern)
    blue_copy = find_subgraph(c, BLUE, blue_pattern)
    return VerificationReport(
        red_found=red_copy is not None,
        blue_found=blue_copy is not None,
        red_copy=red_copy,
        blue_copy=blue_copy,
        min_red_degree=min_color_degree(c, RED),
        max_blue_degree=max_color_degree(c, BLUE),
    )
