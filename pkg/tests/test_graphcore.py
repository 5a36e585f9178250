import random

import pytest

from multiramsey.errors import (
    ColoringFormatError,
    DomainError,
    OrderTooLarge,
    PatternTooLarge,
)
from multiramsey.graphcore import (
    BLUE,
    RED,
    HostColoring,
    PartiteSpec,
    PatternGraph,
    _generic_find,
    chromatic_number,
    contains_subgraph,
    find_subgraph,
    format_coloring,
    has_clique,
    max_color_degree,
    min_color_degree,
    parse_coloring,
)
from multiramsey.constructions import partition_witness, turan_witness

from bruteforce import brute_chromatic, contains_pattern


# ---------------------------------------------------------------------------
# PartiteSpec
# ---------------------------------------------------------------------------


def test_spec_indexing_is_part_major():
    spec = PartiteSpec(3, 2)
    assert spec.n_vertices == 6
    assert [spec.part_of(v) for v in range(6)] == [0, 0, 1, 1, 2, 2]
    assert spec.host_degree == 4


@pytest.mark.parametrize("j,t", [(2, 1), (3, 2), (5, 1), (4, 3)])
def test_host_edge_count_and_regularity(j, t):
    spec = PartiteSpec(j, t)
    edges = spec.host_edges()
    assert len(edges) == j * (j - 1) // 2 * t * t
    assert all(spec.part_of(u) != spec.part_of(v) for u, v in edges)
    adj = spec.host_adjacency()
    assert all(mask.bit_count() == spec.host_degree for mask in adj)
    # no vertex adjacent to itself or its own part
    for v, mask in enumerate(adj):
        assert not mask & spec.part_mask(spec.part_of(v))


def test_spec_rejects_bad_parameters():
    with pytest.raises(DomainError):
        PartiteSpec(1, 3)
    with pytest.raises(DomainError):
        PartiteSpec(2, 0)


# ---------------------------------------------------------------------------
# HostColoring
# ---------------------------------------------------------------------------


def test_coloring_rejects_intra_part_duplicate_and_range():
    spec = PartiteSpec(2, 2)
    with pytest.raises(DomainError):
        HostColoring(spec, [(0, 1)])  # same part
    with pytest.raises(DomainError):
        HostColoring(spec, [(0, 2), (2, 0)])  # duplicate
    with pytest.raises(DomainError):
        HostColoring(spec, [(0, 4)])  # out of range


def test_degree_sum_invariant_on_sampled_colorings():
    rng = random.Random(20240)
    for j, t in [(2, 2), (3, 1), (3, 2), (4, 1), (5, 1)]:
        spec = PartiteSpec(j, t)
        edges = spec.host_edges()
        for _ in range(50):
            bits = rng.getrandbits(len(edges))
            red = [e for i, e in enumerate(edges) if bits >> i & 1]
            c = HostColoring(spec, red)
            for v in range(spec.n_vertices):
                assert c.degree(v, RED) + c.degree(v, BLUE) == spec.host_degree


def test_all_red_all_blue():
    spec = PartiteSpec(3, 1)
    assert min_color_degree(HostColoring.all_red(spec), RED) == 2
    assert max_color_degree(HostColoring.all_red(spec), BLUE) == 0
    assert max_color_degree(HostColoring.all_blue(spec), BLUE) == 2


# ---------------------------------------------------------------------------
# has_clique / degrees
# ---------------------------------------------------------------------------


def test_all_red_triangle():
    c = HostColoring.all_red(PartiteSpec(3, 1))
    assert has_clique(c, RED, 3)


def test_empty_red_has_no_edge():
    for spec in (PartiteSpec(2, 2), PartiteSpec(4, 1)):
        c = HostColoring.all_blue(spec)
        assert not has_clique(c, RED, 2)


def test_two_group_coloring_on_k4():
    # groups {P0,P1}, {P2,P3}: red is the 4-cycle of cross edges
    c = turan_witness(4, 1, 3)
    assert not has_clique(c, RED, 3)
    assert has_clique(c, RED, 2)
    # cross-check by enumerating all triples and pairs
    red = set(c.red_edges())
    triples = [
        (a, b, d)
        for a in range(4)
        for b in range(a + 1, 4)
        for d in range(b + 1, 4)
        if {(a, b), (a, d), (b, d)} <= red
    ]
    assert triples == []
    assert any((a, b) in red for a in range(4) for b in range(a + 1, 4))
    assert min_color_degree(c, RED) == 2


def test_has_clique_domain():
    c = HostColoring.all_red(PartiteSpec(2, 1))
    with pytest.raises(DomainError):
        has_clique(c, RED, 1)
    assert not has_clique(c, RED, 5)  # m beyond host order is just False


def test_color_degree_examples():
    all_red = HostColoring.all_red(PartiteSpec(2, 2))
    assert max_color_degree(all_red, BLUE) == 0
    all_blue = HostColoring.all_blue(PartiteSpec(4, 3))
    assert max_color_degree(all_blue, BLUE) == 9
    assert max_color_degree(turan_witness(5, 1, 4), BLUE) == 1
    assert min_color_degree(partition_witness(3, 1, 2), RED) == 0


# ---------------------------------------------------------------------------
# chromatic number
# ---------------------------------------------------------------------------


def test_chromatic_cliques():
    for m in range(1, 17):
        assert chromatic_number(PatternGraph.clique(m)) == m


def test_chromatic_star_and_paths():
    assert chromatic_number(PatternGraph.star(5)) == 2
    assert chromatic_number(PatternGraph.path(7)) == 2
    assert chromatic_number(PatternGraph.cycle(6)) == 2


def test_chromatic_odd_cycle():
    assert chromatic_number(PatternGraph.cycle(5)) == 3
    assert brute_chromatic(5, [(i, (i + 1) % 5) for i in range(5)]) == 3


def test_chromatic_matches_bruteforce_on_small_graphs():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 6)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.5
        ]
        p = PatternGraph(n, edges)
        assert chromatic_number(p) == brute_chromatic(n, edges)


def test_chromatic_rejects_large_order():
    with pytest.raises(OrderTooLarge):
        chromatic_number(PatternGraph.clique(17))


# ---------------------------------------------------------------------------
# contains_subgraph
# ---------------------------------------------------------------------------


def test_single_edge_pattern():
    c = turan_witness(4, 1, 3)
    assert contains_subgraph(c, RED, PatternGraph.clique(2))
    assert contains_subgraph(c, BLUE, PatternGraph.clique(2))


def test_star_needs_degree():
    # blue max degree 1 cannot hold K_{1,2}
    c = turan_witness(5, 1, 4)
    assert max_color_degree(c, BLUE) == 1
    assert not contains_subgraph(c, BLUE, PatternGraph.star(2))
    assert contains_subgraph(c, BLUE, PatternGraph.star(1))


def test_blue_matching_has_no_path3():
    c = partition_witness(4, 1, 3)
    assert not contains_subgraph(c, BLUE, PatternGraph.path(3))
    assert contains_subgraph(c, RED, PatternGraph.path(3))


def test_generic_pattern_cycle():
    # red class of the two-group coloring on K_{4x1} is exactly C_4
    c = turan_witness(4, 1, 3)
    assert contains_subgraph(c, RED, PatternGraph.cycle(4))
    assert not contains_subgraph(c, RED, PatternGraph.cycle(3))


def test_generic_pattern_size_cap():
    c = HostColoring.all_red(PartiteSpec(6, 2))
    with pytest.raises(PatternTooLarge):
        contains_subgraph(c, RED, PatternGraph.path(11))
    # cliques and stars are dispatched regardless of order
    assert not contains_subgraph(c, RED, PatternGraph.star(30))
    assert contains_subgraph(c, RED, PatternGraph.clique(6))
    assert not contains_subgraph(c, RED, PatternGraph.clique(7))


def test_find_subgraph_returns_real_copy():
    c = turan_witness(6, 1, 3)
    copy = find_subgraph(c, RED, PatternGraph.cycle(4))
    assert copy is not None
    red = set(c.red_edges())
    k = len(copy)
    for i in range(k):
        a, b = copy[i], copy[(i + 1) % k]
        assert (min(a, b), max(a, b)) in red


def _dispatch_agrees(c, n):
    # generic matcher vs specialized clique/star routines, plus the naive
    # permutation matcher from the test oracles
    adj_masks = c.adjacency(RED)
    adj_sets = [
        {w for w in range(n) if adj_masks[v] >> w & 1} for v in range(n)
    ]
    for m in (2, 3, 4):
        p = PatternGraph.clique(m)
        fast = has_clique(c, RED, m)
        generic = _generic_find(adj_masks, n, p) is not None
        naive = contains_pattern(
            adj_sets, m, [(a, b) for a in range(m) for b in range(a + 1, m)]
        )
        assert fast == generic == naive
    for arms in (1, 2, 3):
        p = PatternGraph.star(arms)
        fast = max_color_degree(c, RED) >= arms
        generic = _generic_find(adj_masks, n, p) is not None if p.n <= n else False
        naive = contains_pattern(adj_sets, arms + 1, [(0, i) for i in range(1, arms + 1)])
        assert fast == (find_subgraph(c, RED, p) is not None)
        assert generic == naive
        if p.n <= n:
            assert fast == generic


def test_clique_and_star_dispatch_cross_check():
    # exhaustive on the smallest hosts, seeded samples on the larger ones
    for j, t in [(2, 1), (3, 1), (2, 2), (4, 1)]:
        spec = PartiteSpec(j, t)
        edges = spec.host_edges()
        for bits in range(1 << len(edges)):
            red = [e for i, e in enumerate(edges) if bits >> i & 1]
            _dispatch_agrees(HostColoring(spec, red), spec.n_vertices)
    rng = random.Random(99)
    for j, t in [(3, 2), (5, 1), (4, 2), (2, 4)]:
        spec = PartiteSpec(j, t)
        edges = spec.host_edges()
        for _ in range(60):
            bits = rng.getrandbits(len(edges))
            red = [e for i, e in enumerate(edges) if bits >> i & 1]
            _dispatch_agrees(HostColoring(spec, red), spec.n_vertices)


def test_pattern_constructors():
    assert PatternGraph.clique(4).edge_count == 6
    assert PatternGraph.star(3).degrees == (3, 1, 1, 1)
    assert PatternGraph.path(4).edge_count == 3
    assert PatternGraph.cycle(5).degrees == (2,) * 5
    assert PatternGraph.clique(3).is_clique
    assert PatternGraph.star(4).star_arms == 4
    assert PatternGraph.path(4).star_arms is None
    assert PatternGraph.path(2).star_arms == 1  # K_2 is also K_{1,1}
    assert PatternGraph.cycle(4).is_connected
    assert not PatternGraph(4, [(0, 1), (2, 3)]).is_connected
    with pytest.raises(DomainError):
        PatternGraph(3, [(0, 0)])
    with pytest.raises(DomainError):
        PatternGraph.cycle(2)


# ---------------------------------------------------------------------------
# coloring file format
# ---------------------------------------------------------------------------


def test_format_round_trip():
    for c in (turan_witness(5, 1, 4), partition_witness(4, 2, 3),
              HostColoring.all_blue(PartiteSpec(3, 2))):
        assert parse_coloring(format_coloring(c)) == c


def test_format_is_sorted_and_exact():
    c = turan_witness(3, 1, 3)
    assert format_coloring(c) == "3 1\n0 2\n1 2\n"


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),
        ("3\n", 1),
        ("a b\n", 1),
        ("1 2\n", 1),  # j < 2
        ("3 1\n0 9\n", 2),
        ("3 1\n1 0\n", 2),  # u >= v
        ("2 2\n0 1\n", 2),  # intra-part
        ("3 1\n0 1\n0 1\n", 3),  # duplicate
        ("3 1\n0 1\nx y\n", 3),
        ("3 1\n\n0 1\n", 2),  # blank line
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ColoringFormatError) as info:
        parse_coloring(text)
    assert info.value.line == line
