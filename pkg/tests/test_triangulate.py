import itertools
import random

import pytest

from trienum import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    canon,
    clq_min_seps,
    crosses,
    decompose,
    enum_max_independent,
    enum_min_seps,
    enum_min_triangulations,
    explicit_graph_instance,
    extend_family_blackbox,
    extend_family_separator,
    extract_min_seps_chordal,
    get_components,
    is_chordal,
    is_minimal_separator,
    is_minimal_triangulation,
    min_tri_sandwich,
    saturate_family,
    separator_graph_instance,
    triangulate_heuristic,
)
from trienum.oracle import brute_min_seps, brute_min_triangulations

from conftest import (
    all_connected_graphs,
    complete_graph,
    cycle_graph,
    path_graph,
    random_connected_graph,
)

EXTENDERS = (extend_family_blackbox, extend_family_separator)


def _family(*seps):
    return frozenset(frozenset(s) for s in seps)


def _random_family(g, rng, max_size=3):
    maximal = sorted(extend_family_blackbox(g, ()), key=canon)
    size = rng.randint(0, min(max_size, len(maximal)))
    return _family(*rng.sample(maximal, size))


class TestSaturateFamily:
    def test_c4_one_diagonal(self):
        g = saturate_family(cycle_graph(4), _family({0, 2}))
        assert g == cycle_graph(4).add_edges([(0, 2)])

    def test_singletons_are_noops(self):
        g = path_graph(4)
        assert saturate_family(g, _family({1}, {2})) == g

    def test_c5_fan_is_chordal(self):
        g = saturate_family(cycle_graph(5), _family({0, 2}, {0, 3}))
        assert g == cycle_graph(5).add_edges([(0, 2), (0, 3)])
        assert is_chordal(g)

    def test_out_of_range_raises(self):
        with pytest.raises(GraphError):
            saturate_family(cycle_graph(4), _family({0, 9}))


class TestTriangulateHeuristic:
    def test_chordal_unchanged(self):
        rng = random.Random(12)
        for _ in range(40):
            g = triangulate_heuristic(
                random_connected_graph(rng.randint(1, 8), rng.choice([0.3, 0.6]), rng)
            )
            assert triangulate_heuristic(g) == g

    def test_c4_single_chord(self):
        g = triangulate_heuristic(cycle_graph(4))
        assert g.edge_count == 5
        assert is_chordal(g)

    def test_c5_two_chords_sharing_an_endpoint(self):
        g = triangulate_heuristic(cycle_graph(5))
        fill = sorted(set(g.edges()) - set(cycle_graph(5).edges()))
        assert len(fill) == 2
        assert len(set(fill[0]) & set(fill[1])) == 1
        assert is_chordal(g)

    def test_always_chordal_supergraph(self):
        rng = random.Random(23)
        for _ in range(60):
            g = random_connected_graph(rng.randint(1, 9), rng.choice([0.2, 0.5]), rng)
            h = triangulate_heuristic(g)
            assert is_chordal(h)
            assert all(h.has_edge(u, v) for u, v in g.edges())

    def test_deterministic(self):
        g = random_connected_graph(9, 0.3, random.Random(7))
        assert triangulate_heuristic(g) == triangulate_heuristic(g)


class TestMinTriSandwich:
    def test_identity_when_already_minimal(self):
        g = path_graph(4)
        assert min_tri_sandwich(g, g) == g

    def test_c4_inside_k4(self):
        h = min_tri_sandwich(cycle_graph(4), complete_graph(4))
        assert h.edge_count == 5
        assert is_chordal(h)

    def test_c5_inside_k5(self):
        g = cycle_graph(5)
        h = min_tri_sandwich(g, complete_graph(5))
        fill = sorted(set(h.edges()) - set(g.edges()))
        assert len(fill) == 2
        assert len(set(fill[0]) & set(fill[1])) == 1
        assert is_chordal(h)

    def test_result_is_minimal_and_sandwiched(self):
        rng = random.Random(31)
        for _ in range(60):
            g = random_connected_graph(rng.randint(2, 8), rng.choice([0.3, 0.5]), rng)
            g_t = triangulate_heuristic(g)
            h = min_tri_sandwich(g, g_t)
            assert is_minimal_triangulation(g, h)
            assert all(g_t.has_edge(u, v) for u, v in h.edges())

    def test_rejects_non_supergraph(self):
        with pytest.raises(GraphError):
            min_tri_sandwich(cycle_graph(4), path_graph(4))

    def test_rejects_non_chordal(self):
        with pytest.raises(GraphError):
            min_tri_sandwich(cycle_graph(4), cycle_graph(4))


class TestIsMinimalTriangulation:
    def test_against_oracle(self):
        for g in all_connected_graphs(5):
            fills = brute_min_triangulations(g)
            for fill in fills:
                assert is_minimal_triangulation(g, g.add_edges(fill))
            non_edges = [
                e
                for e in itertools.combinations(range(g.n), 2)
                if not g.has_edge(*e)
            ]
            for fill in fills:
                extra = [e for e in non_edges if e not in fill]
                if extra:
                    bigger = g.add_edges(list(fill) + extra[:1])
                    if is_chordal(bigger):
                        assert not is_minimal_triangulation(g, bigger)


class TestExtenders:
    def test_c4_empty_family(self):
        for extend in EXTENDERS:
            got = extend(cycle_graph(4), ())
            assert got in (_family({0, 2}), _family({1, 3}))

    def test_c4_fixed_point(self):
        for extend in EXTENDERS:
            assert extend(cycle_graph(4), _family({0, 2})) == _family({0, 2})

    def test_c5_from_one_diagonal(self):
        fans = (_family({0, 2}, {0, 3}), _family({0, 2}, {2, 4}))
        for extend in EXTENDERS:
            assert extend(cycle_graph(5), _family({0, 2})) in fans

    def test_chordal_family_is_fixed_point(self):
        rng = random.Random(41)
        for _ in range(30):
            h = triangulate_heuristic(
                random_connected_graph(rng.randint(1, 8), rng.choice([0.3, 0.6]), rng)
            )
            fam = frozenset(extract_min_seps_chordal(h))
            for extend in EXTENDERS:
                assert extend(h, fam) == fam

    def test_contracts_on_random_graphs(self):
        rng = random.Random(59)
        for _ in range(40):
            g = random_connected_graph(rng.randint(2, 8), rng.choice([0.3, 0.5]), rng)
            phi = _random_family(g, rng)
            all_seps = brute_min_seps(g)
            for extend in EXTENDERS:
                got = extend(g, phi)
                assert phi <= got
                for s in got:
                    assert is_minimal_separator(g, s)
                for s, t in itertools.combinations(sorted(got, key=canon), 2):
                    assert not crosses(g, s, t)
                for s in all_seps - got:
                    assert any(crosses(g, s, t) for t in got)
                assert extend(g, got) == got

    def test_blackbox_equals_public_pipeline(self):
        rng = random.Random(43)
        for _ in range(30):
            g = random_connected_graph(rng.randint(2, 8), rng.choice([0.3, 0.5]), rng)
            phi = _random_family(g, rng)
            g_phi = saturate_family(g, phi)
            h = min_tri_sandwich(g_phi, triangulate_heuristic(g_phi))
            assert extend_family_blackbox(g, phi) == frozenset(
                extract_min_seps_chordal(h)
            )

    def test_invalid_family_raises(self):
        for extend in EXTENDERS:
            with pytest.raises(GraphError):
                extend(cycle_graph(4), _family({0, 1}))

    def test_disconnected_raises(self):
        for extend in EXTENDERS:
            with pytest.raises(DisconnectedGraphError):
                extend(Graph(3, [(0, 1)]), ())


class TestHeggernesProperties:
    def test_family_becomes_clique_separators(self):
        rng = random.Random(61)
        for _ in range(30):
            g = random_connected_graph(rng.randint(3, 8), rng.choice([0.3, 0.5]), rng)
            phi = _random_family(g, rng)
            g_phi = saturate_family(g, phi)
            assert phi <= clq_min_seps(g_phi)

    def test_clique_separators_survive_saturation(self):
        rng = random.Random(67)
        for _ in range(30):
            g = random_connected_graph(rng.randint(3, 8), rng.choice([0.3, 0.5]), rng)
            phi = _random_family(g, rng)
            g_phi = saturate_family(g, phi)
            assert clq_min_seps(g) <= set(enum_min_seps(g_phi))

    def test_triangulating_the_saturation_triangulates_the_base(self):
        rng = random.Random(71)
        for _ in range(30):
            g = random_connected_graph(rng.randint(3, 8), rng.choice([0.3, 0.5]), rng)
            phi = _random_family(g, rng)
            g_phi = saturate_family(g, phi)
            h = min_tri_sandwich(g_phi, triangulate_heuristic(g_phi))
            assert is_minimal_triangulation(g, h)


class TestGetComponents:
    def test_c4_with_chord(self):
        g = cycle_graph(4).add_edges([(0, 2)])
        pieces = get_components(g, {0, 2})
        assert [(p.edges(), orig) for p, orig in pieces] == [
            ([(0, 1), (0, 2), (1, 2)], (0, 1, 2)),
            ([(0, 1), (0, 2), (1, 2)], (0, 2, 3)),
        ]

    def test_p3_center(self):
        pieces = get_components(path_graph(3), {1})
        assert [(p.edges(), orig) for p, orig in pieces] == [
            ([(0, 1)], (0, 1)),
            ([(0, 1)], (1, 2)),
        ]

    def test_p5_center(self):
        pieces = get_components(path_graph(5), {2})
        assert [orig for _, orig in pieces] == [(0, 1, 2), (2, 3, 4)]

    def test_non_clique_raises(self):
        with pytest.raises(GraphError):
            get_components(cycle_graph(4), {0, 2})

    def test_separator_dies_inside_pieces(self):
        rng = random.Random(83)
        for _ in range(30):
            g = random_connected_graph(rng.randint(3, 8), rng.choice([0.3, 0.5]), rng)
            seps = sorted(brute_min_seps(g), key=canon)
            if not seps:
                continue
            s = rng.choice(seps)
            g_sat = saturate_family(g, [s])
            for piece, orig in get_components(g_sat, s):
                back = dict(enumerate(orig))
                piece_seps = {
                    frozenset(back[v] for v in t) for t in brute_min_seps(piece)
                }
                for t in piece_seps:
                    assert not t <= s

    def test_pieces_share_only_separator_vertices(self):
        rng = random.Random(89)
        for _ in range(30):
            g = random_connected_graph(rng.randint(3, 8), rng.choice([0.3, 0.5]), rng)
            seps = sorted(brute_min_seps(g), key=canon)
            if not seps:
                continue
            s = rng.choice(seps)
            g_sat = saturate_family(g, [s])
            pieces = get_components(g_sat, s)
            for (_, o1), (_, o2) in itertools.combinations(pieces, 2):
                assert set(o1) & set(o2) <= s


class TestDecompose:
    def test_p5_on_center(self):
        pieces = decompose(path_graph(5), _family({2}))
        assert [orig for _, orig in pieces] == [(0, 1, 2), (2, 3, 4)]

    def test_c4_on_diagonal(self):
        pieces = decompose(cycle_graph(4), _family({0, 2}))
        assert [(p.edge_count, orig) for p, orig in pieces] == [
            (3, (0, 1, 2)),
            (3, (0, 2, 3)),
        ]

    def test_empty_family_returns_graph(self):
        g = cycle_graph(5)
        assert decompose(g, ()) == [(g, (0, 1, 2, 3, 4))]

    def test_separation_iff_split(self):
        # separator vertices sit on piece boundaries and satisfy no
        # member's u,v-outside-S premise, so quantify over the rest
        rng = random.Random(101)
        for _ in range(30):
            g = random_connected_graph(rng.randint(3, 8), rng.choice([0.3, 0.5]), rng)
            phi = _random_family(g, rng)
            boundary = set().union(*phi) if phi else set()
            pieces = decompose(g, phi)
            for u, v in itertools.combinations(range(g.n), 2):
                if u in boundary or v in boundary:
                    continue
                together = any(
                    u in set(orig) and v in set(orig) for _, orig in pieces
                )
                separated = any(
                    not _connected_avoiding(g, u, v, s) for s in phi
                )
                assert together == (not separated)

    def test_invalid_family_raises(self):
        with pytest.raises(GraphError):
            decompose(cycle_graph(4), _family({0, 1}))


def _connected_avoiding(g, u, v, avoid):
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            return True
        for y in g.neighbors(x):
            if y not in avoid and y not in seen:
                seen.add(y)
                stack.append(y)
    return False


class TestSeparatorGraphInstance:
    def test_c4(self):
        inst = separator_graph_instance(cycle_graph(4))
        nodes = list(inst.node_stream())
        assert len(nodes) == 2
        assert inst.adjacent(nodes[0], nodes[1])
        assert inst.size_bound == 3

    def test_c5_is_a_five_cycle(self):
        inst = separator_graph_instance(cycle_graph(5))
        nodes = list(inst.node_stream())
        assert len(nodes) == 5
        degree = {
            canon(s): sum(1 for t in nodes if t != s and inst.adjacent(s, t))
            for s in nodes
        }
        assert all(d == 2 for d in degree.values())

    def test_k4_has_no_nodes(self):
        inst = separator_graph_instance(complete_graph(4))
        assert list(inst.node_stream()) == []

    def test_unknown_extender_rejected(self):
        with pytest.raises(ValueError):
            separator_graph_instance(cycle_graph(4), extender="magic")


class TestEnumMinTriangulations:
    def test_c4(self):
        fills = {t.fill_edges for t in enum_min_triangulations(cycle_graph(4))}
        assert fills == {frozenset({(0, 2)}), frozenset({(1, 3)})}

    def test_chordal_yields_itself(self):
        g = triangulate_heuristic(random_connected_graph(7, 0.4, random.Random(2)))
        results = list(enum_min_triangulations(g))
        assert len(results) == 1
        assert results[0].fill_edges == frozenset()
        assert results[0].chordal_graph == g

    def test_c6_is_fourteen(self):
        assert sum(1 for _ in enum_min_triangulations(cycle_graph(6))) == 14

    def test_matches_oracle_exhaustively(self):
        for g in all_connected_graphs(5):
            got = {t.fill_edges for t in enum_min_triangulations(g)}
            assert got == brute_min_triangulations(g)

    def test_both_extenders_agree_as_sets(self):
        rng = random.Random(113)
        for _ in range(25):
            g = random_connected_graph(rng.randint(2, 7), rng.choice([0.3, 0.5]), rng)
            bb = {t.fill_edges for t in enum_min_triangulations(g, "blackbox")}
            sep = {t.fill_edges for t in enum_min_triangulations(g, "separator")}
            assert bb == sep

    def test_round_trip_and_size_bound(self):
        rng = random.Random(127)
        for _ in range(25):
            g = random_connected_graph(rng.randint(2, 7), rng.choice([0.3, 0.5]), rng)
            for t in enum_min_triangulations(g):
                assert is_chordal(t.chordal_graph)
                assert extract_min_seps_chordal(t.chordal_graph) == set(t.family)
                assert len(t.family) < g.n
                assert saturate_family(g, t.family) == t.chordal_graph
                assert is_minimal_triangulation(g, t.chordal_graph)

    def test_counting_bijection_with_explicit_crossing_graph(self):
        rng = random.Random(131)
        for _ in range(15):
            g = random_connected_graph(rng.randint(2, 7), rng.choice([0.3, 0.5]), rng)
            seps = sorted(enum_min_seps(g), key=canon)
            crossing = Graph(
                len(seps),
                [
                    (i, j)
                    for i, j in itertools.combinations(range(len(seps)), 2)
                    if crosses(g, seps[i], seps[j])
                ],
            )
            mis_count = sum(
                1 for _ in enum_max_independent(explicit_graph_instance(crossing))
            )
            tri_count = sum(1 for _ in enum_min_triangulations(g))
            assert tri_count == mis_count

    def test_no_duplicates_and_deterministic(self):
        g = cycle_graph(7)
        first = [t.fill_edges for t in enum_min_triangulations(g)]
        second = [t.fill_edges for t in enum_min_triangulations(g)]
        assert first == second
        assert len(first) == len(set(first))

    def test_tiny_graphs(self):
        for g in (Graph(1), Graph(2, [(0, 1)])):
            results = list(enum_min_triangulations(g))
            assert len(results) == 1
            assert results[0].fill_edges == frozenset()

    def test_interleaved_iterators_are_independent(self):
        g = cycle_graph(6)
        it1 = enum_min_triangulations(g)
        it2 = enum_min_triangulations(g)
        a = [next(it1) for _ in range(3)]
        b = [next(it2) for _ in range(7)]
        a += list(it1)
        b += list(it2)
        assert [t.fill_edges for t in a] == [t.fill_edges for t in b]

    def test_disconnected_raises(self):
        with pytest.raises(DisconnectedGraphError):
            list(enum_min_triangulations(Graph(3, [(0, 1)])))
