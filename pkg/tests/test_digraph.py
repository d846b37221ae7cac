from itertools import product

import pytest
from hypothesis import given

from supereulerian import (
    Digraph,
    DigraphError,
    NotMultipartite,
    degree,
    degree_toward,
    format_edge_list,
    is_strong,
    nonadjacent_pairs,
    parse_edge_list,
    recognize_semicomplete_multipartite,
    strong_components,
    to_dot,
)
from supereulerian.digraph import read_edge_list, write_edge_list

from conftest import digraphs


def all_digraphs(n):
    for code in range(4 ** (n * (n - 1) // 2)):
        yield Digraph.from_code(n, code)


class TestConstruction:
    def test_rejects_loop(self):
        with pytest.raises(DigraphError):
            Digraph.from_arcs(2, [(0, 0)])

    def test_rejects_parallel_arc(self):
        with pytest.raises(DigraphError):
            Digraph.from_arcs(2, [(0, 1), (0, 1)])

    def test_antiparallel_pair_is_allowed(self):
        D = Digraph.from_arcs(2, [(0, 1), (1, 0)])
        assert D.m == 2

    def test_out_of_range(self):
        with pytest.raises(DigraphError):
            Digraph.from_arcs(2, [(0, 2)])

    def test_arcs_lexicographic(self):
        D = Digraph.from_arcs(3, [(2, 0), (0, 2), (1, 0), (0, 1)])
        assert D.arcs == ((0, 1), (0, 2), (1, 0), (2, 0))

    @given(digraphs())
    def test_code_round_trip(self, D):
        assert Digraph.from_code(D.n, D.code) == D

    def test_codes_enumerate_distinct_digraphs(self):
        seen = {Digraph.from_code(3, c) for c in range(64)}
        assert len(seen) == 64

    @given(digraphs())
    def test_arc_count_bounds(self, D):
        assert 0 <= D.m <= D.n * (D.n - 1)
        assert D.m == len(D.arcs)


class TestDegrees:
    def test_family_vertex_u(self, fam11):
        rec = degree(fam11.digraph, fam11.u)
        assert (rec.in_deg, rec.out_deg, rec.total) == (1, 1, 2)
        assert rec.total == fam11.digraph.n - 2

    def test_dicycle(self, c3):
        assert degree(c3, 0) == (1, 1)

    def test_complete(self):
        rec = degree(Digraph.complete(4), 2)
        assert (rec.in_deg, rec.out_deg, rec.total) == (3, 3, 6)

    def test_vertex_out_of_range(self, c3):
        with pytest.raises(DigraphError):
            degree(c3, 3)

    def test_toward_single_arc(self, c3):
        assert degree_toward(c3, 0, {1}) == (0, 1)

    def test_toward_complete(self):
        assert degree_toward(Digraph.complete(3), 0, {1, 2}) == (2, 2)

    def test_toward_family(self, fam11):
        rec = degree_toward(fam11.digraph, fam11.u, {fam11.w_prime, fam11.w})
        assert rec == (1, 1)
        assert fam11.digraph.has_arc(fam11.w, fam11.u)
        assert fam11.digraph.has_arc(fam11.u, fam11.w_prime)

    @given(digraphs())
    def test_handshake(self, D):
        assert sum(degree(D, v).in_deg for v in range(D.n)) == D.m
        assert sum(degree(D, v).out_deg for v in range(D.n)) == D.m

    @given(digraphs())
    def test_toward_everything_is_degree(self, D):
        for v in range(D.n):
            assert degree_toward(D, v, range(D.n)) == degree(D, v)


def reachability(D):
    n = D.n
    r = [[i == j or D.has_arc(i, j) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                r[i][j] = r[i][j] or (r[i][k] and r[k][j])
    return r


class TestStrong:
    def test_dicycle(self, c3):
        assert is_strong(c3)

    def test_dipath(self):
        assert not is_strong(Digraph.dipath(3))

    def test_family(self, fam11):
        assert is_strong(fam11.digraph)

    def test_single_vertex(self):
        assert is_strong(Digraph(1, [0]))

    @given(digraphs())
    def test_against_warshall(self, D):
        r = reachability(D)
        assert is_strong(D) == all(all(row) for row in r)

    @given(digraphs())
    def test_components_partition(self, D):
        comps = strong_components(D)
        assert sorted(v for c in comps for v in c) == list(range(D.n))
        r = reachability(D)
        for c in comps:
            for a in c:
                for b in c:
                    assert r[a][b]
        assert (len(comps) == 1) == is_strong(D)

    @given(digraphs(min_n=2))
    def test_source_or_sink_blocks_strongness(self, D):
        if any(degree(D, v).in_deg == 0 or degree(D, v).out_deg == 0 for v in range(D.n)):
            assert not is_strong(D)


class TestNonadjacentPairs:
    def test_complete(self):
        assert nonadjacent_pairs(Digraph.complete(3)) == []

    def test_family(self, fam11):
        assert nonadjacent_pairs(fam11.digraph) == [(fam11.u, fam11.v)]

    def test_single_arc(self):
        D = Digraph.from_arcs(3, [(0, 1)])
        assert nonadjacent_pairs(D) == [(0, 2), (1, 2)]


def smd_criterion(D):
    adj = lambda a, b: D.has_arc(a, b) or D.has_arc(b, a)
    for u, v, w in product(range(D.n), repeat=3):
        if len({u, v, w}) == 3 and adj(u, v) and not (adj(w, u) or adj(w, v)):
            return False
    return True


class TestRecognition:
    def test_family_classes(self):
        from supereulerian import build_family

        for n1, n2 in [(1, 1), (2, 3)]:
            fam = build_family(n1, n2)
            cert = recognize_semicomplete_multipartite(fam.digraph)
            assert cert
            expected = {frozenset({fam.u, fam.v})} | {frozenset({x}) for x in fam.block1 + fam.block2}
            assert set(cert.classes) == expected

    def test_tournament_singletons(self, c3):
        cert = recognize_semicomplete_multipartite(c3)
        assert set(cert.classes) == {frozenset({0}), frozenset({1}), frozenset({2})}

    def test_refusal_witness(self):
        res = recognize_semicomplete_multipartite(Digraph.from_arcs(3, [(0, 1)]))
        assert res == NotMultipartite(0, 1, 2)
        assert not res

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_smd_criterion_exhaustively(self, n):
        for D in all_digraphs(n):
            res = recognize_semicomplete_multipartite(D)
            assert bool(res) == smd_criterion(D)
            if res:
                classes = res.classes
                assert sorted(v for c in classes for v in c) == list(range(n))
                for c in classes:
                    for a in c:
                        for b in c:
                            assert a == b or not D.adjacent(a, b)
                for c1 in classes:
                    for c2 in classes:
                        if c1 != c2:
                            assert all(D.adjacent(a, b) for a in c1 for b in c2)
            else:
                a, b, c = res.a, res.b, res.c
                assert D.adjacent(a, b) and not D.adjacent(a, c) and not D.adjacent(b, c)


class TestEdgeList:
    def test_round_trip(self, fam11):
        D = fam11.digraph
        assert parse_edge_list(format_edge_list(D, ["hello"])) == D

    def test_comments_and_crlf(self):
        D = parse_edge_list("# cycle\r\nn 3\r\n0 1\r\n# mid\r\n1 2\r\n2 0\r\n")
        assert D == Digraph.dicycle(3)

    def test_output_uses_lf(self, c3):
        text = format_edge_list(c3)
        assert "\r" not in text and text.endswith("\n")
        assert text.splitlines()[0] == "n 3"

    def test_duplicate_arc_line(self):
        with pytest.raises(DigraphError, match="line 3"):
            parse_edge_list("n 2\n0 1\n0 1\n")

    def test_malformed_line_names_line(self):
        with pytest.raises(DigraphError, match="line 2"):
            parse_edge_list("n 6\n5 x\n")

    def test_missing_header(self):
        with pytest.raises(DigraphError):
            parse_edge_list("0 1\n")

    def test_file_round_trip(self, tmp_path, fam11):
        path = tmp_path / "d.txt"
        write_edge_list(fam11.digraph, path)
        assert read_edge_list(path) == fam11.digraph
        assert b"\r" not in path.read_bytes()

    @given(digraphs())
    def test_property_round_trip(self, D):
        assert parse_edge_list(format_edge_list(D)) == D

    def test_dot_keeps_both_directions(self):
        dot = to_dot(Digraph.from_arcs(2, [(0, 1), (1, 0)]), {0: "u"})
        assert "0 -> 1;" in dot and "1 -> 0;" in dot
        assert '0 [label="u"];' in dot
