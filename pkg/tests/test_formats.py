import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treegarden import new_graph
from treegarden.errors import (
    BadCharError,
    BadColumnError,
    BadTokenError,
    CountMismatchError,
    EmptyInputError,
    LongFormUnsupportedError,
    RaggedRowsError,
    SelfLoopError,
    TooLargeError,
    TrailingGarbageError,
    TruncatedLineError,
    UnknownEdgeError,
)
from treegarden.formats import (
    encode_graph6,
    parse_edgelist,
    parse_graph6,
    parse_incidence,
    to_dot,
    write_edgelist,
    write_incidence,
)

from conftest import FIXTURE_EDGES, FIXTURE_TREE_IDS, complete_graph, corpus_lines


class TestGraph6Parse:
    def test_k5(self):
        g = parse_graph6("D~{")
        assert g == complete_graph(5)

    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.m == 0

    def test_header_skipped(self):
        assert parse_graph6(">>graph6<<D~{") == complete_graph(5)

    def test_bad_char(self):
        with pytest.raises(BadCharError):
            parse_graph6("D~!")

    def test_long_form_rejected(self):
        with pytest.raises(LongFormUnsupportedError):
            parse_graph6("~??~?????")

    def test_excess_bytes(self):
        with pytest.raises(TrailingGarbageError):
            parse_graph6("D~{{")

    def test_truncated(self):
        with pytest.raises(TruncatedLineError):
            parse_graph6("D~")

    def test_nonzero_padding(self):
        # K1,0 on 3 vertices needs 3 bits; set a padding bit
        with pytest.raises(TrailingGarbageError):
            parse_graph6("B" + chr(63 + 0b000001))

    def test_empty(self):
        with pytest.raises(EmptyInputError):
            parse_graph6("   ")


class TestGraph6Encode:
    def test_k5(self):
        assert encode_graph6(complete_graph(5)) == "D~{"

    def test_single_vertex(self):
        assert encode_graph6(new_graph(1, [])) == "@"

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            encode_graph6(new_graph(63, []))

    def test_roundtrip_full_n6_corpus(self):
        for line in corpus_lines("connected_n6.g6"):
            g = parse_graph6(line)
            assert encode_graph6(g) == line
            assert parse_graph6(encode_graph6(g)) == g

    def test_census_counts(self):
        expected = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
        for n, count in expected.items():
            lines = corpus_lines(f"connected_n{n}.g6")
            assert len(lines) == count
            for line in lines:
                assert parse_graph6(line).n == n

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_roundtrip_random_graphs(self, data):
        n = data.draw(st.integers(min_value=1, max_value=14))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        chosen = data.draw(st.sets(st.sampled_from(pairs)) if pairs else st.just(set()))
        g = new_graph(n, sorted(chosen))
        assert parse_graph6(encode_graph6(g)) == g

    def test_matches_networkx(self):
        nx = pytest.importorskip("networkx")
        for line in corpus_lines("connected_n5.g6"):
            ours = parse_graph6(line)
            theirs = nx.from_graph6_bytes(line.encode())
            assert ours.n == theirs.number_of_nodes()
            assert set(ours.normalized_edges()) == {
                (min(u, v), max(u, v)) for u, v in theirs.edges()
            }


class TestIncidence:
    def test_fixture_roundtrip(self, fixture_graph):
        text = write_incidence(fixture_graph)
        assert parse_incidence(text) == fixture_graph
        assert parse_incidence(text).edges == fixture_graph.normalized_edges()

    def test_single_edge(self):
        g = parse_incidence("1\n1\n")
        assert g.n == 2 and g.edges == ((0, 1),)
        assert write_incidence(g) == "1\n1\n"

    def test_empty_rows(self):
        g = parse_incidence("\n\n\n")
        assert g.n == 3 and g.m == 0
        assert write_incidence(g) == "\n\n\n"

    def test_bad_column(self):
        with pytest.raises(BadColumnError) as exc:
            parse_incidence("1\n1\n1\n")
        assert exc.value.column == 0

    def test_ragged(self):
        with pytest.raises(RaggedRowsError):
            parse_incidence("1 0\n1\n")

    def test_bad_token(self):
        with pytest.raises(BadTokenError):
            parse_incidence("1 2\n1 0\n0 1\n")

    def test_roundtrip_corpus(self):
        from treegarden.formats import parse_graph6

        for line in corpus_lines("connected_n5.g6"):
            g = parse_graph6(line)
            assert parse_incidence(write_incidence(g)) == g


class TestEdgeList:
    def test_fixture(self):
        g = parse_edgelist("5 5\n0 1\n2 3\n4 0\n0 3\n1 3\n")
        assert g.edges == tuple(FIXTURE_EDGES)

    def test_single_vertex(self):
        g = parse_edgelist("1 0\n")
        assert g.n == 1 and g.m == 0

    def test_self_loop_propagates(self):
        with pytest.raises(SelfLoopError):
            parse_edgelist("2 1\n0 0\n")

    def test_count_mismatch(self):
        with pytest.raises(CountMismatchError):
            parse_edgelist("3 2\n0 1\n")

    def test_roundtrip(self, fixture_graph):
        assert parse_edgelist(write_edgelist(fixture_graph)) == fixture_graph


class TestDot:
    def test_tree_highlight(self, fixture_graph):
        dot = to_dot(fixture_graph, highlight=FIXTURE_TREE_IDS)
        assert dot.count("[style=bold]") == 4
        assert dot.count("[style=dotted]") == 1
        assert "0 -- 3 [style=dotted];" in dot

    def test_no_highlight_plain(self, fixture_graph):
        dot = to_dot(fixture_graph)
        assert "style" not in dot
        assert dot.count("--") == 5

    def test_single_vertex(self):
        dot = to_dot(new_graph(1, []))
        assert "0;" in dot and "--" not in dot

    def test_unknown_edge(self, fixture_graph):
        with pytest.raises(UnknownEdgeError):
            to_dot(fixture_graph, highlight=[9])
