import pytest
from hypothesis import given

from conftest import SINGLETON, TRIANGLE, TRIANGLE_BOUNDARY, chain, complexes, spaces
from finspace.errors import CycleError, ParseError
from finspace.fixtures import FIG2_X, FIG3_X, FIXTURES
from finspace.poset import is_isomorphic
from finspace.textio import export_dot, parse_complex, parse_space, serialize_complex, serialize_space


class TestParseSpace:
    def test_point(self):
        assert parse_space("point x\n") == SINGLETON

    def test_cycle(self):
        with pytest.raises(CycleError):
            parse_space("a > b\nb > a\n")

    def test_comments_and_blank_lines(self):
        X = parse_space("# a chain\n\nc1 > c0   # cover\npoint c2\nc2 > c1\n")
        assert X == chain(3)

    def test_bad_line_reports_number(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_space("point a\na >> b\n")

    def test_point_arity(self):
        with pytest.raises(ParseError):
            parse_space("point a b\n")

    def test_fig2_x_file(self):
        assert parse_space(serialize_space(FIG2_X)) == FIG2_X

    @pytest.mark.parametrize("name", sorted(FIXTURES))
    def test_fixture_round_trip(self, name):
        assert parse_space(serialize_space(FIXTURES[name])) == FIXTURES[name]

    @given(spaces())
    def test_round_trip(self, X):
        Y = parse_space(serialize_space(X))
        assert Y == X and is_isomorphic(X, Y)[0]


class TestParseComplex:
    def test_triangle(self):
        assert parse_complex("a b c\n") == TRIANGLE

    def test_dominated_line(self):
        assert parse_complex("a b c\na b\n") == TRIANGLE

    def test_boundary(self):
        assert parse_complex("a b\nb c\nc a\n") == TRIANGLE_BOUNDARY

    def test_repeated_vertex(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_complex("a a b\n")

    @given(complexes())
    def test_round_trip(self, K):
        assert parse_complex(serialize_complex(K)) == K


class TestDot:
    def test_singleton(self):
        dot = export_dot(SINGLETON)
        assert '"x";' in dot and "->" not in dot

    def test_chain(self):
        edges = [line.strip() for line in export_dot(chain(2)).splitlines() if "->" in line]
        assert edges == ['"c1" -> "c0";']

    def test_fig3_x(self):
        dot = export_dot(FIG3_X)
        assert dot.count("->") == 15
        ranks = [line for line in dot.splitlines() if "rank=same" in line]
        assert len(ranks) == 3
        assert sum(line.count('";') for line in ranks) == 10
