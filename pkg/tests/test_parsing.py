"""Text round-trips for specs, elements, expressions, and level trees."""

import random

import pytest

from plexalg import chains as ch
from plexalg import decompose as dec
from plexalg import parsing as ps
from plexalg.errors import InvalidElement, ParseError

CANONICAL_SPECS = [
    "Z",
    "Q",
    "1",
    "Lex(Z, Q)",
    "Lex(Z, Z, Q)",
    "II(Z, Q)",
    "I(Q, idx 1, Q)",
    "III(Q, idx 1, idx 2, Q)",
    "IV(Z, idx 2, Q)",
    "SLII(Z, Q, fullH)",
    "SLII(Z, Q, prodH(full, triv))",
    "SLII(Z, Q, graphH(1/2))",
    "SLI(Q, idx 1, Q, fullH)",
    "I(II(Z, Q), full, Q)",
]


@pytest.mark.parametrize("text", CANONICAL_SPECS)
def test_spec_round_trip(text):
    a = ps.parse_algebra(text)
    assert ps.print_algebra(a) == text
    assert ps.print_algebra(ps.parse_algebra(ps.print_algebra(a))) == text


def test_spec_whitespace_normalized():
    a = ps.parse_algebra("  II( Z ,Q )  ")
    assert ps.print_algebra(a) == "II(Z, Q)"


@pytest.mark.parametrize("text,line,col", [
    ("II(Z", 1, 5),
    ("II(Z, Q))", 1, 9),
    ("V(Z, Q)", 1, 1),
    ("Lex()", 1, 5),
    ("II(Z, Q, extra)", 1, 8),
    ("I(Q, idx x, Q)", 1, 10),
])
def test_spec_errors_carry_position(text, line, col):
    with pytest.raises(ParseError) as err:
        ps.parse_algebra(text)
    assert err.value.line == line
    assert err.value.col == col


def test_elem_round_trip_on_samples(alg):
    for name in ("A", "B", "C", "G", "E", "V3", "V4", "LZQ", "Q"):
        a = alg[name]
        rng = random.Random(13)
        for _ in range(150):
            x = ch.sample_elem(a, rng)
            assert ps.parse_elem(a, ps.print_elem(a, x)) == x


def test_elem_literals(alg):
    A = alg["A"]
    assert ps.print_elem(A, ps.parse_elem(A, "( -2 , T )")) == "(-2, T)"
    assert ps.print_elem(A, ps.parse_elem(A, "(0, -1/2)")) == "(0, -1/2)"
    E = alg["E"]
    assert ps.print_elem(E, ps.parse_elem(E, "((1, T), B)")) == "((1, T), B)"
    LZZ = alg["LZZ"]
    assert ps.print_elem(LZZ, ps.parse_elem(LZZ, "(1, -3)")) == "(1, -3)"


def test_elem_errors(alg):
    A = alg["A"]
    with pytest.raises(ParseError):
        ps.parse_elem(A, "(0,")
    with pytest.raises(InvalidElement):
        ps.parse_elem(A, "(1/2, T)")  # head must be an integer
    with pytest.raises(InvalidElement):
        ps.parse_elem(A, "(0, B)")  # type II adjoins no bottoms
    with pytest.raises(ParseError):
        ps.parse_elem(A, "(0, T) junk")


def test_expr_parsing(alg):
    A = alg["A"]
    op, x, y = ps.parse_expr(A, "mul (0, T) (1, 2/3)")
    assert op == "mul"
    assert ps.print_elem(A, x) == "(0, T)"
    assert ps.print_elem(A, y) == "(1, 2/3)"
    op, x = ps.parse_expr(A, "tau unit")
    assert op == "tau" and x == ch.unit(A)
    assert ps.parse_expr(A, "idems") == ("idems",)
    with pytest.raises(ParseError):
        ps.parse_expr(A, "frobnicate (0, T)")
    with pytest.raises(ParseError):
        ps.parse_expr(A, "mul (0, T)")  # missing second argument


def test_rat_printing():
    assert ps.print_rat((3, 1)) == "3"
    assert ps.print_rat((-7, 2)) == "-7/2"


def test_reptree_round_trip(alg):
    for name in ("A", "B", "C", "E", "V3", "V4"):
        tree = dec.group_representation(alg[name])
        text = ps.print_reptree(tree)
        assert ps.parse_reptree(text) == tree
        assert ps.print_reptree(ps.parse_reptree(text)) == text


def test_reptree_errors():
    with pytest.raises(ParseError):
        ps.parse_reptree("level 2: iota=II Z=gr G=Q H=fullH")
    with pytest.raises(ParseError):
        ps.parse_reptree("base: Z\nlevel 3: iota=II Z=gr G=Q H=fullH")
    with pytest.raises(ParseError):
        ps.parse_reptree("base: Z\nlevel 2: iota=V Z=gr G=Q H=fullH")
