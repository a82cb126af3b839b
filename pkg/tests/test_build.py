"""Builder preconditions and the structural witnesses they produce."""

import pytest

from plexalg import build, parsing
from plexalg.errors import (DiscretenessViolated, InvalidSubgroup,
                            PreconditionFailed, SubgroupChainViolated)
from plexalg.groups import FULL, Q_GROUP, TRIV_GROUP, Z_GROUP, idx

Z = build.group_leaf(Z_GROUP)
Q = build.group_leaf(Q_GROUP)


def spec(text):
    return parsing.parse_algebra(text)


def test_leaves():
    assert Z.is_leaf
    assert build.group_leaf(TRIV_GROUP).is_leaf
    assert parsing.print_algebra(Z) == "Z"
    assert parsing.print_algebra(build.group_leaf(TRIV_GROUP)) == "1"


def test_type_constructors_build():
    for text in (
        "II(Z, Q)",
        "I(Q, idx 1, Q)",
        "III(Q, idx 1, idx 2, Q)",
        "IV(Z, idx 2, Q)",
        "SLII(Z, Q, fullH)",
        "SLII(Z, Q, prodH(full, triv))",
        "SLII(Z, Q, graphH(1/2))",
        "SLI(Q, idx 1, Q, fullH)",
        "I(II(Z, Q), full, Q)",
        "II(Lex(Z, Z), Q)",
    ):
        a = spec(text)
        assert parsing.print_algebra(a) == text


def test_kind_ii_needs_discreteness():
    # the rationals are dense, so no element has covers
    with pytest.raises(DiscretenessViolated):
        build.build_type("II", Q, Q)
    with pytest.raises(DiscretenessViolated):
        spec("II(Q, Q)")
    with pytest.raises(DiscretenessViolated):
        spec("IV(Q, idx 2, Q)")


def test_kind_i_needs_top_subgroup():
    with pytest.raises(PreconditionFailed):
        build.build_type("I", Q, Q)
    with pytest.raises(PreconditionFailed):
        build.build_type("II", Z, Q, zsub=(FULL,))


def test_subgroup_chain_enforced():
    # kind III needs the middle subgroup inside the top one
    with pytest.raises(SubgroupChainViolated):
        spec("III(Q, idx 2, idx 1, Q)")
    assert spec("III(Q, idx 2, idx 4, Q)") is not None


def test_subgroup_rank_checked():
    with pytest.raises(InvalidSubgroup):
        build.build_type("I", Q, Q, zsub=(idx(1), idx(1)))


def test_sublex_needs_leaf_second_factor():
    node = spec("II(Z, Q)")
    with pytest.raises(PreconditionFailed):
        build.build_sublex("SLII", Z, node, build.FullH())


def test_graph_h_needs_compatible_shape():
    # graphH couples a divisible y to one integer head coordinate
    with pytest.raises(PreconditionFailed):
        spec("SLII(Q, Q, graphH(1/2))")


def test_structure_is_preserved_by_nesting():
    e = spec("I(II(Z, Q), full, Q)")
    assert not e.is_leaf
    assert parsing.print_algebra(e.x) == "II(Z, Q)"
    assert build.gr_ambient(e).kinds == ("Z", "Q", "Q")


def test_discretely_embedded_probe():
    # asks about the argument's own group part inside itself
    assert build.discretely_embedded(Z)
    assert build.discretely_embedded(spec("Lex(Z, Z)"))
    assert not build.discretely_embedded(Q)
    assert not build.discretely_embedded(spec("II(Z, Q)"))  # dense middles
