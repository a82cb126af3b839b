"""Peeling at the least strictly positive idempotent.

Classification values, quotient and restriction behavior, representation
trees, and the closure that unifies the two branches; every expected
value here was worked out by hand on the fixture definitions.
"""

import random

import pytest

from plexalg import chains as ch
from plexalg import decompose as dec
from plexalg import lawcheck as lc
from plexalg import parsing as ps
from plexalg.errors import OnlyUnitIdempotent, PreconditionFailed, WrongBranch

BRANCHES = {
    "A": dec.NONIDEM_BRANCH,
    "B": dec.IDEM_BRANCH,
    "C": dec.NONIDEM_BRANCH,
    "G": dec.NONIDEM_BRANCH,
    "E": dec.IDEM_BRANCH,
    "V3": dec.IDEM_BRANCH,
    "V4": dec.NONIDEM_BRANCH,
}

SMALLEST_U = {
    "A": "(0, T)",
    "B": "(0, T)",
    "C": "(0, T)",
    "G": "(0, T)",
    "E": "((0, 0), T)",
    "V3": "(0, T)",
    "V4": "(0, T)",
}


@pytest.mark.parametrize("name", sorted(BRANCHES))
def test_branch_and_least_idempotent(alg, name):
    a = alg[name]
    u = dec.smallest_pos_idem(a)
    assert ps.print_elem(a, u) == SMALLEST_U[name]
    assert dec.branch(a, u) == BRANCHES[name]


def test_group_chain_has_no_second_idempotent(alg):
    for name in ("Z", "Q", "LZZ"):
        with pytest.raises(OnlyUnitIdempotent):
            dec.smallest_pos_idem(alg[name])


CLASSIFY = [
    ("A", "(2, T)", dec.TOP_C),
    ("A", "(0, 5)", dec.GROUP_BELOW),
    ("B", "(2, T)", dec.TOP_C),
    ("B", "(2, B)", dec.BOT_C),
    ("B", "(1/2, B)", dec.INTERIOR),
    ("B", "(0, 5)", dec.GROUP_BELOW),
    ("B", "(-3, T)", dec.TOP_C),
    ("V3", "(2, T)", dec.TOP_C),
    ("V3", "(1, T)", dec.TOP_PS),
    ("V3", "(2, B)", dec.BOT_C),
    ("V3", "(1, B)", dec.BOT_PS),
    ("V3", "(1/2, B)", dec.INTERIOR),
    ("V4", "(2, T)", dec.TOP_C),
    ("V4", "(1, T)", dec.TOP_PS),
    ("V4", "(0, 5)", dec.GROUP_BELOW),
]


@pytest.mark.parametrize("name,lit,kind", CLASSIFY)
def test_classification_values(alg, name, lit, kind):
    a = alg[name]
    u = dec.smallest_pos_idem(a)
    assert dec.classify(a, u, ps.parse_elem(a, lit)) == kind


def test_classification_consistent_with_tau(alg):
    for name in ("A", "B", "C", "G", "E", "V3", "V4"):
        a = alg[name]
        u = dec.smallest_pos_idem(a)
        rng = random.Random(21)
        for _ in range(300):
            x = ch.sample_elem(a, rng)
            kind = dec.classify(a, u, x)
            assert kind in dec.CLASS_KINDS
            below = ch.lt(a, ch.tau(a, x), u)
            assert below == (kind == dec.GROUP_BELOW)


def test_beta_collapses_components(alg):
    B = alg["B"]
    u = dec.smallest_pos_idem(B)
    same = [ps.parse_elem(B, t) for t in ("(3, -5/6)", "(3, 5)", "(3, 0)")]
    classes = {dec.beta(B, u, x) for x in same}
    assert len(classes) == 1
    other = dec.beta(B, u, ps.parse_elem(B, "(2, 0)"))
    assert other not in classes
    top = dec.beta(B, u, ps.parse_elem(B, "(3, T)"))
    assert top not in classes  # non-invertibles keep their identity


def test_beta_algebra_is_a_monoid_quotient(alg):
    B = alg["B"]
    u = dec.smallest_pos_idem(B)
    bq = dec.beta_algebra(B, u)
    rng = random.Random(2)
    for _ in range(200):
        x, y = ch.sample_elem(B, rng), ch.sample_elem(B, rng)
        assert bq.mul(bq.to_class(x), bq.to_class(y)) == \
            bq.to_class(ch.mul(B, x, y))
        assert bq.comp(bq.to_class(x)) == bq.to_class(ch.comp(B, x))


def test_gamma_needs_idempotent_branch(alg):
    A = alg["A"]
    u = dec.smallest_pos_idem(A)
    with pytest.raises(WrongBranch):
        dec.gamma_algebra(A, u)
    with pytest.raises(WrongBranch):
        dec.gamma(A, u, dec.beta(A, u, ch.unit(A)))


def test_restriction_needs_non_idempotent_branch(alg):
    B = alg["B"]
    u = dec.smallest_pos_idem(B)
    with pytest.raises(WrongBranch):
        dec.tau_ge_u_algebra(B, u)


def test_gamma_classes_are_intervals(alg):
    for name in ("B", "V3"):
        a = alg[name]
        u = dec.smallest_pos_idem(a)
        q = dec.gamma_algebra(a, u)
        for x in lc.window_elems(a, bound=2, max_den=2):
            c = q.to_class(x)
            assert ch.le(a, q.class_min(c), x)
            assert ch.le(a, x, q.class_max(c))


def test_gamma_glues_extremes_to_their_component(alg):
    B = alg["B"]
    u = dec.smallest_pos_idem(B)
    q = dec.gamma_algebra(B, u)
    mid = ps.parse_elem(B, "(3, 1/2)")
    top = ps.parse_elem(B, "(3, T)")
    bot = ps.parse_elem(B, "(3, B)")
    assert q.to_class(mid) == q.to_class(top) == q.to_class(bot)
    assert q.class_max(q.to_class(mid)) == top
    assert q.class_min(q.to_class(mid)) == bot
    lone = ps.parse_elem(B, "(1/2, B)")
    assert q.to_class(lone) != q.to_class(mid)


def test_restriction_behaves_like_a_unit_shift(alg):
    A = alg["A"]
    u = dec.smallest_pos_idem(A)
    rc = dec.tau_ge_u_algebra(A, u)
    assert rc.unit() == u
    rng = random.Random(4)
    for _ in range(200):
        p, q = rc.sample(rng), rc.sample(rng)
        assert rc.contains(p)
        assert rc.mul(p, rc.unit()) == p
        assert rc.comp(rc.comp(p)) == p
        assert rc.mul(p, q) == ch.mul(A, p, q)


def test_restriction_covers_on_v4(alg):
    V4 = alg["V4"]
    u = dec.smallest_pos_idem(V4)
    rc = dec.tau_ge_u_algebra(V4, u)
    x = ps.parse_elem(V4, "(1, T)")
    assert ps.print_elem(V4, rc.x_down(x)) == "(0, T)"
    assert ps.print_elem(V4, rc.x_up(x)) == "(2, T)"


REPTREES = {
    "A": "base: Z\nlevel 2: iota=II Z=gr G=Q H=fullH",
    "B": "base: Q\nlevel 2: iota=I Z=idx 1 G=Q H=fullH",
    "C": "base: Z\nlevel 2: iota=II Z=gr G=1 H=fullH",
    "G": "base: Z\nlevel 2: iota=II Z=gr G=1 H=fullH",
    "E": ("base: Z\nlevel 2: iota=II Z=gr G=Q H=fullH\n"
          "level 3: iota=I Z=full G=Q H=fullH"),
}

REBUILT = {
    "A": "SLII(Z, Q, fullH)",
    "B": "SLI(Q, idx 1, Q, fullH)",
    "C": "SLII(Z, 1, fullH)",
    "G": "SLII(Z, 1, fullH)",
    "E": "SLI(SLII(Z, Q, fullH), full, Q, fullH)",
}


@pytest.mark.parametrize("name", sorted(REPTREES))
def test_representation_trees(alg, name):
    tree = dec.group_representation(alg[name])
    assert ps.print_reptree(tree) == REPTREES[name]
    assert ps.print_algebra(dec.rebuild(tree)) == REBUILT[name]


def test_rebuild_rejects_malformed_levels():
    tree = dec.group_representation(ps.parse_algebra("I(Q, idx 1, Q)"))
    level = tree.levels[0]
    broken = dec.RepTree(base=tree.base,
                         levels=(dec.RepLevel("I", "gr", level.g, level.h),))
    with pytest.raises(PreconditionFailed):
        dec.rebuild(broken)


def test_alpha_embedding_is_an_isomorphism_onto_rebuilt(alg):
    for name in ("A", "B", "E"):
        a = alg[name]
        tree, rebuilt, fn = dec.representation_embedding(a)
        assert ps.print_reptree(tree) == REPTREES[name]
        report = lc.check_hom(fn, a, rebuilt, budget=300, seed=9, law="alpha")
        assert report.passed, report.render()


PHI = [
    ("A", "(0, 1/2)", "(0, T)"),
    ("A", "(1, T)", "(1, T)"),
    ("B", "(0, 1/2)", "(0, T)"),
    ("B", "(1, T)", "(1, T)"),
    ("B", "(1/2, B)", "(1/2, B)"),
]


@pytest.mark.parametrize("name,lit,want", PHI)
def test_phi_values(alg, name, lit, want):
    a = alg[name]
    u = dec.smallest_pos_idem(a)
    x = ps.parse_elem(a, lit)
    assert ps.print_elem(a, dec.phi_nucleus(a, u, x)) == want


def test_phi_nucleus_laws_sampled(alg):
    for name in ("A", "B", "C", "E", "V3", "V4"):
        a = alg[name]
        u = dec.smallest_pos_idem(a)
        phi = lambda v: dec.phi_nucleus(a, u, v)
        rng = random.Random(6)
        for _ in range(200):
            x, y = ch.sample_elem(a, rng), ch.sample_elem(a, rng)
            px, py = phi(x), phi(y)
            assert ch.le(a, x, px)
            assert phi(px) == px
            if ch.le(a, x, y):
                assert ch.le(a, px, py)
            assert ch.le(a, ch.mul(a, px, py), phi(ch.mul(a, x, y)))


def test_lex_embedding_targets(alg):
    targets = {"A": "Z lex Q^TB", "E": "Z lex Q^TB lex Q^TB",
               "B": "Q lex Q^TB", "C": "Z lex 1^TB"}
    for name, want in targets.items():
        monoid, emb = dec.lex_embedding(alg[name])
        assert monoid.describe() == want
        assert monoid.contains(emb(ch.unit(alg[name])))


def test_lex_monoid_marker_order(alg):
    monoid, emb = dec.lex_embedding(alg["A"])
    unit = monoid.unit()
    top = (unit[0], ch.TOP)
    bot = (unit[0], ch.BOT)
    assert monoid.cmp(bot, unit) == -1
    assert monoid.cmp(unit, top) == -1
    assert monoid.mul(top, bot) == bot  # bottom absorbs
    assert monoid.mul(top, top) == top
