"""Totally ordered involutive residuated chains built from group blocks.

An algebra is a tree: leaves are ordered abelian groups (plexalg.groups),
inner nodes enlarge a child chain X with a second factor Y in one of two
shapes, then restrict which columns exist:

* family 'tb' (kinds I, III, SLI): every first coordinate gets a bottom
  marker; first coordinates inside a subgroup Z of the group part of X
  also get a top marker; those inside V <= Z (for SLI: the first-side
  projection of H) carry middle columns holding a copy of Y.
* family 't' (kinds II, IV, SLII): every first coordinate gets a top
  marker; middle columns as above.  This shape additionally needs the
  group part of X discretely embedded in X.

Elements are nested pairs (first, second) with second one of 'T', 'B' or
('M', y).  No element carries a reference to its algebra; every operation
takes the algebra as explicit first argument.  Comparison is
lexicographic with B < M(...) < T in the second slot.

The module also computes, per algebra, a structural "ladder": one flat
coordinate view of the group part per reduction level, recording how many
ambient coordinates that level keeps and which per-coordinate constraints
cut the level's group out of them.  The decomposition layer consumes
algebras only through the generic operations plus this ladder, never by
inspecting the construction tree of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import lcm

from . import kernel as kn
from .errors import InvalidElement, InvalidSubgroup, StructuralMismatch
from .groups import FULL, TRIV, GroupDesc, coord_in_sub, g_member, idx

TOP = "T"
BOT = "B"

NODE_KINDS = ("I", "II", "III", "IV", "SLI", "SLII")
TB_KINDS = ("I", "III", "SLI")
SUBLEX_KINDS = ("SLI", "SLII")


def mid(y):
    return ("M", y)


def is_mid(second) -> bool:
    return isinstance(second, tuple) and second[0] == "M"


# ---------------------------------------------------------------------------
# second-factor restrictions for sublex nodes


@dataclass(frozen=True)
class FullH:
    """No restriction: middle columns hold the whole second group."""


@dataclass(frozen=True)
class ProdH:
    """Coordinatewise restriction: first side in zpart, second in ypart."""

    zpart: tuple
    ypart: tuple


@dataclass(frozen=True)
class GraphH:
    """Graph restriction {(n, n*c)}: one integer first coordinate, the
    single second coordinate determined by it."""

    c: tuple  # rational pair


# ---------------------------------------------------------------------------
# per-coordinate constraints (ladder entries and merged node data)
#
# ('full',)          whole coordinate
# ('triv',)          pinned to 0
# ('idx', m)         multiples of m
# ('graph', c, src)  value = c * value of ambient coordinate src


def _constr_of_sub(entry):
    return entry  # subgroup entries are already constraint-shaped


def merge_constr(a, b):
    if a == FULL:
        return b
    if b == FULL:
        return a
    if a[0] == "graph" or b[0] == "graph":
        raise InvalidSubgroup("cannot restrict a graph-linked coordinate")
    if a == TRIV or b == TRIV:
        return TRIV
    return idx(lcm(a[1], b[1]))


def merge_constr_vec(a, b):
    if len(a) != len(b):
        raise InvalidSubgroup("subgroup arity %d, expected %d" % (len(b), len(a)))
    return tuple(merge_constr(x, y) for x, y in zip(a, b))


def constr_ok(constraints, vec, offset=0, full_vec=None) -> bool:
    """Check a raw coordinate vector against per-coordinate constraints.

    Graph constraints point at absolute ambient indices, so the full
    ambient vector is needed when the checked slice does not start at 0.
    """
    ref = full_vec if full_vec is not None else vec
    for i, con in enumerate(constraints):
        v = vec[i]
        if con == FULL:
            continue
        if con == TRIV:
            if v != kn.ZERO:
                return False
        elif con[0] == "idx":
            if not coord_in_sub(con, v):
                return False
        else:  # graph
            if v != kn.rmul(con[1], ref[con[2] - offset]):
                return False
    return True


@dataclass(frozen=True)
class LevelView:
    """Group view of one reduction level.

    prefix    number of ambient coordinates the level keeps
    gconstr   constraints cutting the level's group out of them
    zconstr   constraints of the level's distinguished subgroup over the
              next level's prefix, or None for the whole next group
    """

    prefix: int
    gconstr: tuple
    zconstr: tuple | None


# ---------------------------------------------------------------------------
# the algebra tree


@dataclass(frozen=True)
class Algebra:
    kind: str  # 'grp' or one of NODE_KINDS
    group: GroupDesc | None = None
    x: "Algebra | None" = None
    y: "Algebra | None" = None
    zsub: tuple | None = None  # 'tb' nodes: Z over the ambient of X's group part
    vsub: tuple | None = None  # III/IV: V over the same ambient
    h: FullH | ProdH | GraphH | None = None  # sublex nodes

    @property
    def is_leaf(self) -> bool:
        return self.kind == "grp"

    @property
    def family(self) -> str | None:
        if self.is_leaf:
            return None
        return "tb" if self.kind in TB_KINDS else "t"

    @property
    def is_sublex(self) -> bool:
        return self.kind in SUBLEX_KINDS

    @cached_property
    def xlen(self) -> int:
        return ladder(self.x)[1][0].prefix

    @cached_property
    def _structure(self):
        return _build_structure(self)

    def __repr__(self):  # pragma: no cover - debugging aid
        from .parsing import print_algebra

        return print_algebra(self)


def leaf(desc: GroupDesc) -> Algebra:
    return Algebra(kind="grp", group=desc)


@dataclass(frozen=True)
class _NodeStructure:
    ambient: tuple  # coordinate kinds of the full group part
    entries: tuple  # LevelView tuple, outermost level first
    vconstr: tuple | None  # merged middle-column constraint over X's ambient
    zconstr: tuple | None  # merged top-column constraint ('tb' only)


def _h_first_side(node: Algebra, base):
    """Constraints the sublex restriction puts on first coordinates."""
    h = node.h
    if isinstance(h, ProdH):
        return merge_constr_vec(base, h.zpart)
    return base  # FullH and GraphH restrict nothing on the first side


def _build_structure(node: Algebra) -> _NodeStructure:
    if node.is_leaf:
        desc = node.group
        entry = LevelView(desc.rank, (FULL,) * desc.rank, None)
        return _NodeStructure(desc.kinds, (entry,), None, None)

    x_amb, x_entries = ladder(node.x)
    y_amb, y_entries = ladder(node.y)
    xlen = x_entries[0].prefix
    xg = x_entries[0].gconstr

    if node.kind == "I":
        zc = merge_constr_vec(xg, node.zsub)
        vc = zc
    elif node.kind == "III":
        zc = merge_constr_vec(xg, node.zsub)
        vc = merge_constr_vec(zc, node.vsub)
    elif node.kind == "SLI":
        zc = merge_constr_vec(xg, node.zsub)
        vc = _h_first_side(node, zc)
    elif node.kind == "II":
        zc = None
        vc = xg
    elif node.kind == "IV":
        zc = None
        vc = merge_constr_vec(xg, node.vsub)
    else:  # SLII
        zc = None
        vc = _h_first_side(node, xg)

    def lift(con):
        # reindex a constraint from Y-local to node coordinates
        if con[0] == "graph":
            return (con[0], con[1], con[2] + xlen)
        return con

    def lift_vec(v):
        return tuple(lift(c) for c in v)

    y_head = lift_vec(y_entries[0].gconstr)
    if isinstance(node.h, ProdH):
        y_head = merge_constr_vec(y_head, node.h.ypart)
    elif isinstance(node.h, GraphH):
        y_head = (("graph", node.h.c, xlen - 1),)  # already node coordinates

    entries = []
    last = len(y_entries) - 1
    for j, ent in enumerate(y_entries):
        g = vc + (y_head if j == 0 else lift_vec(ent.gconstr))
        if j < last:
            z = None if ent.zconstr is None else vc + lift_vec(ent.zconstr)
        else:
            z = zc  # this level's own reduction step belongs to the node
        entries.append(LevelView(xlen + ent.prefix, g, z))
    entries.extend(x_entries)
    return _NodeStructure(x_amb + y_amb, tuple(entries), vc, zc)


def ladder(a: Algebra):
    """(ambient coordinate kinds, LevelView tuple) of the group part."""
    s = a._structure
    return s.ambient, s.entries


def gr_ambient(a: Algebra) -> GroupDesc:
    return GroupDesc(a._structure.ambient)


# ---------------------------------------------------------------------------
# membership


def validate_elem(a: Algebra, x) -> bool:
    """Structural membership of x in the universe of a."""
    if a.is_leaf:
        return g_member(a.group, x)
    if not (isinstance(x, tuple) and len(x) == 2):
        return False
    first, second = x
    if second == BOT:
        return a.family == "tb" and validate_elem(a.x, first)
    if second == TOP:
        if not validate_elem(a.x, first):
            return False
        return a.family == "t" or zset_member(a, first)
    if not is_mid(second):
        return False
    return mid_capable(a, first) and slice_member(a, first, second[1])


def elem_check(a: Algebra, x):
    if not validate_elem(a, x):
        from .parsing import print_algebra

        raise InvalidElement("element does not live in %s" % print_algebra(a))
    return x


def in_group_part(a: Algebra, x) -> bool:
    """x lies in the group part (invertible elements) of a."""
    if a.is_leaf:
        return g_member(a.group, x)
    if not (isinstance(x, tuple) and len(x) == 2 and is_mid(x[1])):
        return False
    first, second = x
    if not (in_group_part(a.x, first) and in_group_part(a.y, second[1])):
        return False
    vec = to_gvec(a, x)
    return constr_ok(a._structure.entries[0].gconstr, vec)


def zset_member(a: Algebra, first) -> bool:
    """first coordinate admits a top column ('tb': the Z subgroup)."""
    if not in_group_part(a.x, first):
        return False
    if a.family == "t":
        return True
    return constr_ok(a._structure.zconstr, to_gvec(a.x, first))


def mid_capable(a: Algebra, first) -> bool:
    """first coordinate admits middle columns (the V side, or H's shadow)."""
    if not in_group_part(a.x, first):
        return False
    vc = a._structure.vconstr
    vec = to_gvec(a.x, first)
    if not constr_ok(vc, vec):
        return False
    return True


# ---------------------------------------------------------------------------
# raw coordinate vectors of group-part elements


def to_gvec(a: Algebra, x) -> tuple:
    """Flat rational vector of a group-part element."""
    if a.is_leaf:
        return x
    first, second = x
    return to_gvec(a.x, first) + to_gvec(a.y, second[1])


def from_gvec(a: Algebra, vec: tuple):
    """Group-part element from a flat vector (validated)."""
    el = _from_gvec_raw(a, vec)
    if not in_group_part(a, el):
        raise InvalidElement("vector outside the group part")
    return el


def _from_gvec_raw(a: Algebra, vec: tuple):
    if a.is_leaf:
        if len(vec) != a.group.rank:
            raise InvalidElement("vector arity %d, expected %d" % (len(vec), a.group.rank))
        return vec
    xlen = a.xlen
    return (_from_gvec_raw(a.x, vec[:xlen]), mid(_from_gvec_raw(a.y, vec[xlen:])))


def partial_vec(a: Algebra, x) -> tuple:
    """Raw group coordinates of x down to its first marker.

    Group-part elements yield their full vector; an element whose second
    slot is a marker at depth k yields the length-k prefix that fixes its
    reduction class at every level above the marker.
    """
    if a.is_leaf:
        return x
    first, second = x
    if is_mid(second):
        return to_gvec(a.x, first) + partial_vec(a.y, second[1])
    return partial_vec(a.x, first)


def elem_from_prefix(a: Algebra, h: tuple):
    """Canonical element with group prefix h, markers below.

    A full-length h gives a group-part element.  Shorter prefixes are
    completed with the family's default marker: bottom for 'tb' nodes,
    top for 't' nodes.  Coordinates determined by a graph restriction and
    pinned coordinates must match, else InvalidElement.
    """
    if a.is_leaf:
        if len(h) != a.group.rank:
            raise InvalidElement("prefix arity %d, expected %d" % (len(h), a.group.rank))
        if not g_member(a.group, h):
            raise InvalidElement("prefix is not a group element")
        return h
    xlen = a.xlen
    filler = BOT if a.family == "tb" else TOP
    if len(h) <= xlen:
        first = elem_from_prefix(a.x, h) if len(h) < xlen else from_gvec(a.x, h)
        return (first, filler)
    first = from_gvec(a.x, h[:xlen])
    rest = elem_from_prefix(a.y, h[xlen:])
    el = (first, mid(rest))
    if not validate_elem(a, el):
        raise InvalidElement("prefix violates a column restriction")
    return el


# ---------------------------------------------------------------------------
# order


def cmp_elems(a: Algebra, p, q) -> int:
    if a.is_leaf:
        return kn.vcmp(p, q)
    c = cmp_elems(a.x, p[0], q[0])
    if c != 0:
        return c
    sp, sq = p[1], q[1]
    rp = 0 if sp == BOT else 2 if sp == TOP else 1
    rq = 0 if sq == BOT else 2 if sq == TOP else 1
    if rp != rq:
        return -1 if rp < rq else 1
    if rp == 1:
        return cmp_elems(a.y, sp[1], sq[1])
    return 0


def le(a: Algebra, p, q) -> bool:
    return cmp_elems(a, p, q) <= 0


def lt(a: Algebra, p, q) -> bool:
    return cmp_elems(a, p, q) < 0


# ---------------------------------------------------------------------------
# monoid, involution, residual


def unit(a: Algebra):
    if a.is_leaf:
        return kn.vzero(a.group.rank)
    return (unit(a.x), mid(unit(a.y)))


def fconst(a: Algebra):
    """Falsity constant; equals the unit in these odd chains."""
    return unit(a)


def mul(a: Algebra, p, q):
    if a.is_leaf:
        return kn.vadd(p, q)
    first = mul(a.x, p[0], q[0])
    sp, sq = p[1], q[1]
    if a.family == "tb":
        if sp == BOT or sq == BOT:
            return (first, BOT)
        if sp == TOP or sq == TOP:
            return (first, TOP)
    else:
        if sp == TOP or sq == TOP:
            return (first, TOP)
    return (first, mid(mul(a.y, sp[1], sq[1])))


def comp(a: Algebra, p):
    if a.is_leaf:
        return kn.vneg(p)
    first, second = p
    nf = comp(a.x, first)
    if a.family == "tb":
        if not zset_member(a, first):
            return (nf, BOT)
        if second == TOP:
            return (nf, BOT)
        if second == BOT:
            return (nf, TOP)
        return (nf, mid(comp(a.y, second[1])))
    if second == TOP:
        if in_group_part(a.x, first):
            below = x_down(a.x, nf)
            if below == nf:
                raise StructuralMismatch("group part of the child is not discrete")
            return (below, TOP)
        return (nf, TOP)
    return (nf, mid(comp(a.y, second[1])))


def res(a: Algebra, p, q):
    """Residual, computed through the involution."""
    return comp(a, mul(a, p, comp(a, q)))


def tau(a: Algebra, p):
    """Local unit res(x, x); detects how far x is from invertible."""
    return res(a, p, p)


def is_invertible(a: Algebra, p) -> bool:
    return mul(a, p, comp(a, p)) == unit(a)


# ---------------------------------------------------------------------------
# middle-column slices
#
# The middle columns over a fixed first coordinate form one "slice":
# the whole universe of Y for plain nodes, a coset pattern cut out by H
# for sublex nodes.  Cover steps inside a slice drive cover steps of the
# algebra.


def slice_member(a: Algebra, first, yv) -> bool:
    if not a.is_sublex:
        return validate_elem(a.y, yv)
    if not g_member(a.y.group, yv):
        return False
    h = a.h
    if isinstance(h, FullH):
        return True
    if isinstance(h, ProdH):
        return constr_ok(h.ypart, yv)
    return yv[0] == kn.rmul(h.c, to_gvec(a.x, first)[-1])


def _ypart_constraints(a: Algebra):
    """Per-coordinate constraints of sublex slices over the Y leaf."""
    h = a.h
    rank = a.y.group.rank
    if isinstance(h, ProdH):
        return h.ypart
    if isinstance(h, GraphH):
        return (("pinned",),)  # determined by the first side
    return (FULL,) * rank


def slice_step_down(a: Algebra, first, yv):
    """Predecessor of yv inside the slice over first, or None."""
    if not a.is_sublex:
        below = x_down(a.y, yv)
        return None if below == yv else below
    step = _slice_step(a)
    if step is None:
        return None
    i, m = step
    out = list(yv)
    out[i] = kn.rsub(out[i], m)
    return tuple(out)


def slice_step_up(a: Algebra, first, yv):
    if not a.is_sublex:
        above = x_up(a.y, yv)
        return None if above == yv else above
    step = _slice_step(a)
    if step is None:
        return None
    i, m = step
    out = list(yv)
    out[i] = kn.radd(out[i], m)
    return tuple(out)


def _slice_step(a: Algebra):
    """(coordinate, step) generating covers of a sublex slice, or None."""
    cons = _ypart_constraints(a)
    kinds = a.y.group.kinds
    for i in range(len(cons) - 1, -1, -1):
        con = cons[i]
        if con == TRIV or con[0] == "pinned":
            continue
        if con[0] == "idx":
            return (i, kn.rmake(con[1]))
        return (i, kn.rmake(1)) if kinds[i] == "Z" else None
    return None


def slice_min(a: Algebra, first):
    """Least element of the slice over first, or None."""
    if not a.is_sublex:
        return universe_min(a.y)
    return _slice_pinned_value(a, first)


def slice_max(a: Algebra, first):
    if not a.is_sublex:
        return universe_max(a.y)
    return _slice_pinned_value(a, first)


def _slice_pinned_value(a: Algebra, first):
    """A sublex slice is bounded only when every coordinate is pinned."""
    cons = _ypart_constraints(a)
    if any(c != TRIV and c[0] != "pinned" for c in cons):
        return None
    out = []
    for c in cons:
        if c == TRIV:
            out.append(kn.ZERO)
        else:
            out.append(kn.rmul(a.h.c, to_gvec(a.x, first)[-1]))
    return tuple(out)


# ---------------------------------------------------------------------------
# covers and universe bounds


def universe_min(a: Algebra):
    """Least element of the universe, or None when unbounded below."""
    if a.is_leaf:
        return () if a.group.rank == 0 else None
    xmin = universe_min(a.x)
    if xmin is None:
        return None
    if a.family == "tb":
        return (xmin, BOT)
    if mid_capable(a, xmin):
        m = slice_min(a, xmin)
        return None if m is None else (xmin, mid(m))
    return (xmin, TOP)


def universe_max(a: Algebra):
    if a.is_leaf:
        return () if a.group.rank == 0 else None
    xmax = universe_max(a.x)
    if xmax is None:
        return None
    if a.family == "t":
        return (xmax, TOP)
    return (xmax, TOP) if zset_member(a, xmax) else (xmax, BOT)


def _column_max(a: Algebra, first):
    """Greatest element of the marker column over first ('tb' only)."""
    return (first, TOP) if zset_member(a, first) else (first, BOT)


def x_down(a: Algebra, p):
    """Greatest element strictly below p, or p itself when none exists."""
    if a.is_leaf:
        k = a.group.kinds
        if k and k[-1] == "Z":
            return p[:-1] + (kn.rsub(p[-1], kn.ONE),)
        return p
    first, second = p
    if is_mid(second):
        yv = second[1]
        below = slice_step_down(a, first, yv)
        if below is not None:
            return (first, mid(below))
        if slice_min(a, first) == yv:
            if a.family == "tb":
                return (first, BOT)
            xd = x_down(a.x, first)
            return (xd, TOP) if xd != first else p
        return p
    if second == TOP:
        if mid_capable(a, first):
            m = slice_max(a, first)
            return p if m is None else (first, mid(m))
        if a.family == "tb":
            return (first, BOT)
        xd = x_down(a.x, first)
        return (xd, TOP) if xd != first else p
    # second == BOT
    xd = x_down(a.x, first)
    return _column_max(a, xd) if xd != first else p


def x_up(a: Algebra, p):
    """Least element strictly above p, or p itself when none exists."""
    if a.is_leaf:
        k = a.group.kinds
        if k and k[-1] == "Z":
            return p[:-1] + (kn.radd(p[-1], kn.ONE),)
        return p
    first, second = p
    if is_mid(second):
        yv = second[1]
        above = slice_step_up(a, first, yv)
        if above is not None:
            return (first, mid(above))
        if slice_max(a, first) == yv:
            return (first, TOP)
        return p
    if second == BOT:
        if mid_capable(a, first):
            m = slice_min(a, first)
            return p if m is None else (first, mid(m))
        if zset_member(a, first):
            return (first, TOP)
        xu = x_up(a.x, first)
        return (xu, BOT) if xu != first else p
    # second == TOP
    xu = x_up(a.x, first)
    if xu == first:
        return p
    if a.family == "tb":
        return (xu, BOT)
    if mid_capable(a, xu):
        m = slice_min(a, xu)
        return p if m is None else (xu, mid(m))
    return (xu, TOP)


# ---------------------------------------------------------------------------
# idempotents


def positive_idempotents(a: Algebra):
    """All idempotents >= unit, ascending.  One per tree level plus one
    per group leaf; each candidate is verified by multiplication."""
    out = _pos_idems(a)
    u = unit(a)
    prev = None
    for e in out:
        if mul(a, e, e) != e or lt(a, e, u):
            raise StructuralMismatch("bad idempotent candidate")
        if prev is not None and not lt(a, prev, e):
            raise StructuralMismatch("idempotents out of order")
        prev = e
    return out


def _pos_idems(a: Algebra):
    if a.is_leaf:
        return [unit(a)]
    tx = unit(a.x)
    out = [(tx, mid(e)) for e in _pos_idems(a.y)]
    if a.family == "t":
        out.extend((e, TOP) for e in _pos_idems(a.x))
    else:
        out.append((tx, TOP))
        out.extend((e, BOT) for e in _pos_idems(a.x) if e != tx)
    return out


# ---------------------------------------------------------------------------
# random elements


def sample_rat(rng, kind: str, magnitude: int, denominator: int):
    n = rng.randint(-magnitude, magnitude)
    if kind == "Z":
        return kn.rmake(n)
    return kn.rmake(n, rng.randint(1, denominator))


def sample_gvec(a: Algebra, constraints, rng, magnitude: int, denominator: int):
    """Raw coordinate vector inside a constrained group-part set."""
    amb = a._structure.ambient
    vec = []
    for j, con in enumerate(constraints):
        if con == TRIV:
            vec.append(kn.ZERO)
        elif con == FULL:
            vec.append(sample_rat(rng, amb[j], magnitude, denominator))
        elif con[0] == "idx":
            vec.append(kn.rmake(con[1] * rng.randint(-magnitude, magnitude)))
        else:  # graph
            vec.append(kn.rmul(con[1], vec[con[2]]))
    return tuple(vec)


def sample_elem(a: Algebra, rng, magnitude: int = 6, denominator: int = 8,
                marker_p: float = 0.25):
    """Random valid element; markers injected with probability marker_p
    per level, group-part directions otherwise."""
    if a.is_leaf:
        return tuple(sample_rat(rng, k, magnitude, denominator)
                     for k in a.group.kinds)
    s = a._structure
    roll = rng.random()
    if roll < marker_p:
        if a.family == "tb" and rng.random() < 0.5:
            first = sample_elem(a.x, rng, magnitude, denominator, marker_p)
            return (first, BOT)
        # a top column: 'tb' needs the first coordinate inside the top set
        if a.family == "tb":
            vec = sample_gvec(a.x, s.zconstr, rng, magnitude, denominator)
            return (_from_gvec_raw(a.x, vec), TOP)
        first = sample_elem(a.x, rng, magnitude, denominator, marker_p)
        return (first, TOP)
    first = _from_gvec_raw(
        a.x, sample_gvec(a.x, s.vconstr, rng, magnitude, denominator))
    if not a.is_sublex:
        return (first, mid(sample_elem(a.y, rng, magnitude, denominator, marker_p)))
    cons = list(_ypart_constraints(a))
    yv = []
    for j, con in enumerate(cons):
        if con == TRIV:
            yv.append(kn.ZERO)
        elif con == FULL:
            yv.append(sample_rat(rng, a.y.group.kinds[j], magnitude, denominator))
        elif con[0] == "idx":
            yv.append(kn.rmake(con[1] * rng.randint(-magnitude, magnitude)))
        else:  # pinned by a graph: value set by the first side
            yv.append(kn.rmul(a.h.c, to_gvec(a.x, first)[-1]))
    return (first, mid(tuple(yv)))


# ---------------------------------------------------------------------------
# discreteness of the group part (build precondition for 't' nodes)


def discretely_embedded(a: Algebra) -> bool:
    """True when every group-part element has covers inside the group part.

    Structural test; 't' builders additionally sample-check it.
    """
    if a.is_leaf:
        k = a.group.kinds
        return bool(k) and k[-1] == "Z"
    if not a.is_sublex:
        return discretely_embedded(a.y)
    return _slice_step(a) is not None
