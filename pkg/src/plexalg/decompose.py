"""Peeling a chain into a tower of sublex levels over a group.

One peeling step works at the least strictly positive idempotent u.  The
interval between the complement of u and u is a union of cosets of one
convex subgroup (the kernel of the step); every invertible element x gets
a canonical coset representative and a kernel offset, and the elements
with local unit at least u form the skeleton that remains after the step.
Two shapes occur:

* the complement of u is idempotent: the chain maps onto a quotient whose
  elements are the beta/gamma classes below (QuotientChain);
* it is not: the skeleton itself is a chain under the restricted
  operations (RestrictionChain).

Iterating the step yields a representation tree: a base group plus one
level record per step, each holding the step shape, the distinguished
subgroup, the kernel hull and the middle-column restriction.  rebuild
turns the tree back into a concrete algebra and alpha_embed realizes the
isomorphism elementwise.  Everything here consumes chains only through
the generic operations and the coordinate ladder, never by inspecting the
construction tree of the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernel as kn
from .build import build_sublex
from .chains import (
    BOT,
    TOP,
    Algebra,
    FullH,
    ProdH,
    cmp_elems,
    comp,
    elem_from_prefix,
    is_mid,
    ladder,
    leaf,
    mid,
    mul,
    partial_vec,
    positive_idempotents,
    sample_elem,
    unit,
    validate_elem,
    x_down,
    x_up,
)
from .errors import (
    InvalidElement,
    OnlyUnitIdempotent,
    PreconditionFailed,
    StructuralMismatch,
    WrongBranch,
)
from .groups import (
    FULL,
    TRIV,
    GroupDesc,
    TRIV_GROUP,
    divisible_hull,
    entry_leq,
    g_add,
    g_cmp,
    g_member,
    g_zero,
    idx,
    sub_is_full,
)

# classification of an element relative to the least positive idempotent
GROUP_BELOW = "GroupElemBelow"
TOP_C = "TopC"
BOT_C = "BotC"
TOP_PS = "TopPs"
BOT_PS = "BotPs"
G2 = "G2"
INTERIOR = "Interior"

CLASS_KINDS = (GROUP_BELOW, TOP_C, BOT_C, TOP_PS, BOT_PS, G2, INTERIOR)

# the two peeling steps at the least strictly positive idempotent
IDEM_BRANCH = "IdemBranch"
NONIDEM_BRANCH = "NonIdemBranch"


# ---------------------------------------------------------------------------
# class payloads


@dataclass(frozen=True)
class Component:
    """Coset of the step kernel, named by its canonical representative."""

    rep: object


@dataclass(frozen=True)
class Singleton:
    """One-element class of a non-invertible element."""

    x: object


@dataclass(frozen=True)
class Triple:
    """A component glued with its adjoined extremes."""

    rep: Component


@dataclass(frozen=True)
class GapPair:
    """A two-element covering pair of pseudo extremes, named by the upper."""

    upper: object


@dataclass(frozen=True)
class Plain:
    """Class of an element no gluing touches."""

    x: object


BetaClass = Component | Singleton
GammaClass = Triple | GapPair | Plain


@dataclass(frozen=True)
class RepLevel:
    """One peeling step: shape, distinguished subgroup, kernel hull and
    middle-column restriction, all over the rebuilt child coordinates."""

    iota: str  # 'I' (quotient step) or 'II' (restriction step)
    z: object  # constraint tuple, or 'gr' for restriction steps
    g: GroupDesc
    h: FullH | ProdH


@dataclass(frozen=True)
class RepTree:
    base: GroupDesc
    levels: tuple  # RepLevel, innermost step first

    def __repr__(self):  # pragma: no cover - debugging aid
        from .parsing import print_reptree

        return print_reptree(self)


# ---------------------------------------------------------------------------
# chain views
#
# The peeling step must run on its own output, so every operation below is
# phrased against a small view interface instead of Algebra directly.


class ChainView:
    """Shared derived operations; subclasses provide the primitives."""

    def le(self, p, q) -> bool:
        return self.cmp(p, q) <= 0

    def lt(self, p, q) -> bool:
        return self.cmp(p, q) < 0

    def res(self, p, q):
        return self.comp(self.mul(p, self.comp(q)))

    def tau(self, p):
        return self.res(p, p)

    @property
    def prefix(self) -> int:
        return self.entries[0].prefix


class BaseChain(ChainView):
    """View of a concrete algebra."""

    def __init__(self, a: Algebra):
        self.a = a
        self.ambient, self.entries = ladder(a)

    def describe(self) -> str:
        return repr(self.a)

    def mul(self, p, q):
        return mul(self.a, p, q)

    def comp(self, p):
        return comp(self.a, p)

    def cmp(self, p, q) -> int:
        return cmp_elems(self.a, p, q)

    def unit(self):
        return unit(self.a)

    def x_down(self, p):
        return x_down(self.a, p)

    def x_up(self, p):
        return x_up(self.a, p)

    def pos_idems(self) -> tuple:
        return tuple(positive_idempotents(self.a))

    def partial_vec(self, p) -> tuple:
        return partial_vec(self.a, p)

    def elem_from_prefix(self, h: tuple):
        return elem_from_prefix(self.a, h)

    def validate(self, p) -> bool:
        return validate_elem(self.a, p)

    def sample(self, rng):
        return sample_elem(self.a, rng)


def _as_view(a) -> ChainView:
    return a if isinstance(a, ChainView) else BaseChain(a)


# ---------------------------------------------------------------------------
# the least strictly positive idempotent and the branch decision


def smallest_pos_idem(a):
    view = _as_view(a)
    idems = view.pos_idems()
    if len(idems) == 1:
        raise OnlyUnitIdempotent(
            "%s has no idempotent above the unit" % view.describe())
    return idems[1]


def branch(a, u) -> str:
    """Which peeling step applies at u."""
    view = _as_view(a)
    nu = view.comp(u)
    return IDEM_BRANCH if view.mul(nu, nu) == nu else NONIDEM_BRANCH


def _check_least(view: ChainView, u):
    idems = view.pos_idems()
    if len(idems) == 1:
        raise OnlyUnitIdempotent(
            "%s has no idempotent above the unit" % view.describe())
    if u != idems[1]:
        raise PreconditionFailed(
            "the step idempotent must be the least strictly positive one")


# ---------------------------------------------------------------------------
# classification


def classify(a, u, x) -> str:
    view = _as_view(a)
    if isinstance(view, BaseChain) and not view.validate(x):
        raise InvalidElement("classify: not an element")
    return _classify(view, u, view.comp(u), x)


def _classify(view: ChainView, u, nu, x) -> str:
    if view.lt(view.tau(x), u):
        return GROUP_BELOW
    k = _top_kind(view, u, nu, x)
    if k is not None:
        return k
    k = _top_kind(view, u, nu, view.comp(x))
    if k == TOP_C:
        return BOT_C
    if k == TOP_PS:
        return BOT_PS
    return G2 if view.lt(view.x_down(x), x) else INTERIOR


def _top_kind(view: ChainView, u, nu, x):
    """TOP_C / TOP_PS when x closes a component or a gap from above,
    None when x does not absorb the complement of u from above."""
    d = view.mul(x, nu)
    if not view.lt(d, x):
        return None
    below = view.x_down(x)
    if below == x:
        return TOP_C  # the component below x is dense
    if view.lt(view.tau(below), u):
        # x covers an invertible element, so the component is discrete
        # and x must sit directly on top of it
        if view.mul(below, u) != x:
            raise StructuralMismatch(
                "cover of a top extreme is invertible but does not generate it")
        return TOP_C
    if below == d:
        return TOP_PS
    raise StructuralMismatch("top-like element with a foreign cover below")


# ---------------------------------------------------------------------------
# canonical coset representatives and kernel offsets


def _canonical_fill(view: ChainView, head: tuple):
    """Element whose coordinates extend head canonically: free and indexed
    kernel directions at zero, graph-tied ones at their forced value."""
    e0 = view.entries[0]
    if len(head) != view.entries[1].prefix:
        raise StructuralMismatch("representative head has the wrong arity")
    vec = list(head)
    for j in range(len(head), e0.prefix):
        con = e0.gconstr[j]
        if con != FULL and con[0] == "graph":
            vec.append(kn.rmul(con[1], vec[con[2]]))
        else:
            vec.append(kn.ZERO)
    return view.elem_from_prefix(tuple(vec))


def coset_rep(a, u, x):
    """Canonical representative of the kernel coset of an invertible x."""
    view = _as_view(a)
    if not view.lt(view.tau(x), u):
        raise PreconditionFailed("coset representatives exist below u only")
    head = view.partial_vec(x)[: view.entries[1].prefix]
    return _canonical_fill(view, head)


def kernel_offset(a, u, x) -> tuple:
    """Free kernel coordinates separating x from its representative."""
    view = _as_view(a)
    if not view.lt(view.tau(x), u):
        raise PreconditionFailed("kernel offsets exist below u only")
    vec = view.partial_vec(x)
    return tuple(vec[j] for j in _free_tail(view))


def _free_tail(view: ChainView):
    e0 = view.entries[0]
    p1 = view.entries[1].prefix
    return [j for j in range(p1, e0.prefix)
            if e0.gconstr[j] != TRIV and e0.gconstr[j][0] != "graph"]


def _rep_of_top(view: ChainView, x):
    return _canonical_fill(view, view.partial_vec(x))


# ---------------------------------------------------------------------------
# beta: components of invertibles, singletons elsewhere


def beta(a, u, x) -> BetaClass:
    view = _as_view(a)
    if view.lt(view.tau(x), u):
        return Component(coset_rep(view, u, x))
    return Singleton(x)


class BetaChain(ChainView):
    """Quotient by beta; operations act through class members."""

    def __init__(self, base, u):
        self.base = _as_view(base)
        _check_least(self.base, u)
        self.u = u
        self.nu = self.base.comp(u)

    def describe(self) -> str:
        return "component quotient of %s" % self.base.describe()

    def to_class(self, x) -> BetaClass:
        return beta(self.base, self.u, x)

    def member(self, c):
        return c.rep if isinstance(c, Component) else c.x

    def mul(self, p, q):
        return self.to_class(self.base.mul(self.member(p), self.member(q)))

    def comp(self, p):
        return self.to_class(self.base.comp(self.member(p)))

    def cmp(self, p, q) -> int:
        if p == q:
            return 0
        return self.base.cmp(self.member(p), self.member(q))

    def unit(self):
        return self.to_class(self.base.unit())

    def sample(self, rng):
        return self.to_class(self.base.sample(rng))


def beta_algebra(a, u) -> BetaChain:
    return BetaChain(a, u)


# ---------------------------------------------------------------------------
# gamma: glue extremes back onto their components


def gamma(a, u, b: BetaClass) -> GammaClass:
    view = _as_view(a)
    nu = view.comp(u)
    if view.mul(nu, nu) != nu:
        raise WrongBranch(
            "gluing classes need an idempotent complement of u")
    if isinstance(b, Component):
        return Triple(Component(b.rep))
    return _gamma_of_elem(view, u, nu, b.x)


def _gamma_of_elem(view: ChainView, u, nu, x) -> GammaClass:
    kind = _classify(view, u, nu, x)
    if kind == GROUP_BELOW:
        head = view.partial_vec(x)[: view.entries[1].prefix]
        return Triple(Component(_canonical_fill(view, head)))
    if kind == TOP_C:
        return Triple(Component(_rep_of_top(view, x)))
    if kind == BOT_C:
        rep_above = _rep_of_top(view, view.comp(x))
        return Triple(Component(_canonical_fill(
            view,
            view.partial_vec(view.comp(rep_above))[: view.entries[1].prefix])))
    if kind == TOP_PS:
        return GapPair(x)
    if kind == BOT_PS:
        return GapPair(view.x_up(x))
    return Plain(x)


class QuotientChain(ChainView):
    """Chain of gamma classes; operations act through class members."""

    def __init__(self, base, u):
        self.base = _as_view(base)
        _check_least(self.base, u)
        self.u = u
        self.nu = self.base.comp(u)
        if self.base.mul(self.nu, self.nu) != self.nu:
            raise WrongBranch(
                "the quotient step needs an idempotent complement of u")
        self.ambient = self.base.ambient
        self.entries = self.base.entries[1:]
        self._idems = None

    def describe(self) -> str:
        return "glued quotient of %s" % self.base.describe()

    def to_class(self, x) -> GammaClass:
        return _gamma_of_elem(self.base, self.u, self.nu, x)

    def member(self, c):
        if isinstance(c, Triple):
            return c.rep.rep
        if isinstance(c, GapPair):
            return c.upper
        return c.x

    def class_min(self, c):
        if isinstance(c, Triple):
            return self.base.mul(c.rep.rep, self.nu)
        if isinstance(c, GapPair):
            return self.base.x_down(c.upper)
        return c.x

    def class_max(self, c):
        if isinstance(c, Triple):
            return self.base.mul(c.rep.rep, self.u)
        if isinstance(c, GapPair):
            return c.upper
        return c.x

    def mul(self, p, q):
        return self.to_class(self.base.mul(self.member(p), self.member(q)))

    def comp(self, p):
        return self.to_class(self.base.comp(self.member(p)))

    def cmp(self, p, q) -> int:
        if p == q:
            return 0
        return self.base.cmp(self.member(p), self.member(q))

    def unit(self):
        return self.to_class(self.base.unit())

    def x_down(self, c):
        low = self.class_min(c)
        below = self.base.x_down(low)
        return c if below == low else self.to_class(below)

    def x_up(self, c):
        high = self.class_max(c)
        above = self.base.x_up(high)
        return c if above == high else self.to_class(above)

    def pos_idems(self) -> tuple:
        if self._idems is None:
            self._idems = tuple(
                self.to_class(e) for e in self.base.pos_idems()[1:])
        return self._idems

    def partial_vec(self, c) -> tuple:
        return self.base.partial_vec(self.member(c))[: self.prefix]

    def elem_from_prefix(self, h: tuple):
        return self.to_class(self.base.elem_from_prefix(h))

    def validate(self, c) -> bool:
        if not isinstance(c, (Triple, GapPair, Plain)):
            return False
        return self.to_class(self.member(c)) == c

    def sample(self, rng):
        return self.to_class(self.base.sample(rng))


def gamma_algebra(a, u) -> QuotientChain:
    return QuotientChain(a, u)


# ---------------------------------------------------------------------------
# the restriction to elements with local unit at least u


class RestrictionChain(ChainView):
    """Elements whose local unit is at least u, with u as the new unit."""

    def __init__(self, base, u):
        self.base = _as_view(base)
        _check_least(self.base, u)
        self.u = u
        self.nu = self.base.comp(u)
        if self.base.mul(self.nu, self.nu) == self.nu:
            raise WrongBranch(
                "the restriction step needs a non-idempotent complement of u")
        self.ambient = self.base.ambient
        self.entries = self.base.entries[1:]
        self._idems = None

    def describe(self) -> str:
        return "local-unit restriction of %s" % self.base.describe()

    def contains(self, x) -> bool:
        return self.base.le(self.u, self.base.tau(x))

    def mul(self, p, q):
        return self.base.mul(p, q)

    def comp(self, p):
        # uniform form of the two-case complement: top-like elements step
        # down inside their column first, everything else is fixed by *nu
        return self.base.comp(self.base.mul(p, self.nu))

    def cmp(self, p, q) -> int:
        return self.base.cmp(p, q)

    def unit(self):
        return self.u

    def x_down(self, p):
        d = self.base.mul(p, self.nu)
        if self.base.lt(d, p):
            return d
        below = self.base.x_down(p)
        if below != p and not self.contains(below):
            raise StructuralMismatch("cover below leaves the restriction")
        return below

    def x_up(self, p):
        cp = self.base.comp(p)
        d = self.base.mul(cp, self.nu)
        if self.base.lt(d, cp):
            return self.base.comp(d)
        above = self.base.x_up(p)
        if above != p and not self.contains(above):
            raise StructuralMismatch("cover above leaves the restriction")
        return above

    def pos_idems(self) -> tuple:
        if self._idems is None:
            self._idems = tuple(self.base.pos_idems()[1:])
        return self._idems

    def partial_vec(self, p) -> tuple:
        return self.base.partial_vec(p)

    def elem_from_prefix(self, h: tuple):
        x = self.base.elem_from_prefix(h)
        if not self.contains(x):
            raise InvalidElement("prefix lands outside the restriction")
        return x

    def validate(self, p) -> bool:
        return self.base.validate(p) and self.contains(p)

    def sample(self, rng):
        # multiplying by u projects any sample onto the restriction and
        # fixes elements already inside it
        return self.base.mul(self.base.sample(rng), self.u)


def tau_ge_u_algebra(a, u) -> RestrictionChain:
    return RestrictionChain(a, u)


# ---------------------------------------------------------------------------
# the closure that forgets one kernel


def phi_nucleus(a, u, x):
    """Least element above x that the peeling step cannot separate."""
    view = _as_view(a)
    nu = view.comp(u)
    return view.comp(view.mul(view.comp(view.mul(x, nu)), nu))


# ---------------------------------------------------------------------------
# representation trees


def _rebuilt_coords(entries, ambient):
    """Ambient indices kept by the rebuilt tower below a view, innermost
    group first, with the kinds of the rebuilt coordinates."""
    if any(c != FULL for c in entries[-1].gconstr):
        raise StructuralMismatch("innermost level with nontrivial constraints")
    idxs = list(range(entries[-1].prefix))
    kinds = [ambient[j] for j in idxs]
    for lev in range(len(entries) - 2, -1, -1):
        g = entries[lev].gconstr
        for j in range(entries[lev + 1].prefix, entries[lev].prefix):
            if g[j] == TRIV or g[j][0] == "graph":
                continue
            idxs.append(j)
            kinds.append("Q")  # kernel directions live in their hull
    return idxs, GroupDesc(tuple(kinds))


def _entry_eq(kind: str, p, q) -> bool:
    return entry_leq(kind, p, q) and entry_leq(kind, q, p)


def _level_record(view: ChainView, idem_branch: bool):
    """RepLevel of the current step plus the free kernel indices."""
    e0, e1 = view.entries[0], view.entries[1]
    g0 = e0.gconstr
    free = _free_tail(view)
    if free:
        gdesc = divisible_hull(
            GroupDesc(tuple(view.ambient[j] for j in free)))
    else:
        gdesc = TRIV_GROUP
    ypart = []
    for j in free:
        if g0[j] != FULL:
            ypart.append(g0[j])
        elif view.ambient[j] == "Z":
            ypart.append(idx(1))  # discrete direction inside its hull
        else:
            ypart.append(FULL)
    ypart = tuple(ypart)
    kept, child_desc = _rebuilt_coords(view.entries[1:], view.ambient)
    zpart = tuple(g0[j] for j in kept)
    if idem_branch:
        zsrc = e0.zconstr
        if zsrc is None:
            raise StructuralMismatch("quotient step without top-column data")
        z = tuple(zsrc[j] for j in kept)
        full_ok = all(
            _entry_eq(child_desc.kinds[i], zpart[i], z[i])
            for i in range(len(kept)))
    else:
        if e0.zconstr is not None:
            raise StructuralMismatch("restriction step with top-column data")
        z = "gr"
        full_ok = sub_is_full(child_desc, zpart)
    if full_ok and all(c == FULL for c in ypart):
        h = FullH()
    else:
        h = ProdH(zpart, ypart)
    level = RepLevel(iota="I" if idem_branch else "II", z=z, g=gdesc, h=h)
    return level, free


def _walk(view: ChainView):
    """(representation tree, rebuilt algebra, elementwise embedding)."""
    idems = view.pos_idems()
    if len(idems) != len(view.entries):
        raise StructuralMismatch(
            "idempotent count disagrees with the coordinate ladder")
    if len(idems) == 1:
        e0 = view.entries[0]
        if any(c != FULL for c in e0.gconstr):
            raise StructuralMismatch("group level with nontrivial constraints")
        desc = GroupDesc(tuple(view.ambient[: e0.prefix]))
        return RepTree(base=desc, levels=()), leaf(desc), view.partial_vec
    u = idems[1]
    nu = view.comp(u)
    idem_b = view.mul(nu, nu) == nu
    child = QuotientChain(view, u) if idem_b else RestrictionChain(view, u)
    tree, child_alg, child_fn = _walk(child)
    level, free = _level_record(view, idem_b)
    if idem_b:
        target = build_sublex("SLI", child_alg, leaf(level.g), level.h,
                              zsub=level.z)
    else:
        target = build_sublex("SLII", child_alg, leaf(level.g), level.h)

    def fn(x):
        if view.lt(view.tau(x), u):
            vec = view.partial_vec(x)
            offset = tuple(vec[j] for j in free)
            c = child.to_class(x) if idem_b else view.mul(x, u)
            return (child_fn(c), mid(offset))
        if idem_b:
            c = child.to_class(x)
            marker = TOP if view.lt(view.mul(x, nu), x) else BOT
            return (child_fn(c), marker)
        return (child_fn(x), TOP)

    return RepTree(base=tree.base, levels=tree.levels + (level,)), target, fn


def group_representation(a) -> RepTree:
    tree, _, _ = _walk(_as_view(a))
    return tree


def representation_embedding(a):
    """Full peel of an algebra.

    Returns (tree, rebuilt, fn) where rebuilt is the algebra assembled
    from the tree and fn maps elements of a onto it, composing the
    per-level embeddings."""
    return _walk(_as_view(a))


def rebuild(tree: RepTree) -> Algebra:
    node = leaf(tree.base)
    for level in tree.levels:
        if level.iota == "I":
            if level.z == "gr":
                raise PreconditionFailed(
                    "quotient levels need an explicit subgroup")
            node = build_sublex("SLI", node, leaf(level.g), level.h,
                                zsub=level.z)
        elif level.iota == "II":
            if level.z != "gr":
                raise PreconditionFailed(
                    "restriction levels take the whole child group")
            node = build_sublex("SLII", node, leaf(level.g), level.h)
        else:
            raise PreconditionFailed("level shape must be I or II")
    return node


@dataclass(frozen=True)
class AlphaEmbedding:
    """Elementwise isomorphism onto the rebuilt tower."""

    source: Algebra
    target: Algebra
    fn: object

    def __call__(self, x):
        return self.fn(x)


def alpha_embed(a: Algebra, u) -> AlphaEmbedding:
    view = _as_view(a)
    _check_least(view, u)
    _, target, fn = _walk(view)
    return AlphaEmbedding(source=view.a, target=target, fn=fn)


# ---------------------------------------------------------------------------
# flattening into a lex product of groups with adjoined bounds


@dataclass(frozen=True)
class LexMonoid:
    """Lex product of the base group with bound-adjoined kernel hulls.

    Elements are tuples (h, e_2, ..., e_n): h in the base group, each e_i
    either a vector of the i-th hull or one of the markers 'T', 'B'.
    Multiplication is slotwise with absorbing markers, order is
    lexicographic with B below every vector and T above.
    """

    base: GroupDesc
    parts: tuple  # GroupDesc per level

    def contains(self, p) -> bool:
        if len(p) != 1 + len(self.parts) or not g_member(self.base, p[0]):
            return False
        return all(
            e in (TOP, BOT) or g_member(g, e)
            for g, e in zip(self.parts, p[1:]))

    def unit(self):
        return (g_zero(self.base),) + tuple(g_zero(g) for g in self.parts)

    def mul(self, p, q):
        out = [g_add(self.base, p[0], q[0])]
        for g, e, f in zip(self.parts, p[1:], q[1:]):
            if BOT in (e, f):
                out.append(BOT)
            elif TOP in (e, f):
                out.append(TOP)
            else:
                out.append(g_add(g, e, f))
        return tuple(out)

    def cmp(self, p, q) -> int:
        c = g_cmp(self.base, p[0], q[0])
        if c:
            return c
        for g, e, f in zip(self.parts, p[1:], q[1:]):
            if e == f:
                continue
            re = 0 if e == BOT else 2 if e == TOP else 1
            rf = 0 if f == BOT else 2 if f == TOP else 1
            if re != rf:
                return -1 if re < rf else 1
            return g_cmp(g, e, f)
        return 0

    def describe(self) -> str:
        from .parsing import print_algebra

        names = [print_algebra(leaf(self.base))]
        names += ["%s^TB" % print_algebra(leaf(g)) for g in self.parts]
        return " lex ".join(names)


def _flatten_tower(levels: int, e):
    slots = []
    for _ in range(levels):
        e, second = e
        slots.append(second[1] if is_mid(second) else second)
    slots.reverse()
    return (e,) + tuple(slots)


def lex_embedding(a: Algebra):
    """(LexMonoid, map) embedding the chain for product and order only."""
    view = _as_view(a)
    tree, _, fn = _walk(view)
    monoid = LexMonoid(base=tree.base,
                       parts=tuple(level.g for level in tree.levels))
    depth = len(tree.levels)

    def emb(x):
        return _flatten_tower(depth, fn(x))

    return monoid, emb
