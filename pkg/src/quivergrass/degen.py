"""Degeneration order, minimal degenerations, and their Bongartz decompositions.

The degeneration order on classes of a fixed dimension vector is implemented
as the Hom order: m <= n iff [U, m] <= [U, n] for every interval U.  Minimal
degenerations are the covers of that poset.  Every cover decomposes as
m = Y1 + common, n = x1 + s1 + common with a non-split extension
0 -> x1 -> Y1 -> s1 -> 0, and common splits as X' + S' so that the sequence
0 -> x1 + X' -> m -> s1 + S' -> 0 generates its Ext space; the boundary
classes cut out the subspace pairs that fail to lift along the degeneration.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .homalg import (
    ext_dim,
    ext_intervals,
    hom_basis,
    hom_vector,
    middle_term,
    subquotient_class,
    tau,
    tau_class,
)
from .quiver import (
    InternalCheckError,
    Interval,
    RepClass,
    TypeAQuiver,
    enumerate_rep_classes,
    explicit_of,
    semisimple_class,
    vec_leq,
)


def hom_leq(q: TypeAQuiver, m: RepClass, n: RepClass) -> bool:
    """Hom order: every interval sees at most as many maps into m as into n."""
    if m.dim(q.n) != n.dim(q.n):
        raise ValueError("classes have different dimension vectors")
    return all(a <= b for a, b in zip(hom_vector(q, m), hom_vector(q, n)))


@dataclass(frozen=True)
class DegenPoset:
    quiver: TypeAQuiver
    d: tuple[int, ...]
    nodes: tuple[RepClass, ...]
    leq: tuple[tuple[bool, ...], ...]
    covers: tuple[tuple[RepClass, RepClass], ...]

    def index(self, m: RepClass) -> int:
        try:
            return self.nodes.index(m)
        except ValueError:
            raise ValueError(f"{m} has no summand decomposition of dimension {self.d}") from None

    def leq_pair(self, m: RepClass, n: RepClass) -> bool:
        return self.leq[self.index(m)][self.index(n)]

    def is_cover(self, m: RepClass, n: RepClass) -> bool:
        return (m, n) in self.covers


@cache
def degeneration_poset(q: TypeAQuiver, d: tuple[int, ...]) -> DegenPoset:
    """All classes of dimension d ordered by degeneration, with cover edges."""
    nodes = enumerate_rep_classes(q, d)
    vectors = [hom_vector(q, m) for m in nodes]
    if len(set(vectors)) != len(vectors):
        raise InternalCheckError("distinct classes share Hom counts; order is not antisymmetric")
    size = len(nodes)
    leq = tuple(
        tuple(all(a <= b for a, b in zip(vectors[i], vectors[j])) for j in range(size))
        for i in range(size)
    )
    covers = []
    for i in range(size):
        for j in range(size):
            if i == j or not leq[i][j]:
                continue
            if any(k not in (i, j) and leq[i][k] and leq[k][j] for k in range(size)):
                continue
            covers.append((nodes[i], nodes[j]))
    if size:
        top = [j for j in range(size) if all(leq[i][j] for i in range(size))]
        if len(top) != 1 or nodes[top[0]] != semisimple_class(q, d):
            raise InternalCheckError("semisimple class is not the unique maximum")
    return DegenPoset(q, d, nodes, leq, tuple(covers))


@dataclass(frozen=True)
class BongartzData:
    """Decomposition of a minimal degeneration m -> n.

    middle is the non-split extension of s1 by x1; common = x_rest + s_rest
    is the part shared by m and n.  x_ker = Ker(X -> tau S) and
    s_im = Im(tau^- X -> S) for X = x1 + x_rest, S = s1 + s_rest; s_quot is
    S / s_im.
    """

    quiver: TypeAQuiver
    x1: Interval
    s1: Interval
    middle: RepClass
    x_rest: RepClass
    s_rest: RepClass
    common: RepClass
    x_ker: RepClass
    s_im: RepClass
    s_quot: RepClass

    @property
    def m_class(self) -> RepClass:
        return self.middle.union(self.common)

    @property
    def n_class(self) -> RepClass:
        return RepClass.from_pairs(((self.x1, 1), (self.s1, 1))).union(self.common)

    @property
    def x_class(self) -> RepClass:
        return RepClass.from_pairs(((self.x1, 1),)).union(self.x_rest)

    @property
    def s_class(self) -> RepClass:
        return RepClass.from_pairs(((self.s1, 1),)).union(self.s_rest)


def _split_common(q: TypeAQuiver, common: RepClass, x1: Interval, s1: Interval) -> tuple[RepClass, RepClass]:
    """Split the shared summands into x_rest and s_rest.

    The split must satisfy: Ext(s1, x_rest) = Ext(x1, x_rest) = 0 and
    Ext(s_rest, s1) = Ext(s_rest, x1) = Ext(s_rest, x_rest) = 0, which makes
    0 -> x1 + x_rest -> m -> s1 + s_rest -> 0 generating.  All copies of one
    interval land on the same side (self-extensions vanish).  Deterministic:
    the first valid assignment in bitmask order wins, starting from
    everything on the x side.
    """
    classes = common.intervals()
    cls_x1 = RepClass(((x1, 1),))
    cls_s1 = RepClass(((s1, 1),))
    for mask in range(1 << len(classes)):
        s_side = [u for i, u in enumerate(classes) if mask >> i & 1]
        x_side = [u for i, u in enumerate(classes) if not mask >> i & 1]
        x_rest = RepClass.from_pairs((u, common.mult(u)) for u in x_side)
        s_rest = RepClass.from_pairs((u, common.mult(u)) for u in s_side)
        if ext_dim(q, cls_s1, x_rest):
            continue
        if ext_dim(q, cls_x1, x_rest):
            continue
        if ext_dim(q, s_rest, cls_s1):
            continue
        if ext_dim(q, s_rest, cls_x1):
            continue
        if ext_dim(q, s_rest, x_rest):
            continue
        return x_rest, s_rest
    raise InternalCheckError(f"no valid split of {common} around ({x1}, {s1})")


def _unique_hom(q: TypeAQuiver, src: RepClass, dst: RepClass):
    basis = hom_basis(explicit_of(q, src), explicit_of(q, dst))
    if len(basis) != 1:
        raise InternalCheckError(
            f"Hom({src}, {dst}) has dimension {len(basis)}, expected 1"
        )
    return basis[0]


@cache
def bongartz_data(q: TypeAQuiver, m: RepClass, n: RepClass) -> BongartzData:
    """Decompose a cover (m, n) of the degeneration poset."""
    d = m.dim(q.n)
    poset = degeneration_poset(q, d)
    if not poset.is_cover(m, n):
        raise ValueError(f"({m}, {n}) is not a cover of the degeneration poset")
    common = m.intersection(n)
    n_extra = n.difference(common)
    m_extra = m.difference(common)
    extras = n_extra.copies()
    if len(extras) != 2:
        raise InternalCheckError(f"cover has {len(extras)} new summands, expected 2")
    a, b = extras
    e_ab = ext_intervals(q, a, b)
    e_ba = ext_intervals(q, b, a)
    if (e_ab > 0) == (e_ba > 0):
        raise InternalCheckError(f"extensions between {a} and {b} are not one-directional")
    s1, x1 = (a, b) if e_ab else (b, a)
    if ext_intervals(q, s1, x1) != 1:
        raise InternalCheckError(f"Ext^1({s1}, {x1}) != 1 on a cover")
    y1 = middle_term(q, x1, s1)
    if y1 != m_extra:
        raise InternalCheckError(f"middle term {y1} does not match the new summands {m_extra} of m")
    x_rest, s_rest = _split_common(q, common, x1, s1)

    cls_x1 = RepClass(((x1, 1),))
    cls_s1 = RepClass(((s1, 1),))
    x_class = cls_x1.union(x_rest)
    s_class = cls_s1.union(s_rest)
    if ext_dim(q, s_class, x_class) != 1:
        raise InternalCheckError("generating condition fails after split")
    if ext_dim(q, cls_x1, x_rest) or ext_dim(q, s_rest, cls_s1):
        raise InternalCheckError("split violates the vanishing conditions")

    ts1 = tau(q, s1)
    if ts1 is None:
        raise InternalCheckError(f"{s1} is projective on a cover")
    x_boundary = subquotient_class(_unique_hom(q, cls_x1, RepClass(((ts1, 1),))), "kernel")
    x_ker = x_rest.union(x_boundary)

    tix1 = tau(q, x1, "inverse")
    if tix1 is None:
        raise InternalCheckError(f"{x1} is injective on a cover")
    hom_to_s1 = _unique_hom(q, RepClass(((tix1, 1),)), cls_s1)
    s_im = subquotient_class(hom_to_s1, "image")
    s_quot = subquotient_class(hom_to_s1, "cokernel").union(s_rest)
    if not vec_leq(s_im.dim(q.n), cls_s1.dim(q.n)):
        raise InternalCheckError("image class exceeds s1")

    return BongartzData(q, x1, s1, y1, x_rest, s_rest, common, x_ker, s_im, s_quot)


@cache
def boundary_check(bd: BongartzData) -> bool:
    """Re-verify the generating property and the boundary-class identities.

    The identities are recomputed wholesale: x_ker must equal the kernel of
    the unique map x1 + x_rest -> tau(s1 + s_rest), and s_im / s_quot the
    image and cokernel of the unique map tau^-(x1 + x_rest) -> s1 + s_rest.
    Raises InternalCheckError on any failure.
    """
    q = bd.quiver
    if bd.x_rest.union(bd.s_rest) != bd.common:
        raise InternalCheckError("x_rest + s_rest does not reassemble common")
    cls_x1 = RepClass(((bd.x1, 1),))
    cls_s1 = RepClass(((bd.s1, 1),))
    x_class, s_class = bd.x_class, bd.s_class
    if ext_dim(q, s_class, x_class) != 1:
        raise InternalCheckError("sequence is not generating")
    if ext_dim(q, cls_x1, bd.x_rest) != 0:
        raise InternalCheckError("Ext^1(x1, x_rest) != 0")
    if ext_dim(q, bd.s_rest, cls_s1) != 0:
        raise InternalCheckError("Ext^1(s_rest, s1) != 0")

    tau_s = tau_class(q, s_class)
    kernel = subquotient_class(_unique_hom(q, x_class, tau_s), "kernel")
    if kernel != bd.x_ker:
        raise InternalCheckError(f"Ker(X -> tau S) = {kernel}, stored {bd.x_ker}")

    tau_inv_x = tau_class(q, x_class, "inverse")
    into_s = _unique_hom(q, tau_inv_x, s_class)
    image = subquotient_class(into_s, "image")
    if image != bd.s_im:
        raise InternalCheckError(f"Im(tau^- X -> S) = {image}, stored {bd.s_im}")
    cokernel = subquotient_class(into_s, "cokernel")
    if cokernel != bd.s_quot:
        raise InternalCheckError(f"S / Im = {cokernel}, stored {bd.s_quot}")
    if not vec_leq(bd.s_im.dim(q.n), cls_s1.dim(q.n)):
        raise InternalCheckError("image class exceeds s1")
    return True
