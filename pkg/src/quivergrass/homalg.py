"""Homological calculus for type A quivers.

Hom dimensions are grounded in exact linear algebra: the dimension of the
space of intertwiners between two explicit representations.  A cached table
of Hom dimensions between interval modules serves as the fast path for
class-level computations; it is validated entrywise at build time (all
entries 0 or 1, identity on the diagonal).  Ext dimensions come from the
hereditary identity  dim Hom - dim Ext = <dim M, dim N>  with the Euler form
of the quiver.  The Auslander-Reiten translate acts on dimension vectors of
non-projectives as the Coxeter transform built from the Cartan matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .linalg import Mat, column_space, left_nullspace, nullspace, rank, solve
from .quiver import (
    ExplicitRep,
    InternalCheckError,
    Interval,
    RepClass,
    TypeAQuiver,
    explicit_of,
    injective_intervals,
    intervals_of,
    is_projective,
    projective_intervals,
    vec_add,
)


def euler_form(q: TypeAQuiver, d: tuple[int, ...], e: tuple[int, ...]) -> int:
    """<d, e> = sum d_i e_i - sum over arrows s->t of d_s e_t."""
    if len(d) != q.n or len(e) != q.n:
        raise ValueError("dimension vector length mismatch")
    total = sum(x * y for x, y in zip(d, e))
    for k in range(q.n - 1):
        s, t = q.edge(k)
        total -= d[s - 1] * e[t - 1]
    return total


def _intertwiner_matrix(f: ExplicitRep, g: ExplicitRep) -> tuple[Mat, tuple[int, ...]]:
    """Coefficient matrix of the intertwining equations B phi_s = phi_t A.

    Unknowns are the entries of the per-vertex matrices phi_v (shape
    g_v x f_v), flattened row-major vertex by vertex; returns the matrix and
    the per-vertex offsets.
    """
    q = f.quiver
    offsets = []
    total = 0
    for v in range(q.n):
        offsets.append(total)
        total += g.dims[v] * f.dims[v]
    rows: list[list[Fraction]] = []
    zero = Fraction(0)
    for k in range(q.n - 1):
        s, t = q.edge(k)
        a = f.mats[k]
        b = g.mats[k]
        fs, ft = f.dims[s - 1], f.dims[t - 1]
        gs, gt = g.dims[s - 1], g.dims[t - 1]
        for i in range(gt):
            for j in range(fs):
                row = [zero] * total
                for m in range(gs):
                    row[offsets[s - 1] + m * fs + j] += b.rows[i][m]
                for m in range(ft):
                    row[offsets[t - 1] + i * ft + m] -= a.rows[m][j]
                rows.append(row)
    return Mat.from_rows(rows, ncols=total), tuple(offsets)


def hom_dim(f: ExplicitRep, g: ExplicitRep) -> int:
    """dim Hom(f, g), by exact rank of the intertwining system."""
    if f.quiver != g.quiver:
        raise ValueError("representations live on different quivers")
    system, _ = _intertwiner_matrix(f, g)
    return system.ncols - rank(system)


@dataclass(frozen=True)
class ExplicitHom:
    source: ExplicitRep
    target: ExplicitRep
    mats: tuple[Mat, ...]

    def validate(self) -> None:
        q = self.source.quiver
        for v in range(q.n):
            m = self.mats[v]
            if (m.nrows, m.ncols) != (self.target.dims[v], self.source.dims[v]):
                raise ValueError(f"vertex {v + 1}: bad shape {m.nrows}x{m.ncols}")
        for k in range(q.n - 1):
            s, t = q.edge(k)
            lhs = self.target.mats[k].mul(self.mats[s - 1])
            rhs = self.mats[t - 1].mul(self.source.mats[k])
            if lhs != rhs:
                raise ValueError(f"intertwining fails on edge {k}")


def hom_basis(f: ExplicitRep, g: ExplicitRep) -> tuple[ExplicitHom, ...]:
    """A basis of the intertwiner space, exact and deterministic."""
    if f.quiver != g.quiver:
        raise ValueError("representations live on different quivers")
    q = f.quiver
    system, offsets = _intertwiner_matrix(f, g)
    kernel = nullspace(system)
    out = []
    for j in range(kernel.ncols):
        vec = kernel.col(j)
        mats = []
        for v in range(q.n):
            gv, fv = g.dims[v], f.dims[v]
            base = offsets[v]
            mats.append(Mat.from_rows(
                [[vec[base + i * fv + jj] for jj in range(fv)] for i in range(gv)],
                ncols=fv,
            ))
        hom = ExplicitHom(f, g, tuple(mats))
        hom.validate()
        out.append(hom)
    return tuple(out)


@cache
def hom_table(q: TypeAQuiver) -> tuple[tuple[int, ...], ...]:
    """Hom dimensions between interval modules, validated at build time."""
    intervals = intervals_of(q)
    table = []
    for u in intervals:
        row = []
        for v in intervals:
            h = hom_dim(explicit_of(q, RepClass(((u, 1),))), explicit_of(q, RepClass(((v, 1),))))
            if h not in (0, 1):
                raise InternalCheckError(f"[{u},{v}] = {h}, expected 0 or 1")
            row.append(h)
        table.append(tuple(row))
    for i in range(len(intervals)):
        if table[i][i] != 1:
            raise InternalCheckError(f"[{intervals[i]},{intervals[i]}] != 1")
    return tuple(table)


@cache
def _interval_index(q: TypeAQuiver) -> dict[Interval, int]:
    return {u: i for i, u in enumerate(intervals_of(q))}


@cache
def hom_vector(q: TypeAQuiver, m: RepClass) -> tuple[int, ...]:
    """[U, m] for every interval U, in the canonical interval order."""
    table = hom_table(q)
    idx = _interval_index(q)
    out = [0] * len(table)
    for v, k in m.pairs:
        col = idx[v]
        for i in range(len(table)):
            out[i] += k * table[i][col]
    return tuple(out)


def hom_dim_classes(q: TypeAQuiver, m: RepClass, n: RepClass) -> int:
    """dim Hom(m, n) summed bilinearly over summands via the interval table."""
    hv = hom_vector(q, n)
    idx = _interval_index(q)
    return sum(k * hv[idx[u]] for u, k in m.pairs)


def ext_dim(q: TypeAQuiver, m: RepClass, n: RepClass) -> int:
    """dim Ext^1(m, n) = dim Hom(m, n) - <dim m, dim n>."""
    value = hom_dim_classes(q, m, n) - euler_form(q, m.dim(q.n), n.dim(q.n))
    if value < 0:
        raise InternalCheckError(f"negative Ext dimension for ({m}, {n})")
    return value


@cache
def ext_intervals(q: TypeAQuiver, u: Interval, v: Interval) -> int:
    return ext_dim(q, RepClass(((u, 1),)), RepClass(((v, 1),)))


def _neg(m: Mat) -> Mat:
    return Mat(m.nrows, m.ncols, tuple(tuple(-x for x in row) for row in m.rows))


def _as_interval(vec: tuple[Fraction, ...]) -> Interval | None:
    """The interval whose indicator is vec, or None if vec is not one."""
    values = []
    for x in vec:
        if x.denominator != 1 or x.numerator not in (0, 1):
            return None
        values.append(int(x))
    support = [i + 1 for i, x in enumerate(values) if x == 1]
    if not support or support != list(range(support[0], support[-1] + 1)):
        return None
    return Interval(support[0], support[-1])


@cache
def _tau_maps(q: TypeAQuiver) -> tuple[dict[Interval, Interval], dict[Interval, Interval]]:
    """Forward and inverse translate tables from the Coxeter transform.

    The convention (Cartan matrix vs its transpose) is fixed by requiring
    that the transform of dim U is an interval indicator exactly when U is
    not projective; the surviving convention must also biject the
    non-projectives onto the non-injectives.
    """
    projectives = projective_intervals(q)
    cartan = Mat.from_rows(
        [[projectives[i].indicator(q.n)[v] for i in range(q.n)] for v in range(q.n)],
        ncols=q.n,
    )
    cartan_inv = solve(cartan, Mat.identity(q.n))
    first = _neg(cartan.transpose().mul(cartan_inv))
    for phi in (first, first.transpose()):
        forward: dict[Interval, Interval] = {}
        ok = True
        for u in intervals_of(q):
            image = phi.mul(Mat.from_rows([[x] for x in u.indicator(q.n)], ncols=1))
            w = _as_interval(image.col(0))
            if is_projective(q, u):
                if w is not None:
                    ok = False
                    break
            else:
                if w is None:
                    ok = False
                    break
                forward[u] = w
        if not ok:
            continue
        non_injectives = set(intervals_of(q)) - set(injective_intervals(q))
        if set(forward.values()) != non_injectives or len(set(forward.values())) != len(forward):
            continue
        inverse = {w: u for u, w in forward.items()}
        return forward, inverse
    raise InternalCheckError("no Coxeter convention yields a valid translate")


def tau(q: TypeAQuiver, u: Interval, direction: str = "forward") -> Interval | None:
    """Auslander-Reiten translate of an interval module.

    Forward: None exactly on projectives; inverse: None exactly on
    injectives.
    """
    forward, inverse = _tau_maps(q)
    if direction == "forward":
        return forward.get(u)
    if direction == "inverse":
        return inverse.get(u)
    raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")


def tau_class(q: TypeAQuiver, m: RepClass, direction: str = "forward") -> RepClass:
    """Translate applied summandwise, dropping the projectives (resp. injectives)."""
    pairs = []
    for u, k in m.pairs:
        w = tau(q, u, direction)
        if w is not None:
            pairs.append((w, k))
    return RepClass.from_pairs(pairs)


def iso_identify(f: ExplicitRep) -> RepClass:
    """The multiset of intervals with the same Hom counts as f.

    Solves the interval-indexed linear system [U, m] = [U, f] for the
    multiplicities; a finite-type class is determined by these counts.
    """
    q = f.quiver
    intervals = intervals_of(q)
    table = hom_table(q)
    counts = [hom_dim(explicit_of(q, RepClass(((u, 1),))), f) for u in intervals]
    a = Mat.from_rows(table, ncols=len(intervals))
    b = Mat.from_rows([[c] for c in counts], ncols=1)
    try:
        x = solve(a, b)
    except ValueError as exc:  # includes InconsistentSystemError
        raise ValueError(f"Hom counts do not match any class: {exc}") from exc
    pairs = []
    for i, u in enumerate(intervals):
        value = x.rows[i][0]
        if value.denominator != 1 or value < 0:
            raise ValueError(f"multiplicity of {u} solves to {value}; input is not a valid representation")
        if value:
            pairs.append((u, int(value)))
    return RepClass(tuple(pairs))


def subquotient_class(h: ExplicitHom, which: str) -> RepClass:
    """Isomorphism class of the kernel, image, or cokernel of a homomorphism."""
    h.validate()
    q = h.source.quiver
    if which == "kernel":
        bases = [nullspace(m) for m in h.mats]
        ambient = h.source
    elif which == "image":
        bases = [column_space(m) for m in h.mats]
        ambient = h.target
    elif which == "cokernel":
        projections = [left_nullspace(m) for m in h.mats]
        dims = tuple(p.nrows for p in projections)
        mats = []
        for k in range(q.n - 1):
            s, t = q.edge(k)
            rhs = projections[t - 1].mul(h.target.mats[k])
            x_t = solve(projections[s - 1].transpose(), rhs.transpose())
            mats.append(x_t.transpose())
        return iso_identify(ExplicitRep(q, dims, tuple(mats)))
    else:
        raise ValueError(f"which must be kernel/image/cokernel, got {which!r}")
    dims = tuple(b.ncols for b in bases)
    mats = []
    for k in range(q.n - 1):
        s, t = q.edge(k)
        mats.append(solve(bases[t - 1], ambient.mats[k].mul(bases[s - 1])))
    return iso_identify(ExplicitRep(q, dims, tuple(mats)))


def _coefficient_patterns(k: int, max_level: int = 3):
    """Deterministic sweep of integer coefficient vectors of length k."""
    for level in range(1, max_level + 1):
        for coeffs in itertools.product(range(-level, level + 1), repeat=k):
            if not any(coeffs):
                continue
            if max(abs(c) for c in coeffs) != level:
                continue
            yield coeffs


def _combine_homs(basis: tuple[ExplicitHom, ...], coeffs: tuple[int, ...]) -> ExplicitHom:
    first = basis[0]
    q = first.source.quiver
    mats = []
    for v in range(q.n):
        rows = [
            [sum(c * h.mats[v].rows[i][j] for c, h in zip(coeffs, basis))
             for j in range(first.source.dims[v])]
            for i in range(first.target.dims[v])
        ]
        mats.append(Mat.from_rows(rows, ncols=first.source.dims[v]))
    return ExplicitHom(first.source, first.target, tuple(mats))


def _is_injective_hom(h: ExplicitHom) -> bool:
    return all(rank(m) == m.ncols for m in h.mats)


@cache
def middle_term(q: TypeAQuiver, x1: Interval, s1: Interval) -> RepClass:
    """Middle term of the non-split extension of s1 by x1.

    Requires dim Ext^1(s1, x1) = 1; the result is the unique class Y,
    different from x1 + s1, admitting an embedding of x1 with cokernel s1.
    Found by scanning all classes of the right dimension and testing
    embeddings over a deterministic coefficient sweep.
    """
    from .quiver import enumerate_rep_classes  # local import keeps module init light

    cls_x1 = RepClass(((x1, 1),))
    cls_s1 = RepClass(((s1, 1),))
    if ext_dim(q, cls_s1, cls_x1) != 1:
        raise ValueError(f"Ext^1({s1}, {x1}) must be one-dimensional")
    split = cls_x1.union(cls_s1)
    target_dim = vec_add(x1.indicator(q.n), s1.indicator(q.n))
    split_hv = hom_vector(q, split)
    explicit_x1 = explicit_of(q, cls_x1)
    matches = []
    for candidate in enumerate_rep_classes(q, target_dim):
        if candidate == split:
            continue
        hv = hom_vector(q, candidate)
        # a middle term always degenerates to the split sum
        if not all(a <= b for a, b in zip(hv, split_hv)):
            continue
        basis = hom_basis(explicit_x1, explicit_of(q, candidate))
        if not basis:
            continue
        for coeffs in _coefficient_patterns(len(basis)):
            h = _combine_homs(basis, coeffs)
            if not _is_injective_hom(h):
                continue
            if subquotient_class(h, "cokernel") == cls_s1:
                matches.append(candidate)
                break
    if len(matches) != 1:
        raise InternalCheckError(
            f"expected exactly one non-split middle term for ({x1}, {s1}), found {len(matches)}"
        )
    return matches[0]
