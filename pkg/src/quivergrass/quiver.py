"""Type A quivers, interval modules, representation classes, explicit matrices.

A type A quiver is an orientation of the path graph on vertices 1..n; the
orientation is a string of flags, one per edge, 'F' for i -> i+1 and 'B' for
i+1 -> i.  Indecomposable representations are the interval modules M[a,b]
(one-dimensional on vertices a..b, identity on interior edges), so an
isomorphism class of representations is a multiset of intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterable

from .linalg import Mat

FORWARD = "F"
BACKWARD = "B"


class InternalCheckError(RuntimeError):
    """A runtime consistency assertion failed; never ignore these."""


@dataclass(frozen=True)
class TypeAQuiver:
    n: int
    orient: str = ""

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("quiver needs at least one vertex")
        if len(self.orient) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} orientation flags, got {len(self.orient)}")
        bad = next((c for c in self.orient if c not in (FORWARD, BACKWARD)), None)
        if bad is not None:
            raise ValueError(f"orientation flag must be F or B, got {bad!r}")

    def edge(self, k: int) -> tuple[int, int]:
        """(source, target) of the k-th edge (0-based), vertices 1-based."""
        if self.orient[k] == FORWARD:
            return (k + 1, k + 2)
        return (k + 2, k + 1)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.edge(k) for k in range(self.n - 1))

    def label(self) -> str:
        return f"A{self.n}:{self.orient}" if self.orient else f"A{self.n}"


@dataclass(frozen=True, order=True)
class Interval:
    a: int
    b: int

    def __post_init__(self) -> None:
        if not 1 <= self.a <= self.b:
            raise ValueError(f"bad interval [{self.a},{self.b}]")

    def contains(self, v: int) -> bool:
        return self.a <= v <= self.b

    def indicator(self, n: int) -> tuple[int, ...]:
        return tuple(1 if self.a <= v <= self.b else 0 for v in range(1, n + 1))

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"


@dataclass(frozen=True)
class RepClass:
    """Multiset of intervals; pairs is sorted with positive multiplicities."""

    pairs: tuple[tuple[Interval, int], ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Interval, int]]) -> "RepClass":
        acc: dict[Interval, int] = {}
        for u, k in pairs:
            if k < 0:
                raise ValueError("multiplicity must be non-negative")
            if k:
                acc[u] = acc.get(u, 0) + k
        return cls(tuple(sorted(acc.items())))

    @classmethod
    def from_copies(cls, copies: Iterable[Interval]) -> "RepClass":
        return cls.from_pairs((u, 1) for u in copies)

    @classmethod
    def empty(cls) -> "RepClass":
        return cls(())

    def copies(self) -> tuple[Interval, ...]:
        return tuple(u for u, k in self.pairs for _ in range(k))

    def mult(self, u: Interval) -> int:
        return next((k for v, k in self.pairs if v == u), 0)

    def intervals(self) -> tuple[Interval, ...]:
        return tuple(u for u, _ in self.pairs)

    def num_copies(self) -> int:
        return sum(k for _, k in self.pairs)

    def dim(self, n: int) -> tuple[int, ...]:
        d = [0] * n
        for u, k in self.pairs:
            for v in range(u.a, u.b + 1):
                d[v - 1] += k
        return tuple(d)

    def total_dim(self) -> int:
        return sum(k * (u.b - u.a + 1) for u, k in self.pairs)

    def is_semisimple(self) -> bool:
        return all(u.a == u.b for u, _ in self.pairs)

    def union(self, other: "RepClass") -> "RepClass":
        return RepClass.from_pairs(self.pairs + other.pairs)

    def difference(self, other: "RepClass") -> "RepClass":
        """Multiset difference; other must be contained in self."""
        acc = dict(self.pairs)
        for u, k in other.pairs:
            have = acc.get(u, 0)
            if have < k:
                raise ValueError(f"{other} is not a sub-multiset of {self}")
            if have == k:
                del acc[u]
            else:
                acc[u] = have - k
        return RepClass(tuple(sorted(acc.items())))

    def intersection(self, other: "RepClass") -> "RepClass":
        acc = []
        for u, k in self.pairs:
            j = min(k, other.mult(u))
            if j:
                acc.append((u, j))
        return RepClass(tuple(acc))

    def remove_one(self, u: Interval) -> "RepClass":
        return self.difference(RepClass(((u, 1),)))

    def text(self) -> str:
        terms = []
        for u, k in self.pairs:
            terms.append(str(u) if k == 1 else f"{u}x{k}")
        return ",".join(terms)

    def __str__(self) -> str:
        return self.text() or "0"


def intervals_of(q: TypeAQuiver) -> tuple[Interval, ...]:
    """All n(n+1)/2 intervals in lexicographic order of (a, b)."""
    return _intervals_of(q.n)


@cache
def _intervals_of(n: int) -> tuple[Interval, ...]:
    return tuple(Interval(a, b) for a in range(1, n + 1) for b in range(a, n + 1))


def dim_of(m: RepClass, n: int) -> tuple[int, ...]:
    """Dimension vector of the class on an n-vertex quiver."""
    return m.dim(n)


def vec_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) != len(b):
        raise ValueError("length mismatch")
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Componentwise difference; rejects any negative component."""
    if len(a) != len(b):
        raise ValueError("length mismatch")
    out = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in out):
        raise ValueError(f"negative component in {a} - {b}")
    return out


def try_vec_sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...] | None:
    """Like vec_sub but returns None when some component would go negative."""
    if len(a) != len(b):
        raise ValueError("length mismatch")
    out = tuple(x - y for x, y in zip(a, b))
    return None if any(x < 0 for x in out) else out


def vec_leq(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    if len(a) != len(b):
        raise ValueError("length mismatch")
    return all(x <= y for x, y in zip(a, b))


def vec_boxes(d: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All vectors 0 <= e <= d componentwise, in lexicographic order."""
    out: list[tuple[int, ...]] = [()]
    for bound in d:
        out = [v + (x,) for v in out for x in range(bound + 1)]
    return tuple(out)


@cache
def enumerate_rep_classes(q: TypeAQuiver, d: tuple[int, ...]) -> tuple[RepClass, ...]:
    """All multisets of intervals with total dimension vector d, canonically sorted."""
    if len(d) != q.n:
        raise ValueError("dimension vector length mismatch")
    if any(x < 0 for x in d):
        raise ValueError("dimension vector must be non-negative")
    intervals = intervals_of(q)
    found: list[RepClass] = []

    def walk(idx: int, remaining: tuple[int, ...], chosen: list[tuple[Interval, int]]) -> None:
        if all(x == 0 for x in remaining):
            found.append(RepClass(tuple(chosen)))
            return
        if idx == len(intervals):
            return
        u = intervals[idx]
        cap = min(remaining[v - 1] for v in range(u.a, u.b + 1))
        for k in range(cap, -1, -1):
            if k:
                rem = list(remaining)
                for v in range(u.a, u.b + 1):
                    rem[v - 1] -= k
                chosen.append((u, k))
                walk(idx + 1, tuple(rem), chosen)
                chosen.pop()
            else:
                walk(idx + 1, remaining, chosen)
    walk(0, d, [])
    found.sort(key=lambda m: m.pairs)
    return tuple(found)


def semisimple_class(q: TypeAQuiver, d: tuple[int, ...]) -> RepClass:
    if len(d) != q.n:
        raise ValueError("dimension vector length mismatch")
    return RepClass.from_pairs((Interval(v, v), d[v - 1]) for v in range(1, q.n + 1) if d[v - 1])


@dataclass(frozen=True)
class ExplicitRep:
    """Concrete matrices realizing a representation; mats[k] maps along edge k."""

    quiver: TypeAQuiver
    dims: tuple[int, ...]
    mats: tuple[Mat, ...]

    def __post_init__(self) -> None:
        q = self.quiver
        if len(self.dims) != q.n or any(x < 0 for x in self.dims):
            raise ValueError("bad dimension vector")
        if len(self.mats) != q.n - 1:
            raise ValueError("one matrix per edge required")
        for k, mat in enumerate(self.mats):
            s, t = q.edge(k)
            if (mat.nrows, mat.ncols) != (self.dims[t - 1], self.dims[s - 1]):
                raise ValueError(
                    f"edge {k}: expected {self.dims[t-1]}x{self.dims[s-1]}, got {mat.nrows}x{mat.ncols}"
                )


@cache
def explicit_of(q: TypeAQuiver, m: RepClass) -> ExplicitRep:
    """Block-diagonal matrices for the class, one block per summand copy.

    The basis at each vertex lists the copies containing it in canonical
    (sorted) order, so equal inputs give identical matrices.
    """
    copies = m.copies()
    dims = m.dim(q.n)
    pos: list[dict[int, int]] = [dict() for _ in range(q.n)]
    for c, u in enumerate(copies):
        for v in range(u.a, u.b + 1):
            pos[v - 1][c] = len(pos[v - 1])
    mats = []
    for k in range(q.n - 1):
        s, t = q.edge(k)
        rows = [[0] * dims[s - 1] for _ in range(dims[t - 1])]
        for c, u in enumerate(copies):
            if u.contains(s) and u.contains(t):
                rows[pos[t - 1][c]][pos[s - 1][c]] = 1
        mats.append(Mat.from_rows(rows, ncols=dims[s - 1]))
    return ExplicitRep(q, dims, tuple(mats))


def reachable_interval(q: TypeAQuiver, i: int, follow_arrows: bool) -> Interval:
    """Vertices reachable from i along arrows (projective support) or against
    them (injective support); always an interval in type A."""
    lo = hi = i
    while hi < q.n and (q.orient[hi - 1] == FORWARD) == follow_arrows:
        hi += 1
    while lo > 1 and (q.orient[lo - 2] == BACKWARD) == follow_arrows:
        lo -= 1
    return Interval(lo, hi)


def projective_interval(q: TypeAQuiver, i: int) -> Interval:
    return reachable_interval(q, i, follow_arrows=True)


def injective_interval(q: TypeAQuiver, i: int) -> Interval:
    return reachable_interval(q, i, follow_arrows=False)


@cache
def projective_intervals(q: TypeAQuiver) -> tuple[Interval, ...]:
    return tuple(projective_interval(q, i) for i in range(1, q.n + 1))


@cache
def injective_intervals(q: TypeAQuiver) -> tuple[Interval, ...]:
    return tuple(injective_interval(q, i) for i in range(1, q.n + 1))


def is_projective(q: TypeAQuiver, u: Interval) -> bool:
    return u in projective_intervals(q)


def is_injective(q: TypeAQuiver, u: Interval) -> bool:
    return u in injective_intervals(q)
