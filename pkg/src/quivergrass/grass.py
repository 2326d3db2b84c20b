"""Betti numbers of quiver Grassmannians, by two independent routes.

Route one is a stratification recursion: peel off a summand S with
Ext^1(S, rest) = 0; the subrepresentations of rest + S of dimension e fiber
over pairs (A, B) of subrepresentations of the two factors, with affine
fibers of dimension <dim B, dim rest - dim A>.  Route two is an oracle:
count subrepresentations over several prime fields by enumerating subspace
tuples in reduced row echelon form, then interpolate the counting polynomial
(Grassmannians here are paved by affine cells, so the count is a polynomial
in the field size whose coefficients are the even Betti numbers).

The strata table quantifies a minimal degeneration m -> n: splitting
subspaces by their intersection with X = x1 + x_rest and by whether the
induced extension class vanishes (i = 0) or not (i = 1) partitions the
Grassmannian of n, the i = 0 part alone accounting for m.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .degen import BongartzData, boundary_check
from .homalg import euler_form, ext_intervals
from .quiver import (
    InternalCheckError,
    Interval,
    RepClass,
    TypeAQuiver,
    explicit_of,
    try_vec_sub,
    vec_leq,
    vec_sub,
)

MAX_PRIME = 10007
DEFAULT_ENUM_BUDGET = 5_000_000


@dataclass(frozen=True)
class PoincarePoly:
    """Polynomial in q; coefficient k is the 2k-th Betti number."""

    coeffs: tuple[int, ...]

    @classmethod
    def from_coeffs(cls, coeffs) -> "PoincarePoly":
        data = list(coeffs)
        while data and data[-1] == 0:
            data.pop()
        return cls(tuple(int(c) for c in data))

    @classmethod
    def zero(cls) -> "PoincarePoly":
        return cls(())

    @classmethod
    def one(cls) -> "PoincarePoly":
        return cls((1,))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "PoincarePoly") -> "PoincarePoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return PoincarePoly.from_coeffs(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __sub__(self, other: "PoincarePoly") -> "PoincarePoly":
        size = max(len(self.coeffs), len(other.coeffs))
        get = lambda t, i: t[i] if i < len(t) else 0
        return PoincarePoly.from_coeffs(tuple(get(self.coeffs, i) - get(other.coeffs, i) for i in range(size)))

    def __mul__(self, other: "PoincarePoly") -> "PoincarePoly":
        if not self or not other:
            return PoincarePoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return PoincarePoly.from_coeffs(out)

    def shift(self, k: int) -> "PoincarePoly":
        """Multiply by q^k."""
        if k < 0:
            raise ValueError("negative shift")
        if not self:
            return self
        return PoincarePoly((0,) * k + self.coeffs)

    def eval_at(self, x: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def leq(self, other: "PoincarePoly") -> bool:
        """Coefficientwise comparison."""
        size = max(len(self.coeffs), len(other.coeffs))
        get = lambda t, i: t[i] if i < len(t) else 0
        return all(get(self.coeffs, i) <= get(other.coeffs, i) for i in range(size))

    def is_nonneg(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                q = "q" if k == 1 else f"q^{k}"
                terms.append(q if c == 1 else f"-{q}" if c == -1 else f"{c}{q}")
        out = " + ".join(terms)
        return out.replace("+ -", "- ")

    def __str__(self) -> str:
        return self.pretty()


@cache
def gaussian_binomial(n: int, k: int) -> PoincarePoly:
    """q-binomial coefficient: Poincare polynomial of the Grassmannian Gr(k, n)."""
    if k < 0 or k > n:
        return PoincarePoly.zero()
    if k == 0 or k == n:
        return PoincarePoly.one()
    return gaussian_binomial(n - 1, k - 1) + gaussian_binomial(n - 1, k).shift(k)


def gr_interval(q: TypeAQuiver, u: Interval, e: tuple[int, ...]) -> PoincarePoly:
    """Grassmannian of an interval module: a point or empty.

    Nonempty exactly when e is a 0/1 vector supported inside [a, b] and
    closed under the arrows interior to the interval.
    """
    if len(e) != q.n:
        raise ValueError("dimension vector length mismatch")
    if any(x not in (0, 1) for x in e):
        return PoincarePoly.zero()
    support = {v for v in range(1, q.n + 1) if e[v - 1]}
    if any(not u.contains(v) for v in support):
        return PoincarePoly.zero()
    for k in range(u.a - 1, u.b - 1):
        s, t = q.edge(k)
        if s in support and t not in support:
            return PoincarePoly.zero()
    return PoincarePoly.one()


@cache
def peel_order(q: TypeAQuiver, m: RepClass, reverse: bool = False) -> tuple[Interval, ...]:
    """Summand copies ordered so earlier ones have no extensions into later ones.

    Topological sort of the summand intervals under the precedence
    "B before A whenever Ext^1(A, B) != 0", lexicographic tie-break (largest
    first when reverse is set); copies of one interval stay adjacent.
    """
    classes = sorted(m.intervals())
    preds: dict[Interval, set[Interval]] = {u: set() for u in classes}
    for a in classes:
        for b in classes:
            if a != b and ext_intervals(q, a, b):
                preds[a].add(b)
    order: list[Interval] = []
    placed: set[Interval] = set()
    while len(placed) < len(classes):
        ready = [u for u in classes if u not in placed and preds[u] <= placed]
        if not ready:
            raise InternalCheckError(f"extension cycle among summands of {m}")
        pick = max(ready) if reverse else min(ready)
        placed.add(pick)
        order.extend([pick] * m.mult(pick))
    return tuple(order)


_BETTI_CACHE: dict = {}


def betti_recursion(q: TypeAQuiver, m: RepClass, e: tuple[int, ...], *, reverse_peel: bool = False) -> PoincarePoly:
    """Poincare polynomial of the quiver Grassmannian of m at e, by peeling."""
    if len(e) != q.n:
        raise ValueError("dimension vector length mismatch")
    d = m.dim(q.n)
    if any(x < 0 for x in e) or not vec_leq(e, d):
        return PoincarePoly.zero()
    return _betti(q, m, e, reverse_peel)


def _betti(q: TypeAQuiver, m: RepClass, e: tuple[int, ...], reverse: bool) -> PoincarePoly:
    key = (q, m, e, reverse)
    hit = _BETTI_CACHE.get(key)
    if hit is not None:
        return hit
    if not m.pairs:
        result = PoincarePoly.one()  # e <= 0 vector here, so e = 0
    elif m.num_copies() == 1:
        result = gr_interval(q, m.pairs[0][0], e)
    else:
        quot = peel_order(q, m, reverse)[0]
        rest = m.remove_one(quot)
        d_rest = rest.dim(q.n)
        ind = quot.indicator(q.n)
        result = PoincarePoly.zero()
        for g in itertools.product(*(range(min(a, b) + 1) for a, b in zip(e, ind))):
            f = vec_sub(e, g)
            if not vec_leq(f, d_rest):
                continue
            pf = _betti(q, rest, f, reverse)
            if not pf:
                continue
            if not gr_interval(q, quot, g):
                continue
            exponent = euler_form(q, g, vec_sub(d_rest, f))
            if exponent < 0:
                raise InternalCheckError(f"negative fiber dimension peeling {quot} from {m} at e={e}")
            result = result + pf.shift(exponent)
    _BETTI_CACHE[key] = result
    return result


# ---------------------------------------------------------------------------
# finite-field point counting


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def first_primes(k: int) -> tuple[int, ...]:
    out = []
    p = 2
    while len(out) < k:
        if _is_prime(p):
            out.append(p)
        p += 1
    return tuple(out)


@cache
def _subspaces(ambient: int, k: int, p: int):
    """All k-dimensional subspaces of F_p^ambient as (rref rows, pivot cols)."""
    if k < 0 or k > ambient:
        return ()
    out = []
    for pivots in itertools.combinations(range(ambient), k):
        free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, ambient) if c not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            rows = [[0] * ambient for _ in range(k)]
            for r in range(k):
                rows[r][pivots[r]] = 1
            for (r, c), val in zip(free, values):
                rows[r][c] = val
            out.append((tuple(tuple(row) for row in rows), pivots))
    return tuple(out)


def count_subspaces(ambient: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^ambient, by echelon pattern."""
    if k < 0 or k > ambient:
        return 0
    total = 0
    for pivots in itertools.combinations(range(ambient), k):
        nfree = sum(
            1 for r in range(k) for c in range(pivots[r] + 1, ambient) if c not in pivots
        )
        total += p ** nfree
    return total


def _reduce_mod(vec: list[int], rows, pivots, p: int) -> bool:
    """True when vec lies in the row space spanned by the echelon rows."""
    v = list(vec)
    for row, c in zip(rows, pivots):
        if v[c]:
            coef = v[c]
            v = [(x - coef * y) % p for x, y in zip(v, row)]
    return not any(v)


def _mat_mod(mat, p: int):
    return tuple(tuple(int(x) % p for x in row) for row in mat.rows)


def _apply(mat_rows, vec, p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, vec)) % p for row in mat_rows]


def _segments(q: TypeAQuiver, mats, d, e, p: int) -> list[list[int]]:
    """Split vertices 1..n into runs linked by edges whose condition bites."""
    active = []
    for k in range(q.n - 1):
        s, t = q.edge(k)
        nonzero = any(any(row) for row in mats[k])
        active.append(nonzero and e[s - 1] > 0 and e[t - 1] < d[t - 1])
    segments = [[1]]
    for v in range(2, q.n + 1):
        if active[v - 2]:
            segments[-1].append(v)
        else:
            segments.append([v])
    return segments


def point_count(q: TypeAQuiver, m: RepClass, e: tuple[int, ...], p: int) -> int:
    """Number of subrepresentation tuples of m over F_p with dimensions e."""
    if not _is_prime(p) or p > MAX_PRIME:
        raise ValueError(f"p must be a prime at most {MAX_PRIME}")
    if len(e) != q.n:
        raise ValueError("dimension vector length mismatch")
    d = m.dim(q.n)
    if any(x < 0 for x in e) or not vec_leq(e, d):
        return 0
    rep = explicit_of(q, m)
    mats = [_mat_mod(mat, p) for mat in rep.mats]
    total = 1
    for segment in _segments(q, mats, d, e, p):
        if len(segment) == 1:
            v = segment[0]
            total *= count_subspaces(d[v - 1], e[v - 1], p)
            continue
        first = segment[0]
        current = _subspaces(d[first - 1], e[first - 1], p)
        weights = [1] * len(current)
        for v in segment[1:]:
            k = v - 2
            s, t = q.edge(k)
            incoming = _subspaces(d[v - 1], e[v - 1], p)
            new_weights = []
            if s == v - 1:
                # condition: image of the left subspace lands in the right one
                images = [[_apply(mats[k], list(row), p) for row in rows] for rows, _ in current]
                for rows, pivots in incoming:
                    acc = 0
                    for w, img in zip(weights, images):
                        if w and all(_reduce_mod(vec, rows, pivots, p) for vec in img):
                            acc += w
                    new_weights.append(acc)
            else:
                # edge points leftward: image of the right subspace lands in the left one
                for rows, _ in incoming:
                    img = [_apply(mats[k], list(row), p) for row in rows]
                    acc = 0
                    for w, (lrows, lpivots) in zip(weights, current):
                        if w and all(_reduce_mod(vec, lrows, lpivots, p) for vec in img):
                            acc += w
                    new_weights.append(acc)
            current, weights = incoming, new_weights
        total *= sum(weights)
    return total


def _enum_cost(q: TypeAQuiver, m: RepClass, e: tuple[int, ...], p: int) -> int:
    d = m.dim(q.n)
    rep = explicit_of(q, m)
    mats = [_mat_mod(mat, p) for mat in rep.mats]
    cost = 0
    for segment in _segments(q, mats, d, e, p):
        if len(segment) == 1:
            continue
        sizes = [count_subspaces(d[v - 1], e[v - 1], p) for v in segment]
        cost += sum(sizes) + sum(a * b for a, b in zip(sizes, sizes[1:]))
    return cost


def _interpolate(points: list[tuple[int, int]]) -> list[Fraction]:
    """Coefficients of the unique polynomial of degree < len(points) through points."""
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            # multiply basis by (X - xj)
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k in range(len(basis)):
            coeffs[k] += scale * basis[k]
    return coeffs


def betti_oracle(
    q: TypeAQuiver,
    m: RepClass,
    e: tuple[int, ...],
    budget: int = DEFAULT_ENUM_BUDGET,
) -> PoincarePoly:
    """Betti numbers by point counting over prime fields and interpolation.

    Counts at the first D+1 primes where D bounds the Grassmannian dimension,
    interpolates exactly, and cross-checks one further prime.  A non-integral
    or negative coefficient, or a witness mismatch, aborts loudly: it would
    mean the count is not the even-Betti-number polynomial.
    """
    if len(e) != q.n:
        raise ValueError("dimension vector length mismatch")
    d = m.dim(q.n)
    if any(x < 0 for x in e) or not vec_leq(e, d):
        return PoincarePoly.zero()
    bound = sum(x * (y - x) for x, y in zip(e, d))
    primes = first_primes(bound + 2)
    cost = _enum_cost(q, m, e, primes[-1])
    if cost > budget:
        raise ValueError(f"enumeration cost {cost} exceeds budget {budget}")
    values = [point_count(q, m, e, p) for p in primes]
    raw = _interpolate(list(zip(primes[: bound + 1], values[: bound + 1])))
    for c in raw:
        if c.denominator != 1 or c < 0:
            raise InternalCheckError(f"point counts of ({m}, e={e}) do not interpolate to Betti numbers: {raw}")
    poly = PoincarePoly.from_coeffs(int(c) for c in raw)
    if poly.eval_at(primes[-1]) != values[-1]:
        raise InternalCheckError(f"witness prime {primes[-1]} rejects the interpolation for ({m}, e={e})")
    return poly


# ---------------------------------------------------------------------------
# strata of a minimal degeneration


@dataclass(frozen=True)
class StratumRecord:
    """One stratum: subspaces meeting X in dimension f, with extension class i."""

    f: tuple[int, ...]
    g: tuple[int, ...]
    i: int
    shift: int
    base_poly: PoincarePoly


@cache
def strata_table(bd: BongartzData, e: tuple[int, ...]) -> tuple[StratumRecord, ...]:
    """Stratum records of the degeneration bd at subdimension e.

    For every split f + g = e: the i = 1 stratum sits over
    Gr_f(x_ker) x Gr_{g - dim s_im}(s_quot) with an affine shift one higher
    than the Euler pairing; the i = 0 stratum covers the complement in
    Gr_f(X) x Gr_g(S).  Zero strata are emitted with shift normalized to 0.
    """
    q = bd.quiver
    boundary_check(bd)
    if len(e) != q.n:
        raise ValueError("dimension vector length mismatch")
    x_class, s_class = bd.x_class, bd.s_class
    dim_x = x_class.dim(q.n)
    s_vec = bd.s_im.dim(q.n)
    records = []
    for f in itertools.product(*(range(x + 1) for x in e)):
        g = vec_sub(e, f)
        g_red = try_vec_sub(g, s_vec)
        base1 = PoincarePoly.zero()
        if g_red is not None:
            base1 = betti_recursion(q, bd.x_ker, f) * betti_recursion(q, bd.s_quot, g_red)
        product = betti_recursion(q, x_class, f) * betti_recursion(q, s_class, g)
        base0 = product - base1
        if not base0.is_nonneg():
            raise InternalCheckError(
                f"stratum complement has a negative count at f={f}, g={g}: {base0}"
            )
        shift0 = shift1 = 0
        if base0 or base1:
            pairing = euler_form(q, g, vec_sub(dim_x, f))
            if base0:
                shift0 = pairing
            if base1:
                shift1 = pairing + 1
            if shift0 < 0 or shift1 < 0:
                raise InternalCheckError(f"negative affine shift at f={f}, g={g}")
        records.append(StratumRecord(f, g, 0, shift0, base0))
        records.append(StratumRecord(f, g, 1, shift1, base1))
    return tuple(records)


def strata_sum(records: tuple[StratumRecord, ...], which: int | None = None) -> PoincarePoly:
    """Sum q^shift * base over the records, optionally filtered by i."""
    total = PoincarePoly.zero()
    for rec in records:
        if which is not None and rec.i != which:
            continue
        if rec.base_poly:
            total = total + rec.base_poly.shift(rec.shift)
    return total
