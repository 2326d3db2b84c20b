"""Numerical shadow of specialization maps along degenerations.

For a degeneration m -> n the restriction map on cohomology of the quiver
Grassmannians is surjective; at the level of graded dimensions that means
P(n, e) dominates P(m, e) coefficientwise, and for a minimal degeneration
the difference is exactly the i = 1 part of the strata table.  Arbitrary
degenerations reduce to chains of covers.  The semisimple class tops every
poset, so every P(m, e) is dominated by a product of Gaussian binomials.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .degen import bongartz_data, degeneration_poset, hom_leq
from .grass import (
    PoincarePoly,
    StratumRecord,
    betti_recursion,
    gaussian_binomial,
    strata_sum,
    strata_table,
)
from .quiver import (
    Interval,
    RepClass,
    TypeAQuiver,
    semisimple_class,
    vec_boxes,
)


@dataclass(frozen=True)
class CoverCheck:
    """One minimal degeneration m -> n probed at subdimension e."""

    m: RepClass
    n: RepClass
    e: tuple[int, ...]
    p_n: PoincarePoly
    p_m: PoincarePoly
    kernel: PoincarePoly
    strata: tuple[StratumRecord, ...]
    monotone: bool
    identity_ok: bool


@dataclass(frozen=True)
class SpecializationReport:
    quiver: TypeAQuiver
    m: RepClass
    n: RepClass
    e: tuple[int, ...]
    chain: tuple[CoverCheck, ...]
    p_n: PoincarePoly
    p_m: PoincarePoly
    kernel: PoincarePoly
    monotone: bool
    identity_ok: bool


def _cover_check(q: TypeAQuiver, m: RepClass, n: RepClass, e: tuple[int, ...]) -> CoverCheck:
    bd = bongartz_data(q, m, n)
    records = strata_table(bd, e)
    p_n = betti_recursion(q, n, e)
    p_m = betti_recursion(q, m, e)
    kernel = p_n - p_m
    monotone = p_m.leq(p_n)
    identity_ok = kernel == strata_sum(records, 1)
    return CoverCheck(m, n, e, p_n, p_m, kernel, records, monotone, identity_ok)


def check_cover(q: TypeAQuiver, m: RepClass, n: RepClass, e: tuple[int, ...]) -> SpecializationReport:
    """Check one minimal degeneration: monotone Betti numbers and exact kernel."""
    check = _cover_check(q, m, n, e)
    return SpecializationReport(
        q, m, n, e, (check,), check.p_n, check.p_m, check.kernel, check.monotone, check.identity_ok
    )


def saturated_chain(q: TypeAQuiver, m: RepClass, n: RepClass) -> tuple[RepClass, ...]:
    """A chain m = C0 < C1 < ... < Ck = n of covers, chosen greedily.

    At each step the first cover-successor (in canonical node order) still
    below n is taken.
    """
    if m.dim(q.n) != n.dim(q.n):
        raise ValueError("classes have different dimension vectors")
    if not hom_leq(q, m, n):
        raise ValueError(f"{m} does not degenerate to {n}")
    poset = degeneration_poset(q, m.dim(q.n))
    chain = [m]
    current = m
    while current != n:
        step = next(
            (c for (a, c) in poset.covers if a == current and poset.leq_pair(c, n)),
            None,
        )
        if step is None:
            raise ValueError(f"no saturated chain from {current} to {n}")
        chain.append(step)
        current = step
    return tuple(chain)


def check_degeneration(q: TypeAQuiver, m: RepClass, n: RepClass, e: tuple[int, ...]) -> SpecializationReport:
    """Check an arbitrary degeneration by composing along a saturated chain."""
    chain = saturated_chain(q, m, n)
    checks = tuple(_cover_check(q, a, b, e) for a, b in zip(chain, chain[1:]))
    p_n = betti_recursion(q, n, e)
    p_m = betti_recursion(q, m, e)
    kernel = p_n - p_m
    monotone = all(c.monotone for c in checks) and p_m.leq(p_n)
    identity_ok = all(c.identity_ok for c in checks)
    return SpecializationReport(q, m, n, e, checks, p_n, p_m, kernel, monotone, identity_ok)


@dataclass(frozen=True)
class VerifySummary:
    quiver: TypeAQuiver
    d: tuple[int, ...]
    nodes: int
    covers: int
    cover_checks: int
    bound_checks: int
    failures: tuple[str, ...]
    elapsed: float
    kernels: tuple[tuple[RepClass, RepClass, tuple[int, ...], PoincarePoly], ...]


def _sweep_cover(args) -> list[tuple[tuple[int, ...], PoincarePoly, bool, bool]]:
    q, m, n, es = args
    out = []
    for e in es:
        check = _cover_check(q, m, n, e)
        out.append((e, check.kernel, check.monotone, check.identity_ok))
    return out


VERIFY_WORK_BUDGET = 500_000


def verify_theorem(
    q: TypeAQuiver, d: tuple[int, ...], jobs: int = 1, budget: int = VERIFY_WORK_BUDGET
) -> VerifySummary:
    """Sweep every cover and every e <= d; also bound every node by the
    semisimple product of Gaussian binomials.

    Failures are collected, not raised: a failure would falsify the
    implementation, so the summary reports them for inspection.  A rough
    work estimate is compared against the budget first; raise it explicitly
    for larger-than-desk-scale sweeps.
    """
    start = time.monotonic()
    poset = degeneration_poset(q, d)
    es = vec_boxes(d)
    work = len(poset.nodes) ** 2 + (len(poset.nodes) + len(poset.covers)) * len(es)
    if work > budget:
        raise ValueError(f"estimated sweep size {work} exceeds budget {budget}")
    failures: list[str] = []
    kernels: list[tuple[RepClass, RepClass, tuple[int, ...], PoincarePoly]] = []
    tasks = [(q, m, n, es) for (m, n) in poset.covers]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_cover, tasks))
    else:
        results = [_sweep_cover(t) for t in tasks]
    cover_checks = 0
    for (m, n), rows in zip(poset.covers, results):
        for e, kernel, monotone, identity_ok in rows:
            cover_checks += 1
            kernels.append((m, n, e, kernel))
            if not monotone:
                failures.append(f"monotonicity fails: {m} -> {n} at e={e}")
            if not identity_ok:
                failures.append(f"kernel identity fails: {m} -> {n} at e={e}")
    bound_checks = 0
    for node in poset.nodes:
        for e in es:
            bound_checks += 1
            bound = PoincarePoly.one()
            for dv, ev in zip(d, e):
                bound = bound * gaussian_binomial(dv, ev)
            value = betti_recursion(q, node, e)
            if not value.leq(bound):
                failures.append(f"Grassmannian-product bound fails: {node} at e={e}")
            if node == semisimple_class(q, d) and value != bound:
                failures.append(f"semisimple class misses the product bound at e={e}")
    return VerifySummary(
        q,
        d,
        len(poset.nodes),
        len(poset.covers),
        cover_checks,
        bound_checks,
        tuple(failures),
        time.monotonic() - start,
        tuple(kernels),
    )


def default_jobs() -> int:
    return os.cpu_count() or 1


def pbw_rep(n: int, i_tuple: tuple[int, ...]) -> tuple[RepClass, tuple[int, ...], tuple[int, ...]]:
    """Degenerate flag representation on the equioriented A_n quiver.

    For 1 <= i_1 < ... < i_k <= n-1 the class is
    P_1^(n+1-k) + sum over l of (I_{i_l} + P_{i_l + 1}), with ambient
    dimension (n+1, ..., n+1) and flag dimensions (1, 2, ..., n).  The full
    projective class P_1^(n+1) degenerates to it.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    k = len(i_tuple)
    if k < 1 or k > n - 1:
        raise ValueError("tuple length must be between 1 and n-1")
    if any(i < 1 or i > n - 1 for i in i_tuple) or any(
        a >= b for a, b in zip(i_tuple, i_tuple[1:])
    ):
        raise ValueError("tuple entries must be strictly increasing in 1..n-1")
    q = TypeAQuiver(n, "F" * (n - 1))
    projective = lambda j: Interval(j, n)
    injective = lambda j: Interval(1, j)
    pairs = [(projective(1), n + 1 - k)]
    for i in i_tuple:
        pairs.append((injective(i), 1))
        pairs.append((projective(i + 1), 1))
    rep = RepClass.from_pairs(pairs)
    d = tuple(n + 1 for _ in range(n))
    e = tuple(range(1, n + 1))
    if rep.dim(n) != d:
        raise AssertionError(f"pbw class has dimension {rep.dim(n)}, expected {d}")
    flag_class = RepClass.from_pairs([(projective(1), n + 1)])
    if not hom_leq(q, flag_class, rep):
        raise AssertionError("full projective class does not degenerate to the pbw class")
    return rep, d, e
