"""Combinatorial model of how m1 boundaries spread over m2 grid cells.

Treats every weak composition of m1 into m2 non-negative cell counts as
equally likely.  ``C`` counts the compositions, ``C_j`` the compositions
in which a fixed cell holds exactly ``j`` boundaries, and ``P_j = C_j/C``
is the probability a cell holds ``j``.  From these follow the mean cell
count ``m1/m2``, the mean count of crowded cells (those holding more than
two boundaries), and a comparison-count cost model for the accelerated
binner versus plain binary search.

Closed forms (stars and bars):

    C   = binom(m1 + m2 - 1, m1)
    C_j = binom(m2 + m1 - (j + 2), m1 - j)

with the recurrence ``P_{j+1} = P_j * (m1 - j) / (m2 + m1 - (j + 2))``
seeded by ``P_0 = (m2 - 1) / (m1 + m2 - 1)``, which stays in floating
range where the binomials do not.  Brute-force enumeration of the
compositions is kept alongside as an independent check.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, log2

import numpy as np

from fastbin.errors import (
    DegenerateModel,
    EmptyTail,
    OracleMismatch,
    SlotValueOutOfRange,
    TooLargeToEnumerate,
)

__all__ = [
    "OccupancyModel",
    "SlotDistribution",
    "count_compositions",
    "count_slot_value",
    "enumerate_compositions",
    "slot_value_census",
    "slot_probabilities",
    "mean_gt2",
    "theoretical_speedup",
]

ENUMERATION_GUARD = 10**7

# exact big-integer cross-check of the recurrence is cheap up to here
_EXACT_CHECK_LIMIT = 64


@dataclass(frozen=True)
class OccupancyModel:
    """m1 boundaries distributed over m2 cells."""

    m1: int
    m2: int

    def __post_init__(self):
        if self.m1 < 1:
            raise ValueError("m1 must be >= 1")
        if self.m2 < 1:
            raise ValueError("m2 must be >= 1")


@dataclass(frozen=True, eq=False)
class SlotDistribution:
    """Cell-count probabilities P_0 .. P_m1 and derived means.

    ``p_tail`` is the probability of a crowded cell (count > 2);
    ``mu_gt2`` is the mean count among crowded cells, NaN when no cell
    can be crowded (m1 < 3).
    """

    probs: np.ndarray
    mu_all: float
    mu_gt2: float
    p_tail: float


def count_compositions(model: OccupancyModel) -> int:
    """Number of weak compositions of m1 into m2 parts (exact)."""
    return comb(model.m1 + model.m2 - 1, model.m1)


def count_slot_value(model: OccupancyModel, j: int) -> int:
    """Number of compositions in which a fixed cell holds exactly j (exact)."""
    if not 0 <= j <= model.m1:
        raise SlotValueOutOfRange(f"j={j} outside 0..{model.m1}")
    if j == model.m1:
        # the remaining m2 - 1 cells hold nothing; a single way
        return 1
    return comb(model.m2 + model.m1 - j - 2, model.m1 - j)


def enumerate_compositions(model: OccupancyModel):
    """Yield every weak composition of m1 into m2 parts exactly once.

    Order is lexicographic with the first cell descending, e.g. for
    m1 = m2 = 3: (3,0,0), (2,1,0), (2,0,1), (1,2,0), ...  Guarded by
    :data:`ENUMERATION_GUARD` total compositions.
    """
    if count_compositions(model) > ENUMERATION_GUARD:
        raise TooLargeToEnumerate(
            f"{count_compositions(model)} compositions exceed guard {ENUMERATION_GUARD}"
        )
    return _compositions(model.m1, model.m2)


def _compositions(m1, m2):
    c = [0] * m2
    c[0] = m1
    yield tuple(c)
    if m2 == 1:
        return
    while True:
        # rightmost cell before the last that still holds anything
        i = m2 - 2
        while i >= 0 and c[i] == 0:
            i -= 1
        if i < 0:
            return
        c[i] -= 1
        moved = c[m2 - 1] + 1
        if i + 1 == m2 - 1:
            c[m2 - 1] = moved
        else:
            c[i + 1] = moved
            c[m2 - 1] = 0
        yield tuple(c)


def slot_value_census(model: OccupancyModel, chunk: int = 250_000):
    """Brute-force slot-value counts over every composition.

    Enumerates compositions through their bar placements (a different
    route than :func:`enumerate_compositions`) and tallies how many cells
    hold each value across the whole grid of solutions.  Returns
    ``(counts, rows)`` where ``counts[j]`` is the number of cells holding
    ``j`` summed over all ``rows`` compositions.  Independent of the
    closed-form binomials, so it can serve as their oracle.
    """
    m1, m2 = model.m1, model.m2
    if count_compositions(model) > ENUMERATION_GUARD:
        raise TooLargeToEnumerate(
            f"{count_compositions(model)} compositions exceed guard {ENUMERATION_GUARD}"
        )
    if m2 == 1:
        counts = np.zeros(m1 + 1, dtype=np.int64)
        counts[m1] = 1
        return counts, 1
    counts = np.zeros(m1 + 1, dtype=np.int64)
    rows = 0
    nbars = m2 - 1
    bars_iter = itertools.combinations(range(m1 + m2 - 1), nbars)
    while True:
        block = list(itertools.islice(bars_iter, chunk))
        if not block:
            break
        nrows = len(block)
        bars = np.fromiter(
            itertools.chain.from_iterable(block), dtype=np.int64, count=nrows * nbars
        ).reshape(nrows, nbars)
        edged = np.empty((nrows, m2 + 1), dtype=np.int64)
        edged[:, 0] = -1
        edged[:, 1:-1] = bars
        edged[:, -1] = m1 + m2 - 1
        slots = np.diff(edged, axis=1) - 1
        counts += np.bincount(slots.ravel(), minlength=m1 + 1)
        rows += nrows
    return counts, rows


def slot_probabilities(model: OccupancyModel) -> SlotDistribution:
    """Cell-count distribution P_0 .. P_m1 via the stable recurrence.

    For small models the result is cross-checked against the exact
    big-integer ratios C_j / C.  Requires m2 >= 2; a one-cell grid has a
    degenerate distribution.
    """
    m1, m2 = model.m1, model.m2
    if m2 < 2:
        raise DegenerateModel("slot probabilities need m2 >= 2")
    probs = np.empty(m1 + 1, dtype=np.float64)
    probs[0] = (m2 - 1) / (m1 + m2 - 1)
    j = np.arange(m1, dtype=np.float64)
    probs[1:] = probs[0] * np.cumprod((m1 - j) / (m1 + m2 - 2 - j))
    if m1 + m2 <= _EXACT_CHECK_LIMIT:
        total = count_compositions(model)
        for j in range(m1 + 1):
            exact = float(Fraction(count_slot_value(model, j), total))
            if abs(probs[j] - exact) > 1e-12:
                raise OracleMismatch(
                    f"recurrence P_{j}={probs[j]!r} vs exact {exact!r} for {model}"
                )
    p0 = float(probs[0])
    p1 = float(probs[1]) if m1 >= 1 else 0.0
    p2 = float(probs[2]) if m1 >= 2 else 0.0
    # no slot can hold more than m1, so the tail is structurally empty below m1 = 3
    p_tail = max(0.0, 1.0 - p0 - p1 - p2) if m1 >= 3 else 0.0
    mu_all = m1 / m2
    mu_gt2 = (mu_all - p1 - 2.0 * p2) / p_tail if p_tail > 0.0 else float("nan")
    probs.setflags(write=False)
    return SlotDistribution(probs=probs, mu_all=mu_all, mu_gt2=mu_gt2, p_tail=p_tail)


def mean_gt2(model: OccupancyModel) -> float:
    """Mean cell count among crowded cells (count > 2).

    Equals ``(mu_all - P_1 - 2 P_2) / (1 - P_0 - P_1 - P_2)``; at least 3,
    with equality exactly when m1 = 3 (the tail then only contains
    count-3 cells).
    """
    dist = slot_probabilities(model)
    if not dist.p_tail > 0.0:
        raise EmptyTail(f"no cell can hold more than two values for {model}")
    return dist.mu_gt2


def _mean_gt2_tail_series(dist: SlotDistribution) -> float:
    """Cross-check form: 3 plus the tail-weighted excess over 3."""
    tail = dist.probs[3:]
    if not dist.p_tail > 0.0:
        raise EmptyTail("tail is empty")
    return 3.0 + float(np.arange(1, len(tail)).dot(tail[1:])) / dist.p_tail


def theoretical_speedup(model: OccupancyModel, n: int):
    """Comparison-count cost model: ``(t_bs, t_p, ratio)``.

    Binary search costs ``n * lg(m1)``; the accelerated binner costs
    one comparison per count-1 cell hit, two per count-2, three per
    count-2 overflow, and ``1 + lg(mu)`` for crowded cells, with ``mu``
    the crowded-cell mean.  For m1 = m2 the per-item cost approaches
    1.75 comparisons as m1 grows, independent of m1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    dist = slot_probabilities(model)
    if not dist.p_tail > 0.0:
        raise EmptyTail(f"no cell can hold more than two values for {model}")
    p0 = float(dist.probs[0])
    p1 = float(dist.probs[1])
    p2 = float(dist.probs[2])
    t_bs = n * log2(model.m1)
    t_p = n * (p0 + 2.0 * p1 + 3.0 * p2) + n * (1.0 + log2(dist.mu_gt2)) * dist.p_tail
    return t_bs, t_p, t_bs / t_p
