"""Extremal polyomino chains by dynamic programming.

For an index f, let best(k, i) be the maximum index value over all
chains with k squares whose last link has type i.  Because each
attachment increment depends only on the previous link, best satisfies

    best(k, i) = max_j { best(k-1, j) + g(j, i) },    k >= 4,

with base best(3, i) fixed by the first attachment.  One forward pass
therefore yields the optimum for every square count up to n at O(1)
arithmetic per step; recording which predecessors attain each maximum
turns the table into a DAG whose source-to-sink paths are exactly the
optimal chains, so witnesses, tie counts and full enumeration all come
out of the same pass.  Minimization is maximization of the negated
index.

In rational mode all values are rescaled by the least common multiple
of the increment denominators and the whole DP runs on arbitrary-
precision integers: comparisons are exact and each step costs a few
word operations.  In float mode values within the relative tolerance
are treated as tied, and anything tie-derived (counts, enumeration) is
tolerance-dependent.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from .chains import LinkVector, canonical_reversal
from .indices import (
    FLOAT,
    RATIONAL,
    IncrementTable,
    IndexFunction,
    Value,
    increment_table,
    negate,
    values_equal,
)

__all__ = [
    "DPState",
    "DPTable",
    "ExtremalResult",
    "ClassifierVerdict",
    "CASE_LINEAR_ALWAYS",
    "CASE_LINEAR_FROM_4",
    "CASE_ZIGZAG_THEN_LINEAR",
    "CASE_NOT_APPLICABLE",
    "run_dp",
    "maximize",
    "minimize",
    "enumerate_maximal",
    "count_maximal",
    "classify",
]

MAX = "max"
MIN = "min"

_PRED_SETS = (frozenset(), frozenset((1,)), frozenset((2,)), frozenset((1, 2)))


@dataclass(frozen=True)
class DPState:
    """Optimum summary for one square count: values, predecessor sets and
    tie counts per ending link."""

    n: int
    values: tuple[Value, Value]
    preds: tuple[frozenset[int], frozenset[int]]
    ties: tuple[int, int]

    def value(self, end: int) -> Value:
        return self.values[end - 1]

    def predecessors(self, end: int) -> frozenset[int]:
        return self.preds[end - 1]

    def tie_count(self, end: int) -> int:
        return self.ties[end - 1]


class DPTable:
    """Forward-pass results for square counts 3..n under one index.

    Iterating yields one `DPState` per square count.  `witness` and
    `chains` read the predecessor structure backwards; they require the
    table to have been built with ``keep_table=True`` (the default).
    A streaming build keeps only the final state in O(1) memory.
    """

    def __init__(self, f, n, den, kept, final, vals1, vals2, preds1, preds2, ties1, ties2):
        self.f = f
        self.n = n
        self.mode = f.mode
        self.eps = f.eps
        self._den = den
        self.kept = kept
        self._final = final
        self._vals1 = vals1
        self._vals2 = vals2
        self._preds1 = preds1
        self._preds2 = preds2
        self._ties1 = ties1
        self._ties2 = ties2

    def _check_k(self, k: int, need_table: bool = True) -> None:
        if not 3 <= k <= self.n:
            raise ValueError(f"square count {k} outside table range 3..{self.n}")
        if need_table and not self.kept and k < self.n:
            raise ValueError("streaming table keeps only the final state (keep_table=False)")

    @staticmethod
    def _check_end(i: int) -> None:
        if i not in (1, 2):
            raise ValueError(f"end link must be 1 or 2, got {i!r}")

    def _raw(self, k: int, i: int):
        if not self.kept:
            return self._final[0] if i == 1 else self._final[1]
        return (self._vals1 if i == 1 else self._vals2)[k - 3]

    def value(self, k: int, i: int) -> Value:
        """Optimum over k-square chains ending with link i."""
        self._check_k(k)
        self._check_end(i)
        raw = self._raw(k, i)
        return Fraction(raw, self._den) if self._den is not None else raw

    def tie_count(self, k: int, i: int) -> int:
        self._check_k(k)
        self._check_end(i)
        if not self.kept:
            return self._final[2] if i == 1 else self._final[3]
        return (self._ties1 if i == 1 else self._ties2)[k - 3]

    def predecessors(self, k: int, i: int) -> frozenset[int]:
        self._check_k(k)
        self._check_end(i)
        if not self.kept:
            return _PRED_SETS[self._final[4] if i == 1 else self._final[5]]
        return _PRED_SETS[(self._preds1 if i == 1 else self._preds2)[k - 3]]

    def state(self, k: int) -> DPState:
        self._check_k(k)
        return DPState(
            n=k,
            values=(self.value(k, 1), self.value(k, 2)),
            preds=(self.predecessors(k, 1), self.predecessors(k, 2)),
            ties=(self.tie_count(k, 1), self.tie_count(k, 2)),
        )

    def __len__(self) -> int:
        return self.n - 2 if self.kept else 1

    def __iter__(self) -> Iterator[DPState]:
        first = 3 if self.kept else self.n
        return (self.state(k) for k in range(first, self.n + 1))

    def winning_ends(self, k: int | None = None) -> tuple[int, ...]:
        """Ending links attaining the overall optimum at k squares."""
        k = self.n if k is None else k
        self._check_k(k)
        v1, v2 = self.value(k, 1), self.value(k, 2)
        if values_equal(v1, v2, self.eps):
            return (1, 2)
        return (1,) if v1 > v2 else (2,)

    def best_value(self, k: int | None = None) -> Value:
        k = self.n if k is None else k
        return self.value(k, self.winning_ends(k)[0])

    def labeled_count(self, k: int | None = None, end: int | None = None) -> int:
        """Number of distinct optimal chains (tie count + 1 per winning end)."""
        k = self.n if k is None else k
        ends = (end,) if end is not None else self.winning_ends(k)
        return sum(self.tie_count(k, e) + 1 for e in ends)

    def witness(self, k: int | None = None, end: int | None = None) -> LinkVector:
        """One optimal chain, built backwards preferring link 1 on ties."""
        k = self.n if k is None else k
        self._check_k(k)
        if not self.kept and k > 3:
            raise ValueError("streaming table cannot reconstruct witnesses (keep_table=False)")
        if end is None:
            end = self.winning_ends(k)[0]
        else:
            self._check_end(end)
        preds1, preds2 = self._preds1, self._preds2
        out = [end]
        cur = end
        for j in range(k, 3, -1):
            code = (preds1 if cur == 1 else preds2)[j - 3]
            cur = 2 if code == 2 else 1  # codes 1 and 3 take link 1
            out.append(cur)
        out.reverse()
        return LinkVector(out)

    def chains(
        self,
        k: int | None = None,
        end: int | None = None,
        dedup: bool = False,
        limit: int | None = None,
    ) -> Iterator[LinkVector]:
        """All optimal chains at k squares, depth-first, each exactly once.

        Discovery walks the predecessor DAG backwards (link 1 explored
        first), so the first chain yielded equals `witness`.  The cost
        is proportional to (chains emitted) x k: output-sensitive.
        With ``dedup`` the first-seen member of each mirror pair is
        kept; ``limit`` caps the number of chains yielded.
        """
        k = self.n if k is None else k
        self._check_k(k)
        if not self.kept and k > 3:
            raise ValueError("streaming table cannot enumerate chains (keep_table=False)")
        if end is not None:
            self._check_end(end)
        ends = (end,) if end is not None else self.winning_ends(k)
        seen: set[tuple[int, ...]] = set()
        emitted = 0
        for e in ends:
            for links in self._chains_for_end(k, e):
                if dedup:
                    key = canonical_reversal(links).links
                    if key in seen:
                        continue
                    seen.add(key)
                if limit is not None and emitted >= limit:
                    return
                emitted += 1
                yield LinkVector(links)

    def _chains_for_end(self, k: int, end: int) -> Iterator[tuple[int, ...]]:
        if k == 3:
            yield (end,)
            return
        buf = [0] * (k - 2)
        buf[-1] = end
        stack = [iter(sorted(self.predecessors(k, end)))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                continue
            pos = k - len(stack)  # square whose link is being fixed
            buf[pos - 3] = nxt
            if pos == 3:
                yield tuple(buf)
            else:
                stack.append(iter(sorted(self.predecessors(pos, nxt))))


def _build_rational(f: IndexFunction, gt: IncrementTable, n: int, keep: bool) -> DPTable:
    den = math.lcm(*(Fraction(v).denominator for v in (gt.g11, gt.g12, gt.g21, gt.g22, gt.g2, gt.base)))
    G11, G12, G21, G22 = (int(v * den) for v in (gt.g11, gt.g12, gt.g21, gt.g22))
    m1 = int(gt.initial(1) * den)
    m2 = int(gt.initial(2) * den)
    t1 = t2 = 0
    p1 = p2 = 0
    # decide each step by the running difference against two constants
    C1 = G21 - G11
    C2 = G22 - G12
    vals1 = vals2 = preds1 = preds2 = ties1 = ties2 = None
    if keep:
        vals1 = [m1]
        vals2 = [m2]
        preds1 = bytearray((0,))
        preds2 = bytearray((0,))
        ties1 = [0]
        ties2 = [0]
        av1, av2 = vals1.append, vals2.append
        ap1, ap2 = preds1.append, preds2.append
        at1, at2 = ties1.append, ties2.append
        for _ in range(n - 3):
            d = m1 - m2
            if d > C1:
                w1 = m1 + G11
                p1 = 1
                nt1 = t1
            elif d < C1:
                w1 = m2 + G21
                p1 = 2
                nt1 = t2
            else:
                w1 = m1 + G11
                p1 = 3
                nt1 = 1 + t1 + t2
            if d > C2:
                w2 = m1 + G12
                p2 = 1
                nt2 = t1
            elif d < C2:
                w2 = m2 + G22
                p2 = 2
                nt2 = t2
            else:
                w2 = m1 + G12
                p2 = 3
                nt2 = 1 + t1 + t2
            m1, m2, t1, t2 = w1, w2, nt1, nt2
            av1(m1)
            av2(m2)
            ap1(p1)
            ap2(p2)
            at1(t1)
            at2(t2)
    else:
        for _ in range(n - 3):
            d = m1 - m2
            if d > C1:
                w1 = m1 + G11
                p1 = 1
                nt1 = t1
            elif d < C1:
                w1 = m2 + G21
                p1 = 2
                nt1 = t2
            else:
                w1 = m1 + G11
                p1 = 3
                nt1 = 1 + t1 + t2
            if d > C2:
                w2 = m1 + G12
                p2 = 1
                nt2 = t1
            elif d < C2:
                w2 = m2 + G22
                p2 = 2
                nt2 = t2
            else:
                w2 = m1 + G12
                p2 = 3
                nt2 = 1 + t1 + t2
            m1, m2, t1, t2 = w1, w2, nt1, nt2
    final = (m1, m2, t1, t2, p1, p2)
    return DPTable(f, n, den, keep, final, vals1, vals2, preds1, preds2, ties1, ties2)


def _build_float(f: IndexFunction, gt: IncrementTable, n: int, keep: bool) -> DPTable:
    eps = f.eps
    G11, G12, G21, G22 = gt.g11, gt.g12, gt.g21, gt.g22
    m1 = gt.initial(1)
    m2 = gt.initial(2)
    t1 = t2 = 0
    p1 = p2 = 0
    vals1 = vals2 = preds1 = preds2 = ties1 = ties2 = None
    if keep:
        vals1, vals2 = [m1], [m2]
        preds1, preds2 = bytearray((0,)), bytearray((0,))
        ties1, ties2 = [0], [0]
    for _ in range(n - 3):
        a = m1 + G11
        b = m2 + G21
        if abs(a - b) <= eps * max(1.0, abs(a), abs(b)):
            w1, p1, nt1 = max(a, b), 3, 1 + t1 + t2
        elif a > b:
            w1, p1, nt1 = a, 1, t1
        else:
            w1, p1, nt1 = b, 2, t2
        a = m1 + G12
        b = m2 + G22
        if abs(a - b) <= eps * max(1.0, abs(a), abs(b)):
            w2, p2, nt2 = max(a, b), 3, 1 + t1 + t2
        elif a > b:
            w2, p2, nt2 = a, 1, t1
        else:
            w2, p2, nt2 = b, 2, t2
        m1, m2, t1, t2 = w1, w2, nt1, nt2
        if keep:
            vals1.append(m1)
            vals2.append(m2)
            preds1.append(p1)
            preds2.append(p2)
            ties1.append(t1)
            ties2.append(t2)
    final = (m1, m2, t1, t2, p1, p2)
    return DPTable(f, n, None, keep, final, vals1, vals2, preds1, preds2, ties1, ties2)


def run_dp(f: IndexFunction, n: int, *, keep_table: bool = True) -> DPTable:
    """Forward pass to n squares; linear time, linear memory (O(1) when
    ``keep_table=False``, which disables witnesses and enumeration)."""
    if n < 3:
        raise ValueError(f"dynamic program needs n >= 3, got {n}")
    gt = increment_table(f)
    if f.mode == RATIONAL:
        return _build_rational(f, gt, n, keep_table)
    return _build_float(f, gt, n, keep_table)


@dataclass(frozen=True)
class ExtremalResult:
    """Outcome of one extremal query.

    `labeled_count` counts distinct optimal link vectors; `iso_count`
    additionally merges mirror pairs and is only filled when the
    enumeration actually ran.  Under a float-mode index every
    tie-derived quantity depends on the comparison tolerance, flagged
    by `tolerance_dependent`.
    """

    objective: str
    n: int
    value: Value
    per_end: dict[int, Value]
    witness: LinkVector
    labeled_count: int
    iso_count: int | None
    index_name: str
    mode: str
    tolerance_dependent: bool


def maximize(
    f: IndexFunction, n: int, end: int | None = None, *, count_iso: bool = False
) -> ExtremalResult:
    """Maximum index value over n-square chains, with one witness chain.

    With `end` the search is restricted to chains whose last link has
    that type.  Witness ties are broken toward link 1 at every level
    (and toward ending link 1), making the result deterministic.
    """
    table = run_dp(f, n)
    ends = (end,) if end is not None else table.winning_ends()
    value = table.value(n, ends[0])
    labeled = sum(table.tie_count(n, e) + 1 for e in ends)
    witness = table.witness(end=ends[0])
    iso = None
    if count_iso:
        iso = sum(1 for _ in table.chains(end=end, dedup=True))
    return ExtremalResult(
        objective=MAX,
        n=n,
        value=value,
        per_end={1: table.value(n, 1), 2: table.value(n, 2)},
        witness=witness,
        labeled_count=labeled,
        iso_count=iso,
        index_name=f.name,
        mode=f.mode,
        tolerance_dependent=f.mode == FLOAT,
    )


def minimize(
    f: IndexFunction, n: int, end: int | None = None, *, count_iso: bool = False
) -> ExtremalResult:
    """Minimum index value over n-square chains: maximize the negation."""
    res = maximize(negate(f), n, end, count_iso=count_iso)
    return ExtremalResult(
        objective=MIN,
        n=n,
        value=-res.value,
        per_end={e: -v for e, v in res.per_end.items()},
        witness=res.witness,
        labeled_count=res.labeled_count,
        iso_count=res.iso_count,
        index_name=f.name,
        mode=f.mode,
        tolerance_dependent=res.tolerance_dependent,
    )


def enumerate_maximal(
    f: IndexFunction,
    n: int,
    end: int | None = None,
    limit: int | None = None,
    dedup: bool = False,
) -> Iterator[LinkVector]:
    """Stream every maximal chain exactly once (see `DPTable.chains`)."""
    table = run_dp(f, n)
    yield from table.chains(end=end, dedup=dedup, limit=limit)


def count_maximal(f: IndexFunction, n: int, end: int) -> int:
    """Number of distinct maximal chains ending with the given link."""
    if end not in (1, 2):
        raise ValueError(f"end link must be 1 or 2, got {end!r}")
    table = run_dp(f, n, keep_table=False)
    return table.tie_count(n, end) + 1


CASE_LINEAR_ALWAYS = "linear-always"
CASE_LINEAR_FROM_4 = "linear-from-4-tie-at-3"
CASE_ZIGZAG_THEN_LINEAR = "zigzag-then-linear"
CASE_NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class ClassifierVerdict:
    """Sufficient-condition check for linear/zigzag extremality.

    When the increment table satisfies
    g11 > max(g12, g22, (g12 + g21) / 2), the maximizer is the linear
    chain for every n (case `linear-always`, g11 > g2), the linear chain
    from n = 4 with a two-chain tie at n = 3 (g11 == g2), or the zigzag
    chain up to a threshold square count `n_star` and the linear chain
    from there on (g11 < g2).  In the last case `tie_at_threshold`
    reports whether zigzag and linear are exactly tied at `n_star`
    (computed, never assumed).  Outside the premise the verdict is
    `not-applicable` and the general search must be used.
    """

    premise_holds: bool
    case: str
    n_star: int | None = None
    tie_at_threshold: bool | None = None


def classify(f: IndexFunction) -> ClassifierVerdict:
    """Classify an index under the linear/zigzag sufficient condition."""
    gt = increment_table(f)
    g11, g12, g21, g22, g2 = gt.g11, gt.g12, gt.g21, gt.g22, gt.g2
    half_sum = (g12 + g21) / 2
    premise = g11 > g12 and g11 > g22 and g11 > half_sum
    if not premise:
        return ClassifierVerdict(premise_holds=False, case=CASE_NOT_APPLICABLE)
    if values_equal(g11, g2, f.eps):
        return ClassifierVerdict(premise_holds=True, case=CASE_LINEAR_FROM_4)
    if g11 > g2:
        return ClassifierVerdict(premise_holds=True, case=CASE_LINEAR_ALWAYS)
    # threshold via exact rational ceiling (floats convert exactly)
    num = Fraction(g2) - Fraction(g11)
    dem = Fraction(g11) - Fraction(g22)
    if dem <= 0:
        raise RuntimeError("classifier invariant violated: premise guarantees g11 > g22")
    n_star = math.ceil(num / dem + 3)
    linear_at = gt.base + (n_star - 2) * g11
    zigzag_at = gt.base + g2 + (n_star - 3) * g22
    return ClassifierVerdict(
        premise_holds=True,
        case=CASE_ZIGZAG_THEN_LINEAR,
        n_star=n_star,
        tie_at_threshold=values_equal(linear_at, zigzag_at, f.eps),
    )
