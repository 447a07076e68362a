"""Closed-form extremal results for the augmented Zagreb index (AZI).

The AZI is the degree-based index with f(x, y) = (xy / (x + y - 2))**3.
Over n-square polyomino chains its maximum is attained by the augmented
zigzag families: the all-length-3-segment chain AZ1 for odd n >= 5, and
the AZ2 family (one internal length-2 segment) for even n >= 6, with

    max = (4456/125) n - 26763/2000 - (2312/3375 if n even else 0).

The maximizer is unique for odd n; for even n there are (n - 6)/2 + 1
labeled maximizers and ceil(n/4 - 1) up to mirror symmetry.  The
minimum is attained by the zigzag chain for n in {3, 4, 5} and by the
linear chain for n >= 6.

Everything here runs in exact rational arithmetic only, and the verify
functions re-derive each claim from the generic engine (plus, for small
n, the exhaustive oracle) instead of trusting the formulas.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from .chains import LinkVector, az1_chain, az2_family, linear_chain, zigzag_chain
from .dp import CASE_ZIGZAG_THEN_LINEAR, DPTable, classify, run_dp
from .indices import IndexFunction, evaluate_direct, negate, preset
from . import oracle

__all__ = [
    "ChainFamilyReport",
    "VerificationReport",
    "azi_max_closed_form",
    "azi_extremal_chains",
    "azi_extremal_report",
    "verify_azi_maximum",
    "verify_azi_minimum",
]


@cache
def _azi() -> IndexFunction:
    return preset("azi")


def azi_max_closed_form(n: int) -> Fraction:
    """Exact maximum AZI over n-square chains (stated for n >= 5)."""
    if n < 5:
        raise ValueError(f"closed form stated for n >= 5, got {n}")
    value = Fraction(4456, 125) * n - Fraction(26763, 2000)
    if n % 2 == 0:
        value -= Fraction(2312, 3375)
    return value


def azi_extremal_chains(n: int) -> list[LinkVector]:
    """The AZI-maximizing chains with n squares, as labeled link vectors."""
    if n < 3:
        raise ValueError(f"extremal families start at n = 3, got {n}")
    if n == 3:
        return [linear_chain(3)]
    if n == 4:
        return [LinkVector((1, 2)), LinkVector((2, 1))]
    if n % 2 == 1:
        return [az1_chain((n - 1) // 2)]
    return az2_family(n // 2)


@dataclass(frozen=True)
class ChainFamilyReport:
    """Which family maximizes the AZI at a given n, with value and counts.

    `family` is one of "Li" (n = 3), "pair4" (the two mirror-image
    maximizers at n = 4), "AZ1" (odd n >= 5) or "AZ2" (even n >= 6);
    `family_m` is the segment count for the AZ families.  `iso_count`
    merges mirror pairs.
    """

    n: int
    family: str
    family_m: int | None
    closed_value: Fraction
    labeled_count: int
    iso_count: int


def azi_extremal_report(n: int) -> ChainFamilyReport:
    """Family, maximum value and maximizer counts for n squares.

    For n in {3, 4} the value comes from the dynamic program (no closed
    form is claimed there); from n = 5 on it is the closed form.
    """
    if n < 3:
        raise ValueError(f"chains need n >= 3 squares here, got {n}")
    if n == 3:
        value = run_dp(_azi(), 3).best_value()
        return ChainFamilyReport(3, "Li", None, value, 1, 1)
    if n == 4:
        value = run_dp(_azi(), 4).best_value()
        return ChainFamilyReport(4, "pair4", None, value, 2, 1)
    value = azi_max_closed_form(n)
    if n % 2 == 1:
        return ChainFamilyReport(n, "AZ1", (n - 1) // 2, value, 1, 1)
    m = n // 2
    return ChainFamilyReport(n, "AZ2", m, value, (n - 6) // 2 + 1, (n - 1) // 4)


@dataclass
class VerificationReport:
    """Outcome of one verification sweep.

    Stops at the first failing check; `failure` then carries a row
    {n, claim, expected, actual, status} and `ok` is False.
    """

    name: str
    n_max: int
    ok: bool
    checks_run: int
    failure: dict | None = None
    info: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n_max": self.n_max,
            "status": "success" if self.ok else "failure",
            "checks_run": self.checks_run,
            "failure": self.failure,
            "info": self.info,
        }


def _failure(name: str, n_max: int, checks: int, n: int, claim: str, expected, actual) -> VerificationReport:
    row = {
        "n": n,
        "claim": claim,
        "expected": str(expected),
        "actual": str(actual),
        "status": "fail",
    }
    return VerificationReport(name=name, n_max=n_max, ok=False, checks_run=checks, failure=row)


def _chain_set(chains) -> set[tuple[int, ...]]:
    return {c.links for c in chains}


def _sorted_words(keys: set[tuple[int, ...]]) -> list[str]:
    return [",".join(map(str, k)) for k in sorted(keys)]


def verify_azi_maximum(
    n_max: int,
    structure_n_max: int | None = None,
    oracle_n_max: int | None = None,
) -> VerificationReport:
    """Check the AZI maximum claims for every 5 <= n <= n_max.

    Values are checked against the closed form for the whole range; the
    enumerated maximizer sets and their counts up to `structure_n_max`
    (default min(n_max, 200), since enumeration is output-sensitive);
    and everything against the exhaustive oracle up to `oracle_n_max`
    (default min(n_max, 16)).
    """
    if n_max < 5:
        raise ValueError(f"closed form stated for n >= 5, got n_max={n_max}")
    structure_n_max = min(n_max, 200) if structure_n_max is None else min(structure_n_max, n_max)
    oracle_n_max = min(n_max, 16) if oracle_n_max is None else min(oracle_n_max, n_max)
    name = "azi-maximum"
    f = _azi()
    table: DPTable = run_dp(f, n_max)
    checks = 0
    for n in range(5, n_max + 1):
        cf = azi_max_closed_form(n)
        got = table.best_value(n)
        checks += 1
        if got != cf:
            return _failure(name, n_max, checks, n, "maximum equals closed form", cf, got)
        checks += 1
        if not table.value(n, 1) > table.value(n, 2):
            return _failure(
                name, n_max, checks, n,
                "end-link-1 value strictly dominant",
                f"{table.value(n, 2)} < value(n,1)",
                table.value(n, 1),
            )
    for n in range(5, structure_n_max + 1):
        cf = azi_max_closed_form(n)
        expected = _chain_set(azi_extremal_chains(n))
        actual = _chain_set(table.chains(n))
        checks += 1
        if actual != expected:
            return _failure(
                name, n_max, checks, n, "maximizer set equals expected family",
                _sorted_words(expected), _sorted_words(actual),
            )
        labeled = table.labeled_count(n)
        expected_labeled = 1 if n % 2 == 1 else (n - 6) // 2 + 1
        checks += 1
        if labeled != expected_labeled:
            return _failure(name, n_max, checks, n, "labeled maximizer count", expected_labeled, labeled)
        iso = sum(1 for _ in table.chains(n, dedup=True))
        expected_iso = 1 if n % 2 == 1 else (n - 1) // 4
        checks += 1
        if iso != expected_iso:
            return _failure(name, n_max, checks, n, "mirror-class maximizer count", expected_iso, iso)
        for member in azi_extremal_chains(n):
            checks += 1
            direct = evaluate_direct(member, f)
            if direct != cf:
                return _failure(
                    name, n_max, checks, n,
                    f"family member {member.to_string()} attains the closed form",
                    cf, direct,
                )
    for n in range(5, oracle_n_max + 1):
        rep = oracle.exhaustive(f, n)
        cf = azi_max_closed_form(n)
        checks += 1
        if rep.max_value != cf:
            return _failure(name, n_max, checks, n, "oracle maximum equals closed form", cf, rep.max_value)
        checks += 1
        expected = _chain_set(azi_extremal_chains(n))
        actual = _chain_set(rep.argmax)
        if actual != expected:
            return _failure(
                name, n_max, checks, n, "oracle argmax equals expected family",
                _sorted_words(expected), _sorted_words(actual),
            )
    return VerificationReport(name=name, n_max=n_max, ok=True, checks_run=checks)


def verify_azi_minimum(n_max: int, oracle_n_max: int | None = None) -> VerificationReport:
    """Check the AZI minimum claims for every 3 <= n <= n_max.

    The minimizer must be uniquely the zigzag chain for n in {3, 4, 5}
    and uniquely the linear chain from n = 6 on; the classifier applied
    to the negated index must land in the zigzag-then-linear case with
    threshold 6.  The oracle confirms the sets up to `oracle_n_max`
    (default min(n_max, 16)).
    """
    if n_max < 3:
        raise ValueError(f"chains need n >= 3 squares here, got n_max={n_max}")
    oracle_n_max = min(n_max, 16) if oracle_n_max is None else min(oracle_n_max, n_max)
    name = "azi-minimum"
    f = _azi()
    neg = negate(f)
    checks = 0
    verdict = classify(neg)
    checks += 1
    if verdict.case != CASE_ZIGZAG_THEN_LINEAR or not verdict.premise_holds:
        return _failure(name, n_max, checks, 0, "negated-index classifier case",
                        CASE_ZIGZAG_THEN_LINEAR, verdict.case)
    checks += 1
    if verdict.n_star != 6:
        return _failure(name, n_max, checks, 0, "zigzag-to-linear threshold", 6, verdict.n_star)
    table = run_dp(neg, n_max)
    for n in range(3, n_max + 1):
        expected = {zigzag_chain(n).links} if n <= 5 else {linear_chain(n).links}
        actual = _chain_set(table.chains(n))
        checks += 1
        if actual != expected:
            return _failure(
                name, n_max, checks, n, "minimizer set",
                _sorted_words(expected), _sorted_words(actual),
            )
        checks += 1
        if table.labeled_count(n) != 1:
            return _failure(name, n_max, checks, n, "unique minimizer", 1, table.labeled_count(n))
    for n in range(3, oracle_n_max + 1):
        rep = oracle.exhaustive(f, n)
        expected = {zigzag_chain(n).links} if n <= 5 else {linear_chain(n).links}
        actual = _chain_set(rep.argmin)
        checks += 1
        if actual != expected:
            return _failure(
                name, n_max, checks, n, "oracle argmin set",
                _sorted_words(expected), _sorted_words(actual),
            )
    report = VerificationReport(name=name, n_max=n_max, ok=True, checks_run=checks)
    report.info["tie_at_threshold"] = verdict.tie_at_threshold
    return report
