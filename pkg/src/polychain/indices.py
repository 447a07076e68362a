"""Degree-based index functions and the two chain evaluators.

A degree-based index assigns a graph the sum of f(d_u, d_v) over its
edges, for a symmetric function f of the endpoint degrees.  On polyomino
chains only the six unordered degree pairs over {2, 3, 4} ever occur, so
an index is fully specified by a six-entry table.

Values are carried either as exact rationals (`fractions.Fraction`,
arbitrary precision) or as 64-bit floats with a relative comparison
tolerance.  A single computation never mixes the two modes.

Two evaluators are provided: `evaluate_direct` builds the chain graph
and sums over its edges, while `evaluate_recursive` accumulates the
per-square attachment increments of `increment_table`.  They agree on
every chain, which the test suite exploits heavily.
"""

from __future__ import annotations

import json
import math
import re
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .chains import edge_degree_multiset

__all__ = [
    "Value",
    "RATIONAL",
    "FLOAT",
    "DEFAULT_EPS",
    "DEGREE_PAIRS",
    "PRESET_NAMES",
    "IndexFunction",
    "IncrementTable",
    "increment_table",
    "evaluate_direct",
    "evaluate_recursive",
    "preset",
    "negate",
    "force_float",
    "load_custom_index",
    "values_equal",
    "as_exact_string",
    "as_decimal_string",
]

Value = Union[Fraction, float]

RATIONAL = "rational"
FLOAT = "float"
DEFAULT_EPS = 1e-9

DEGREE_PAIRS = ((2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4))

PRESET_NAMES = (
    "azi",
    "zagreb1",
    "zagreb2",
    "randic",
    "abc",
    "ga",
    "harmonic",
    "sum_connectivity",
)


def values_equal(a: Value, b: Value, eps: float | None = None) -> bool:
    """Mode-aware equality: exact for rationals, relative-eps for floats.

    Float equality means |a - b| <= eps * max(1, |a|, |b|).  Comparing a
    rational against a float is refused: mixing arithmetic modes inside
    one computation is an error, not a coercion.
    """
    a_rat = isinstance(a, (Fraction, int))
    b_rat = isinstance(b, (Fraction, int))
    if a_rat != b_rat:
        raise TypeError(f"mixed arithmetic modes: {type(a).__name__} vs {type(b).__name__}")
    if a_rat:
        return a == b
    if eps is None:
        eps = DEFAULT_EPS
    return abs(a - b) <= eps * max(1.0, abs(a), abs(b))


def as_exact_string(v: Value) -> str | None:
    """"p/q" rendering of a rational value; None for float-mode values."""
    if isinstance(v, (Fraction, int)):
        f = Fraction(v)
        return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)
    return None


def as_decimal_string(v: Value) -> str:
    """Approximate 10-significant-digit decimal rendering."""
    return format(float(v), "#.10g")


@dataclass(frozen=True)
class IndexFunction:
    """Six-entry degree-pair table defining one index.

    `values` maps each unordered pair (a, b), a <= b, over {2, 3, 4} to
    its f(a, b).  Rational mode stores Fractions; float mode stores
    floats compared with relative tolerance `eps`.
    """

    name: str
    values: Mapping[tuple[int, int], Value]
    mode: str = RATIONAL
    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if self.mode not in (RATIONAL, FLOAT):
            raise ValueError(f"unknown arithmetic mode {self.mode!r}")
        if not self.eps > 0:
            raise ValueError(f"negative eps: tolerance must be positive, got {self.eps}")
        missing = [p for p in DEGREE_PAIRS if p not in self.values]
        if missing:
            a, b = missing[0]
            raise ValueError(f"pair ({a},{b}) absent from index table")
        extra = [p for p in self.values if p not in DEGREE_PAIRS]
        if extra:
            raise ValueError(f"unsupported degree pair {extra[0]} in index table")
        norm = {}
        for pair in DEGREE_PAIRS:
            v = self.values[pair]
            if self.mode == RATIONAL:
                if isinstance(v, float):
                    raise ValueError(f"float value {v!r} in rational-mode table")
                norm[pair] = Fraction(v)
            else:
                norm[pair] = float(v)
        object.__setattr__(self, "values", norm)

    @property
    def is_rational(self) -> bool:
        return self.mode == RATIONAL

    def value(self, a: int, b: int) -> Value:
        """f(a, b) for degrees a, b in {2, 3, 4} (order irrelevant)."""
        if a > b:
            a, b = b, a
        try:
            return self.values[(a, b)]
        except KeyError:
            raise ValueError(
                f"degrees ({a},{b}) outside the chain-graph domain {{2,3,4}}"
            ) from None


@dataclass(frozen=True)
class IncrementTable:
    """Per-attachment index increments and the two-square base value.

    g(j, i) is the gain in index value when a square is attached with
    link i after a link j; g2 is the gain of the very first attachment
    when it turns, g11 doubling as the straight first attachment.  The
    base value is that of the two-square chain.  The identity
    g2 + g21 == g11 + g12 holds for every index table.
    """

    g11: Value
    g12: Value
    g21: Value
    g22: Value
    g2: Value
    base: Value
    mode: str = RATIONAL
    eps: float = DEFAULT_EPS

    def step(self, j: int, i: int) -> Value:
        if j == 1:
            return self.g11 if i == 1 else self.g12
        return self.g21 if i == 1 else self.g22

    def initial(self, i: int) -> Value:
        """Index value of the three-square chain ending with link i."""
        return self.base + (self.g11 if i == 1 else self.g2)


def increment_table(f: IndexFunction) -> IncrementTable:
    """Attachment increments of an index, from its six table entries."""
    f22, f23, f24 = f.value(2, 2), f.value(2, 3), f.value(2, 4)
    f33, f34, f44 = f.value(3, 3), f.value(3, 4), f.value(4, 4)
    return IncrementTable(
        g11=3 * f33,
        g12=3 * f34 + f24 + f23 - 2 * f33,
        g21=f34 - f24 + f23 + 2 * f33,
        g22=f44 + 2 * f24,
        g2=2 * f34 + 2 * f24 - f33,
        base=4 * f23 + 2 * f22 + f33,
        mode=f.mode,
        eps=f.eps,
    )


def evaluate_direct(chain, f: IndexFunction) -> Value:
    """Index value summed edge-by-edge over the realized chain graph."""
    total = Fraction(0) if f.is_rational else 0.0
    for (a, b), mult in edge_degree_multiset(chain).items():
        total += mult * f.value(a, b)
    return total


def evaluate_recursive(chain, f: IndexFunction) -> Value:
    """Index value accumulated square-by-square via the increment table.

    Agrees with `evaluate_direct` on every chain; this form costs O(n)
    arithmetic operations instead of building the graph.
    """
    links = chain.links if hasattr(chain, "links") else tuple(chain)
    gt = increment_table(f)
    if not links:
        return gt.base
    total = gt.initial(links[0])
    for j, i in zip(links, links[1:]):
        total += gt.step(j, i)
    return total


def negate(f: IndexFunction) -> IndexFunction:
    """Entrywise negation; maximizing the result minimizes the original."""
    return IndexFunction(
        name=f.name + "_neg",
        values={pair: -v for pair, v in f.values.items()},
        mode=f.mode,
        eps=f.eps,
    )


def force_float(f: IndexFunction, eps: float = DEFAULT_EPS) -> IndexFunction:
    """Float-mode copy of an index (for tolerance experiments)."""
    return IndexFunction(
        name=f.name,
        values={pair: float(v) for pair, v in f.values.items()},
        mode=FLOAT,
        eps=eps,
    )


def _integer_root(x: int, q: int) -> int | None:
    if x < 0:
        return None
    r = round(x ** (1.0 / q)) if x > 0 else 0
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**q == x:
            return c
    return None


def _exact_pow(base: Fraction, exponent: Fraction) -> Fraction | None:
    """base**exponent as an exact Fraction, or None when irrational."""
    if exponent == 0:
        return Fraction(1)
    p, q = exponent.numerator, exponent.denominator
    num = _integer_root(base.numerator, q)
    den = _integer_root(base.denominator, q)
    if num is None or den is None:
        return None
    root = Fraction(num, den)
    return root**p if p >= 0 else 1 / root ** (-p)


def _table(fn) -> dict:
    return {(a, b): fn(a, b) for a, b in DEGREE_PAIRS}


def preset(name: str, gamma: Fraction | int | str | None = None, eps: float = DEFAULT_EPS) -> IndexFunction:
    """Built-in index by name.

    Rational presets: azi with f(x,y) = (xy/(x+y-2))**3, zagreb1 (x+y),
    zagreb2 (xy), harmonic (2/(x+y)).  Float presets (relative tolerance
    `eps`): abc sqrt((x+y-2)/(xy)), ga 2*sqrt(xy)/(x+y), sum_connectivity
    (x+y)**-0.5.  randic((xy)**gamma, default gamma -1/2) is rational
    exactly when gamma makes all six entries rational, float otherwise.
    """
    if name != "randic" and gamma is not None:
        raise ValueError(f"gamma only applies to the randic preset, not {name!r}")
    if name == "azi":
        return IndexFunction(
            "azi", _table(lambda x, y: Fraction(x * y, x + y - 2) ** 3)
        )
    if name == "zagreb1":
        return IndexFunction("zagreb1", _table(lambda x, y: Fraction(x + y)))
    if name == "zagreb2":
        return IndexFunction("zagreb2", _table(lambda x, y: Fraction(x * y)))
    if name == "harmonic":
        return IndexFunction("harmonic", _table(lambda x, y: Fraction(2, x + y)))
    if name == "randic":
        if gamma is None:
            gamma = Fraction(-1, 2)
        g = Fraction(gamma)
        label = f"randic({g})"
        exact = {(a, b): _exact_pow(Fraction(a * b), g) for a, b in DEGREE_PAIRS}
        if all(v is not None for v in exact.values()):
            return IndexFunction(label, exact)
        return IndexFunction(
            label, _table(lambda x, y: float(x * y) ** float(g)), mode=FLOAT, eps=eps
        )
    if name == "abc":
        return IndexFunction(
            "abc", _table(lambda x, y: math.sqrt((x + y - 2) / (x * y))), mode=FLOAT, eps=eps
        )
    if name == "ga":
        return IndexFunction(
            "ga", _table(lambda x, y: 2.0 * math.sqrt(x * y) / (x + y)), mode=FLOAT, eps=eps
        )
    if name == "sum_connectivity":
        return IndexFunction(
            "sum_connectivity", _table(lambda x, y: (x + y) ** -0.5), mode=FLOAT, eps=eps
        )
    raise ValueError(f"unknown index preset {name!r} (choose from {', '.join(PRESET_NAMES)})")


_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_DECIMAL_RE = re.compile(r"^[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?$")


def _parse_rational(text: str, where: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed rational {text!r} for {where}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in value for {where}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def _parse_decimal(text: str, where: str) -> float:
    text = text.strip()
    if not _DECIMAL_RE.match(text):
        raise ValueError(f"malformed decimal {text!r} for {where}")
    return float(text)


def load_custom_index(document: Mapping | str) -> IndexFunction:
    """Build an IndexFunction from a JSON-compatible document.

    Expected shape::

        {"name": "azi", "mode": "rational",        # or "float"
         "eps": 1e-9,                               # optional, float mode
         "values": {"2,2": "8", ..., "4,4": "512/27"}}

    Rational-mode values are strict "p/q" strings (optional sign,
    integer, optional "/" integer); float-mode values are decimal
    literals.  Every one of the six pairs must be present.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ValueError(f"index document is not valid JSON: {exc}") from None
    if not isinstance(document, Mapping):
        raise ValueError("index document must be a JSON object")
    name = document.get("name")
    if not isinstance(name, str) or not name:
        raise ValueError("index document needs a non-empty 'name'")
    mode = document.get("mode", RATIONAL)
    if mode not in (RATIONAL, FLOAT):
        raise ValueError(f"unknown arithmetic mode {mode!r}")
    eps = document.get("eps", DEFAULT_EPS)
    if not isinstance(eps, (int, float)) or not float(eps) > 0:
        raise ValueError(f"negative eps: tolerance must be positive, got {eps!r}")
    raw = document.get("values")
    if not isinstance(raw, Mapping):
        raise ValueError("index document needs a 'values' object")
    values: dict[tuple[int, int], Value] = {}
    for key, text in raw.items():
        parts = [p.strip() for p in str(key).split(",")]
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ValueError(f"malformed pair key {key!r} (expected 'a,b')")
        a, b = int(parts[0]), int(parts[1])
        if (a, b) not in DEGREE_PAIRS:
            raise ValueError(f"unsupported degree pair ({a},{b}) (need a<=b over {{2,3,4}})")
        if not isinstance(text, str):
            text = str(text)
        where = f"pair ({a},{b})"
        if mode == RATIONAL:
            values[(a, b)] = _parse_rational(text, where)
        else:
            values[(a, b)] = _parse_decimal(text, where)
    missing = [p for p in DEGREE_PAIRS if p not in values]
    if missing:
        a, b = missing[0]
        raise ValueError(f"pair ({a},{b}) absent from index document")
    return IndexFunction(name, values, mode=mode, eps=float(eps))
