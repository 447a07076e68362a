"""Polyomino chains encoded as link vectors.

A polyomino chain is a planar arrangement of unit squares in which every
square shares a side with at most two others.  Chains are grown one
square at a time, each new square glued to the right of or below the
previous one.  Starting from the two-square chain, the attachment of
square k (k >= 3) either keeps the current growth direction (link type
1) or turns it (link type 2), so a chain with n squares is fully
described by its word of n - 2 link types.

This module owns that encoding and the purely structural operations on
it: lattice realization, the degree-pair multiset of the corner graph,
segment decomposition, the named chain families, and mirror-symmetry
canonicalization.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator

__all__ = [
    "LinkVector",
    "linear_chain",
    "zigzag_chain",
    "az1_chain",
    "az2_family",
    "realize",
    "edge_degree_multiset",
    "segments",
    "canonical_reversal",
]

_RIGHT = (1, 0)
_DOWN = (0, -1)


class LinkVector:
    """Immutable word over {1, 2} recording how each square attaches.

    Entry j (0-based) is the link type of square j + 3, i.e. the link
    chosen when the (j+3)-th square was glued on; the empty vector is
    the two-square chain.  ``link_at(k)`` reads an entry by square
    number (3 <= k <= n) instead of by storage index.
    """

    __slots__ = ("_links",)

    def __init__(self, links: Iterable[int] = ()) -> None:
        links = tuple(links)
        for x in links:
            if x not in (1, 2):
                raise ValueError(f"invalid link {x!r}: links must be 1 or 2")
        self._links = links

    @property
    def links(self) -> tuple[int, ...]:
        return self._links

    @property
    def square_count(self) -> int:
        return len(self._links) + 2

    def link_at(self, position: int) -> int:
        """Link type of the square at absolute position 3..n."""
        if not 3 <= position <= self.square_count:
            raise IndexError(f"no link at square {position} (n = {self.square_count})")
        return self._links[position - 3]

    def reverse(self) -> "LinkVector":
        return LinkVector(reversed(self._links))

    @classmethod
    def from_string(cls, text: str) -> "LinkVector":
        """Parse a comma-separated word such as ``"1,2,2,1"`` ("" is allowed)."""
        text = text.strip()
        if not text:
            return cls()
        out = []
        for tok in text.split(","):
            tok = tok.strip()
            if tok not in ("1", "2"):
                raise ValueError(f"invalid link {tok!r}: links must be 1 or 2")
            out.append(int(tok))
        return cls(out)

    def to_string(self) -> str:
        return ",".join(str(x) for x in self._links)

    def __len__(self) -> int:
        return len(self._links)

    def __iter__(self) -> Iterator[int]:
        return iter(self._links)

    def __getitem__(self, idx):
        return self._links[idx]

    def __eq__(self, other) -> bool:
        if isinstance(other, LinkVector):
            return self._links == other._links
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._links)

    def __lt__(self, other: "LinkVector") -> bool:
        return self._links < other._links

    def __repr__(self) -> str:
        return f"LinkVector([{self.to_string()}])"


def _as_links(chain) -> tuple[int, ...]:
    if isinstance(chain, LinkVector):
        return chain.links
    return LinkVector(chain).links


def linear_chain(n: int) -> LinkVector:
    """All squares glued straight on: the n-square linear chain."""
    if n < 2:
        raise ValueError(f"a chain needs at least 2 squares, got n={n}")
    return LinkVector((1,) * (n - 2))


def zigzag_chain(n: int) -> LinkVector:
    """Every square turns: the n-square zigzag chain."""
    if n < 2:
        raise ValueError(f"a chain needs at least 2 squares, got n={n}")
    return LinkVector((2,) * (n - 2))


def az1_chain(m: int) -> LinkVector:
    """Chain with m segments, all of length 3 (augmented zigzag, type 1).

    The word is (1, 2,1, 2,1, ...): one leading straight link followed by
    m - 1 turn/straight pairs, giving n = 2m + 1 squares.
    """
    if m < 2:
        raise ValueError(f"augmented zigzag of type 1 needs m >= 2 segments, got {m}")
    return LinkVector((1,) + (2, 1) * (m - 1))


def az2_family(m: int) -> list[LinkVector]:
    """All chains with m segments of length 3 except one internal segment of length 2.

    These are the augmented zigzags of type 2 with n = 2m squares.  The
    family has m - 2 labeled members, the i-th being (1,2)^i (2,1)^(m-1-i)
    for i = 1..m-2; consecutive turns at the junction produce the single
    short internal segment.
    """
    if m < 3:
        raise ValueError(f"augmented zigzag of type 2 needs m >= 3 segments, got {m}")
    return [
        LinkVector((1, 2) * i + (2, 1) * (m - 1 - i))
        for i in range(1, m - 1)
    ]


def realize(chain) -> tuple[tuple[int, int], ...]:
    """Lattice cells of the chain, one (x, y) per square.

    The first two squares sit at (0,0) and (1,0); growth starts to the
    right, a type-1 link keeps the current direction and a type-2 link
    toggles between rightward and downward.
    """
    links = _as_links(chain)
    cells = [(0, 0), (1, 0)]
    x, y = 1, 0
    d = _RIGHT
    for link in links:
        if link == 2:
            d = _DOWN if d == _RIGHT else _RIGHT
        x += d[0]
        y += d[1]
        cells.append((x, y))
    assert len(set(cells)) == len(cells)  # right/below growth cannot collide
    return tuple(cells)


def edge_degree_multiset(chain) -> Counter:
    """Multiset of endpoint-degree pairs over the edges of the chain graph.

    The graph has a vertex at every corner of every unit square and an
    edge along every unit side.  Keys are unordered pairs (a, b) with
    a <= b; a chain of n squares always has 3n + 1 edges and degrees in
    {2, 3, 4}.
    """
    cells = realize(chain)
    edges = set()
    for x, y in cells:
        sw, se, ne, nw = (x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)
        for a, b in ((sw, se), (nw, ne), (sw, nw), (se, ne)):
            edges.add((a, b))
    degree: Counter = Counter()
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    pairs: Counter = Counter()
    for a, b in edges:
        da, db = degree[a], degree[b]
        pairs[(da, db) if da <= db else (db, da)] += 1
    return pairs


def segments(chain) -> tuple[int, ...]:
    """Segment lengths l_1..l_m of the chain.

    A segment is a maximal straight run of squares together with the
    adjacent kink (or terminal square); kinks are shared by two
    segments, so the lengths satisfy sum(l_i) = n + m - 1.  With turns
    at absolute square positions p_1 < ... < p_k this is
    (p_1 - 1, p_2 - p_1 + 1, ..., p_k - p_{k-1} + 1, n - p_k + 2).
    """
    links = _as_links(chain)
    n = len(links) + 2
    turns = [k for k, link in enumerate(links, start=3) if link == 2]
    if not turns:
        return (n,)
    lengths = [turns[0] - 1]
    lengths.extend(b - a + 1 for a, b in zip(turns, turns[1:]))
    lengths.append(n - turns[-1] + 2)
    return tuple(lengths)


def canonical_reversal(chain) -> LinkVector:
    """Lexicographic minimum of a link word and its reverse.

    Reading a chain from the other end mirrors it, so two chains are
    congruent up to that symmetry exactly when their canonical forms
    coincide.
    """
    links = _as_links(chain)
    rev = links[::-1]
    return LinkVector(min(links, rev))
