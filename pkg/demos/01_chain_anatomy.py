#!/usr/bin/env python3
"""Tour of the chain encoding: link words, lattice cells, segments, families.

Run:  python demos/01_chain_anatomy.py
"""

from polychain import (
    LinkVector,
    az1_chain,
    az2_family,
    canonical_reversal,
    linear_chain,
    realize,
    segments,
    zigzag_chain,
)


def sketch(chain) -> str:
    """Tiny ASCII rendering of the occupied lattice cells."""
    cells = set(realize(chain))
    xs = [x for x, _ in cells]
    ys = [y for _, y in cells]
    rows = []
    for y in range(max(ys), min(ys) - 1, -1):
        rows.append("".join("[]" if (x, y) in cells else "  " for x in range(min(xs), max(xs) + 1)))
    return "\n".join(rows)


print("=" * 72)
print("CHAIN ENCODING")
print("=" * 72)
print()
print("A chain with n squares is a word of n - 2 links: 1 keeps the")
print("current growth direction, 2 turns it.  The empty word is the")
print("two-square chain.")
print()

for word in ("", "1,1", "1,2,2,1", "2,2,2"):
    chain = LinkVector.from_string(word)
    print(f"word {word or '(empty)':>10}   n = {chain.square_count}   cells: {list(realize(chain))}")
    print(sketch(chain))
    print()

print("=" * 72)
print("SEGMENTS")
print("=" * 72)
print()
print("A segment is a maximal straight run plus its adjacent kink;")
print("kinks belong to two segments, so sum(lengths) = n + m - 1.")
print()
for word in ("1,1,1", "1,2,1", "1,2,2,1", "2,2,2,2"):
    chain = LinkVector.from_string(word)
    lengths = segments(chain)
    n, m = chain.square_count, len(lengths)
    print(f"  {word:<10} -> segments {lengths}   (n={n}, m={m}, sum={sum(lengths)})")
print()

print("=" * 72)
print("NAMED FAMILIES")
print("=" * 72)
print()
print(f"linear  Li_6 : {linear_chain(6).to_string()}   segments {segments(linear_chain(6))}")
print(f"zigzag  Z_6  : {zigzag_chain(6).to_string()}   segments {segments(zigzag_chain(6))}")
print(f"AZ1, m=4     : {az1_chain(4).to_string()}   segments {segments(az1_chain(4))}")
print("AZ2, m=5     :")
for member in az2_family(5):
    print(f"   {member.to_string():<18} segments {segments(member)}")
print()

print("Mirror symmetry: reading a chain from the other end gives a")
print("congruent chain.  The canonical form is the lexicographic minimum")
print("of the word and its reverse:")
print()
for member in az2_family(5):
    canon = canonical_reversal(member)
    tag = "palindrome" if canon == member else f"canonical {canon.to_string()}"
    print(f"   {member.to_string():<18} -> {tag}")
classes = {canonical_reversal(c) for c in az2_family(5)}
print(f"\n   {len(az2_family(5))} labeled chains, {len(classes)} mirror classes")
