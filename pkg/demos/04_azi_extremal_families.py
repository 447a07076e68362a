#!/usr/bin/env python3
"""The augmented Zagreb index story: families, closed form, exact counts.

Run:  python demos/04_azi_extremal_families.py
"""

from itertools import product

from polychain import (
    azi_extremal_chains,
    azi_extremal_report,
    azi_max_closed_form,
    evaluate_direct,
    maximize,
    preset,
    run_dp,
    segments,
)

azi = preset("azi")

print("=" * 72)
print("ALL SIXTEEN 6-SQUARE CHAINS")
print("=" * 72)
print()
scores = sorted(
    ((evaluate_direct(links, azi), links) for links in product((1, 2), repeat=4)),
    reverse=True,
)
for value, links in scores:
    mark = " <- max" if value == scores[0][0] else (" <- min" if value == scores[-1][0] else "")
    print(f"   {','.join(map(str, links))}   {float(value):.3f}{mark}")
print()
print("The maximizer 1,2,2,1 has segments", segments((1, 2, 2, 1)), "- all length")
print("3 except one internal 2 - and the minimizer is the linear chain.")
print()

print("=" * 72)
print("THE EXTREMAL FAMILIES")
print("=" * 72)
print()
print("Odd n: the unique maximizer is the all-threes chain AZ1.")
print("Even n: the maximizers are the AZ2 family, one short internal segment.")
print()
print(" n  family  value                 labeled  mirror-classes")
for n in range(5, 21):
    rep = azi_extremal_report(n)
    fam = f"{rep.family}({rep.family_m})"
    print(f"{n:>2}  {fam:<7} {str(rep.closed_value):<21} {rep.labeled_count:<8} {rep.iso_count}")
print()

print("Members for n = 14:")
for member in azi_extremal_chains(14):
    print(f"   {member.to_string():<26} segments {segments(member)}")
print()

print("=" * 72)
print("CLOSED FORM VS THE ENGINE")
print("=" * 72)
print()
print("max AZI = (4456/125) n - 26763/2000 - (2312/3375 if n is even)")
print()
table = run_dp(azi, 5000)
worst = max(range(5, 5001), key=lambda n: abs(float(table.best_value(n) - azi_max_closed_form(n))))
print(f"checked n = 5..5000 exactly: largest deviation at n={worst}: "
      f"{table.best_value(worst) - azi_max_closed_form(worst)}")
res = maximize(azi, 10**6)
print(f"n = 1,000,000: engine {res.value}")
print(f"               formula {azi_max_closed_form(10**6)}")
print(f"               equal: {res.value == azi_max_closed_form(10**6)}")
