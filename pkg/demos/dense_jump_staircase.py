"""Jumps at every rational: the enumerated staircase and its algebra.

The base function adds 2^-i at the i-th rational of the Calkin-Wilf
enumeration.  Its jump at that rational is exactly 2^-i; products and
exponential multiples keep a certified nonzero jump densely, which the
search below pins down inside an arbitrary window.
"""

from fractions import Fraction

from realcert.jumps import (ShiftCombination, SqrtShift, enum_index,
                            enum_rational, expand_generator_polynomial,
                            jump_enclosure, jump_search, staircase_polynomial,
                            variation_bounds)

print("enumeration of the rationals in (0, 1):")
firsts = [enum_rational(i) for i in range(1, 8)]
print("  " + ", ".join(str(q) for q in firsts) + ", ...")
print(f"  index of 2/5: {enum_index(Fraction(2, 5))}")

stair = staircase_polynomial()
print()
print("staircase jumps are exact points:")
for i in (1, 6, 40):
    got = jump_enclosure(stair, enum_rational(i))
    print(f"  at q_{i} = {enum_rational(i)}: jump = {got.value.lo}"
          f" (nonzero certified: {got.certified_nonzero})")

# e^x times the staircase still jumps at every rational; search a window
poly = expand_generator_polynomial({(1,): 1}, (1,))
lo, hi = Fraction(2, 5) - Fraction(1, 100), Fraction(2, 5) + Fraction(1, 100)
hit = jump_search(poly, lo, hi, Fraction(1, 30),
                  index_budget=10**5, terms=64, precision=128)
shown = hit.jump.outward(48)
print()
print(f"certified jump of e^x * f inside [{lo}, {hi}]:")
print(f"  at q_{hit.index} = {hit.point}, via the {hit.via} route")
print(f"  jump enclosure [{shown.lo}, {shown.hi}] excludes zero")

# shifted copies stay far apart in variation: 2 f_{v1} + 3 f_{v2}
combo = ShiftCombination(((Fraction(2), SqrtShift(1)),
                         (Fraction(3), SqrtShift(2))))
vb = variation_bounds(combo)
print()
print("variation of 2 f_shift(sqrt2) + 3 f_shift(sqrt3):")
print(f"  lower {vb.lower} <= V <= upper {vb.upper} (exact rationals)")
