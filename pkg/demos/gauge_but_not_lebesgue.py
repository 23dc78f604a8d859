"""A derivative whose gauge integral is 0 while |it| has infinite integral.

phi is the derivative of x^2 sin(pi/x^2) glued symmetrically on [0, 1].
Newton-Leibniz gives its Kurzweil integral exactly; the Hake rows show
the cutoff integrals collapsing quadratically; and the peak sums below
certify that |phi| is not Lebesgue integrable.
"""

from fractions import Fraction

from realcert.oscillator import (OscCombination, Oscillator, alexiewicz_norm,
                                 hake_table, kurzweil_integral,
                                 nonlebesgue_witness, osc_eval)
from realcert.rational import pow2

phi = Oscillator(kind="derivative")

total = kurzweil_integral(phi, 0, 1)
print(f"Kurzweil integral over [0, 1]: [{total.lo}, {total.hi}] (exact zero)")

print()
print("Hake cutoffs: integral over [eps, 1] as eps shrinks")
for eps in (Fraction(1, 3), Fraction(2, 7), Fraction(3, 10)):
    row = hake_table(phi, [eps])[0]
    shown = row.integral.outward(48)
    print(f"  eps = {eps}: [{shown.lo}, {shown.hi}]"
          f"  (|.| <= 4 eps^2 = {4 * eps * eps})")
# at dyadic cutoffs the primitive vanishes and the row is exactly [0, 0]
row = hake_table(phi, [pow2(-6)])[0]
print(f"  eps = 1/64: [{row.integral.lo}, {row.integral.hi}]  (exact)")

print()
print("but |phi| is huge near 0: certified peak sums")
for bar in (1, 4):
    wit = nonlebesgue_witness(phi, bar)
    print(f"  bar {bar}: first {wit.K} peak(s) already integrate to"
          f" {wit.partial_sum} >= {bar}; one peak fewer gives {wit.sum_before}")

x = Fraction(7, 16)
val = osc_eval(phi, x, 96).outward(48)
print()
print(f"a sample value: phi({x}) is in [{val.lo}, {val.hi}]")

norm = alexiewicz_norm(OscCombination.of({1: 1}), Fraction(1, 1000))
shown = norm.outward(48)
print(f"Alexiewicz norm of the depth-1 copy: [{shown.lo}, {shown.hi}]"
      f" (width <= 1/1000)")
