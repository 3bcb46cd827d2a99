"""Conservation of number under a small deformation.

Shifting every generator of the index ideal by a small constant splits the
special point into several simple ones.  When nothing arrives from
infinity their total equals the local index.
"""

from fractions import Fraction

from equindex import corpus
from equindex.conservation import conserve, conserve_ideal, DeformationSpec
from equindex.polyring import parse

eps = Fraction(1, 7)
for name in ("smooth_x3_dx", "a1_xdx_minus_ydy", "escape", "z3_threefold"):
    report = conserve(corpus.problem(name), eps)
    print(name)
    for line in report.lines():
        print("  " + line)
    print("  deformed ideal: " + "; ".join(report.deformed))

# x^2 - x^3 has a double root at 0 and a simple one at 1
g = [parse("x^2 - x^3", ["x"])]
report = conserve_ideal(g, 1, DeformationSpec(eps), ["x"])
print("x^2 - x^3")
for line in report.lines():
    print("  " + line)
