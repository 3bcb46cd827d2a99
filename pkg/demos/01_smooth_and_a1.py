"""Indices on a smooth line and on the node x^2 + y^2 = 0.

On a smooth germ the index of a single 1-form is the colength of its
coefficient ideal, so x^m dx has index m.  On the node the ideal also
contains the equation and the 2 x 2 minor of (df | omega).
"""

from equindex import corpus, gsv_index
from equindex.equivariant import assemble_ideal, fixed_names
from equindex.polyring import format_polynomial


def show(name):
    problem = corpus.problem(name)
    names = fixed_names(problem)
    ideal = ", ".join(format_polynomial(g, names) for g in assemble_ideal(problem))
    report = gsv_index(problem, oracle=True)
    print(f"{name:20s} ideal ({ideal})")
    print(f"{'':20s} index {report.value}, oracle {report.oracle.status}")


for m in ("smooth_x_dx", "smooth_x2_dx", "smooth_x3_dx", "smooth_x5_dx"):
    show(m)

print()
# dx has no zero, yet the singular point of the node still counts twice;
# x dx - y dy also vanishes at the origin and the count rises to 4
show("a1_dx")
show("a1_xdx_minus_ydy")
