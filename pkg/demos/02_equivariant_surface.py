"""Z/2 acting on C^3 by z -> -z, and the surface x^2 + y^2 + z^2 = 0.

The fixed plane z = 0 carries the trivial block.  A sign-character form
only has a dz component, and its Schur matrix lives on the sign block;
a trivial-character form uses the equation's derivatives on x and y.
"""

from equindex import corpus, gsv_index, schur_matrix
from equindex.equivariant import fixed_names
from equindex.polyring import format_polynomial


for name in ("z2_sign_x_dz", "z2_trivial_xdx_minus_ydy", "z2_sign_equation", "z3_threefold"):
    problem = corpus.problem(name)
    names = fixed_names(problem)
    print(name)
    for i, pair in enumerate(problem.profile):
        rows = schur_matrix(problem, i)
        print(f"  pair {i}: character {pair.character}, k = {pair.k}, "
              f"matrix {len(rows)} x {len(rows[0])}")
        for row in rows:
            print("    [" + ", ".join(format_polynomial(e, names) for e in row) + "]")
    report = gsv_index(problem, oracle=True)
    print(f"  index {report.value} ({report.oracle.status}), standard-basis corners {list(report.leading_exponents)}")
    print()
