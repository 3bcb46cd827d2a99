"""Chern obstruction as a difference of two indices.

A generic linear collection is sampled from two seeded streams; their
indices must agree, and the obstruction is index(omega) - index(generic).
"""

from equindex import chern_obstruction, corpus

print(f"{'problem':26s} {'index':>5s} {'generic':>7s} {'chern':>5s}   seeds 0..4")
for name in corpus.CORPUS:
    problem = corpus.problem(name)
    reports = [chern_obstruction(problem, seed=s) for s in range(5)]
    first = reports[0]
    stable = "stable" if len({r.value for r in reports}) == 1 else "UNSTABLE"
    print(f"{name:26s} {first.index.value:5d} {first.generic.value:7d} {first.value:5d}   {stable}")
