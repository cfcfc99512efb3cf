"""Deciding isomorphism of graded path algebras.

Two presentations are first screened by vertex count, adjacency
conjugacy and dimension matrices.  Surviving vertex permutations are then
searched for block maps on the arrows.  Over a prime field the search is
exhaustive, so a failed search is a proof of non-isomorphism.
"""

import itertools

from quiveralg import GF, HomogeneousIdeal, PathAlgebra, Quiver, search_graded_iso, truncated_groebner

F = GF(5)
Q = Quiver(["u", "v"], [("a", "u", "u"), ("b", "v", "v"), ("c", "v", "u"), ("d", "u", "v")])
A = PathAlgebra(Q, F)


def C(q1, q2):
    return truncated_groebner(HomogeneousIdeal(A, [A("a*d") - A("d*b").scale(q1), A("c*a") - A("b*c").scale(q2)]), 3)


cert = search_graded_iso(C(1, 1), C(2, 2))
print("C(1,1) vs C(2,2):", cert.verdict, cert.map)

cert = search_graded_iso(C(1, 1), C(2, 3))
print("C(1,1) vs C(2,3):", cert.verdict, "after", cert.witness["maps_checked"], "maps")

# the whole family over F5, grouped into isomorphism classes
params = list(itertools.product(range(1, 5), repeat=2))
bases = {q: C(*q) for q in params}
classes = []
for q in params:
    for cls in classes:
        if search_graded_iso(bases[cls[0]], bases[q]).verdict == "isomorphic":
            cls.append(q)
            break
    else:
        classes.append([q])
print(f"{len(params)} members of C(q1, q2) over F5 fall into {len(classes)} classes:")
for cls in classes:
    print("  ", cls)

# A#G against C(1,1): the dimension screen separates them at degree 2,
# and exhausting every block map without the screen agrees
asg = truncated_groebner(HomogeneousIdeal(A, [A("a*a - d*c"), A("b*b - c*d")]), 3)
print("A#G vs C(1,1), screened:", search_graded_iso(asg, C(1, 1)).witness)
print("A#G vs C(1,1), exhaustive:", search_graded_iso(asg, C(1, 1), screen=False).witness)
