"""Graded dimensions of quotient path algebras.

A truncated Gröbner basis gives normal forms up to a degree bound, and
counting normal words gives dim(A_n) for each pair of vertices.  An
independent oracle (rank of the span of x*g*y in each degree) confirms
the numbers.
"""

from quiveralg import HomogeneousIdeal, PathAlgebra, Quiver, oracle_dimension_matrices, truncated_groebner


def show(title, ideal, D=5):
    G = truncated_groebner(ideal, D)
    oracle = oracle_dimension_matrices(ideal, D)
    print(title)
    print("  basis:", G.elements)
    for n, (m, o) in enumerate(zip(G.dimension_matrices(), oracle)):
        flag = "ok" if (m == o).all() else "MISMATCH"
        print(f"  degree {n}: {m.tolist()}  ({flag})")


# k<x, y>/(yx - xy) is the commutative polynomial ring in two variables
Q1 = Quiver(["o"], [("x", "o", "o"), ("y", "o", "o")])
A1 = PathAlgebra(Q1)
show("commutative polynomial ring", HomogeneousIdeal(A1, [A1("y*x - x*y")]))

# the C(q1, q2) family on the two-vertex quiver
Q2 = Quiver(["u", "v"], [("a", "u", "u"), ("b", "v", "v"), ("c", "v", "u"), ("d", "u", "v")])
A2 = PathAlgebra(Q2)
show("C(1, 1)", HomogeneousIdeal(A2, [A2("a*d - d*b"), A2("c*a - b*c")]))
show("A#G presentation", HomogeneousIdeal(A2, [A2("a*a - d*c"), A2("b*b - c*d")]))

G = truncated_groebner(HomogeneousIdeal(A2, [A2("a*d - d*b"), A2("c*a - b*c")]), 4)
print("normal form of d*b in C(1, 1):", G.normal_form(A2("d*b")))
