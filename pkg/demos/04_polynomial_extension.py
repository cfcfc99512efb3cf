"""The polynomial extension A[t] as a path algebra with relations.

Adding a loop t_v at each vertex, with t_u*a = a*t_v for every arrow
a: u -> v, presents A[t].  The adjacency matrix grows by the identity and
each graded piece of A[t] is the running sum of those of A.
"""

import numpy as np

from quiveralg import HomogeneousIdeal, PathAlgebra, Quiver, adjacency_matrix, polynomial_extension, truncated_groebner
from quiveralg.dsl import format_quiver

Q = Quiver(["u", "v"], [("a", "u", "u"), ("b", "v", "v"), ("c", "v", "u"), ("d", "u", "v")])
A = PathAlgebra(Q)
I = HomogeneousIdeal(A, [A("a*d - d*b"), A("c*a - b*c")])
E = polynomial_extension(I)
print(format_quiver("C11_t", E))
print("adjacency of A[t]:", adjacency_matrix(E.quiver).tolist())

base = truncated_groebner(I, 4).dimension_matrices()
ext = truncated_groebner(E, 4).dimension_matrices()
running = np.zeros_like(base[0])
for n in range(5):
    running = running + base[n]
    print(f"degree {n}: A[t] {ext[n].tolist()}, running sum of A {running.tolist()}")
