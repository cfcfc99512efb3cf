"""Counting paths with powers of the adjacency matrix.

The number of paths of length l from u to v is the (u, v) entry of M^l.
We check this against brute-force enumeration on the two-vertex quiver
used throughout the demos: loops a at u and b at v, plus c: v -> u and
d: u -> v.
"""

import numpy as np

from quiveralg import PathAlgebra, Quiver, adjacency_matrix, path_count

Q = Quiver(["u", "v"], [("a", "u", "u"), ("b", "v", "v"), ("c", "v", "u"), ("d", "u", "v")])
M = adjacency_matrix(Q)
print("adjacency matrix:")
print(M)

A = PathAlgebra(Q)
for length in range(5):
    P = np.linalg.matrix_power(M, length)
    listed = [[len(A.paths(length, u, v)) for v in range(Q.n)] for u in range(Q.n)]
    print(f"length {length}: M^l = {P.tolist()}, enumerated = {listed}")

# path composition is left to right: a*d means a, then d
print("paths u -> v of length 2:", [A.format_path(p) for p in A.paths(2, "u", "v")])
print("path_count(u, v, 5) =", path_count(Q, "u", "v", 5))
