"""Removing relations of degree 0 and 1.

A relation e_v kills a vertex and a linear relation between arrows
eliminates one of them.  Pruning does both until only relations of
degree at least 2 remain, without changing the quotient algebra.  The
tangent dimension then equals the adjacency matrix.
"""

from pathlib import Path

from quiveralg import HomogeneousIdeal, parse_quiver, prune_low_degree, tangent_dimension, truncated_groebner
from quiveralg.dsl import format_quiver

src = parse_quiver((Path(__file__).parent / "data" / "unpruned.qv").read_text())
print(format_quiver(src.name, src.ideal))

# a Gröbner basis refuses e_3, but the linear relation alone shows the drop
A = src.algebra
G = truncated_groebner(HomogeneousIdeal(A, [A("a - b")]), 2)
print("tangent dimension with only a - b imposed:", tangent_dimension(G, require_pruned=False).tolist())

P = prune_low_degree(src.ideal)
print(format_quiver(src.name, P))
print("tangent dimension after pruning:", tangent_dimension(truncated_groebner(P, 2)).tolist())
