"""Isomorphism invariants and the necessary-condition screen.

Any algebra isomorphism of path algebras with homogeneous relations (no
relations in degree 0 or 1) has equally many vertices on both sides and
conjugates the adjacency matrices by a vertex permutation.  A graded path
algebra isomorphism with vertex permutation ``sigma`` in addition
conjugates every dimension matrix ``dim(A_n)`` by the same ``sigma``.
Those facts give the screen in :func:`iso_necessary`.
"""

from dataclasses import dataclass, field

import numpy as np

from .groebner import TruncationError
from .linalg import nullspace
from .pathalg import PathPoly
from .quiver import adjacency_matrix, conjugacy_permutations, conjugate, invert_permutation


def tangent_dimension(G, require_pruned=True):
    """The matrix ``S[u, v] = dim((e_u J e_v + J^2) / J^2)`` for the irrelevant ideal ``J``.

    ``J / J^2`` is the degree-one part of ``A``, so ``S`` counts normal arrows
    between each pair of vertices.  It never exceeds the adjacency matrix
    and equals it once low-degree relations are pruned.
    """
    if require_pruned and not G.ideal.is_pruned():
        raise ValueError("ideal has generators of degree < 2; run prune_low_degree first")
    if G.complete_upto < 1:
        raise TruncationError("tangent dimension needs a basis certified in degree 1")
    S = G.dimension_matrix(1)
    M = adjacency_matrix(G.quiver)
    if np.any(S > M):
        raise AssertionError(f"tangent dimension {S.tolist()} exceeds adjacency {M.tolist()}")
    return S


def central_degree_one(G):
    """Basis of the degree-one part of the centre of ``A``.

    A degree-one ``z`` is central iff it commutes with every ``e_u`` and
    every arrow: those elements generate ``A`` as an algebra, and the
    commutator ``[z, -]`` is a derivation, so it vanishes on ``A`` once it
    vanishes on generators.  Both conditions are linear in the coefficients
    of ``z`` and live in degrees 1 and 2.
    """
    if G.complete_upto < 2:
        raise TruncationError("the degree-one centre needs a basis certified in degree 2")
    A, F, Q = G.algebra, G.field, G.quiver
    basis1 = [p for u in range(Q.n) for v in range(Q.n) for p in G.monomial_basis(1, u, v)]
    xs = [A.monomial(p) for p in basis1]
    testers = [A.idempotent(u) for u in range(Q.n)] + [A.arrow(i) for i in range(len(Q.arrows))]

    # column k of the system is the commutator of the k-th basis element
    columns = []
    for x in xs:
        col = {}
        for i, t in enumerate(testers):
            for p, c in G.normal_form(x * t - t * x).terms():
                col[(i, p)] = c
        columns.append(col)
    keys = sorted({k for col in columns for k in col}, key=lambda k: (k[0], k[1].sort_key()))
    rows = [[col.get(k, F.zero) for col in columns] for k in keys]
    out = []
    for vec in nullspace(rows, len(xs), F):
        out.append(PathPoly(A, {p: c for p, c in zip(basis1, vec)}))
    return out


@dataclass
class IsoCertificate:
    """Outcome of an isomorphism screen or search.

    ``verdict`` is ``"non-isomorphic"``, ``"candidates"`` or ``"isomorphic"``.
    A negative verdict always carries a witness that can be rechecked.
    """

    verdict: str
    witness: dict
    candidates: list = field(default_factory=list)
    map: object = None
    field: str = ""
    degree: int = 0

    def to_dict(self):
        d = {
            "verdict": self.verdict,
            "witness": self.witness,
            "candidates": [list(s) for s in self.candidates],
            "field": self.field,
            "degree": self.degree,
        }
        if self.map is not None:
            d["map"] = self.map.to_dict()
        return d


def _tolist(M):
    return np.asarray(M).tolist()


def iso_necessary(GA, GB, D=None):
    """Screen vertex permutations by adjacency and dimension-matrix conjugacy up to degree ``D``."""
    D = min(GA.complete_upto, GB.complete_upto) if D is None else D
    if D > GA.complete_upto or D > GB.complete_upto:
        raise TruncationError(
            f"screen degree {D} exceeds certified degrees {GA.complete_upto}, {GB.complete_upto}"
        )
    fname = GA.field.name
    nA, nB = GA.quiver.n, GB.quiver.n
    if nA != nB:
        return IsoCertificate("non-isomorphic", {"kind": "vertex-count", "A": nA, "B": nB}, field=fname, degree=D)
    MA, MB = adjacency_matrix(GA.quiver), adjacency_matrix(GB.quiver)
    perms = conjugacy_permutations(MA, MB)
    if not perms:
        return IsoCertificate(
            "non-isomorphic", {"kind": "adjacency", "A": _tolist(MA), "B": _tolist(MB)}, field=fname, degree=D
        )
    for n in range(2, D + 1):
        dA, dB = GA.dimension_matrix(n), GB.dimension_matrix(n)
        survivors = [s for s in perms if np.array_equal(conjugate(dA, s), dB)]
        if not survivors:
            return IsoCertificate(
                "non-isomorphic",
                {
                    "kind": "dimension",
                    "degree": n,
                    "A": _tolist(dA),
                    "B": _tolist(dB),
                    "permutations": [list(s) for s in perms],
                },
                field=fname,
                degree=D,
            )
        perms = survivors
    return IsoCertificate("candidates", {"kind": "screen-passed", "degree": D}, candidates=perms, field=fname, degree=D)


def transpose_witness(w):
    """The same witness read with the two algebras swapped."""
    w = dict(w)
    if "A" in w:
        w["A"], w["B"] = w["B"], w["A"]
    if "permutations" in w:
        w["permutations"] = sorted(list(invert_permutation(s)) for s in w["permutations"])
    return w


def recheck_witness(w):
    """Replay a negative screen witness; ``True`` when it still proves non-isomorphism."""
    kind = w["kind"]
    if kind == "vertex-count":
        return w["A"] != w["B"]
    if kind == "adjacency":
        return not conjugacy_permutations(np.array(w["A"]), np.array(w["B"]))
    if kind == "dimension":
        A, B = np.array(w["A"]), np.array(w["B"])
        return not any(np.array_equal(conjugate(A, s), B) for s in w["permutations"])
    raise ValueError(f"witness kind {kind!r} is not replayable by a single check")
