"""Quivers: finite directed multigraphs with loops and parallel arrows.

Vertices and arrows carry string names; internally everything is indexed
densely in declaration order, and all matrices use those indices.
Permutations are plain tuples ``sigma`` with ``sigma[u]`` the image of ``u``.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple

import numpy as np


class Arrow(NamedTuple):
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple
    _vindex: dict = field(init=False, repr=False, compare=False)
    _aindex: dict = field(init=False, repr=False, compare=False)

    def __init__(self, vertices, arrows):
        vertices = tuple(str(v) for v in vertices)
        arrows = tuple(Arrow(*map(str, a)) for a in arrows)
        if not vertices:
            raise ValueError("a quiver needs at least one vertex")
        if len(set(vertices)) != len(vertices):
            raise ValueError(f"duplicate vertex names in {vertices}")
        names = [a.name for a in arrows]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate arrow names in {names}")
        vset = set(vertices)
        for a in arrows:
            if a.source not in vset or a.target not in vset:
                raise ValueError(f"arrow {a.name}: {a.source}->{a.target} uses an unknown vertex")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "_vindex", {v: i for i, v in enumerate(vertices)})
        object.__setattr__(self, "_aindex", {a.name: i for i, a in enumerate(arrows)})
        # source/target indices per arrow index, used in hot loops
        object.__setattr__(self, "src", tuple(self._vindex[a.source] for a in arrows))
        object.__setattr__(self, "tgt", tuple(self._vindex[a.target] for a in arrows))

    @property
    def n(self):
        return len(self.vertices)

    def vertex_index(self, v):
        if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
            if 0 <= v < self.n:
                return int(v)
            raise ValueError(f"vertex index {v} out of range")
        try:
            return self._vindex[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def arrow_index(self, name):
        try:
            return self._aindex[name]
        except KeyError:
            raise ValueError(f"unknown arrow {name!r}") from None

    def arrows_between(self, u, v):
        """Indices of arrows ``u -> v`` in declaration order."""
        u, v = self.vertex_index(u), self.vertex_index(v)
        return [i for i in range(len(self.arrows)) if self.src[i] == u and self.tgt[i] == v]

    def out_arrows(self, u):
        return [i for i in range(len(self.arrows)) if self.src[i] == u]


def adjacency_matrix(Q):
    """``M[u, v]`` is the number of arrows from ``u`` to ``v``."""
    M = np.zeros((Q.n, Q.n), dtype=np.int64)
    for s, t in zip(Q.src, Q.tgt):
        M[s, t] += 1
    return M


def path_count(Q, u, v, length):
    """Number of length-``length`` paths from ``u`` to ``v``: an entry of ``M**length``."""
    u, v = Q.vertex_index(u), Q.vertex_index(v)
    if length < 0:
        raise ValueError("length must be non-negative")
    M = adjacency_matrix(Q).astype(object)
    P = np.linalg.matrix_power(M, length) if length else np.eye(Q.n, dtype=np.int64).astype(object)
    return int(P[u, v])


def permutation_matrix(sigma):
    """``P`` with ``P[sigma[u], u] = 1``, so that ``P @ e_u = e_sigma(u)``."""
    n = len(sigma)
    P = np.zeros((n, n), dtype=np.int64)
    for u, w in enumerate(sigma):
        P[w, u] = 1
    return P


def conjugate(M, sigma):
    """``P M P^-1``: entry ``(sigma u, sigma v)`` of the result is ``M[u, v]``."""
    M = np.asarray(M)
    out = np.zeros_like(M)
    idx = np.asarray(sigma)
    out[np.ix_(idx, idx)] = M
    return out


def invert_permutation(sigma):
    inv = [0] * len(sigma)
    for u, w in enumerate(sigma):
        inv[w] = u
    return tuple(inv)


def _check_permutation(sigma, n):
    sigma = tuple(int(s) for s in sigma)
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise ValueError(f"{sigma} is not a permutation of {n} vertices")
    return sigma


def relabel(Q, sigma):
    """Move the vertex at index ``u`` to index ``sigma[u]``; names and arrows are kept."""
    sigma = _check_permutation(sigma, Q.n)
    verts = [None] * Q.n
    for u, w in enumerate(sigma):
        verts[w] = Q.vertices[u]
    return Quiver(verts, Q.arrows)


def _signature(M, i):
    return int(M[i, :].sum()), int(M[:, i].sum()), int(M[i, i])


def conjugacy_permutations(M, N):
    """All ``sigma`` with ``N = P M P^-1``, in lexicographic order.

    Vertices are only matched when their (out-degree, in-degree, loop count)
    signatures agree; the remaining search is a backtracking extension that
    checks every assigned pair of rows.
    """
    M, N = np.asarray(M), np.asarray(N)
    if M.shape != N.shape or M.ndim != 2 or M.shape[0] != M.shape[1]:
        return []
    n = M.shape[0]
    sigM = [_signature(M, i) for i in range(n)]
    sigN = [_signature(N, i) for i in range(n)]
    if sorted(sigM) != sorted(sigN):
        return []
    allowed = [[w for w in range(n) if sigN[w] == sigM[u]] for u in range(n)]
    out = []
    sigma = []
    used = [False] * n

    def extend(u):
        if u == n:
            out.append(tuple(sigma))
            return
        for w in allowed[u]:
            if used[w]:
                continue
            if all(M[u, i] == N[w, sigma[i]] and M[i, u] == N[sigma[i], w] for i in range(u)):
                used[w] = True
                sigma.append(w)
                extend(u + 1)
                sigma.pop()
                used[w] = False

    extend(0)
    return out


def enumerate_paths(Q, length, u=None, v=None):
    """All composable arrow-index sequences of the given length (brute force)."""
    if length == 0:
        return [()] if (u is None or v is None or u == v) else []
    out = []
    for seq in product(range(len(Q.arrows)), repeat=length):
        if any(Q.tgt[seq[k - 1]] != Q.src[seq[k]] for k in range(1, length)):
            continue
        s, t = Q.src[seq[0]], Q.tgt[seq[-1]]
        if (u is not None and s != u) or (v is not None and t != v):
            continue
        out.append(seq)
    return out
