"""Homogeneous ideals of kQ, degree-truncated Gröbner bases and normal forms.

Monomials are ordered by length, then source, then target, then
lexicographically on arrow indices (declaration order).  Every ideal here is
generated by bihomogeneous elements, so completion runs degree by degree:
once all overlaps of degree ``d`` are processed the basis is exact in every
degree ``<= d``.  The ``complete_upto`` field records that horizon; nothing
above it is ever claimed.

:func:`oracle_dimension_matrix` computes the same dimensions by plain rank
computations on spans of ``x * g * y`` and shares no code with the
completion.
"""

from collections import defaultdict

import numpy as np

from .linalg import sparse_rank
from .pathalg import Path, PathAlgebra, PathPoly, concat_paths
from .quiver import Quiver


class TruncationError(ValueError):
    """A request went past the degree up to which a basis is certified."""


class HomogeneousIdeal:
    """Two-sided ideal of a path algebra generated by bihomogeneous elements."""

    def __init__(self, algebra, generators=()):
        gens = []
        for g in generators:
            if not isinstance(g, PathPoly) or g.algebra != algebra:
                raise ValueError(f"generator {g!r} is not an element of {algebra}")
            if not g.is_homogeneous():
                comps = g.components()
                a, b = comps[0], comps[1]
                V = algebra.quiver.vertices
                raise ValueError(
                    f"generator {g!r} is not homogeneous: it mixes {a[3]!r} "
                    f"({V[a[0]]} -> {V[a[1]]}, length {a[2]}) and {b[3]!r} ({V[b[0]]} -> {V[b[1]]}, length {b[2]})"
                )
            if g:
                gens.append(g)
        self.algebra = algebra
        self.generators = tuple(gens)

    @property
    def quiver(self):
        return self.algebra.quiver

    @property
    def field(self):
        return self.algebra.field

    def max_degree(self):
        return max((g.degree() for g in self.generators), default=0)

    def is_pruned(self):
        return all(g.degree() >= 2 for g in self.generators)

    def __repr__(self):
        return f"HomogeneousIdeal({list(self.quiver.vertices)}, {list(self.generators)})"

    def __eq__(self, other):
        return (
            isinstance(other, HomogeneousIdeal)
            and self.algebra == other.algebra
            and set(self.generators) == set(other.generators)
        )

    def __hash__(self):
        return hash((self.algebra, frozenset(self.generators)))

    def transfer(self, algebra):
        """The same generators, read by arrow and vertex names in another algebra."""
        return HomogeneousIdeal(algebra, [transfer(g, algebra) for g in self.generators])


def transfer(f, algebra):
    """Rewrite ``f`` in ``algebra`` by matching vertex and arrow names."""
    Q0, Q1 = f.algebra.quiver, algebra.quiver
    vmap = [Q1.vertex_index(v) for v in Q0.vertices]
    amap = [Q1.arrow_index(a.name) for a in Q0.arrows]
    terms = {}
    for p, c in f.terms():
        if p.arrows:
            q = Path(vmap[p.source], vmap[p.target], tuple(amap[a] for a in p.arrows))
        else:
            q = Path(vmap[p.source], vmap[p.source])
        terms[q] = algebra.field(c) if algebra.field != f.field else c
    return PathPoly(algebra, terms)


def _substitute(f, algebra, vmap, images):
    """Image of ``f`` under a substitution of arrows by linear combinations of arrows.

    ``vmap[v]`` is the new index of vertex ``v`` or ``None`` if it is deleted;
    ``images[a]`` lists ``(new_arrow, coeff)`` pairs.
    """
    F = algebra.field
    Q = algebra.quiver
    out = defaultdict(lambda: F.zero)
    for p, c in f.terms():
        if not p.arrows:
            if vmap[p.source] is not None:
                w = vmap[p.source]
                out[Path(w, w)] = F.add(out[Path(w, w)], c)
            continue
        partial = {(): c}
        for a in p.arrows:
            nxt = defaultdict(lambda: F.zero)
            for word, x in partial.items():
                for b, y in images[a]:
                    nxt[word + (b,)] = F.add(nxt[word + (b,)], F.mul(x, y))
            partial = nxt
        for word, x in partial.items():
            q = Path(Q.src[word[0]], Q.tgt[word[-1]], word)
            out[q] = F.add(out[q], x)
    return PathPoly(algebra, dict(out))


def prune_low_degree(ideal):
    """Remove degree-0 and degree-1 generators without changing the quotient.

    A generator ``c * e_v`` deletes vertex ``v``: every path through ``v``
    lies in the ideal, so those terms are dropped from the other generators.
    A generator ``sum c_k a_k`` of parallel arrows eliminates its leading
    arrow by substitution.  Repeats until every generator has degree >= 2.
    """
    while True:
        alg = ideal.algebra
        Q, F = alg.quiver, alg.field
        low = [g for g in ideal.generators if g.degree() <= 1]
        if not low:
            return ideal
        g = min(low, key=lambda g: g.degree())
        rest = [h for h in ideal.generators if h is not g]
        if g.degree() == 0:
            (p, _), = g.terms()
            v = p.source
            if Q.n == 1:
                raise ValueError("the ideal contains the identity; the quotient is zero")
            keep = [a for a in Q.arrows if a.source != Q.vertices[v] and a.target != Q.vertices[v]]
            newQ = Quiver([w for w in Q.vertices if w != Q.vertices[v]], keep)
            vmap = [None if w == v else newQ.vertex_index(Q.vertices[w]) for w in range(Q.n)]
            images = [
                [(newQ.arrow_index(a.name), F.one)] if a in keep else []
                for a in Q.arrows
            ]
        else:
            (lead, lc), *tail = g.terms()
            j = lead.arrows[0]
            inv = F.neg(F.inv(lc))
            keep = [a for i, a in enumerate(Q.arrows) if i != j]
            newQ = Quiver(Q.vertices, keep)
            vmap = list(range(Q.n))
            images = []
            for i, a in enumerate(Q.arrows):
                if i == j:
                    images.append([(newQ.arrow_index(Q.arrows[p.arrows[0]].name), F.mul(inv, c)) for p, c in tail])
                else:
                    images.append([(newQ.arrow_index(a.name), F.one)])
        new_alg = PathAlgebra(newQ, F)
        ideal = HomogeneousIdeal(new_alg, [_substitute(h, new_alg, vmap, images) for h in rest])


class TruncatedGB:
    """Reduced Gröbner basis of a homogeneous ideal, exact up to ``complete_upto``.

    Built by :func:`truncated_groebner`.  The basis is stored as rewrite
    rules ``leading word -> tail`` on arrow-index tuples.
    """

    def __init__(self, ideal, degree, rules, complete_upto):
        self.ideal = ideal
        self.degree = degree
        self.complete_upto = complete_upto
        self._rules = rules
        self._lengths = sorted({len(m) for m in rules})
        self._nf_cache = {}
        self._normal_words = {}

    @property
    def algebra(self):
        return self.ideal.algebra

    @property
    def quiver(self):
        return self.ideal.quiver

    @property
    def field(self):
        return self.ideal.field

    order = "deglex: length, source, target, then arrows left to right"

    @property
    def elements(self):
        """The basis as monic elements, in increasing order of leading term."""
        F, Q = self.field, self.quiver
        out = []
        for m in sorted(self._rules, key=lambda m: (len(m), Q.src[m[0]], Q.tgt[m[0]], m)):
            terms = {Path(Q.src[m[0]], Q.tgt[m[-1]], m): F.one}
            for t, c in self._rules[m].items():
                terms[Path(Q.src[t[0]], Q.tgt[t[-1]], t)] = F.neg(c)
            out.append(PathPoly(self.algebra, terms))
        return out

    def leading_words(self):
        return sorted(self._rules)

    def _find(self, word):
        rules = self._rules
        n = len(word)
        for ell in self._lengths:
            if ell > n:
                break
            for i in range(n - ell + 1):
                if word[i:i + ell] in rules:
                    return i, word[i:i + ell]
        return None

    def _reduce(self, f):
        """Fully reduce a dict of same-length words."""
        F = self.field
        rules = self._rules
        f = dict(f)
        out = {}
        while f:
            m = max(f)
            c = f.pop(m)
            hit = self._find(m)
            if hit is None:
                out[m] = c
                continue
            i, lm = hit
            A, C = m[:i], m[i + len(lm):]
            for t, a in rules[lm].items():
                w = A + t + C
                y = F.add(f.get(w, F.zero), F.mul(c, a))
                if F.is_zero(y):
                    f.pop(w, None)
                else:
                    f[w] = y
        return out

    def _check_degree(self, d):
        if d > self.complete_upto:
            raise TruncationError(
                f"degree {d} exceeds the certified degree {self.complete_upto} "
                f"(truncation D={self.degree}); recompute with a larger truncation"
            )

    def word_normal_form(self, word):
        """Normal form of a nontrivial path given by its arrow tuple, as a dict."""
        nf = self._nf_cache.get(word)
        if nf is None:
            self._check_degree(len(word))
            nf = self._reduce({word: self.field.one})
            self._nf_cache[word] = nf
        return nf

    def normal_form(self, f):
        """Normal form of ``f``: zero exactly when ``f`` lies in the ideal."""
        if f.algebra != self.algebra:
            raise ValueError("element does not belong to this algebra")
        F = self.field
        out = defaultdict(lambda: F.zero)
        for p, c in f.terms():
            if not p.arrows:
                out[p] = F.add(out[p], c)
                continue
            for w, a in self.word_normal_form(p.arrows).items():
                q = Path(p.source, p.target, w)
                out[q] = F.add(out[q], F.mul(c, a))
        return PathPoly(self.algebra, dict(out))

    def reduces_to_zero(self, f):
        return not self.normal_form(f)

    def is_normal(self, word):
        return self._find(tuple(word)) is None

    def _words(self, n):
        if n in self._normal_words:
            return self._normal_words[n]
        Q = self.quiver
        if n == 1:
            words = [(a,) for a in range(len(Q.arrows)) if (a,) not in self._rules]
        else:
            words = []
            for w in self._words(n - 1):
                for a in Q.out_arrows(Q.tgt[w[-1]]):
                    x = w + (a,)
                    if not any(x[-ell:] in self._rules for ell in self._lengths if ell <= n):
                        words.append(x)
        self._normal_words[n] = words
        return words

    def monomial_basis(self, n, u, v):
        """Irreducible paths of length ``n`` from ``u`` to ``v``: a basis of ``e_u A_n e_v``."""
        self._check_degree(n)
        Q = self.quiver
        u, v = Q.vertex_index(u), Q.vertex_index(v)
        if n == 0:
            return [Path(u, u)] if u == v else []
        return [Path(u, v, w) for w in self._words(n) if Q.src[w[0]] == u and Q.tgt[w[-1]] == v]

    def dimension_matrix(self, n):
        self._check_degree(n)
        Q = self.quiver
        if n == 0:
            return np.eye(Q.n, dtype=np.int64)
        M = np.zeros((Q.n, Q.n), dtype=np.int64)
        for w in self._words(n):
            M[Q.src[w[0]], Q.tgt[w[-1]]] += 1
        return M

    def dimension_matrices(self, D=None):
        """Matrices ``dim(A_n)_{uv}`` for ``n = 0..D``."""
        D = self.complete_upto if D is None else D
        self._check_degree(D)
        return [self.dimension_matrix(n) for n in range(D + 1)]


DEFAULT_TRUNCATION = 8


def truncated_groebner(ideal, D=DEFAULT_TRUNCATION):
    """Homogeneous Buchberger completion restricted to overlaps of degree ``<= D``."""
    if any(g.degree() == 0 for g in ideal.generators):
        raise ValueError("degree-0 generator present; apply prune_low_degree first")
    if D < ideal.max_degree():
        raise ValueError(f"truncation {D} is below the maximal generator degree {ideal.max_degree()}")
    F = ideal.field
    gb = TruncatedGB(ideal, D, {}, 0)
    rules = gb._rules

    by_degree = defaultdict(list)
    for g in ideal.generators:
        by_degree[g.degree()].append({p.arrows: c for p, c in g.terms()})
    pairs = defaultdict(set)

    for d in range(1, D + 1):
        todo = list(by_degree[d])
        for m, n, k in sorted(pairs.pop(d, ())):
            # w = m + n[k:] = m[:-k] + n, the two rewrites of w differ by this
            A, C = m[:-k], n[k:]
            s = {}
            for t, c in rules[n].items():
                s[A + t] = F.add(s.get(A + t, F.zero), c)
            for t, c in rules[m].items():
                s[t + C] = F.sub(s.get(t + C, F.zero), c)
            todo.append({w: c for w, c in s.items() if not F.is_zero(c)})

        new = []
        for f in todo:
            r = gb._reduce(f)
            if not r:
                continue
            lm = max(r)
            inv = F.inv(r.pop(lm))
            rules[lm] = {t: F.neg(F.mul(inv, c)) for t, c in r.items()}
            gb._lengths = sorted({len(m) for m in rules})
            new.append(lm)
        for lm in new:
            rules[lm] = gb._reduce(rules[lm])

        seen = set()
        for m in new:
            for n in list(rules):
                for x, y in ((m, n), (n, m)):
                    for k in range(1, min(len(x), len(y))):
                        if x[-k:] == y[:k] and len(x) + len(y) - k <= D and (x, y, k) not in seen:
                            seen.add((x, y, k))
                            pairs[len(x) + len(y) - k].add((x, y, k))
        gb.complete_upto = d

    gb._nf_cache.clear()
    gb._normal_words.clear()
    return gb


def oracle_dimension_matrix(ideal, n):
    """``dim(A_n)_{uv}`` by brute force: paths minus the rank of ``{x g y}``."""
    alg = ideal.algebra
    Q, F = alg.quiver, alg.field
    M = np.zeros((Q.n, Q.n), dtype=np.int64)
    gens = []
    for g in ideal.generators:
        (p, _), = g.terms()[:1]
        gens.append((p.source, p.target, p.length, g.terms()))
    for u in range(Q.n):
        for v in range(Q.n):
            basis = alg.paths(n, u, v)
            index = {p: i for i, p in enumerate(basis)}
            vectors = []
            for s, t, k, terms in gens:
                if k > n:
                    continue
                for i in range(n - k + 1):
                    for x in alg.paths(i, u, s):
                        for y in alg.paths(n - k - i, t, v):
                            vec = {}
                            for p, c in terms:
                                w = concat_paths(concat_paths(x, p), y)
                                vec[index[w]] = F.add(vec.get(index[w], F.zero), c)
                            vectors.append(vec)
            M[u, v] = len(basis) - sparse_rank(vectors, F)
    return M


def oracle_dimension_matrices(ideal, D):
    return [oracle_dimension_matrix(ideal, n) for n in range(D + 1)]
