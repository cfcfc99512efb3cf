"""Graded path algebra isomorphisms and the search for them.

An algebra isomorphism between two path algebras with relations generated in
degree >= 2 can always be replaced by a graded one: a vertex permutation
``sigma`` plus, for each pair ``(u, v)``, an invertible matrix sending the
arrows ``u -> v`` to combinations of the arrows ``sigma(u) -> sigma(v)``.
Searching those maps therefore decides plain isomorphism.

Block convention: row ``k`` of the block at ``(u, v)`` is the image of the
``k``-th arrow ``u -> v`` (declaration order) in the basis of arrows
``sigma(u) -> sigma(v)`` of the codomain.
"""

import itertools
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from fractions import Fraction

import numpy as np

from .fields import PrimeField, Rationals
from .groebner import HomogeneousIdeal, TruncationError, transfer
from .invariants import IsoCertificate, iso_necessary
from .linalg import inverse, is_invertible
from .pathalg import Path, PathAlgebra, PathPoly
from .quiver import Quiver, adjacency_matrix, conjugacy_permutations, invert_permutation

STRATEGIES = ("exhaustive", "monomial", "diagonal")


class GradedMap:
    """A vertex permutation together with one square block per arrow class."""

    def __init__(self, domain, codomain, sigma, blocks):
        QA, QB = domain.quiver, codomain.quiver
        if QA.n != QB.n or sorted(sigma) != list(range(QA.n)):
            raise ValueError(f"{sigma} is not a permutation of {QA.n} vertices")
        F = domain.field
        if codomain.field != F:
            raise ValueError("domain and codomain have different fields")
        self.domain, self.codomain = domain, codomain
        self.sigma = tuple(int(s) for s in sigma)
        self.blocks = {}
        images = [None] * len(QA.arrows)
        for u in range(QA.n):
            for v in range(QA.n):
                xs = QA.arrows_between(u, v)
                ys = QB.arrows_between(self.sigma[u], self.sigma[v])
                if len(xs) != len(ys):
                    raise ValueError(f"arrow counts differ: {len(xs)} at {(u, v)} vs {len(ys)} at its image")
                if not xs:
                    continue
                C = blocks.get((u, v))
                if C is None or len(C) != len(xs) or any(len(row) != len(xs) for row in C):
                    raise ValueError(f"block at {(u, v)} must be {len(xs)}x{len(xs)}")
                C = tuple(tuple(F(c) for c in row) for row in C)
                self.blocks[(u, v)] = C
                for k, x in enumerate(xs):
                    images[x] = [(y, c) for y, c in zip(ys, C[k]) if not F.is_zero(c)]
        self._images = images

    @property
    def field(self):
        return self.domain.field

    def is_invertible(self):
        return all(is_invertible(C, self.field) for C in self.blocks.values())

    def inverse(self):
        inv = invert_permutation(self.sigma)
        blocks = {(self.sigma[u], self.sigma[v]): inverse(C, self.field) for (u, v), C in self.blocks.items()}
        return GradedMap(self.codomain, self.domain, inv, blocks)

    def image_words(self, terms):
        """Image of ``[(arrow tuple, coeff)]`` as a dict over codomain arrow tuples."""
        return _image_words(self._images, terms, self.field)

    def __call__(self, f):
        if f.algebra != self.domain:
            raise ValueError("element is not in the domain of this map")
        F, QB = self.field, self.codomain.quiver
        out = {}
        for p, c in f.terms():
            if not p.arrows:
                w = self.sigma[p.source]
                q = Path(w, w)
                out[q] = F.add(out.get(q, F.zero), c)
        for w, c in self.image_words([(p.arrows, c) for p, c in f.terms() if p.arrows]).items():
            q = Path(QB.src[w[0]], QB.tgt[w[-1]], w)
            out[q] = F.add(out.get(q, F.zero), c)
        return PathPoly(self.codomain, out)

    def to_dict(self):
        F = self.field
        return {
            "sigma": list(self.sigma),
            "blocks": [
                {"source": u, "target": v, "matrix": [[F.format(c) for c in row] for row in C]}
                for (u, v), C in sorted(self.blocks.items())
            ],
        }

    def __repr__(self):
        return f"GradedMap(sigma={self.sigma}, blocks={ {k: [list(r) for r in C] for k, C in self.blocks.items()} })"


def identity_map(algebra):
    Q = algebra.quiver
    F = algebra.field
    blocks = {}
    for u in range(Q.n):
        for v in range(Q.n):
            m = len(Q.arrows_between(u, v))
            if m:
                blocks[(u, v)] = [[F.one if i == j else F.zero for j in range(m)] for i in range(m)]
    return GradedMap(algebra, algebra, tuple(range(Q.n)), blocks)


def apply_graded_map(phi, f):
    """``phi(f)``: idempotents follow ``sigma``, arrows follow their blocks."""
    return phi(f)


def _image_words(images, terms, F):
    out = {}
    for word, c in terms:
        partial = {(): c}
        for a in word:
            img = images[a]
            nxt = {}
            for w, x in partial.items():
                for b, y in img:
                    key = w + (b,)
                    nxt[key] = F.add(nxt.get(key, F.zero), F.mul(x, y))
            partial = nxt
            if not partial:
                break
        for w, x in partial.items():
            out[w] = F.add(out.get(w, F.zero), x)
    return out


def _kills(images, gens, G):
    """True when every generator maps into the ideal described by ``G``."""
    F = G.field
    for terms in gens:
        acc = {}
        for w, c in _image_words(images, terms, F).items():
            if F.is_zero(c):
                continue
            for m, a in G.word_normal_form(w).items():
                acc[m] = F.add(acc.get(m, F.zero), F.mul(c, a))
        if any(not F.is_zero(x) for x in acc.values()):
            return False
    return True


def _gen_terms(ideal):
    return [[(p.arrows, c) for p, c in g.terms()] for g in ideal.generators]


def _check_certified(GA, GB):
    if GB.complete_upto < GA.ideal.max_degree() or GA.complete_upto < GB.ideal.max_degree():
        raise TruncationError(
            "both bases must be certified up to the other side's maximal generator degree "
            f"(have {GA.complete_upto}, {GB.complete_upto}; need {GB.ideal.max_degree()}, {GA.ideal.max_degree()})"
        )
    if not GA.ideal.is_pruned() or not GB.ideal.is_pruned():
        raise ValueError("ideals must be pruned (generators of degree >= 2)")


def is_graded_isomorphism(phi, GA, GB):
    """Check that ``phi`` and its blockwise inverse both respect the relations.

    Then ``phi`` induces ``A -> B``, the inverse induces ``B -> A``, and the
    composites fix all arrows and idempotents, so both are isomorphisms.
    """
    _check_certified(GA, GB)
    if phi.domain != GA.algebra or phi.codomain != GB.algebra:
        raise ValueError("map does not go between the given algebras")
    if not phi.is_invertible():
        return False
    if not _kills(phi._images, _gen_terms(GA.ideal), GB):
        return False
    return _kills(phi.inverse()._images, _gen_terms(GB.ideal), GA)


def _invertible_matrices(F, m):
    """All invertible ``m x m`` matrices over a prime field, entries row-major lexicographic."""
    for entries in itertools.product(range(F.p), repeat=m * m):
        C = [list(entries[i * m:(i + 1) * m]) for i in range(m)]
        if is_invertible(C, F):
            yield C


def _monomial_matrices(F, m, scalars):
    for perm in itertools.permutations(range(m)):
        for scal in itertools.product(scalars, repeat=m):
            C = [[F.zero] * m for _ in range(m)]
            for i, (j, s) in enumerate(zip(perm, scal)):
                C[i][j] = s
            yield C


def _block_keys(QA):
    return [(u, v) for u in range(QA.n) for v in range(QA.n) if QA.arrows_between(u, v)]


def _search_sigma(GA, GB, sigma, strategy):
    """Search maps over one vertex permutation. Returns ``(map or None, maps checked)``."""
    A, B, F = GA.algebra, GB.algebra, GA.field
    QA = A.quiver
    keys = _block_keys(QA)
    sizes = [len(QA.arrows_between(u, v)) for u, v in keys]
    if strategy == "diagonal":
        return _solve_scalings(GA, GB, sigma, [tuple(range(m)) for m in sizes])
    if strategy == "monomial" and isinstance(F, Rationals):
        checked = 0
        for perms in itertools.product(*(itertools.permutations(range(m)) for m in sizes)):
            phi, n = _solve_scalings(GA, GB, sigma, perms)
            checked += n
            if phi is not None:
                return phi, checked
        return None, checked
    if strategy == "exhaustive":
        choices = [list(_invertible_matrices(F, m)) for m in sizes]
    else:
        choices = [list(_monomial_matrices(F, m, list(F.units()))) for m in sizes]
    gens_A, gens_B = _gen_terms(GA.ideal), _gen_terms(GB.ideal)
    checked = 0
    for combo in itertools.product(*choices):
        checked += 1
        phi = GradedMap(A, B, sigma, dict(zip(keys, combo)))
        if _kills(phi._images, gens_A, GB) and _kills(phi.inverse()._images, gens_B, GA):
            return phi, checked
    return None, checked


def _strip_monomial(expr, ks):
    """Divide out the largest monomial factor; the scalars are all nonzero."""
    import sympy

    terms = sympy.Poly(expr, *ks).terms()
    low = [min(m[i] for m, _ in terms) for i in range(len(ks))]
    return sympy.Add(*(c * sympy.Mul(*(k ** (e - l) for k, e, l in zip(ks, m, low))) for m, c in terms))


def _solve_scalings(GA, GB, sigma, perms):
    """Solve for nonzero scalars on a fixed arrow matching, over Q, with sympy."""
    import sympy

    A, B = GA.algebra, GB.algebra
    QA, QB = A.quiver, B.quiver
    keys = _block_keys(QA)
    target = [None] * len(QA.arrows)
    for (u, v), perm in zip(keys, perms):
        xs, ys = QA.arrows_between(u, v), QB.arrows_between(sigma[u], sigma[v])
        for i, j in enumerate(perm):
            target[xs[i]] = ys[j]
    ks = sympy.symbols(f"k0:{len(QA.arrows)}")

    eqs = []
    for g in GA.ideal.generators:
        acc = {}
        for p, c in g.terms():
            coeff = sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*(ks[a] for a in p.arrows))
            for m, x in GB.word_normal_form(tuple(target[a] for a in p.arrows)).items():
                acc[m] = acc.get(m, 0) + coeff * sympy.Rational(x.numerator, x.denominator)
        eqs.extend(_strip_monomial(v, ks) for v in acc.values() if sympy.expand(v) != 0)
    sols = sympy.solve(eqs, ks, dict=True) if eqs else [{}]

    def blocks_for(values):
        blocks = {}
        for (u, v), perm in zip(keys, perms):
            xs = QA.arrows_between(u, v)
            m = len(xs)
            C = [[Fraction(0)] * m for _ in range(m)]
            for i, j in enumerate(perm):
                C[i][j] = values[xs[i]]
            blocks[(u, v)] = C
        return blocks

    checked = 0
    for sol in sols:
        free = [k for k in ks if k not in sol]
        for trial in itertools.product((1, 2, -1, 3), repeat=len(free)):
            subs = dict(zip(free, trial))
            vals = [sympy.nsimplify(sympy.sympify(sol.get(k, k)).subs(subs)) for k in ks]
            if not all(v.is_Rational and v != 0 for v in vals):
                continue
            checked += 1
            phi = GradedMap(A, B, sigma, blocks_for([Fraction(int(v.p), int(v.q)) for v in vals]))
            if is_graded_isomorphism(phi, GA, GB):
                return phi, checked
            break
    return None, checked


def _validate_strategy(GA, GB, strategy):
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if GA.field != GB.field:
        raise ValueError(f"algebras are over different fields ({GA.field}, {GB.field})")
    F = GA.field
    if strategy == "exhaustive" and not isinstance(F, PrimeField):
        raise ValueError("the exhaustive strategy needs a prime field (use --field fP)")
    if strategy == "diagonal":
        if not isinstance(F, Rationals):
            raise ValueError("the diagonal strategy solves over Q; use exhaustive or monomial over a prime field")
        if np.any(adjacency_matrix(GA.quiver) > 1):
            raise ValueError("the diagonal strategy needs at most one arrow between any two vertices")


def search_graded_iso(GA, GB, strategy="exhaustive", jobs=1, deterministic=True, screen=True):
    """Decide isomorphism by searching graded maps.

    The necessary-condition screen runs first (``screen=False`` keeps only
    the vertex-count and adjacency conditions, so an exhaustive search then
    covers every adjacency-compatible permutation).  Only the exhaustive
    strategy may return a negative verdict; the others fall back to
    ``candidates`` when they find nothing.
    """
    _validate_strategy(GA, GB, strategy)
    _check_certified(GA, GB)
    D = min(GA.complete_upto, GB.complete_upto)
    fname = GA.field.name
    if screen:
        cert = iso_necessary(GA, GB, D)
        if cert.verdict == "non-isomorphic":
            return cert
        perms = cert.candidates
    else:
        if GA.quiver.n != GB.quiver.n:
            return iso_necessary(GA, GB, D)
        perms = conjugacy_permutations(adjacency_matrix(GA.quiver), adjacency_matrix(GB.quiver))
        if not perms:
            return iso_necessary(GA, GB, D)

    results = _run(GA, GB, perms, strategy, jobs, deterministic)
    checked = 0
    for sigma, (phi, n) in results:
        checked += n
        if phi is not None:
            return IsoCertificate(
                "isomorphic",
                {"kind": "map", "strategy": strategy, "sigma": list(sigma), "maps_checked": checked},
                candidates=[sigma],
                map=phi,
                field=fname,
                degree=D,
            )
    space = {
        "strategy": strategy,
        "permutations": [list(s) for s in perms],
        "maps_checked": checked,
        "dimension_screen": screen,
    }
    if strategy == "exhaustive":
        return IsoCertificate("non-isomorphic", {"kind": "exhausted", **space}, field=fname, degree=D)
    return IsoCertificate("candidates", {"kind": "search-incomplete", **space}, candidates=perms, field=fname, degree=D)


def _run(GA, GB, perms, strategy, jobs, deterministic):
    """``(sigma, result)`` pairs, cut at the first success in search order."""
    if jobs <= 1 or len(perms) <= 1:
        out = []
        for s in perms:
            res = _search_sigma(GA, GB, s, strategy)
            out.append((s, res))
            if res[0] is not None:
                break
        return out
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        futures = {ex.submit(_search_sigma, GA, GB, s, strategy): s for s in perms}
        if deterministic:
            out = []
            for fut, s in futures.items():
                res = fut.result()
                out.append((s, res))
                if res[0] is not None:
                    break
            for fut in futures:
                fut.cancel()
            return out
        pending = set(futures)
        done_list = []
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                done_list.append((futures[fut], fut.result()))
                if fut.result()[0] is not None:
                    for p in pending:
                        p.cancel()
                    return [done_list[-1]] + done_list[:-1]
        return sorted(done_list)


def polynomial_extension(ideal):
    """Presentation of ``A[t]``: a central loop ``t_v`` at every vertex.

    Adds the relations ``t_u a - a t_v`` for each arrow ``a: u -> v``; the
    new adjacency matrix is ``M + I``.
    """
    ideal = getattr(ideal, "ideal", ideal)
    Q = ideal.quiver
    taken = {a.name for a in Q.arrows} | set(Q.vertices)
    loops = []
    for v in Q.vertices:
        name = f"t_{v}"
        while name in taken:
            name += "'"
        taken.add(name)
        loops.append((name, v, v))
    Qt = Quiver(Q.vertices, list(Q.arrows) + loops)
    At = PathAlgebra(Qt, ideal.field)
    gens = [transfer(g, At) for g in ideal.generators]
    for a in Q.arrows:
        tu = At.arrow(loops[Q.vertex_index(a.source)][0])
        tv = At.arrow(loops[Q.vertex_index(a.target)][0])
        x = At.arrow(a.name)
        gens.append(tu * x - x * tv)
    return HomogeneousIdeal(At, gens)
