"""Exact arithmetic in the path algebra kQ.

Paths compose left to right: ``p * q`` traverses ``p`` first, then ``q``,
and is zero unless ``t(p) == s(q)``.  A path is a ``(source, target,
arrows)`` triple of indices; the trivial path ``e_v`` is ``(v, v, ())``.
"""

from typing import NamedTuple

from .fields import QQ


class Path(NamedTuple):
    source: int
    target: int
    arrows: tuple = ()

    @property
    def length(self):
        return len(self.arrows)

    def sort_key(self):
        # length, then source, then target, then lex on arrow indices
        return (len(self.arrows), self.source, self.target, self.arrows)


class PathAlgebra:
    """The path algebra of ``quiver`` over ``field``."""

    def __init__(self, quiver, field=QQ):
        self.quiver = quiver
        self.field = field

    def __eq__(self, other):
        return isinstance(other, PathAlgebra) and self.quiver == other.quiver and self.field == other.field

    def __hash__(self):
        return hash((self.quiver, self.field))

    def __repr__(self):
        return f"PathAlgebra({list(self.quiver.vertices)}, {self.field})"

    def zero(self):
        return PathPoly(self, {})

    def one(self):
        return PathPoly(self, {Path(v, v): self.field.one for v in range(self.quiver.n)})

    def idempotent(self, v):
        v = self.quiver.vertex_index(v)
        return PathPoly(self, {Path(v, v): self.field.one})

    def arrow(self, name):
        i = self.quiver.arrow_index(name) if isinstance(name, str) else name
        Q = self.quiver
        return PathPoly(self, {Path(Q.src[i], Q.tgt[i], (i,)): self.field.one})

    def path(self, *names):
        """Path through the named arrows; raises if two neighbours do not compose."""
        Q = self.quiver
        idx = tuple(Q.arrow_index(a) for a in names)
        if not idx:
            raise ValueError("use idempotent() for trivial paths")
        for k in range(1, len(idx)):
            if Q.tgt[idx[k - 1]] != Q.src[idx[k]]:
                raise ValueError(f"arrows {names[k - 1]} and {names[k]} do not compose")
        return Path(Q.src[idx[0]], Q.tgt[idx[-1]], idx)

    def monomial(self, path, coeff=None):
        c = self.field.one if coeff is None else self.field(coeff)
        return PathPoly(self, {path: c} if not self.field.is_zero(c) else {})

    def __call__(self, text):
        """Shorthand for building elements: ``kQ("a*d - 2*d*b")``."""
        from .dsl import parse_element

        return parse_element(self, text)

    def concat(self, p, q):
        """Product of two paths as a :class:`PathPoly` (the zero element if not composable)."""
        r = concat_paths(p, q)
        return PathPoly(self, {} if r is None else {r: self.field.one})

    def paths(self, length, u=None, v=None):
        """All paths of a given length, optionally with fixed endpoints."""
        Q = self.quiver
        us = range(Q.n) if u is None else [Q.vertex_index(u)]
        vs = None if v is None else Q.vertex_index(v)
        if length == 0:
            return [Path(w, w) for w in us if vs is None or vs == w]
        frontier = [Path(s, s) for s in us]
        for _ in range(length):
            frontier = [
                Path(p.source, Q.tgt[a], p.arrows + (a,))
                for p in frontier
                for a in Q.out_arrows(p.target)
            ]
        return sorted((p for p in frontier if vs is None or p.target == vs), key=Path.sort_key)

    def format_path(self, p):
        if not p.arrows:
            return "e_" + self.quiver.vertices[p.source]
        return "*".join(self.quiver.arrows[a].name for a in p.arrows)


def concat_paths(p, q):
    if p.target != q.source:
        return None
    return Path(p.source, q.target, p.arrows + q.arrows)


class PathPoly:
    """A finite linear combination of paths with no zero coefficients."""

    __slots__ = ("algebra", "_c")

    def __init__(self, algebra, terms):
        F = algebra.field
        self.algebra = algebra
        self._c = {p: c for p, c in terms.items() if not F.is_zero(c)}

    @property
    def field(self):
        return self.algebra.field

    def terms(self):
        """``(path, coeff)`` pairs in decreasing monomial order."""
        return sorted(self._c.items(), key=lambda pc: pc[0].sort_key(), reverse=True)

    def coefficient(self, path):
        return self._c.get(path, self.field.zero)

    def __iter__(self):
        return iter(self.terms())

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def _check(self, other):
        if not isinstance(other, PathPoly):
            return False
        if other.algebra != self.algebra:
            raise ValueError("elements of different path algebras")
        return True

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._c
        return isinstance(other, PathPoly) and self.algebra == other.algebra and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        self._check(other)
        F = self.field
        out = dict(self._c)
        for p, c in other._c.items():
            out[p] = F.add(out.get(p, F.zero), c)
        return PathPoly(self.algebra, out)

    def __neg__(self):
        F = self.field
        return PathPoly(self.algebra, {p: F.neg(c) for p, c in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        F = self.field
        s = F(s)
        return PathPoly(self.algebra, {p: F.mul(s, c) for p, c in self._c.items()})

    def __mul__(self, other):
        if not isinstance(other, PathPoly):
            return self.scale(other)
        self._check(other)
        F = self.field
        out = {}
        for p, a in self._c.items():
            for q, b in other._c.items():
                r = concat_paths(p, q)
                if r is not None:
                    out[r] = F.add(out.get(r, F.zero), F.mul(a, b))
        return PathPoly(self.algebra, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def degree(self):
        return max((p.length for p in self._c), default=None)

    def leading_term(self):
        return self.terms()[0] if self._c else None

    def components(self):
        """Split into ``(source, target, length, part)`` pieces, one per bihomogeneous class."""
        groups = {}
        for p, c in self._c.items():
            groups.setdefault((p.source, p.target, p.length), {})[p] = c
        return [(u, v, d, PathPoly(self.algebra, groups[(u, v, d)])) for u, v, d in sorted(groups, key=lambda k: (k[2], k[0], k[1]))]

    def is_homogeneous(self):
        """All terms share length, source and target."""
        return len({(p.source, p.target, p.length) for p in self._c}) <= 1

    def __repr__(self):
        if not self._c:
            return "0"
        F = self.field
        parts = []
        for p, c in self.terms():
            s = F.format(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            word = self.algebra.format_path(p)
            body = word if s == "1" else f"{s}*{word}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)
