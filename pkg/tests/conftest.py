import random

import pytest

from quiveralg import GF, QQ, HomogeneousIdeal, PathAlgebra, Quiver

C_ARROWS = [("a", "u", "u"), ("b", "v", "v"), ("c", "v", "u"), ("d", "u", "v")]


def c_quiver():
    return Quiver(["u", "v"], C_ARROWS)


def c_ideal(q1, q2, field=QQ):
    """C(q1, q2) = kQ / (ad - q1 db, ca - q2 bc)."""
    A = PathAlgebra(c_quiver(), field)
    return HomogeneousIdeal(A, [A("a*d") - A("d*b").scale(q1), A("c*a") - A("b*c").scale(q2)])


def asg_ideal(field=QQ):
    A = PathAlgebra(c_quiver(), field)
    return HomogeneousIdeal(A, [A("a*a - d*c"), A("b*b - c*d")])


def commutative_ideal(field=QQ):
    A = PathAlgebra(Quiver(["o"], [("x", "o", "o"), ("y", "o", "o")]), field)
    return HomogeneousIdeal(A, [A("y*x - x*y")])


def random_quiver(rng, max_vertices=3, max_arrows=4):
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_arrows)
    verts = [f"v{i}" for i in range(n)]
    arrows = [(f"x{k}", rng.choice(verts), rng.choice(verts)) for k in range(m)]
    return Quiver(verts, arrows)


def random_relations(rng, A, count, degrees=(2, 3), allow_low=False):
    """Random bihomogeneous elements with small coefficients."""
    F = A.field
    out = []
    pool = list(degrees) + ([1] if allow_low else [])
    for _ in range(count):
        d = rng.choice(pool)
        paths = A.paths(d)
        if not paths:
            continue
        p0 = rng.choice(paths)
        same = [p for p in paths if p.source == p0.source and p.target == p0.target]
        chosen = rng.sample(same, min(len(same), rng.randint(1, 3)))
        terms = {p: F(rng.choice([1, -1, 2, 3])) for p in chosen}
        f = A.zero()
        for p, c in terms.items():
            f = f + A.monomial(p, c)
        if f:
            out.append(f)
    return out


def random_corpus(seed=2024, size=50, field=QQ, allow_low=False, max_arrows=4):
    """Seeded random presentations: |Q0| <= 3, |Q1| <= max_arrows, up to 2 relations."""
    rng = random.Random(seed)
    corpus = []
    for _ in range(size):
        Q = random_quiver(rng, max_arrows=max_arrows)
        A = PathAlgebra(Q, field)
        corpus.append(HomogeneousIdeal(A, random_relations(rng, A, rng.randint(0, 2), allow_low=allow_low)))
    return corpus


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(params=[QQ, GF(5)], ids=["Q", "F5"])
def field(request):
    return request.param
