"""Exact Gaussian elimination over a :class:`~quiveralg.fields.Field`.

Matrices are lists of rows; entries are field values.
"""


def rref(rows, F):
    """Reduced row echelon form. Returns ``(rows, pivot_columns)``."""
    A = [list(r) for r in rows]
    if not A:
        return A, []
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if not F.is_zero(A[i][c])), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(inv, x) for x in A[r]]
        for i in range(len(A)):
            if i != r and not F.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(rows, F):
    return len(rref(rows, F)[1])


def sparse_rank(vectors, F):
    """Rank of a family of sparse vectors given as ``{column: value}`` dicts."""
    # echelon basis keyed by pivot column; each stored vector has its pivot
    # as its largest column and is monic there
    basis = {}
    for vec in vectors:
        v = {k: x for k, x in vec.items() if not F.is_zero(x)}
        while v:
            c = max(v)
            b = basis.get(c)
            if b is None:
                inv = F.inv(v[c])
                basis[c] = {k: F.mul(inv, x) for k, x in v.items()}
                break
            f = v[c]
            for k, x in b.items():
                y = F.sub(v.get(k, F.zero), F.mul(f, x))
                if F.is_zero(y):
                    v.pop(k, None)
                else:
                    v[k] = y
    return len(basis)


def nullspace(rows, ncols, F):
    """Basis of ``{x : A x = 0}``; one vector per free column, that entry set to 1."""
    R, pivots = rref(rows, F) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [F.zero] * ncols
        x[f] = F.one
        for row, p in zip(R, pivots):
            x[p] = F.neg(row[f])
        basis.append(x)
    return basis


def inverse(M, F):
    """Inverse of a square matrix; raises ``ValueError`` if singular."""
    n = len(M)
    aug = [list(M[i]) + [F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    R, pivots = rref(aug, F)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]


def is_invertible(M, F):
    return rank(M, F) == len(M)
