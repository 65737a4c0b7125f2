"""Exact Gaussian elimination over precision-tracked p-adic scalars.

Works uniformly over PadicScalar and UnramExtElement entries.  Pivots
are chosen with minimal valuation and must retain at least GUARD_DIGITS
digits of relative precision; anything short of that raises
PrecisionExhausted instead of silently reporting a wrong rank.
Subspaces are kept as reduced row-echelon bases, which makes equality
of subspaces an exact comparison.
"""

from __future__ import annotations

from .padic import PadicError

GUARD_DIGITS = 4


class PrecisionExhausted(PadicError):
    """A pivot decision would rest on fewer digits than the guard allows."""


class SingularMatrix(PadicError):
    """Inversion or determinant of a matrix singular to working precision."""

    def __init__(self, message, rank=None):
        super().__init__(message)
        self.rank = rank


def _pivot_row(rows, col, start, guard):
    best = None
    best_val = None
    for i in range(start, len(rows)):
        entry = rows[i][col]
        if entry.is_zero():
            continue
        v = entry.valuation
        if best is None or v < best_val:
            best, best_val = i, v
    if best is not None and rows[best][col].rel_precision < guard:
        raise PrecisionExhausted(
            f"pivot at column {col} has only "
            f"{rows[best][col].rel_precision} reliable digits (< {guard})"
        )
    return best


def rref(rows, guard=GUARD_DIGITS):
    """Reduced row echelon form.

    Returns (nonzero echelon rows with unit pivots, pivot column list).
    Input rows are not modified.
    """
    if not rows:
        return [], []
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        if rank >= len(rows):
            break
        piv = _pivot_row(rows, col, rank, guard)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [e * inv for e in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][col].is_zero():
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def span(vectors, guard=GUARD_DIGITS):
    """Canonical (reduced echelon) basis of the span of the given vectors."""
    basis, _ = rref(vectors, guard)
    return basis


def rank(vectors, guard=GUARD_DIGITS):
    return len(span(vectors, guard))


def reduce_against(vector, basis, pivots):
    """Residual of vector after elimination by an echelon basis."""
    v = list(vector)
    for row, col in zip(basis, pivots):
        if not v[col].is_zero():
            factor = v[col]
            v = [a - factor * b for a, b in zip(v, row)]
    return v


def in_span(vector, basis_vectors, guard=GUARD_DIGITS):
    basis, pivots = rref(basis_vectors, guard)
    residual = reduce_against(vector, basis, pivots)
    return all(e.is_zero() for e in residual)


def subspace_sum(a, b, guard=GUARD_DIGITS):
    return span(list(a) + list(b), guard)


def subspace_le(a, b, guard=GUARD_DIGITS):
    basis, pivots = rref(b, guard)
    return all(
        all(e.is_zero() for e in reduce_against(v, basis, pivots)) for v in a
    )


def subspace_eq(a, b, guard=GUARD_DIGITS):
    return subspace_le(a, b, guard) and subspace_le(b, a, guard)


def kernel(rows, ncols=None, guard=GUARD_DIGITS):
    """Basis of the right kernel of the matrix with the given rows."""
    if not rows:
        return []
    ncols = ncols or len(rows[0])
    basis, pivots = rref(rows, guard)
    if not basis:
        basis = []
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    some = rows[0][0]
    zero, one = some.same_zero(), some.same_one()
    out = []
    for free in free_cols:
        vec = [zero] * ncols
        vec[free] = one
        for row, col in zip(basis, pivots):
            vec[col] = -row[free]
        out.append(vec)
    return out


def intersection(a, b, guard=GUARD_DIGITS):
    """Basis of span(a) intersect span(b)."""
    if not a or not b:
        return []
    n = len(a[0])
    zero = a[0][0].same_zero()
    # kernel of [a^T | -b^T] in stacked coefficients (x, y): a^T x = b^T y
    rows = []
    for i in range(n):
        row = [v[i] for v in a] + [-(w[i]) for w in b]
        rows.append(row)
    combos = kernel(rows, len(a) + len(b), guard)
    vectors = []
    for combo in combos:
        vec = [zero] * n
        for coeff, basis_vec in zip(combo[: len(a)], a):
            vec = [x + coeff * y for x, y in zip(vec, basis_vec)]
        vectors.append(vec)
    return span(vectors, guard)


def preimage(matrix_rows, target_basis, guard=GUARD_DIGITS):
    """Basis of {v : M v lies in span(target_basis)}.

    matrix_rows is M given by rows (output coords x input coords).
    """
    m = len(matrix_rows)
    n = len(matrix_rows[0])
    k = len(target_basis)
    rows = []
    for i in range(m):
        row = list(matrix_rows[i])
        row += [-(t[i]) for t in target_basis]
        rows.append(row)
    sols = kernel(rows, n + k, guard)
    return span([s[:n] for s in sols], guard)


def annihilator(basis_vectors, n, like, guard=GUARD_DIGITS):
    """Basis of {functionals l : <l, b> = 0 for all b}, in dual coordinates."""
    if not basis_vectors:
        zero, one = like.same_zero(), like.same_one()
        return [
            [one if j == i else zero for j in range(n)] for i in range(n)
        ]
    return kernel([list(b) for b in basis_vectors], n, guard)


def matvec(matrix_rows, vector):
    return [
        sum((a * x for a, x in zip(row, vector)), start=row[0].same_zero())
        for row in matrix_rows
    ]


def matmul(a, b):
    bt = list(zip(*b))
    return [
        [
            sum((x * y for x, y in zip(row, col)), start=row[0].same_zero())
            for col in bt
        ]
        for row in a
    ]


def identity_matrix(n, like):
    zero, one = like.same_zero(), like.same_one()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def determinant(matrix_rows, guard=GUARD_DIGITS):
    """Determinant by elimination with p-adic pivoting.

    Raises SingularMatrix (carrying the observed rank) when the matrix
    is singular to working precision; the exact determinant of such a
    matrix is indistinguishable from zero.
    """
    n = len(matrix_rows)
    rows = [list(r) for r in matrix_rows]
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    acc = None
    for col in range(n):
        piv = _pivot_row(rows, col, col, guard)
        if piv is None:
            raise SingularMatrix(
                f"matrix singular to working precision (rank {col})", rank=col
            )
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            sign = -sign
        pivot = rows[col][col]
        acc = pivot if acc is None else acc * pivot
        inv = pivot.inverse()
        for i in range(col + 1, n):
            if not rows[i][col].is_zero():
                factor = rows[i][col] * inv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[col])]
    if acc is None:
        raise ValueError("determinant of an empty matrix")
    return acc if sign == 1 else -acc


def inverse_matrix(matrix_rows, guard=GUARD_DIGITS):
    n = len(matrix_rows)
    aug = [
        list(row) + list(idrow)
        for row, idrow in zip(matrix_rows, identity_matrix(n, matrix_rows[0][0]))
    ]
    basis, pivots = rref(aug, guard)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix(
            f"matrix singular to working precision (rank {len([c for c in pivots if c < n])})",
            rank=len([c for c in pivots if c < n]),
        )
    return [row[n:] for row in basis[:n]]
