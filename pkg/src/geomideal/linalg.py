"""Dense exact linear algebra over the coefficient fields.

Small matrices only (degree pieces of graded modules at desk scale), so plain
Gaussian elimination with exact scalars is the right tool.  Matrices are lists
of lists of field scalars; rows are the outer index.
"""

from __future__ import annotations


def rref(field, rows):
    """Reduced row echelon form.  Returns (new_rows, pivot_columns).

    Zero rows are dropped; pivot entries are 1 with zeros above and below.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if not field.is_zero(rows[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(field, rows) -> int:
    return len(rref(field, rows)[0])


def kernel_basis(field, rows, ncols):
    """Basis of the right kernel {v : A v = 0} of the ncols-column matrix A."""
    reduced, pivots = rref(field, rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(reduced[r][fc])
        basis.append(v)
    return basis


def in_row_space(field, rows, vector) -> bool:
    """True iff vector is a linear combination of the given rows."""
    reduced, pivots = rref(field, rows)
    v = list(vector)
    for r, pc in enumerate(pivots):
        if not field.is_zero(v[pc]):
            f = v[pc]
            v = [field.sub(x, field.mul(f, y)) for x, y in zip(v, reduced[r])]
    return all(field.is_zero(x) for x in v)
