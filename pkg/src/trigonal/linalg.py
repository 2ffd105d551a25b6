"""Exact kernels of small dense matrices over a field.

Matrices are lists of rows of raw field values.  Elimination is Gauss-Jordan
to reduced row echelon form; the returned kernel basis has one vector per
free column, with that column set to 1.
"""

from typing import List, Sequence

from .field import Field


def rref(rows: Sequence[Sequence], ncols: int, field: Field):
    """Return (reduced rows, pivot columns)."""
    red = field.reduce
    m = [[red(v) for v in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        pr = [red(v * inv) for v in m[r]]
        m[r] = pr
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                k = m[i][c]
                row = m[i]
                m[i] = [red(row[j] - k * pr[j]) for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int, field: Field) -> List[List]:
    if not rows:
        return [[field.reduce(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows, ncols, field)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [field.reduce(0)] * ncols
        v[fcol] = field.reduce(1)
        for row, pc in zip(m, pivots):
            v[pc] = field.reduce(-row[fcol])
        basis.append(v)
    return basis


def rank(rows: Sequence[Sequence], ncols: int, field: Field) -> int:
    if not rows:
        return 0
    return len(rref(rows, ncols, field)[1])
