"""Exact dense linear algebra over a :class:`~mathieu_kit.fields.Field`.

Matrices are sequences of row tuples.  Everything here is O(rows * cols^2)
Gauss-Jordan; the dimensions in this package never exceed a few dozen, so
clarity wins over cleverness.  The reduced row-echelon form computed here is
the canonical representative used for subspace identity throughout.
"""

from __future__ import annotations

from typing import Sequence

from .fields import Field, Scalar

Row = tuple[Scalar, ...]


def rref(field: Field, rows: Sequence[Sequence[Scalar]]) -> tuple[tuple[Row, ...], tuple[int, ...]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = field.inv(work[r][col])
        if inv != field.one:
            work[r] = [field.mul(inv, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                c = work[i][col]
                work[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def reduce_vector(
    field: Field,
    basis: Sequence[Row],
    pivots: Sequence[int],
    vec: Sequence[Scalar],
) -> Row:
    """Residual of ``vec`` after elimination against an RREF basis.

    The residual is zero exactly when ``vec`` lies in the row space.
    """
    v = list(vec)
    for row, col in zip(basis, pivots):
        c = v[col]
        if c != 0:
            v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
    return tuple(v)


def in_span(field, basis, pivots, vec) -> bool:
    return all(x == 0 for x in reduce_vector(field, basis, pivots, vec))


def nullspace(field: Field, rows: Sequence[Sequence[Scalar]], ncols: int) -> tuple[Row, ...]:
    """Canonical basis of ``{x : M x = 0}`` for the matrix with the given rows.

    The result is itself in RREF (one basis vector per free column of M,
    re-reduced for canonicity).
    """
    basis, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    out = []
    for fc in free_cols:
        v = [field.zero] * ncols
        v[fc] = field.one
        for row, pc in zip(basis, pivots):
            # M x = 0 forces x[pc] = -sum over free columns of row[fc]*x[fc]
            v[pc] = field.neg(row[fc])
        out.append(v)
    reduced, _ = rref(field, out)
    return reduced


def matvec(field: Field, rows: Sequence[Row], vec: Sequence[Scalar]) -> Row:
    out = []
    for row in rows:
        acc = field.zero
        for a, x in zip(row, vec):
            if a != 0 and x != 0:
                acc = field.add(acc, field.mul(a, x))
        out.append(acc)
    return tuple(out)
