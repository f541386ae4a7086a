"""Dense Gaussian elimination over Q(s).

Rows are lists of :class:`~propcirc.kfield.Scalar`.  Everything here works
on copies; callers' rows are never mutated.
"""
from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .kfield import ONE, ZERO, Scalar

Row = List[Scalar]
Vector = Tuple[Scalar, ...]


def as_row(v: Sequence) -> Row:
    return [Scalar.coerce(x) for x in v]


def rref(rows: Sequence[Sequence[Scalar]], ncols: int, pivot_limit: Optional[int] = None) -> Tuple[List[Row], List[int]]:
    """Reduced row echelon form.

    Pivots are only sought in the first ``pivot_limit`` columns (default all);
    columns beyond it are carried along, which is how augmented systems are
    handled.  Returns the nonzero rows and their pivot columns.
    """
    limit = ncols if pivot_limit is None else pivot_limit
    work = [list(r) for r in rows if any(r)]
    pivots: List[int] = []
    r = 0
    for c in range(limit):
        if r == len(work):
            break
        p = next((i for i in range(r, len(work)) if work[i][c]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        prow = work[r]
        lead = prow[c]
        if lead != ONE:
            inv = lead.inverse()
            prow = [x * inv if x else x for x in prow]
            prow[c] = ONE
            work[r] = prow
        nz = [j for j in range(c + 1, ncols) if prow[j]]
        for i in range(len(work)):
            if i == r:
                continue
            f = work[i][c]
            if not f:
                continue
            row = work[i]
            row[c] = ZERO
            for j in nz:
                row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    out = work[:r]
    # rows with no pivot inside the limit but nonzero beyond it
    out.extend(row for row in work[r:] if any(row))
    return out, pivots


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int) -> List[Row]:
    """Basis of {x : A x = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar], ncols: int) -> Optional[Row]:
    """One solution of A x = b (free variables set to zero), or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1, pivot_limit=ncols)
    if len(red) > len(pivots):
        return None
    x = [ZERO] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def eliminate(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar], ncols: int,
              keep: Sequence[int]) -> Optional[Tuple[List[Row], List[Scalar]]]:
    """Project the affine solution set of A x = b onto the ``keep`` columns.

    Returns constraint rows (indexed by position in ``keep``) with their
    right-hand sides, or None when the system is inconsistent.
    """
    keepset = set(keep)
    order = [c for c in range(ncols) if c not in keepset] + list(keep)
    n_int = ncols - len(keep)
    aug = [[row[c] for c in order] + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1, pivot_limit=ncols)
    if len(red) > len(pivots):
        return None
    out_rows, out_rhs = [], []
    for row, p in zip(red, pivots):
        if p >= n_int:
            out_rows.append(row[n_int:ncols])
            out_rhs.append(row[ncols])
    return out_rows, out_rhs
