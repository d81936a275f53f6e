"""Exact rank and kernel computations over the rationals."""

from __future__ import annotations

from math import lcm
from typing import Sequence

from gmpy2 import mpz

from .coeff import Coef, to_coef


def _integer_rows(rows: Sequence[Sequence[Coef]]) -> list[list[int]]:
    out = []
    for row in rows:
        m = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * m) for x in row])
    return out


def bareiss_rank(rows: Sequence[Sequence[Coef]]) -> int:
    """Rank by fraction-free (Bareiss) elimination on the integer-scaled rows."""
    A = [r for r in _integer_rows(rows) if any(r)]
    if not A:
        return 0
    live = [j for j in range(len(A[0])) if any(r[j] for r in A)]
    A = [[mpz(r[j]) for j in live] for r in A]
    ncols = len(live)
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][col]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][col]
        for i in range(rank + 1, len(A)):
            r = A[i]
            f = r[col]
            A[i] = [(p * r[j] - f * A[rank][j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == len(A):
            break
    return rank


def transpose(M: Sequence[Sequence[Coef]]) -> list[list[Coef]]:
    return [list(c) for c in zip(*M)] if M else []


def nullspace(M: Sequence[Sequence[Coef]]) -> list[list[Coef]]:
    """Basis of ``{x : M x = 0}`` from the reduced row echelon form."""
    if not M:
        return []
    A = [[to_coef(x) for x in row] for row in M]
    ncols = len(A[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][col]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][col]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][col]:
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
        if r == len(A):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Coef(0)] * ncols
        v[fc] = Coef(1)
        for i, pc in enumerate(pivots):
            v[pc] = -A[i][fc]
        basis.append(v)
    return basis
