"""Exact Gaussian elimination over Q(z) and over the rationals.

Used for orthogonal complements (block completions, reconstruction checks)
and for the rational moduli systems of the forcing gadgets.  Everything is
fraction-free at the API boundary: returned vectors are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .cyclo import ONE, ZERO, CycloNum, CycloVector


def rref(rows: Sequence[CycloVector]) -> tuple[list[list[CycloNum]], list[int]]:
    """Reduced row echelon form over the field; returns (matrix, pivot columns)."""
    m = [list(r.entries) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[CycloVector]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[CycloVector]) -> list[CycloVector]:
    """Basis of {x : M x = 0} for the matrix with the given rows."""
    rows = list(rows)
    if not rows:
        raise ValueError("nullspace of an empty system is the whole space")
    ncols = rows[0].dim
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ZERO] * ncols
        vec[fc] = ONE
        for ri, pc in enumerate(pivots):
            vec[pc] = -m[ri][fc]
        basis.append(CycloVector(vec))
    return basis


def gram_schmidt(vectors: Sequence[CycloVector]) -> list[CycloVector]:
    """Exact orthogonalization (no normalization) of independent vectors."""
    from .cyclo import inner

    out: list[CycloVector] = []
    for v in vectors:
        w = v
        for u in out:
            coef = inner(u, w) / inner(u, u)
            w = w - u.scale(coef)
        if w.is_zero():
            raise ValueError("gram_schmidt requires independent vectors")
        out.append(w)
    return out


# --------------------------------------------------------------------------
# rational (Fraction) elimination for moduli systems
# --------------------------------------------------------------------------


def rational_nullspace(rows: Sequence[Sequence[int | Fraction]]) -> list[list[Fraction]]:
    """Nullspace basis of a rational matrix, one basis vector per free column."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        raise ValueError("empty system")
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            vec[pc] = -m[ri][fc]
        basis.append(vec)
    return basis


def primitive_integer(vec: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector to coprime integers with positive leading sign."""
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for n in ints:
        g = gcd(g, abs(n))
    if g > 1:
        ints = [n // g for n in ints]
    lead = next((n for n in ints if n != 0), 0)
    if lead < 0:
        ints = [-n for n in ints]
    return ints
