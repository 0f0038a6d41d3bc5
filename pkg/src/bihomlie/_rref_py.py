"""Pure-Python reduced row echelon form over exact rationals.

This is the fallback twin of the compiled kernel in _rrefc.pyx; slower, but
bit-identical output.  RREF is unique for a given matrix, and both kernels
use the same pivot rule (first nonzero entry in column order), so any
disagreement between the two is a bug, not a convention mismatch.
"""

from __future__ import annotations

from fractions import Fraction


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Return (R, pivots) where R is the RREF of `rows`.

    `pivots` lists the pivot column of each nonzero row of R, in order.
    The input is not modified.

    >>> from fractions import Fraction as F
    >>> R, p = rref([[F(2), F(4)], [F(1), F(2)]])
    >>> R, p
    ([[Fraction(1, 1), Fraction(2, 1)], [Fraction(0, 1), Fraction(0, 1)]], [0])
    """
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    prow = 0
    for pcol in range(ncols):
        if prow == nrows:
            break
        hit = -1
        for i in range(prow, nrows):
            if m[i][pcol]:
                hit = i
                break
        if hit < 0:
            continue
        if hit != prow:
            m[prow], m[hit] = m[hit], m[prow]
        inv = Fraction(1) / m[prow][pcol]
        m[prow] = [x * inv for x in m[prow]]
        lead = m[prow]
        for i in range(nrows):
            if i == prow:
                continue
            f = m[i][pcol]
            if f:
                row = m[i]
                m[i] = [a - f * b for a, b in zip(row, lead)]
        pivots.append(pcol)
        prow += 1
    return m, pivots
