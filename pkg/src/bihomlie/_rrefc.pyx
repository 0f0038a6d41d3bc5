# cython: language_level=3
"""Fraction-free integer RREF, the compiled twin of _rref_py.

Strategy: scale every row to a primitive integer vector, run Gauss-Jordan
with the cross-multiplication update  row <- piv*row - row[pcol]*lead  (all
integer, arbitrary precision), gcd-reduce every touched row to keep entries
small, and divide each pivot row by its pivot only at the very end.  Fraction
arithmetic (one gcd per operation) is thereby replaced with plain bigint
arithmetic plus one gcd sweep per row update.

The pivot rule (first nonzero in column order) matches the pure kernel, and
RREF is unique, so both kernels return identical Fraction matrices.
"""

from fractions import Fraction
from math import gcd


def rref(rows):
    """Same contract as bihomlie._rref_py.rref."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    cdef Py_ssize_t prow = 0
    cdef Py_ssize_t pcol, i, j, hit

    m = []
    for row in rows:
        den = 1
        for x in row:
            d = x.denominator
            den = den // gcd(den, d) * d
        ints = [x.numerator * (den // x.denominator) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        m.append(ints)

    pivots = []
    for pcol in range(ncols):
        if prow == nrows:
            break
        hit = -1
        for i in range(prow, nrows):
            if m[i][pcol] != 0:
                hit = i
                break
        if hit < 0:
            continue
        if hit != prow:
            m[prow], m[hit] = m[hit], m[prow]
        lead = m[prow]
        piv = lead[pcol]
        for i in range(nrows):
            if i == prow:
                continue
            row = m[i]
            f = row[pcol]
            if f == 0:
                continue
            new = [piv * row[j] - f * lead[j] for j in range(ncols)]
            g = 0
            for v in new:
                g = gcd(g, v)
            if g > 1:
                new = [v // g for v in new]
            m[i] = new
        pivots.append(pcol)
        prow += 1

    zero = Fraction(0)
    out = []
    for i in range(nrows):
        if i < prow:
            lead = m[i]
            piv = lead[pivots[i]]
            out.append([Fraction(v, piv) for v in lead])
        else:
            out.append([zero] * ncols)
    return out, pivots
