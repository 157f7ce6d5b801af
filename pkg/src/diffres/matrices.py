"""Matrices of domain elements and the exact determinant engine.

Two backends compute determinants, both exact:

* memoized cofactor (minor) expansion, division free;
* fraction-free single-step elimination in the Bareiss style, whose
  interior divisions are exact in the polynomial ring.

Both first clear row denominators so the elimination runs over plain
polynomials, and divide the scaling back out at the end.  ``auto`` picks
cofactor expansion up to 4x4 and elimination above that.
"""

from __future__ import annotations

from .domains import DomainElement, MultiPoly, exact_div, poly_gcd, poly_lcm
from .errors import DomainMismatch, NotSquare


class DiffMatrix:
    """Immutable rectangular matrix of elements of one domain."""

    __slots__ = ("domain", "entries")

    def __init__(self, domain, entries):
        entries = tuple(tuple(row) for row in entries)
        width = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != width:
                raise ValueError("ragged matrix rows")
            for e in row:
                if e.domain is not domain:
                    raise DomainMismatch("matrix entry from a different domain")
        self.domain = domain
        self.entries = entries

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0]) if self.entries else 0

    def entry(self, i, j):
        return self.entries[i][j]

    def select_columns(self, idxs):
        return DiffMatrix(self.domain,
                          [[row[j] for j in idxs] for row in self.entries])

    def delete_row_col(self, i, j):
        return DiffMatrix(self.domain,
                          [[e for k, e in enumerate(row) if k != j]
                           for r, row in enumerate(self.entries) if r != i])

    def __eq__(self, other):
        if not isinstance(other, DiffMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and all(a == b for ra, rb in zip(self.entries, other.entries)
                        for a, b in zip(ra, rb)))

    __hash__ = None

    def __repr__(self):
        from .rendering import matrix_text
        return matrix_text(self)


def _cleared_rows(m):
    """Scale each row to polynomial entries; returns (rows, total scale)."""
    table = m.domain.table
    scale = MultiPoly.const(table, 1)
    rows = []
    for row in m.entries:
        common = MultiPoly.const(table, 1)
        for e in row:
            if not e.den.is_one:
                common = poly_lcm(common, e.den)
        if common.is_one:
            rows.append([e.num for e in row])
        else:
            rows.append([e.num * exact_div(common, e.den) for e in row])
            scale = scale * common
    return rows, scale


def _det_minor(rows, n):
    """Cofactor expansion over polynomial entries, memoized on column sets."""
    zero = MultiPoly.zero(rows[0][0].table) if n else None
    memo = {}

    def rec(mask, r):
        if r == n:
            return MultiPoly.const(rows[0][0].table, 1)
        got = memo.get(mask)
        if got is not None:
            return got
        acc = zero
        sign = 1
        col = 0
        rest = mask
        while rest:
            if rest & 1:
                a = rows[r][col]
                if not a.is_zero:
                    sub = rec(mask & ~(1 << col), r + 1)
                    term = a * sub
                    acc = acc + term if sign > 0 else acc - term
                sign = -sign
            rest >>= 1
            col += 1
        memo[mask] = acc
        return acc

    return rec((1 << n) - 1, 0)


def _det_bareiss(rows, n):
    """Fraction-free elimination; interior divisions are exact."""
    table = rows[0][0].table
    rows = [list(r) for r in rows]
    sign = 1
    prev = MultiPoly.const(table, 1)
    for k in range(n - 1):
        if rows[k][k].is_zero:
            for i in range(k + 1, n):
                if not rows[i][k].is_zero:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(table)
        piv = rows[k][k]
        for i in range(k + 1, n):
            low = rows[i][k]
            for j in range(k + 1, n):
                num = piv * rows[i][j] - low * rows[k][j]
                rows[i][j] = exact_div(num, prev)
            rows[i][k] = MultiPoly.zero(table)
        prev = piv
    det = rows[n - 1][n - 1]
    return det if sign > 0 else -det


def determinant(m, method="auto"):
    """Exact determinant of a square matrix, in canonical form.

    ``method`` is one of ``auto``, ``minor``, ``bareiss``; all agree.
    """
    if m.rows != m.cols:
        raise NotSquare("determinant of a %dx%d matrix" % (m.rows, m.cols))
    n = m.rows
    if n == 0:
        return m.domain.one()
    if method == "auto":
        method = "minor" if n <= 4 else "bareiss"
    rows, scale = _cleared_rows(m)
    if method == "minor":
        det = _det_minor(rows, n)
    elif method == "bareiss":
        det = _det_bareiss(rows, n)
    else:
        raise ValueError("unknown determinant method %r" % method)
    return DomainElement(m.domain, det, scale)
