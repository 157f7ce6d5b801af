"""Differential Sylvester matrices, resultants, subresultants and GCRDs.

For operators A of order n and B of order m, the Sylvester matrix is the
(n+m) x (n+m) matrix of the map (P, Q) -> P*A + Q*B on order-bounded
operators: its rows are the coefficient vectors of D^(m-1)*A ... A,
then D^(n-1)*B ... B, written in descending powers of D left to right.

Trimming i rows from each block and the i leftmost columns gives the
rectangular matrix whose determinant polynomial is the i-th differential
subresultant.  The first index with a nonzero subresultant equals the
order of gcrd(A, B), and that subresultant, made monic, is the GCRD.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import DiffMatrix, determinant
from .operators import ODO, euclid_gcrd
from .errors import (BothConstant, IndexOutOfRange, RowsExceedCols,
                     VerificationFailed, ZeroOperand)


@dataclass(frozen=True)
class PdetResult:
    """Determinant polynomial together with the square minors used."""
    operator: ODO
    minors: tuple


@dataclass(frozen=True)
class SubresultantRecord:
    """The i-th subresultant operator and its coefficient minors.

    ``minors[j]`` is the square matrix whose determinant is the
    coefficient of D^j in ``operator``.
    """
    index: int
    operator: ODO
    minors: tuple


@dataclass(frozen=True)
class BezoutPair:
    """Cofactors with P*A + Q*B equal to the differential resultant."""
    p: ODO
    q: ODO


def _coeff_row(op, width):
    """Coefficients of ``op`` in basis 1..D^(width-1), descending powers."""
    zero = op.domain.zero()
    row = [zero] * width
    for i, c in enumerate(op.coeffs):
        row[width - 1 - i] = c
    return row


def _block_rows(a, b, i, width):
    """Rows D^(m-i-1)A..A then D^(n-i-1)B..B as coefficient vectors."""
    n, m = a.order, b.order
    rows = []
    for op, count in ((a, m - i), (b, n - i)):
        powers = []
        cur = op
        for _ in range(count):
            powers.append(cur)
            cur = cur.d_mul()
        for p in reversed(powers):
            rows.append(_coeff_row(p, width))
    return rows


def sylvester(a, b):
    """The differential Sylvester matrix of two nonzero operators."""
    if a.is_zero or b.is_zero:
        raise ZeroOperand("Sylvester matrix of the zero operator")
    n, m = a.order, b.order
    if n + m == 0:
        raise BothConstant("both operators have order 0")
    return DiffMatrix(a.domain, _block_rows(a, b, 0, n + m))


def resultant(a, b):
    """det(Syl(A, B)); nonzero exactly when A and B are right coprime."""
    if a.is_zero or b.is_zero:
        raise ZeroOperand("resultant of the zero operator")
    n, m = a.order, b.order
    if m == 0:
        return b.coeffs[0] ** n
    if n == 0:
        return a.coeffs[0] ** m
    return determinant(sylvester(a, b))


def subres_matrix(a, b, i):
    """The trimmed Sylvester matrix of size (n+m-2i) x (n+m-i)."""
    if a.is_zero or b.is_zero:
        raise ZeroOperand("subresultant matrix of the zero operator")
    n, m = a.order, b.order
    if not 0 <= i <= min(n, m) - 1:
        raise IndexOutOfRange("subresultant index %d outside 0..%d" % (i, min(n, m) - 1))
    return DiffMatrix(a.domain, _block_rows(a, b, i, n + m - i))


def pdet(m):
    """Determinant polynomial of a wide matrix.

    For r rows and c columns, the coefficient of D^j is the determinant of
    the square matrix made of the first r-1 columns and column c-j
    (1-based), for j = 0 .. c-r.
    """
    r, c = m.rows, m.cols
    if r > c:
        raise RowsExceedCols("determinant polynomial needs rows <= cols")
    prefix = list(range(r - 1))
    minors = []
    coeffs = []
    for j in range(c - r + 1):
        minor = m.select_columns(prefix + [c - 1 - j])
        minors.append(minor)
        coeffs.append(determinant(minor))
    return PdetResult(ODO(m.domain, coeffs), tuple(minors))


def subresultant(a, b, i):
    """The i-th differential subresultant with its minors."""
    res = pdet(subres_matrix(a, b, i))
    return SubresultantRecord(i, res.operator, res.minors)


def subresultant_sequence(a, b):
    """Records for i = 0 .. min(order(A), order(B)) - 1, ascending."""
    if a.is_zero or b.is_zero:
        raise ZeroOperand("subresultant sequence of the zero operator")
    bound = min(a.order, b.order)
    if bound < 1:
        raise ZeroOperand("subresultant sequence needs nonconstant operators")
    return [subresultant(a, b, i) for i in range(bound)]


def bezout_cofactors(a, b):
    """Operators P, Q with P*A + Q*B = resultant(A, B).

    The cofactors come from the Laplace expansion along the accumulated
    last column of the Sylvester matrix; the defining identity is checked
    before returning, so a sign slip cannot escape.
    """
    syl = sylvester(a, b)
    n, m = a.order, b.order
    size = n + m
    res = determinant(syl)
    cof = []
    for r in range(size):
        minor = syl.delete_row_col(r, size - 1)
        d = determinant(minor)
        if (r + size - 1) % 2:
            d = -d
        cof.append(d)
    dom = a.domain
    p = ODO(dom, list(reversed(cof[:m])))
    q = ODO(dom, list(reversed(cof[m:])))
    if p * a + q * b != ODO.scalar(dom, res):
        raise VerificationFailed("Bezout identity P*A + Q*B = res failed")
    return BezoutPair(p, q)


def gcrd_subres(a, b):
    """Monic GCRD via the subresultant gap scan.

    Scans i = 0, 1, ... for the first nonzero subresultant and returns it
    made monic.  Degenerate inputs (zero or constant operators, or all
    subresultants zero because one operator divides the other) fall back
    to the Euclidean algorithm.
    """
    if a.is_zero or b.is_zero:
        return euclid_gcrd(a, b)
    bound = min(a.order, b.order)
    if bound < 1:
        return euclid_gcrd(a, b)
    for i in range(bound):
        rec = subresultant(a, b, i)
        if not rec.operator.is_zero:
            return rec.operator.monic()
    return euclid_gcrd(a, b)
