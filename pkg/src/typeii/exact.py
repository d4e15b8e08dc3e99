"""Exact integer and rational linear algebra.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`;
both are arbitrary precision and always reduced. Matrices are plain
row-major lists of lists.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Matrix = list[list[Fraction]]


class DimensionError(ValueError):
    pass


def as_rational_matrix(A: Sequence[Sequence]) -> Matrix:
    """Copy ``A`` into a fresh rectangular matrix of Fractions."""
    rows = [[Fraction(a) for a in row] for row in A]
    if not rows or not rows[0]:
        raise DimensionError("matrix must have at least one row and one column")
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise DimensionError(f"row {i} has {len(row)} entries, expected {width}")
    return rows


def rref(A: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = as_rational_matrix(A)
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            f = m[i][c]
            if i != r and f != 0:
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(A: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of the right nullspace ``{v : A v = 0}``.

    One vector per free column of the reduced row echelon form, in
    increasing column order; the vector for free column ``f`` has a 1 in
    position ``f``, zeros at the other free columns, and is solved for
    the pivot columns.
    """
    m, pivots = rref(A)
    n_cols = len(m[0])
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -m[r][f]
        basis.append(v)
    return basis


def rank(A: Sequence[Sequence]) -> int:
    """Rank via fraction-free elimination."""
    m = [[Fraction(a) for a in row] for row in A]
    if not m or not m[0]:
        return 0
    # clear denominators row-wise so Bareiss runs over the integers
    ints = []
    for row in m:
        d = lcm(*(x.denominator for x in row))
        ints.append([int(x * d) for x in row])
    return _bareiss(ints)[1]


def _bareiss(M: list[list[int]]) -> tuple[list[list[int]], int, int]:
    """In-place fraction-free elimination over the integers.

    Returns the eliminated matrix, its rank, and the sign of the row
    permutation applied. When ``M`` is square and nonsingular the last
    diagonal entry is ``sign * det(M)``.
    """
    n_rows, n_cols = len(M), len(M[0])
    prev = 1
    sign = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if M[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
            sign = -sign
        piv = M[r][c]
        for i in range(r + 1, n_rows):
            a = M[i][c]
            row_i, row_r = M[i], M[r]
            for k in range(c + 1, n_cols):
                row_i[k] = (piv * row_i[k] - a * row_r[k]) // prev
            row_i[c] = 0
        prev = piv
        r += 1
    return M, r, sign


def det_exact(A: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix (Bareiss elimination)."""
    m = as_rational_matrix(A)
    n = len(m)
    if len(m[0]) != n:
        raise DimensionError(f"determinant needs a square matrix, got {n}x{len(m[0])}")
    # det(D A) = prod(d_i) det(A) for row scalings d_i
    scale = 1
    ints = []
    for row in m:
        d = lcm(*(x.denominator for x in row))
        scale *= d
        ints.append([int(x * d) for x in row])
    M, r, sign = _bareiss(ints)
    if r < n:
        return Fraction(0)
    return Fraction(sign * M[n - 1][n - 1], scale)


def normalize_primitive(v: Sequence) -> list[int]:
    """Scale ``v`` to the coprime integer vector whose first nonzero entry is positive."""
    q = [Fraction(x) for x in v]
    if all(x == 0 for x in q):
        raise ValueError("zero vector has no primitive form")
    d = lcm(*(x.denominator for x in q))
    ints = [int(x * d) for x in q]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


class HermiteBuilder:
    """Incremental row-style Hermite normal form of an integer row span.

    Rows are kept in echelon form keyed by pivot column; :meth:`add`
    folds one generator in with extended-gcd row operations.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: dict[int, list[int]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, v: Sequence[int]) -> bool:
        """Fold ``v`` into the span. Returns True if the span changed."""
        v = [int(x) for x in v]
        if len(v) != self.ncols:
            raise DimensionError(f"expected {self.ncols} entries, got {len(v)}")
        changed = False
        for c in range(self.ncols):
            a = v[c]
            if a == 0:
                continue
            row = self._rows.get(c)
            if row is None:
                if a < 0:
                    v = [-x for x in v]
                self._rows[c] = v
                return True
            b = row[c]
            if a % b == 0:
                q = a // b
                v = [x - q * y for x, y in zip(v, row)]
                continue
            g, s, t = _xgcd(b, a)
            # [[s, t], [-a/g, b/g]] is unimodular
            new_row = [s * y + t * x for x, y in zip(v, row)]
            v = [(b // g) * x - (a // g) * y for x, y in zip(v, row)]
            self._rows[c] = new_row
            changed = True
        return changed

    def contains(self, v: Sequence[int]) -> bool:
        """Membership of an integer vector in the current span."""
        v = [int(x) for x in v]
        for c in range(self.ncols):
            a = v[c]
            if a == 0:
                continue
            row = self._rows.get(c)
            if row is None or a % row[c]:
                return False
            q = a // row[c]
            v = [x - q * y for x, y in zip(v, row)]
        return True

    def basis(self) -> list[list[int]]:
        """The reduced HNF: positive pivots, entries above pivots in ``[0, pivot)``."""
        cols = sorted(self._rows)
        H = [list(self._rows[c]) for c in cols]
        for i, c in enumerate(cols):
            p = H[i][c]
            for k in range(i):
                q = H[k][c] // p
                if q:
                    H[k] = [x - q * y for x, y in zip(H[k], H[i])]
        return H

    def pivot_product(self) -> int:
        out = 1
        for row_c, row in self._rows.items():
            out *= row[row_c]
        return out


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b) > 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def hnf(B: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the row span of ``B``; zero rows dropped."""
    if not B:
        raise DimensionError("hnf needs at least one row")
    h = HermiteBuilder(len(B[0]))
    for row in B:
        h.add(row)
    return h.basis()


def matvec(A: Sequence[Sequence], v: Sequence) -> list:
    return [sum(a * x for a, x in zip(row, v)) for row in A]
