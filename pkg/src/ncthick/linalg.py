"""Exact dense linear algebra over the rationals and the integers.

Matrices are sequences of row sequences with int or Fraction entries;
results come back as tuples of tuples.  Shapes with zero rows or columns
are legal, which is why the rational routines take the column count
explicitly instead of guessing it from a possibly empty row list.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = Sequence
Mat = Sequence[Sequence]


def freeze(rows: Mat) -> tuple[tuple, ...]:
    return tuple(tuple(r) for r in rows)


def zeros(nrows: int, ncols: int) -> tuple[tuple[int, ...], ...]:
    return tuple((0,) * ncols for _ in range(nrows))


def identity(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_mul(a: Mat, b: Mat) -> tuple[tuple, ...]:
    """Product of a (r x k) and b (k x c); b must have at least one row."""
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Mat, v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: Mat, ncols: int) -> tuple[tuple, ...]:
    return tuple(tuple(row[j] for row in a) for j in range(ncols))


def rref(rows: Mat, ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Mat, ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows: Mat, ncols: int) -> tuple[tuple[Fraction, ...], ...]:
    """Basis of the right kernel, one vector per free column."""
    if ncols == 0:
        return ()
    if not rows:
        return tuple(tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols))
    m, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -m[r][f]
        basis.append(tuple(v))
    return tuple(basis)


def solve_columns(a: Mat, ncols_a: int, b: Mat, ncols_b: int) -> tuple[tuple[Fraction, ...], ...]:
    """Solve a @ x = b for x, where a has full column rank.

    Raises StructuralError when the system is inconsistent or the rank
    assumption fails; shapes: a is (r x ncols_a), b is (r x ncols_b),
    result is (ncols_a x ncols_b).
    """
    from .errors import StructuralError

    if not a:
        if any(any(x != 0 for x in row) for row in b):
            raise StructuralError("inconsistent empty system")
        return zeros(ncols_a, ncols_b)
    aug = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    m, pivots = rref(aug, ncols_a + ncols_b)
    if len(pivots) != ncols_a or any(p >= ncols_a for p in pivots):
        raise StructuralError("solve_columns: matrix not of full column rank or inconsistent")
    x = [[Fraction(0)] * ncols_b for _ in range(ncols_a)]
    for r, c in enumerate(pivots):
        for j in range(ncols_b):
            x[c][j] = m[r][ncols_a + j]
    return freeze(x)


def inverse(a: Mat) -> tuple[tuple[Fraction, ...], ...]:
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    m, pivots = rref(aug, 2 * n)
    from .errors import StructuralError

    if pivots[:n] != list(range(n)):
        raise StructuralError("matrix not invertible")
    return freeze(row[n:] for row in m[:n])


def int_inverse(a: Mat) -> tuple[tuple[int, ...], ...]:
    """Inverse of an integer matrix known to be invertible over Z."""
    from .errors import StructuralError

    inv = inverse(a)
    out = []
    for row in inv:
        ints = []
        for x in row:
            if x.denominator != 1:
                raise StructuralError("inverse is not integral")
            ints.append(int(x))
        out.append(tuple(ints))
    return tuple(out)


def int_rank(a: Mat) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(row) for row in a]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            f = m[i][c]
            m[i] = [(piv * x - f * y) // prev for x, y in zip(m[i], m[r])]
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


def int_det(a: Mat) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    m = [list(row) for row in a]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(n - 1):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        piv = m[c][c]
        for i in range(c + 1, n):
            f = m[i][c]
            m[i] = [(piv * x - f * y) // prev for x, y in zip(m[i], m[c])]
        prev = piv
    return sign * m[n - 1][n - 1]
