"""Exact rational scalars and dense matrix routines.

Matrices are plain lists of lists of :class:`fractions.Fraction`.  Nothing
here ever rounds: determinants go through fraction-free Bareiss elimination
on integer matrices, everything else through Gaussian elimination over Q.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Matrix = list[list[Fraction]]


def to_fraction(value) -> Fraction:
    """Parse ``value`` as an exact rational.

    Accepts ints, Fractions, and strings such as ``"3"``, ``"-5/8"`` or
    ``"0.125"``.  Floats are rejected because their binary expansion is
    almost never what the caller meant.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(f"float {value!r} is not exact; pass a string or Fraction")
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty scalar")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[to_fraction(x) for x in row] for row in rows]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> Matrix:
    out = zeros(n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def scale(a: Matrix, k) -> Matrix:
    k = Fraction(k)
    return [[k * x for x in row] for row in a]


def submatrix(a: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[a[i][j] for j in cols] for i in rows]


def is_symmetric(a: Matrix) -> bool:
    n = len(a)
    return all(len(row) == n for row in a) and all(
        a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n)
    )


def _integer_rows(a: Matrix) -> tuple[list[list[int]], int]:
    """Scale each row by the lcm of its denominators; return rows and the product."""
    out = []
    factor = 1
    for row in a:
        m = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * m) for x in row])
        factor *= m
    return out, factor


def bareiss_det(a: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def det(a: Matrix) -> Fraction:
    if len(a) == 0:
        return Fraction(1)
    ints, factor = _integer_rows(a)
    return Fraction(bareiss_det(ints), factor)


def row_echelon(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return len(row_echelon(a)[1])


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Solve ``a x = b`` for square nonsingular ``a``; raises ZeroDivisionError if singular."""
    n = len(a)
    aug = [list(a[i]) + list(b[i]) for i in range(n)]
    red, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red[:n]]


def inverse(a: Matrix) -> Matrix:
    return solve(a, identity(len(a)))


def in_column_span(vec: Sequence[Fraction], cols: Sequence[Sequence[Fraction]]) -> bool:
    """Is ``vec`` a linear combination of the vectors in ``cols``?"""
    if all(x == 0 for x in vec):
        return True
    if not cols:
        return False
    base = transpose([list(c) for c in cols])
    return rank(base) == rank([row + [x] for row, x in zip(base, vec)])
