"""Small dense-matrix helpers over RatFunc entries.

Matrices here are tuples of tuples of RatFunc.  Sizes stay tiny (the rank
of the group plus the dimension of the symplectic space), so Laplace
expansion for determinants and cofactor adjugates are perfectly adequate.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ShapeError
from .field import RatFunc

Matrix = tuple

_ZERO = RatFunc.const(0)
_ONE = RatFunc.const(1)


def as_entry(value) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    return RatFunc.const(value)


def mat_from(rows: Sequence[Sequence]) -> Matrix:
    out = tuple(tuple(as_entry(e) for e in row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise ShapeError("ragged matrix")
    return out


def zeros(nrows: int, ncols: int) -> Matrix:
    return tuple(tuple(_ZERO for _ in range(ncols)) for _ in range(nrows))


def identity(n: int) -> Matrix:
    return tuple(
        tuple(_ONE if j == k else _ZERO for k in range(n)) for j in range(n)
    )


def shape(m: Matrix) -> tuple[int, int]:
    return (len(m), len(m[0]) if m else 0)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise ShapeError(f"matrix shapes differ: {shape(a)} vs {shape(b)}")
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise ShapeError(f"matrix shapes differ: {shape(a)} vs {shape(b)}")
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def mat_scale(c, a: Matrix) -> Matrix:
    c = as_entry(c)
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k = shape(a)
    k2, m = shape(b)
    if k != k2:
        raise ShapeError(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = tuple(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = _ZERO
            for x, y in zip(row, col):
                if not (x.is_zero() or y.is_zero()):
                    acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def mat_vec(a: Matrix, v: Sequence[RatFunc]) -> tuple:
    n, k = shape(a)
    if k != len(v):
        raise ShapeError(f"cannot apply {shape(a)} to a vector of length {len(v)}")
    out = []
    for row in a:
        acc = _ZERO
        for x, y in zip(row, v):
            if not (x.is_zero() or y.is_zero()):
                acc = acc + x * y
        out.append(acc)
    return tuple(out)


def mat_transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else a


def mat_trace(a: Matrix) -> RatFunc:
    acc = _ZERO
    for j in range(len(a)):
        acc = acc + a[j][j]
    return acc


def mat_is_zero(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return shape(a) == shape(b) and all(
        x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def _minor(a: Matrix, i: int, j: int) -> Matrix:
    return tuple(
        tuple(x for c, x in enumerate(row) if c != j)
        for r, row in enumerate(a)
        if r != i
    )


def det(a: Matrix) -> RatFunc:
    n, m = shape(a)
    if n != m:
        raise ShapeError("determinant of a non-square matrix")
    if n == 0:
        return _ONE
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    acc = _ZERO
    for j in range(n):
        if a[0][j].is_zero():
            continue
        term = a[0][j] * det(_minor(a, 0, j))
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def adjugate(a: Matrix) -> Matrix:
    n, m = shape(a)
    if n != m:
        raise ShapeError("adjugate of a non-square matrix")
    if n == 1:
        return (( _ONE, ),)
    out = [[_ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = det(_minor(a, i, j))
            out[j][i] = c if (i + j) % 2 == 0 else -c
    return tuple(tuple(row) for row in out)


def block_diag(*blocks: Matrix) -> Matrix:
    total = sum(shape(b)[0] for b in blocks)
    out = [[_ZERO] * total for _ in range(total)]
    offset = 0
    for b in blocks:
        n, m = shape(b)
        if n != m:
            raise ShapeError("block_diag expects square blocks")
        for i in range(n):
            for j in range(n):
                out[offset + i][offset + j] = b[i][j]
        offset += n
    return tuple(tuple(row) for row in out)


def mat_to_text(a: Matrix, var: str = "z") -> list[list[str]]:
    return [[x.to_text(var) for x in row] for row in a]
