"""Exact rational linear algebra on tuple vectors.

Every coordinate is a fractions.Fraction and every operation is exact; no
float ever enters a sign decision.  Vectors are plain tuples, matrices are
lists of row tuples.  This is deliberately small: reduced row echelon form,
rank, kernel bases and a dense solve are all the geometry layer needs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Vector = tuple[Fraction, ...]


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dot of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def scale(u: Vector, c: Fraction) -> Vector:
    return tuple(c * a for a in u)


def is_zero(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns.

    The output is canonical for the row space, so it doubles as an exact
    dedup key for subspaces.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [inv * a for a in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[0])


def kernel_basis(rows: Sequence[Sequence[Fraction]], n: int) -> list[Vector]:
    """Basis of {x in Q^n : row . x = 0 for every row}."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -reduced[i][f]
        basis.append(tuple(x))
    return basis


def in_row_space(rows: Sequence[Vector], v: Vector) -> bool:
    base = rref(rows)[0]
    return rank(list(base) + [v]) == len(base)


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vector:
    """Solve a square nonsingular system exactly."""
    n = len(rhs)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("system is singular or inconsistent")
    return tuple(row[n] for row in reduced)


def is_parallel(u: Vector, v: Vector) -> bool:
    """True when u = c*v for some nonzero rational c (both nonzero)."""
    if is_zero(u) or is_zero(v):
        return False
    c: Optional[Fraction] = None
    for a, b in zip(u, v):
        if (a == 0) != (b == 0):
            return False
        if b != 0:
            q = a / b
            if c is None:
                c = q
            elif q != c:
                return False
    return True


def primitive(v: Vector) -> tuple[Vector, Fraction]:
    """Scale v to the canonical primitive integer vector on its line.

    Returns (p, c) with v = c*p, p having coprime integer entries and a
    positive leading nonzero entry.  c carries the orientation sign.
    """
    if is_zero(v):
        raise ValueError("zero vector has no primitive form")
    denom = 1
    for a in v:
        denom = denom * a.denominator // gcd(denom, a.denominator)
    ints = [int(a * denom) for a in v]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    ints = [a // g for a in ints]
    lead = next(a for a in ints if a != 0)
    if lead < 0:
        ints = [-a for a in ints]
    p = tuple(Fraction(a) for a in ints)
    c = next(a / b for a, b in zip(v, p) if b != 0)
    return p, c
