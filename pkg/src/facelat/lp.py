"""Exact rational feasibility kernels.

Two independent mechanisms, both exact:

* Fourier-Motzkin elimination (with witness reconstruction) decides strict
  homogeneous systems ``row . x > 0``; it backs the sign-pattern oracle that
  drives face enumeration.
* A Phase-I simplex with Bland's rule decides membership of a vector in the
  cone nonnegatively spanned by a set of generators; it backs the zonotope
  cone comparisons.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .linalg import Vector, is_zero


def _normalize_row(row: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale to coprime integers by a positive factor (direction preserved)."""
    denom = 1
    for a in row:
        denom = denom * a.denominator // gcd(denom, a.denominator)
    ints = [int(a * denom) for a in row]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    if g > 1:
        ints = [a // g for a in ints]
    return tuple(Fraction(a) for a in ints)


def strict_feasible_point(ineqs: Sequence[Sequence[Fraction]], n: int) -> Optional[Vector]:
    """Witness x with row . x > 0 for every row, or None if none exists.

    The system is homogeneous and every inequality strict, which keeps
    Fourier-Motzkin exact: combining a lower and an upper bound on the
    eliminated variable with positive multipliers again yields a strict
    inequality, and any solution of the projected system extends because the
    induced open interval is nonempty.
    """
    system = set()
    for row in ineqs:
        if is_zero(row):
            return None
        system.add(_normalize_row(row))
    if n == 0:
        return ()

    remaining = list(range(n))
    trace: list[tuple[int, list[tuple[Fraction, ...]]]] = []
    while remaining:
        rows = sorted(system)
        # cheapest variable first: minimize the number of combined rows
        def cost(v: int) -> tuple[int, int]:
            pos = sum(1 for r in rows if r[v] > 0)
            neg = sum(1 for r in rows if r[v] < 0)
            return (pos * neg, v)

        v = min(remaining, key=cost)
        trace.append((v, rows))
        pos = [r for r in rows if r[v] > 0]
        negs = [r for r in rows if r[v] < 0]
        zero = [r for r in rows if r[v] == 0]
        system = set(zero)
        for p in pos:
            for q in negs:
                combined = tuple(p[v] * qq - q[v] * pp for pp, qq in zip(p, q))
                if is_zero(combined):
                    return None
                system.add(_normalize_row(combined))
        remaining.remove(v)

    x: list[Optional[Fraction]] = [None] * n
    for v, rows in reversed(trace):
        lows: list[Fraction] = []
        highs: list[Fraction] = []
        for r in rows:
            a = r[v]
            if a == 0:
                continue
            rest = sum(
                (r[j] * x[j] for j in range(n) if j != v and r[j] != 0 and x[j] is not None),
                Fraction(0),
            )
            bound = -rest / a
            (lows if a > 0 else highs).append(bound)
        if lows and highs:
            x[v] = (max(lows) + min(highs)) / 2
        elif lows:
            x[v] = max(lows) + 1
        elif highs:
            x[v] = min(highs) - 1
        else:
            x[v] = Fraction(0)
    return tuple(x)  # type: ignore[arg-type]


def in_cone(generators: Sequence[Vector], target: Vector) -> bool:
    """Exact test for target in the cone of nonnegative combinations.

    Phase-I simplex on  G lam = target, lam >= 0  with Bland's rule, so it
    terminates and never divides inexactly.
    """
    d = len(target)
    if d == 0:
        return True
    if not generators:
        return is_zero(target)
    m, n = d, len(generators)
    rows = []
    for i in range(m):
        row = [g[i] for g in generators]
        b = target[i]
        if b < 0:
            row = [-a for a in row]
            b = -b
        rows.append(row + [Fraction(0)] * m + [b])
    for i in range(m):
        rows[i][n + i] = Fraction(1)
    basis = [n + i for i in range(m)]
    # reduced costs for min sum(artificials): c_j - 1^T A_j
    red = [Fraction(0)] * (n + m)
    for j in range(n):
        red[j] = -sum(rows[i][j] for i in range(m))
    while True:
        enter = next((j for j in range(n + m) if red[j] < 0), None)
        if enter is None:
            break
        ratio = None
        leave = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                r = rows[i][-1] / a
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leave]):
                    ratio, leave = r, i
        if leave is None:
            raise RuntimeError("phase-I simplex unbounded")
        piv = rows[leave][enter]
        rows[leave] = [a / piv for a in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[leave])]
        f = red[enter]
        if f != 0:
            for j in range(n + m):
                red[j] -= f * rows[leave][j]
        basis[leave] = enter
    value = sum(rows[i][-1] for i in range(m) if basis[i] >= n)
    return value == 0
