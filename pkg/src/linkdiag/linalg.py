"""Exact integer and rational matrix routines."""

from __future__ import annotations

from fractions import Fraction


def det_int(m: list[list[int]]) -> int:
    """Bareiss fraction-free determinant."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def signature_sym(m: list[list[int]]) -> int:
    """Signature of a symmetric rational matrix by congruence diagonalisation."""
    n = len(m)
    a = [[Fraction(v) for v in row] for row in m]
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    active = list(range(n))
    while active:
        p = next((i for i in active if a[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j] != 0), None)
            if pair is None:
                break  # remaining block is zero
            i, j = pair
            # row/column i += row/column j makes a[i][i] = 2 a[i][j] != 0
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            p = i
        piv = a[p][p]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        active.remove(p)
        row = list(a[p])
        for i in active:
            f = row[i] / piv
            if f:
                for k in active:
                    a[i][k] -= f * row[k]
            a[i][p] = a[p][i] = Fraction(0)
    return pos - neg


def interpolate(xs: list[int], ys: list[int]) -> list[Fraction]:
    """Coefficients (low to high) of the polynomial through the points."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis  # multiply by x
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] += ys[i] * basis[k] / denom
    return coeffs


def poly_det(mat_at, size: int, degree: int) -> list[int]:
    """Integer coefficients of det(M(t)) given ``mat_at(t)`` and a degree bound."""
    xs = list(range(degree + 1))
    ys = [det_int(mat_at(x)) for x in xs]
    cs = interpolate(xs, ys)
    if any(c.denominator != 1 for c in cs):
        raise ArithmeticError("determinant is not an integer polynomial")
    return [int(c) for c in cs]
