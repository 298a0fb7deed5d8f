"""Exact linear algebra over the rationals, with a modular fast path.

Rank and kernel computations that feed theorem-level claims run over
``fractions.Fraction``.  Large interpolation solves may run modulo a few
31-bit primes and reconstruct; callers are expected to verify reconstructed
answers exactly afterwards.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

__all__ = [
    "Span",
    "solve_square",
    "kernel_of_columns",
    "frac_det",
    "PRIMES31",
    "solve_mod_p",
    "matvec_mod",
    "crt",
    "symmetric_mod",
    "rational_reconstruct",
]

PRIMES31 = (2147483647, 2147483629, 2147483587)


class Span:
    """Incrementally maintained row space over the rationals."""

    def __init__(self, length: int):
        self.length = length
        self.pivots: dict[int, list[Fraction]] = {}

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def _reduce(self, vec):
        v = [Fraction(x) for x in vec]
        for col, row in self.pivots.items():
            c = v[col]
            if c:
                for j in range(self.length):
                    v[j] -= c * row[j]
        return v

    def residual(self, vec):
        """The part of vec outside the current span (coefficients not tracked)."""
        return self._reduce(vec)

    def contains(self, vec) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec) -> bool:
        """Insert vec; returns True when it enlarged the span."""
        v = self._reduce(vec)
        for col in range(self.length):
            if v[col]:
                inv = Fraction(1) / v[col]
                row = [x * inv for x in v]
                for other in self.pivots.values():
                    c = other[col]
                    if c:
                        for j in range(self.length):
                            other[j] -= c * row[j]
                self.pivots[col] = row
                return True
        return False


def solve_square(matrix, rhs):
    """Solve A x = b exactly; returns None when A is singular."""
    m = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(v)] for row, v in zip(matrix, rhs)]
    cols = len(a[0]) - 1
    if any(len(row) != cols + 1 for row in a):
        raise ValueError("ragged matrix")
    row_at = 0
    piv_cols = []
    for col in range(cols):
        piv = next((r for r in range(row_at, m) if a[r][col]), None)
        if piv is None:
            return None
        a[row_at], a[piv] = a[piv], a[row_at]
        inv = Fraction(1) / a[row_at][col]
        a[row_at] = [x * inv for x in a[row_at]]
        for r in range(m):
            if r != row_at and a[r][col]:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[row_at])]
        piv_cols.append(col)
        row_at += 1
    if any(any(a[r][:cols]) or a[r][cols] for r in range(row_at, m)):
        return None
    sol = [Fraction(0)] * cols
    for r, col in enumerate(piv_cols):
        sol[col] = a[r][cols]
    return sol


def kernel_of_columns(vectors):
    """Basis of {c : sum_i c_i v_i = 0} for column vectors v_i of equal length."""
    m = len(vectors)
    if m == 0:
        return []
    length = len(vectors[0])
    a = [[Fraction(vectors[i][j]) for i in range(m)] for j in range(length)]
    pivot_of_col: dict[int, int] = {}
    row_at = 0
    for col in range(m):
        piv = next((r for r in range(row_at, length) if a[r][col]), None)
        if piv is None:
            continue
        a[row_at], a[piv] = a[piv], a[row_at]
        inv = Fraction(1) / a[row_at][col]
        a[row_at] = [x * inv for x in a[row_at]]
        for r in range(length):
            if r != row_at and a[r][col]:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[row_at])]
        pivot_of_col[col] = row_at
        row_at += 1
    basis = []
    free = [c for c in range(m) if c not in pivot_of_col]
    for fc in free:
        vec = [Fraction(0)] * m
        vec[fc] = Fraction(1)
        for col, r in pivot_of_col.items():
            vec[col] = -a[r][fc]
        basis.append(tuple(vec))
    return basis


def frac_det(matrix) -> Fraction:
    a = [[Fraction(x) for x in row] for row in matrix]
    m = len(a)
    det = Fraction(1)
    for col in range(m):
        piv = next((r for r in range(col, m) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, m):
            if a[r][col]:
                c = a[r][col] * inv
                a[r] = [x - c * y for x, y in zip(a[r], a[col])]
    return det


def solve_mod_p(matrix, rhs, p):
    """Solve A x = b over GF(p); returns an int64 array or None when singular."""
    m = len(matrix)
    a = np.zeros((m, m + 1), dtype=np.int64)
    a[:, :m] = np.asarray(matrix, dtype=np.int64) % p
    a[:, m] = np.asarray(rhs, dtype=np.int64) % p
    for col in range(m):
        nz = np.nonzero(a[col:, col])[0]
        if len(nz) == 0:
            return None
        piv = col + int(nz[0])
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
        inv = pow(int(a[col, col]), p - 2, p)
        a[col] = (a[col] * inv) % p
        coeffs = a[:, col].copy()
        coeffs[col] = 0
        a = (a - np.outer(coeffs, a[col])) % p
    return a[:, m]


def matvec_mod(mat, vec, p):
    """mat @ vec mod p without int64 overflow (16-bit limb split of vec)."""
    vec = np.asarray(vec, dtype=np.int64) % p
    lo = vec & 0xFFFF
    hi = vec >> 16
    return (((mat @ hi) % p << 16) + (mat @ lo)) % p


def crt(res_a: int, mod_a: int, res_b: int, mod_b: int) -> tuple[int, int]:
    inv = pow(mod_a % mod_b, mod_b - 2, mod_b)
    t = ((res_b - res_a) * inv) % mod_b
    return res_a + mod_a * t, mod_a * mod_b


def symmetric_mod(a: int, m: int) -> int:
    a %= m
    return a - m if a > m // 2 else a


def rational_reconstruct(a: int, m: int):
    """Recover x/y with x^2, y^2 <= m/2 from a = x/y mod m, or None."""
    a %= m
    bound = int((m // 2) ** 0.5)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if abs(s1) > bound or s1 == 0:
        return None
    from math import gcd

    if gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1) if s1 > 0 else Fraction(-r1, -s1)
