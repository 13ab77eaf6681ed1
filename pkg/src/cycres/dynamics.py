"""Periodic-point counting for endomorphisms of the torus.

An integer matrix A acts on the d-torus by multiplication mod 1.  When no
eigenvalue is a root of unity (the ergodic case) the number of points fixed
by the m-th iterate is |det(A^m - I)|, which is also the absolute m-th cyclic
resultant of the characteristic polynomial.  Everything except the
spectrum-recovery test runs in exact integer arithmetic.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeGuardError, PreconditionError
from .gaussian import GaussianRational
from .genfun import PowerSeries, exp_neg_weighted_series_exact
from .polycore import Polynomial, has_root_of_unity, roots_numeric
from .resultants import _det_bareiss_int as _det_int

SUBSET_SCAN_LIMIT = 20


class SpectrumToleranceWarning(UserWarning):
    """A subset product landed near the +-1 decision threshold."""


@dataclass(frozen=True)
class IntegerMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("matrix must be square")

    @staticmethod
    def of(rows) -> "IntegerMatrix":
        return IntegerMatrix(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [[str(x) for x in row] for row in self.entries],
        }

    @staticmethod
    def from_json(data: dict) -> "IntegerMatrix":
        mat = IntegerMatrix.of(data["entries"])
        if mat.n != int(data["n"]):
            raise ValueError("matrix dimension does not match entries")
        return mat


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mul(a, b):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for k in range(n):
            if ai[k]:
                aik = ai[k]
                bk = b[k]
                row = out[i]
                for j in range(n):
                    row[j] += aik * bk[j]
    return out


def _pow(a, m: int):
    result = _identity(len(a))
    base = [row[:] for row in a]
    while m:
        if m & 1:
            result = _mul(result, base)
        base = _mul(base, base)
        m >>= 1
    return result


def char_poly(a: IntegerMatrix) -> Polynomial:
    """Monic characteristic polynomial det(xI - A), exactly.

    Faddeev-LeVerrier recursion over rationals; every coefficient comes out
    an integer and that is asserted.
    """
    n = a.n
    work = [[Fraction(x) for x in row] for row in a.entries]
    coeffs = [Fraction(1)]  # descending: x^n first
    m_mat = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        if k == 1:
            m_mat = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        else:
            am = [
                [sum(work[i][t] * m_mat[t][j] for t in range(n)) for j in range(n)]
                for i in range(n)
            ]
            for i in range(n):
                am[i][i] += coeffs[-1]
            m_mat = am
        am = [
            [sum(work[i][t] * m_mat[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        ck = -sum(am[i][i] for i in range(n)) / k
        coeffs.append(ck)
    ascending = list(reversed(coeffs))
    for c in ascending:
        if c.denominator != 1:
            raise AssertionError("characteristic polynomial must be integral")
    return Polynomial([int(c) for c in ascending])


def is_ergodic(a: IntegerMatrix) -> bool:
    """True iff no eigenvalue is a root of unity (exact cyclotomic test)."""
    if a.n == 0:
        return True
    return not has_root_of_unity(char_poly(a))


def periodic_point_count(a: IntegerMatrix, m: int) -> int:
    """|det(A^m - I)|: the number of points fixed by the m-th iterate."""
    if m < 1:
        raise ValueError("iterate index must be >= 1")
    if not is_ergodic(a):
        raise PreconditionError("matrix has a root-of-unity eigenvalue")
    power = _pow([list(row) for row in a.entries], m)
    for i in range(a.n):
        power[i][i] -= 1
    return abs(_det_int(power))


def zeta_series(a: IntegerMatrix, order: int) -> PowerSeries:
    """Truncated series of exp(-sum_m count_m z^m / m) with exact counts."""
    if not is_ergodic(a):
        raise PreconditionError("matrix has a root-of-unity eigenvalue")
    counts = [
        GaussianRational(periodic_point_count(a, m)) for m in range(1, order + 1)
    ]
    exact = exp_neg_weighted_series_exact(counts, order)
    return PowerSeries(tuple(complex(b) for b in exact))


def spectrum_determined(a: IntegerMatrix, tol: float = 1e-8) -> bool:
    """Whether the periodic-point counts pin down the eigenvalues.

    Sufficient condition: no nonempty subset of the eigenvalues has product
    within tol of +1 or -1.  Exhaustive over all 2^d - 1 subsets (d <= 20),
    on numeric eigenvalues; products inside 10*tol of the threshold emit a
    SpectrumToleranceWarning since the verdict is then numerically fragile.
    """
    if not is_ergodic(a):
        raise PreconditionError("matrix has a root-of-unity eigenvalue")
    d = a.n
    if d > SUBSET_SCAN_LIMIT:
        raise DegreeGuardError(
            "subset scan over eigenvalues is exponential", dimension=d
        )
    eigs = roots_numeric(char_poly(a))
    products = [1 + 0j]
    for lam in eigs:
        products.extend([p * lam for p in products])
    for p in products[1:]:
        gap = min(abs(p - 1), abs(p + 1))
        if gap <= tol:
            return False
        if gap <= 10 * tol:
            warnings.warn(
                f"subset product {p!r} is within 10x tolerance of +-1",
                SpectrumToleranceWarning,
            )
    return True
