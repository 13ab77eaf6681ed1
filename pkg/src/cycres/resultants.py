"""Cyclic resultants by three independent routes, plus real sign analysis.

The resultant convention is fixed so that Res(f, g) equals
lead(f)^deg(g) * prod g(alpha_i) over the roots of f; with g = x^m - 1 this
is the m-th cyclic resultant lead^m * prod (alpha_i^m - 1).  The standard
Sylvester layout realizes exactly this convention, which every other formula
in the package relies on.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    InternalCheckError,
    PreconditionError,
    RootOfUnityError,
    ZeroPolynomialError,
)
from .gaussian import GaussianRational
from .polycore import (
    Polynomial,
    has_root_of_unity,
    roots_numeric,
    square_free_decomposition,
)

COMPANION_CROSS_CHECK_LIMIT = 16


@dataclass(frozen=True)
class ResultantSequence:
    """Exact cyclic-resultant values for m = 1..N (1-based in document order)."""

    values: tuple[GaussianRational, ...]
    is_abs: bool = False
    source_degree: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.values:
            raise ValueError("sequence must have at least one entry")
        if self.is_abs:
            for v in self.values:
                if not v.is_real() or v.re < 0:
                    raise ValueError("absolute-value sequence entries must be >= 0")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, m: int) -> GaussianRational:
        """1-based access: seq[m] is the m-th value."""
        if not 1 <= m <= len(self.values):
            raise IndexError(f"index {m} outside 1..{len(self.values)}")
        return self.values[m - 1]

    def has_zero(self) -> bool:
        return any(v.is_zero() for v in self.values)

    def to_json(self) -> dict:
        return {
            "is_abs": self.is_abs,
            "values": [v.to_quad() for v in self.values],
        }

    @staticmethod
    def from_json(data: dict) -> "ResultantSequence":
        return ResultantSequence(
            values=tuple(GaussianRational.from_quad(q) for q in data["values"]),
            is_abs=bool(data.get("is_abs", False)),
        )


# ---------------------------------------------------------------------------
# exact determinants
# ---------------------------------------------------------------------------


def _det_bareiss_int(m: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
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
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _det_field(m: list[list[GaussianRational]]) -> GaussianRational:
    """Exact determinant over the Gaussian rationals (plain elimination)."""
    n = len(m)
    if n == 0:
        return GaussianRational(1)
    m = [row[:] for row in m]
    det = GaussianRational(1)
    for k in range(n):
        pivot_row = None
        for r in range(k, n):
            if not m[r][k].is_zero():
                pivot_row = r
                break
        if pivot_row is None:
            return GaussianRational(0)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = -det
        pivot = m[k][k]
        det = det * pivot
        for r in range(k + 1, n):
            if not m[r][k].is_zero():
                factor = m[r][k] / pivot
                for c in range(k, n):
                    m[r][c] = m[r][c] - factor * m[k][c]
    return det


def _det_exact(m: list[list[GaussianRational]]) -> GaussianRational:
    if all(c.is_integer() for row in m for c in row):
        return GaussianRational(
            _det_bareiss_int([[c.re.numerator for c in row] for row in m])
        )
    return _det_field(m)


def resultant(f: Polynomial, g: Polynomial) -> GaussianRational:
    """Res(f, g) = lead(f)^deg(g) * prod g(alpha_i), by Sylvester determinant.

    The Sylvester matrix holds deg(g) shifted copies of f's coefficients over
    deg(f) shifted copies of g's; its determinant realizes the convention
    above with no extra sign.  Res(f, 1) = 1 by the empty-product convention.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("resultant of the zero polynomial")
    n = f.degree
    m = g.degree
    size = n + m
    if size == 0:
        return GaussianRational(1)
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    zero = GaussianRational(0)
    rows: list[list[GaussianRational]] = []
    for i in range(m):
        rows.append([zero] * i + fd + [zero] * (size - i - len(fd)))
    for i in range(n):
        rows.append([zero] * i + gd + [zero] * (size - i - len(gd)))
    return _det_exact(rows)


# ---------------------------------------------------------------------------
# the three cyclic-resultant routes
# ---------------------------------------------------------------------------


def _x_power_minus_one(m: int) -> Polynomial:
    return Polynomial([-1] + [0] * (m - 1) + [1])


def companion_matrix(f: Polynomial) -> list[list[GaussianRational]]:
    """d x d companion matrix of f normalized monic (subdiagonal of ones)."""
    if f.is_zero():
        raise ZeroPolynomialError("companion matrix of the zero polynomial")
    d = f.degree
    lead = f.leading
    zero = GaussianRational(0)
    mat = [[zero] * d for _ in range(d)]
    for i in range(1, d):
        mat[i][i - 1] = GaussianRational(1)
    for i in range(d):
        mat[i][d - 1] = -f.coeffs[i] / lead
    return mat


def _mat_mul(a, b):
    n = len(a)
    zero = GaussianRational(0)
    out = [[zero] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            aik = a[i][k]
            if aik.is_zero():
                continue
            for j in range(n):
                if not b[k][j].is_zero():
                    out[i][j] = out[i][j] + aik * b[k][j]
    return out


def _mat_pow(a, m: int):
    n = len(a)
    result = [
        [GaussianRational(1 if i == j else 0) for j in range(n)] for i in range(n)
    ]
    base = a
    while m:
        if m & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        m >>= 1
    return result


def cyclic_resultant(f: Polynomial, m: int, method: str = "direct"):
    """m-th cyclic resultant of f.

    method="direct":    exact Sylvester resultant against x^m - 1.
    method="companion": exact lead^m * det(A^m - I) with A the companion
                        matrix of f normalized monic.
    method="roots":     float lead^m * prod (alpha_i^m - 1) from numeric
                        roots; returns a complex double.
    """
    if m <= 0:
        raise ValueError("cyclic resultant index must be >= 1")
    if f.is_zero():
        raise ZeroPolynomialError("cyclic resultant of the zero polynomial")
    if method == "direct":
        return resultant(f, _x_power_minus_one(m))
    if method == "companion":
        d = f.degree
        power = _mat_pow(companion_matrix(f), m)
        for i in range(d):
            power[i][i] = power[i][i] - 1
        return f.leading**m * _det_exact(power)
    if method == "roots":
        value = complex(f.leading) ** m
        for alpha in roots_numeric(f):
            value *= alpha**m - 1
        return value
    raise ValueError(f"unknown method {method!r}")


def sequence(f: Polynomial, length: int) -> ResultantSequence:
    """Exact cyclic resultants for m = 1..length.

    Values come from the direct (Sylvester) route; the companion route is
    recomputed independently for m up to 16 and any disagreement raises an
    internal error, since the two must agree exactly.
    """
    if length < 1:
        raise ValueError("sequence length must be >= 1")
    if f.is_zero():
        raise ZeroPolynomialError("sequence of the zero polynomial")
    values = []
    for m in range(1, length + 1):
        direct = cyclic_resultant(f, m, "direct")
        if m <= COMPANION_CROSS_CHECK_LIMIT:
            comp = cyclic_resultant(f, m, "companion")
            if comp != direct:
                raise InternalCheckError(
                    "direct and companion cyclic resultants disagree",
                    m=m,
                    direct=str(direct),
                    companion=str(comp),
                )
        values.append(direct)
    return ResultantSequence(tuple(values), is_abs=False, source_degree=f.degree)


# ---------------------------------------------------------------------------
# real sign analysis (Sturm counting)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SignData:
    """Sign decomposition of a real polynomial's cyclic resultants.

    count_inside is the number of real zeros in (-1, 1) and count_below the
    number in (-inf, -1), both with multiplicity.  The resultant sign obeys
    r_m / |r_m| = base_sign * alt_sign^m with base_sign = (-1)^count_inside.

    alt_sign carries sign(lead) besides (-1)^count_below: the lead^m factor
    in the root-product formula alternates exactly like a root below -1, a
    contribution the textbook rule drops by assuming a positive leading
    coefficient (verified against exact sequences in the suite).
    """

    count_inside: int
    count_below: int
    lead_negative: bool = False

    @property
    def base_sign(self) -> int:
        return -1 if self.count_inside % 2 else 1

    @property
    def alt_sign(self) -> int:
        sign = -1 if self.count_below % 2 else 1
        return -sign if self.lead_negative else sign

    def sign_at(self, m: int) -> int:
        return self.base_sign * (self.alt_sign if m % 2 else 1)


def _to_fraction_poly(f: Polynomial) -> list[Fraction]:
    return [c.re for c in f.coeffs]


def _frac_eval(coeffs: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _frac_divmod(a: list[Fraction], b: list[Fraction]):
    a = a[:]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        t = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = t
        for j, c in enumerate(b):
            a[k + j] -= t * c
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _sturm_chain(coeffs: list[Fraction]) -> list[list[Fraction]]:
    deriv = [c * i for i, c in enumerate(coeffs)][1:]
    chain = [coeffs, deriv]
    while chain[-1]:
        _, rem = _frac_divmod(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return [c for c in chain if c]


def _sign_variations(values: list[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots_in(coeffs: list[Fraction], lo, hi) -> int:
    """Distinct real roots of a square-free polynomial in (lo, hi].

    lo / hi may be the strings "-inf" / "inf"; the endpoint variation then
    uses leading-term signs.
    """
    if len(coeffs) <= 1:
        return 0
    chain = _sturm_chain(coeffs)

    def variations_at(point) -> int:
        if point == "-inf":
            vals = [c[-1] * (-1) ** (len(c) - 1) for c in chain]
        elif point == "inf":
            vals = [c[-1] for c in chain]
        else:
            vals = [_frac_eval(c, point) for c in chain]
        return _sign_variations(vals)

    return variations_at(lo) - variations_at(hi)


def sign_data(f: Polynomial) -> SignData:
    """Exact root counts in (-1,1) and (-inf,-1), with multiplicity.

    Requires real coefficients and no root of unity (in particular no root
    at -1 or 1, so open versus closed interval endpoints cannot matter).
    Counts come from Sturm chains on each square-free factor, scaled by
    multiplicity.
    """
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    if not f.is_real():
        raise PreconditionError("sign analysis requires real coefficients")
    if has_root_of_unity(f):
        raise RootOfUnityError("polynomial has a root of unity")
    inside = 0
    below = 0
    for factor, mult in square_free_decomposition(f):
        coeffs = _to_fraction_poly(factor)
        inside += mult * _count_roots_in(coeffs, Fraction(-1), Fraction(1))
        below += mult * _count_roots_in(coeffs, "-inf", Fraction(-1))
    return SignData(
        count_inside=inside,
        count_below=below,
        lead_negative=f.leading.re < 0,
    )


def abs_sequence(f: Polynomial, length: int) -> ResultantSequence:
    """|r_m| for m = 1..length, computed exactly via the sign decomposition."""
    data = sign_data(f)
    base = sequence(f, length)
    values = []
    for m in range(1, length + 1):
        v = base[m] * data.sign_at(m)
        if not v.is_real() or v.re < 0:
            raise InternalCheckError(
                "sign law produced a non-positive absolute value", m=m, value=str(v)
            )
        values.append(v)
    return ResultantSequence(tuple(values), is_abs=True, source_degree=f.degree)
