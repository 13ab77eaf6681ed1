"""Enumerating the polynomials that share a cyclic-resultant sequence.

A polynomial g = x^l2 * v * u (with u(0) != 0) shares its sequence with
every f = (-1)^(deg u) * x^l1 * v * reversal(u) built by carrying a subset of
the nonzero roots into the reversal part, subject to deg(u) = l2 - l1 mod 2.
The real absolute-value variant allows any global sign but requires the
subset to be closed under conjugation so the member stays real.

Members are constructed from exact linear factors whenever the input splits
over the Gaussian rationals; otherwise they are expanded numerically,
rationalized, and kept only after exact re-verification of the sequence.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegreeGuardError,
    PreconditionError,
    RootOfUnityError,
    ZeroPolynomialError,
    ZeroResultantError,
)
from .gaussian import GaussianRational
from .polycore import Polynomial, has_root_of_unity, roots_numeric, try_exact_roots
from .resultants import sequence

DEFAULT_CHECK_LENGTH = 10
SUBSET_SCAN_LIMIT = 20
RATIONALIZE_DENOMINATOR_BOUND = 10**6


def generic_family_size(d: int) -> int:
    """Family size at a generic degree-d base: 2^(d-1)."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return 2 ** (d - 1)


@dataclass(frozen=True)
class SubsetRecord:
    """Which roots were carried into the reversal part, plus the global sign."""

    reversed_roots: tuple[str, ...]
    sign: int


@dataclass(frozen=True)
class EquivalenceFamily:
    base: Polynomial
    members: tuple[Polynomial, ...]
    l1: int
    subset_log: tuple[SubsetRecord, ...]
    unverified: tuple[tuple[complex, ...], ...] = ()

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, poly: Polynomial) -> bool:
        return poly in self.members


def _canonical_order(member: Polynomial):
    return (member.degree, tuple(c.sort_key() for c in member.coeffs))


def _sorted_unique(pairs):
    """Sort (member, record) pairs canonically and drop duplicate members."""
    seen = set()
    out = []
    for member, record in sorted(pairs, key=lambda mr: _canonical_order(mr[0])):
        if member.coeffs in seen:
            continue
        seen.add(member.coeffs)
        out.append((member, record))
    return out


def _root_label(root) -> str:
    return str(root)


def _split_base(g: Polynomial, check_length: int):
    """Common preconditions; returns (l2, h, base sequence)."""
    if g.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    if has_root_of_unity(g):
        raise RootOfUnityError("base polynomial has a root of unity")
    base_seq = sequence(g, check_length)
    if base_seq.has_zero():
        raise ZeroResultantError("base polynomial has a zero cyclic resultant")
    l2, h = g.strip_zero_roots()
    return l2, h, base_seq


def _member_exact(lead, keep, flip, l1: int, sign: int) -> Polynomial:
    v = Polynomial.from_roots(keep, lead)
    if flip:
        u_rev = Polynomial.from_roots(flip).reversal()
    else:
        u_rev = Polynomial.one()
    member = v * u_rev * Polynomial.x(l1) if l1 else v * u_rev
    return member if sign == 1 else -member


def _member_float(lead: complex, keep, flip, l1: int, sign: int) -> list[complex]:
    coeffs = [complex(lead)]
    for alpha in keep:
        # multiply by (x - alpha)
        coeffs = [0j] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= alpha * coeffs[i + 1]
    for alpha in flip:
        # multiply by (1 - alpha x)
        new = coeffs + [0j]
        for i in range(len(coeffs)):
            new[i + 1] -= alpha * coeffs[i]
        coeffs = new
    coeffs = [0j] * l1 + coeffs
    return [sign * c for c in coeffs]


def _rationalize_float_poly(coeffs: list[complex]) -> Polynomial:
    out = []
    for c in coeffs:
        out.append(
            GaussianRational(
                Fraction(c.real).limit_denominator(RATIONALIZE_DENOMINATOR_BOUND),
                Fraction(c.imag).limit_denominator(RATIONALIZE_DENOMINATOR_BOUND),
            )
        )
    return Polynomial(out)


def equivalent_member(
    g: Polynomial, subset: tuple[int, ...], l1: int | None = None
) -> Polynomial:
    """Single family member: carry the indexed nonzero roots of g into the
    reversal part.  Exact when g splits over the Gaussian rationals."""
    l2, h, _ = _split_base(g, 1)
    if l1 is None:
        l1 = l2
    roots = try_exact_roots(h)
    if roots is None:
        raise PreconditionError("base polynomial does not split exactly")
    if len(subset) % 2 != (l2 - l1) % 2:
        raise PreconditionError("subset size violates the parity constraint")
    flip = [roots[i] for i in subset]
    keep = [roots[i] for i in range(len(roots)) if i not in set(subset)]
    sign = -1 if len(subset) % 2 else 1
    return _member_exact(h.leading, keep, flip, l1, sign)


def equivalent_family(
    g: Polynomial,
    l1: int | None = None,
    check_length: int = DEFAULT_CHECK_LENGTH,
) -> EquivalenceFamily:
    """All polynomials sharing g's exact sequence, one per root subset.

    Subsets of the nonzero-root multiset with size = l2 - l1 (mod 2) are
    enumerated exhaustively; duplicates collapse.  Every candidate is kept
    only after its exact sequence matches g's for m <= check_length, which on
    the numeric path also closes the rationalization loop.
    """
    if l1 is not None and l1 < 0:
        raise ValueError("x-multiplicity must be >= 0")
    l2, h, base_seq = _split_base(g, check_length)
    if l1 is None:
        l1 = l2
    parity = (l2 - l1) % 2
    d = h.degree
    if d > SUBSET_SCAN_LIMIT:
        raise DegreeGuardError("root-subset enumeration is exponential", degree=d)

    exact_roots = try_exact_roots(h)
    numeric_roots = None if exact_roots is not None else roots_numeric(h)

    candidates = []
    unverified: list[tuple[complex, ...]] = []
    for size in range(parity, d + 1, 2):
        for subset in itertools.combinations(range(d), size):
            chosen = set(subset)
            sign = -1 if size % 2 else 1
            if exact_roots is not None:
                flip = [exact_roots[i] for i in subset]
                keep = [exact_roots[i] for i in range(d) if i not in chosen]
                member = _member_exact(h.leading, keep, flip, l1, sign)
            else:
                flip = [numeric_roots[i] for i in subset]
                keep = [numeric_roots[i] for i in range(d) if i not in chosen]
                floats = _member_float(complex(h.leading), keep, flip, l1, sign)
                member = _rationalize_float_poly(floats)
                if sequence(member, check_length).values != base_seq.values:
                    unverified.append(tuple(floats))
                    continue
            record = SubsetRecord(
                reversed_roots=tuple(_root_label(r) for r in flip), sign=sign
            )
            candidates.append((member, record))

    for member, _ in candidates:
        if sequence(member, check_length).values != base_seq.values:
            raise AssertionError(
                f"constructed member {member} fails sequence verification"
            )
    ordered = _sorted_unique(candidates)
    return EquivalenceFamily(
        base=g,
        members=tuple(m for m, _ in ordered),
        l1=l1,
        subset_log=tuple(r for _, r in ordered),
        unverified=tuple(unverified),
    )


# ---------------------------------------------------------------------------
# real absolute-value variant
# ---------------------------------------------------------------------------


def _conjugation_orbits_exact(roots):
    """Group exact roots into conjugation orbits with multiplicity."""
    counts: dict = {}
    order = []
    for r in roots:
        if r not in counts:
            counts[r] = 0
            order.append(r)
        counts[r] += 1
    orbits = []  # (tuple of roots per copy, multiplicity)
    used = set()
    for r in order:
        if r in used:
            continue
        if r.is_real():
            orbits.append(((r,), counts[r]))
            used.add(r)
        else:
            conj = r.conjugate()
            if counts.get(conj) != counts[r]:
                raise PreconditionError(
                    "complex roots of a real polynomial must pair by conjugation"
                )
            orbits.append(((r, conj), counts[r]))
            used.add(r)
            used.add(conj)
    return orbits


def _conjugation_orbits_numeric(roots, tol: float = 1e-9):
    orbits = []
    remaining = list(roots)
    while remaining:
        r = remaining.pop(0)
        if abs(r.imag) <= tol:
            orbits.append(((r,), 1))
            continue
        partner = None
        for i, s in enumerate(remaining):
            if abs(s - r.conjugate()) <= tol:
                partner = i
                break
        if partner is None:
            raise PreconditionError(
                "complex roots of a real polynomial must pair by conjugation"
            )
        orbits.append(((r, remaining.pop(partner)), 1))
    merged: list = []
    for orbit, _ in orbits:
        for i, (existing, mult) in enumerate(merged):
            if len(existing) == len(orbit) and all(
                abs(a - b) <= tol for a, b in zip(sorted_complex(existing), sorted_complex(orbit))
            ):
                merged[i] = (existing, mult + 1)
                break
        else:
            merged.append((orbit, 1))
    return merged


def sorted_complex(values):
    return sorted(values, key=lambda z: (z.real, z.imag))


def real_equivalent_family(
    g: Polynomial, check_length: int = DEFAULT_CHECK_LENGTH
) -> EquivalenceFamily:
    """All real polynomials of g's degree sharing its |r_m| sequence.

    Subsets must be closed under conjugation (whole conjugate-pair orbits at
    a time) so members stay real; both global signs are tried and there is no
    parity constraint.  Each candidate is verified by exact absolute-value
    sequence equality and dropped on failure.
    """
    if not g.is_real():
        raise PreconditionError("real variant requires real coefficients")
    l2, h, base_seq = _split_base(g, check_length)
    base_abs = tuple(GaussianRational(abs(v.re)) for v in base_seq.values)
    d = h.degree
    if d > SUBSET_SCAN_LIMIT:
        raise DegreeGuardError("root-subset enumeration is exponential", degree=d)

    exact_roots = try_exact_roots(h)
    if exact_roots is not None:
        orbits = _conjugation_orbits_exact(exact_roots)
        lead = h.leading
        exact = True
    else:
        orbits = _conjugation_orbits_numeric(roots_numeric(h))
        lead = complex(h.leading)
        exact = False

    candidates = []
    unverified: list[tuple[complex, ...]] = []
    choice_ranges = [range(mult + 1) for _, mult in orbits]
    for choice in itertools.product(*choice_ranges):
        flip = []
        keep = []
        for (orbit, mult), take in zip(orbits, choice):
            for _ in range(take):
                flip.extend(orbit)
            for _ in range(mult - take):
                keep.extend(orbit)
        for sign in (1, -1):
            if exact:
                member = _member_exact(lead, keep, flip, l2, sign)
                ok = (
                    tuple(
                        GaussianRational(abs(v.re))
                        for v in sequence(member, check_length).values
                    )
                    == base_abs
                )
                if not ok:
                    continue
            else:
                floats = _member_float(lead, keep, flip, l2, sign)
                member = _rationalize_float_poly(floats)
                if not member.is_real():
                    member = Polynomial([GaussianRational(c.re) for c in member.coeffs])
                values = sequence(member, check_length).values
                if tuple(GaussianRational(abs(v.re)) for v in values) != base_abs:
                    unverified.append(tuple(floats))
                    continue
            record = SubsetRecord(
                reversed_roots=tuple(_root_label(r) for r in flip), sign=sign
            )
            candidates.append((member, record))

    ordered = _sorted_unique(candidates)
    return EquivalenceFamily(
        base=g,
        members=tuple(m for m, _ in ordered),
        l1=l2,
        subset_log=tuple(r for _, r in ordered),
        unverified=tuple(unverified),
    )


# ---------------------------------------------------------------------------
# verification-direction checks
# ---------------------------------------------------------------------------


def verify_same_resultants(
    f: Polynomial, g: Polynomial, length: int, use_abs: bool = False
) -> bool:
    """Exact equality of the (absolute) sequences up to the given length.

    The absolute comparison takes |.| entrywise on exact real values, so it
    is independent of the sign-law route in abs_sequence.
    """
    seq_f = sequence(f, length)
    seq_g = sequence(g, length)
    if not use_abs:
        return seq_f.values == seq_g.values
    for v in seq_f.values + seq_g.values:
        if not v.is_real():
            raise PreconditionError(
                "absolute comparison needs real resultant values"
            )
    return tuple(abs(v.re) for v in seq_f.values) == tuple(
        abs(v.re) for v in seq_g.values
    )


@dataclass(frozen=True)
class ReciprocalVerdict:
    sequences_equal: bool
    polynomials_equal: bool

    @property
    def counterexample(self) -> bool:
        """Equal sequences but distinct reciprocal polynomials: should never
        happen (uniqueness), so a True here flags a real finding."""
        return self.sequences_equal and not self.polynomials_equal

    @property
    def status(self) -> str:
        if self.counterexample:
            return "counterexample"
        return "consistent" if self.sequences_equal else "sequences_differ"


def reciprocal_uniqueness_check(
    f: Polynomial, g: Polynomial, length: int
) -> ReciprocalVerdict:
    """Check the uniqueness of reciprocal polynomials given their sequences."""
    if not f.is_reciprocal() or not g.is_reciprocal():
        raise PreconditionError("both inputs must be reciprocal")
    for p in (f, g):
        if sequence(p, length).has_zero():
            raise ZeroResultantError("zero cyclic resultant in the prefix")
    return ReciprocalVerdict(
        sequences_equal=verify_same_resultants(f, g, length),
        polynomials_equal=f == g,
    )


def monic_degenerate(g: Polynomial, tol: float = 1e-8) -> bool:
    """Whether some nonempty subset of g's roots has product within tol of 1.

    This is the degeneracy that breaks monic uniqueness; exhaustive over all
    2^d - 1 subsets, numeric roots, d <= 20.
    """
    if g.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    d = g.degree
    if d > SUBSET_SCAN_LIMIT:
        raise DegreeGuardError("root-subset scan is exponential", degree=d)
    roots = roots_numeric(g)
    products = [1 + 0j]
    for alpha in roots:
        products.extend([p * alpha for p in products])
    return any(abs(p - 1) <= tol for p in products[1:])
