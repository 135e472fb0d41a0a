"""Difference spectra, power spectra and the exact spectral identity.

For a finite set A and modulus N:

* ``A_m`` counts ordered pairs (a, a') with gcd(a - a', N) = m,
* ``power[d]`` is the sum of |A(xi)|^2 over primitive d-th roots xi,
  evaluated exactly as a sum of Ramanujan sums,
* ``alpha[m] = A_m / phi(N/m)``.

All maps are dicts keyed by the divisors of N in ascending order.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple

from zmtiling.numtheory import divisors, euler_phi, ramanujan_sum
from zmtiling.polynomials import IntegerSet, _nonempty, make_set


def _check_modulus(N: int) -> None:
    if N < 1:
        raise ValueError(f"modulus must be a positive integer, got {N}")


def _difference_residues(A: IntegerSet, N: int) -> Counter:
    """Multiset of (a - a') mod N over ordered pairs."""
    hist = Counter(a % N for a in A)
    out: Counter = Counter()
    for u, cu in hist.items():
        for v, cv in hist.items():
            out[(u - v) % N] += cu * cv
    return out


@dataclass(frozen=True)
class DifferenceSpectrum:
    modulus: int
    counts: dict[int, int]
    divisor_set: tuple[int, ...]

    def __getitem__(self, m: int) -> int:
        return self.counts[m]


@dataclass(frozen=True)
class PowerSpectrum:
    modulus: int
    values: dict[int, int]

    def __getitem__(self, d: int) -> int:
        return self.values[d]


@dataclass(frozen=True)
class AlphaSpectrum:
    modulus: int
    values: dict[int, Fraction]

    def __getitem__(self, m: int) -> Fraction:
        return self.values[m]

    def is_constant(self) -> bool:
        return len(set(self.values.values())) == 1


def _difference_counts(A: IntegerSet, N: int) -> dict[int, int]:
    counts = dict.fromkeys(divisors(N), 0)
    for r, c in _difference_residues(A, N).items():
        counts[gcd(N, r)] += c
    return counts


def difference_spectrum(A: Iterable[int], N: int) -> DifferenceSpectrum:
    A = _nonempty(A)
    _check_modulus(N)
    counts = _difference_counts(A, N)
    # D is taken over pairs a != a'; a repeated residue makes N itself a member.
    dset = {gcd(N, a - b) for i, a in enumerate(A) for b in A[i + 1:]}
    return DifferenceSpectrum(N, counts, tuple(sorted(dset)))


def difference_divisor_set(A: Iterable[int], M: int) -> tuple[int, ...]:
    """D_A at modulus M: {(a - a', M) : a != a'}, ascending."""
    return difference_spectrum(A, M).divisor_set


def power_spectrum(A: Iterable[int], N: int) -> PowerSpectrum:
    A = _nonempty(A)
    _check_modulus(N)
    diffs = _difference_residues(A, N)
    values = {d: sum(c * ramanujan_sum(d, r) for r, c in diffs.items()) for d in divisors(N)}
    return PowerSpectrum(N, values)


def alpha_spectrum(A: Iterable[int], N: int) -> AlphaSpectrum:
    A = _nonempty(A)
    _check_modulus(N)
    counts = _difference_counts(A, N)
    return AlphaSpectrum(N, {m: Fraction(c, euler_phi(N // m)) for m, c in counts.items()})


class IdentityCheck(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    equal: bool


def verify_main_identity(A: Iterable[int], B: Iterable[int], N: int) -> IdentityCheck:
    """Evaluate both sides of

        sum_{m|N} A_m B_m / phi(N/m) == (1/N) sum_{d|N} PA_d PB_d / phi(d)

    in exact rationals and report whether they agree.
    """
    sa, sb = difference_spectrum(A, N), difference_spectrum(B, N)
    pa, pb = power_spectrum(A, N), power_spectrum(B, N)
    lhs = sum((Fraction(sa[m] * sb[m], euler_phi(N // m)) for m in divisors(N)), Fraction(0))
    rhs = sum((Fraction(pa[d] * pb[d], euler_phi(d)) for d in divisors(N)), Fraction(0)) / N
    return IdentityCheck(lhs, rhs, lhs == rhs)


def residue_class_counts(B: Iterable[int], c: int, N: int) -> dict[int, int]:
    """b_m(c) = #{b in B : gcd(b - c, N) = m} for each m | N."""
    B = make_set(B)
    _check_modulus(N)
    counts = dict.fromkeys(divisors(N), 0)
    for b in B:
        counts[gcd(N, b - c)] += 1
    return counts


def _constant_from_counts(bm: dict[int, int], alpha: AlphaSpectrum) -> Fraction:
    return sum((bm[m] * alpha[m] for m in bm), Fraction(0))


def _check_corollary_args(B: IntegerSet, M: int, N: int) -> None:
    _check_modulus(M)
    _check_modulus(N)
    if M % N:
        raise ValueError(f"N={N} does not divide M={M}")


def corollary_constant(A: Iterable[int], B: Iterable[int], M: int, N: int, c: int) -> Fraction:
    """sum_{m|N} b_m(c) A_m / phi(N/m) for a point c outside B.

    When A (+) B = Z/MZ this does not depend on c, and equals |A| for N = M.
    The tiling hypothesis itself is not re-checked here.
    """
    B = make_set(B)
    _check_corollary_args(B, M, N)
    if c in B:
        raise ValueError(f"c={c} lies in B")
    return _constant_from_counts(residue_class_counts(B, c, N), alpha_spectrum(A, N))


def corollary_constant_sweep(
    A: Iterable[int], B: Iterable[int], M: int, N: int, cs: Iterable[int]
) -> dict[int, Fraction]:
    """corollary_constant for many c at once; points of B in ``cs`` are skipped.

    The value only depends on c mod N, so it is computed once per class.
    """
    B = make_set(B)
    _check_corollary_args(B, M, N)
    # alpha over a common denominator keeps the per-class sums in integers
    alpha = alpha_spectrum(A, N).values
    den = lcm(*(a.denominator for a in alpha.values()))
    by_divisor = {m: a.numerator * (den // a.denominator) for m, a in alpha.items()}
    weight = [by_divisor[gcd(N, k)] for k in range(N)]
    residues = [b % N for b in B]
    members = set(B)
    by_class: dict[int, Fraction] = {}
    out = {}
    for c in cs:
        if c in members:
            continue
        r = c % N
        if r not in by_class:
            # b - r lies in (-N, N), and negative indices wrap mod N
            by_class[r] = Fraction(sum(weight[b - r] for b in residues), den)
        out[c] = by_class[r]
    return out
