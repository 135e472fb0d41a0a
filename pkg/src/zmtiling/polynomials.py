"""Mask polynomials, cyclotomic polynomials and exact division over Z[x].

Polynomials are dense: ``coeffs[k]`` is the coefficient of x**k, trailing
zeros trimmed, the zero polynomial has ``coeffs == ()``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from zmtiling.numtheory import divisors, euler_phi, is_prime, prime_power_base

IntegerSet = tuple[int, ...]


def make_set(elements: Iterable[int]) -> IntegerSet:
    """Validate and sort a collection of distinct integers."""
    items = [int(e) for e in elements]
    out = tuple(sorted(items))
    if len(set(out)) != len(out):
        dup = next(a for a, b in zip(out, out[1:]) if a == b)
        raise ValueError(f"duplicate element {dup}")
    return out


def _nonempty(A: Iterable[int]) -> IntegerSet:
    s = make_set(A)
    if not s:
        raise ValueError("set must be nonempty")
    return s


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(list(self.coeffs)))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(tuple(out))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reduce_mod_xn_minus_1(self, n: int) -> IntPolynomial:
        """Remainder modulo x**n - 1 (fold exponents mod n)."""
        out = [0] * n
        for k, c in enumerate(self.coeffs):
            out[k % n] += c
        return IntPolynomial(tuple(out))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or not mono) else ""
            body = body + ("*" if body and mono else "") + mono
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def mask_poly(A: Iterable[int]) -> IntPolynomial:
    """sum x**(a - min A) over a in A."""
    s = _nonempty(A)
    lo = s[0]
    coeffs = [0] * (s[-1] - lo + 1)
    for a in s:
        coeffs[a - lo] = 1
    return IntPolynomial(tuple(coeffs))


def exact_divide(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial | None:
    """Return q with f == g*q, or None when g does not divide f.

    g must be monic, so long division never leaves Z.
    """
    if g.is_zero():
        raise ValueError("division by the zero polynomial")
    if g.coeffs[-1] != 1:
        raise ValueError("divisor must be monic")
    if f.is_zero():
        return IntPolynomial(())
    rem = list(f.coeffs)
    dg = g.degree
    if len(rem) - 1 < dg:
        return None
    q = [0] * (len(rem) - dg)
    gc = g.coeffs
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if c:
            q[k - dg] = c
            base = k - dg
            for i in range(dg + 1):
                rem[base + i] -= c * gc[i]
    if any(rem[:dg]):
        return None
    return IntPolynomial(tuple(q))


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPolynomial:
    """Phi_d, by dividing x**d - 1 by Phi_e for every proper divisor e."""
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    poly = IntPolynomial.monomial(d) - IntPolynomial((1,))
    for e in divisors(d)[:-1]:
        q = exact_divide(poly, cyclotomic(e))
        assert q is not None
        poly = q
    return poly


def phi_at_one(s: int) -> int:
    """Phi_s(1): p when s is a power of the prime p, otherwise 1."""
    if s <= 1:
        raise ValueError("phi_at_one is defined here for s >= 2 only")
    p = prime_power_base(s)
    return p if p is not None else 1


def _divides_mask(poly: IntPolynomial, d: int) -> bool:
    # Phi_d | x^d - 1, so reducing mod x^d - 1 first keeps the division small.
    folded = poly.reduce_mod_xn_minus_1(d)
    if folded.is_zero():
        return True
    return exact_divide(folded, cyclotomic(d)) is not None


def divides_cyclotomic(A: Iterable[int], d: int) -> bool:
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    return _divides_mask(mask_poly(A), d)


def prime_powers_with_phi_at_most(bound: int) -> list[int]:
    """All prime powers s >= 2 with phi(s) <= bound, ascending."""
    out = []
    for p in range(2, bound + 2):
        if not is_prime(p):
            continue
        s = p
        while euler_phi(s) <= bound:
            out.append(s)
            s *= p
    return sorted(out)


def _divides_prime_power(A: IntegerSet, p: int, s: int) -> bool:
    # Phi_{p^k}(x) = Phi_p(x^(p^(k-1))): the p classes above each r mod p^(k-1) are equally full.
    step = s // p
    hist = Counter(a % s for a in A)
    return all(len({hist[r + j * step] for j in range(p)}) == 1 for r in range(step))


@lru_cache(maxsize=None)
def _prime_powers_upto_phi(bound: int) -> tuple[int, ...]:
    return tuple(prime_powers_with_phi_at_most(bound))


@lru_cache(maxsize=1 << 16)
def _support(A: IntegerSet) -> tuple[int, ...]:
    """S_A for a set translated to start at 0."""
    out = []
    for s in _prime_powers_upto_phi(A[-1]):
        if _divides_prime_power(A, prime_power_base(s), s):
            out.append(s)
    return tuple(out)


def cyclotomic_support_prime_powers(A: Iterable[int]) -> list[int]:
    """S_A: the prime powers s with Phi_s dividing the mask polynomial, ascending.

    Only s with phi(s) <= deg A(x) can qualify.
    """
    A = _nonempty(A)
    return list(_support(tuple(a - A[0] for a in A)))
