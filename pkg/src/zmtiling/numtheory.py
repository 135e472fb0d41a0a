"""Elementary number-theoretic kernels.

Everything here works on Python ints, so there is no overflow anywhere.
Exact rationals are :class:`fractions.Fraction` (re-exported as ``Rational``).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

Rational = Fraction

Factorization = tuple[tuple[int, int], ...]


def _require_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Trial-division factorization: ((prime, exponent), ...) sorted by prime."""
    _require_positive(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def prime_power_base(n: int) -> int | None:
    """Return p if n = p**k with k >= 1, else None."""
    if n < 2:
        return None
    f = factorize(n)
    return f[0][0] if len(f) == 1 else None


def euler_phi(n: int) -> int:
    _require_positive(n)
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def moebius(n: int) -> int:
    _require_positive(n)
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def gcd_conv(n: int, t: int) -> int:
    """gcd(|n|, |t|) with the convention (n, 0) = |n|; n must be nonzero."""
    if n == 0:
        raise ValueError("gcd_conv requires a nonzero first argument")
    return gcd(n, t)


@lru_cache(maxsize=4096)
def _divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    _require_positive(n)
    return list(_divisors(n))


def ramanujan_sum(d: int, n: int) -> int:
    """c_d(n): the sum of xi**n over the primitive d-th roots of unity xi.

    Uses the closed form mu(d/g) * phi(d) / phi(d/g) with g = (d, n).
    """
    _require_positive(d, "d")
    g = gcd_conv(d, n)
    return moebius(d // g) * euler_phi(d) // euler_phi(d // g)
