"""Tiling verification, the T1/T2 conditions, Sands' criterion and complement search.

A pair (A, B) tiles Z/MZ, written A (+) B = Z/MZ, when every residue mod M is
``a + b`` for exactly one (a, b) in A x B.  The residue count in
:func:`is_tiling` is the ground truth; the polynomial and divisor-set forms
are checked against it.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import NamedTuple

from zmtiling.numtheory import divisors, factorize, is_prime
from zmtiling.polynomials import (
    IntegerSet,
    _divides_mask,
    _nonempty,
    cyclotomic_support_prime_powers,
    make_set,
    mask_poly,
    phi_at_one,
)
from zmtiling.spectra import difference_divisor_set


class TilingError(ValueError):
    """A precondition on a tiling instance does not hold."""


def canonical_translate(S: Iterable[int], M: int) -> IntegerSet:
    """Lexicographically least translate of S mod M that contains 0."""
    res = sorted({s % M for s in S})
    return min(tuple(sorted((x - r) % M for x in res)) for r in res)


def distinct_mod(S: Iterable[int], M: int) -> bool:
    S = list(S)
    return len({s % M for s in S}) == len(S)


def is_tiling(A: Iterable[int], B: Iterable[int], M: int) -> bool:
    A, B = _nonempty(A), _nonempty(B)
    if M < 1:
        raise ValueError("M must be positive")
    if len(A) * len(B) != M:
        return False
    hits = bytearray(M)
    for a in A:
        for b in B:
            r = (a + b) % M
            if hits[r]:
                return False
            hits[r] = 1
    return True


def is_tiling_poly(A: Iterable[int], B: Iterable[int], M: int) -> bool:
    """|A||B| = M and Phi_s | A(x)B(x) for every divisor s > 1 of M."""
    A, B = _nonempty(A), _nonempty(B)
    if len(A) * len(B) != M:
        return False
    product = mask_poly(A) * mask_poly(B)
    return all(_divides_mask(product, s) for s in divisors(M)[1:])


class T1Result(NamedTuple):
    holds: bool
    lhs: int
    rhs: int


class T2Result(NamedTuple):
    holds: bool
    witnesses: list[int]


def check_T1(A: Iterable[int]) -> T1Result:
    A = _nonempty(A)
    rhs = prod(phi_at_one(s) for s in cyclotomic_support_prime_powers(A))
    return T1Result(len(A) == rhs, len(A), rhs)


def coprime_products(support: Iterable[int]) -> list[int]:
    """Products of >= 2 prime powers from ``support`` with pairwise distinct primes."""
    by_prime: dict[int, list[int]] = {}
    for s in support:
        by_prime.setdefault(factorize(s)[0][0], []).append(s)
    primes = sorted(by_prime)
    out = set()
    for k in range(2, len(primes) + 1):
        for chosen in itertools.combinations(primes, k):
            for combo in itertools.product(*(by_prime[p] for p in chosen)):
                out.add(prod(combo))
    return sorted(out)


@lru_cache(maxsize=1 << 16)
def _t2_failures(A: IntegerSet) -> tuple[int, ...]:
    poly = mask_poly(A)
    return tuple(s for s in coprime_products(cyclotomic_support_prime_powers(A)) if not _divides_mask(poly, s))


def check_T2(A: Iterable[int]) -> T2Result:
    A = _nonempty(A)
    failing = list(_t2_failures(tuple(a - A[0] for a in A)))
    return T2Result(not failing, failing)


class SandsResult(NamedTuple):
    disjoint: bool
    product_is_M: bool
    D_A: tuple[int, ...]
    D_B: tuple[int, ...]

    @property
    def tiles(self) -> bool:
        return self.disjoint and self.product_is_M


def _require_distinct(S: IntegerSet, M: int, name: str) -> None:
    if not distinct_mod(S, M):
        raise TilingError(f"elements of {name} are not distinct mod {M}")


def sands_criterion(A: Iterable[int], B: Iterable[int], M: int) -> SandsResult:
    A, B = _nonempty(A), _nonempty(B)
    _require_distinct(A, M, "A")
    _require_distinct(B, M, "B")
    DA, DB = difference_divisor_set(A, M), difference_divisor_set(B, M)
    return SandsResult(not set(DA) & set(DB), len(A) * len(B) == M, DA, DB)


class DivisorBound(NamedTuple):
    bound_holds: bool
    is_equality: bool
    equality_iff_tiling: bool


def divisor_bound_check(A: Iterable[int], B: Iterable[int], M: int) -> DivisorBound:
    """For D_A, D_B disjoint: |A||B| <= M, with equality exactly for tilings."""
    sands = sands_criterion(A, B, M)
    if not sands.disjoint:
        raise TilingError("D_A and D_B intersect")
    size = len(make_set(A)) * len(make_set(B))
    equality = size == M
    return DivisorBound(size <= M, equality, equality == is_tiling(A, B, M))


@dataclass(frozen=True)
class DecompositionResult:
    p: int
    offsets: tuple[int | None, ...]
    parts: tuple[IntegerSet, ...]
    reduced_complement: IntegerSet
    reduced_modulus: int
    equal_sizes: bool
    parts_tile: bool
    equal_support: bool
    support_relation: bool

    @property
    def valid(self) -> bool:
        return self.equal_sizes and self.parts_tile and self.equal_support and self.support_relation


def decompose_tiling(A: Iterable[int], B: Iterable[int], M: int, p: int) -> DecompositionResult:
    """Split A by residue mod p when B lies in pZ, and check what must follow.

    Each class A^(i) is shifted to start at 0 and divided by p.  The verdicts
    record: equal class sizes |A|/p; every part tiles Z/(M/p)Z with B/p; all
    parts have the same S; and S_A = {p} u S of the p-dilated first part.
    """
    A, B = _nonempty(A), _nonempty(B)
    if not is_prime(p):
        raise TilingError(f"{p} is not prime")
    if M % p:
        raise TilingError(f"p={p} does not divide M={M}")
    if any(b % p for b in B):
        raise TilingError(f"B is not contained in {p}Z")
    if not is_tiling(A, B, M):
        raise TilingError("not a tiling")
    classes = [[a for a in A if a % p == i] for i in range(p)]
    offsets = tuple(min(c) if c else None for c in classes)
    parts = tuple(tuple((a - off) // p for a in c) if c else () for c, off in zip(classes, offsets))
    reduced = tuple(b // p for b in B)
    m = M // p

    equal_sizes = all(len(part) * p == len(A) for part in parts)
    parts_tile = equal_sizes and all(is_tiling(part, reduced, m) for part in parts)
    supports = [cyclotomic_support_prime_powers(part) for part in parts if part]
    equal_support = equal_sizes and all(s == supports[0] for s in supports)
    relation = False
    if parts[0]:
        dilated = [p * a for a in parts[0]]
        relation = cyclotomic_support_prime_powers(A) == sorted({p, *cyclotomic_support_prime_powers(dilated)})
    return DecompositionResult(p, offsets, parts, reduced, m, equal_sizes, parts_tile, equal_support, relation)


# -- complement search -------------------------------------------------------


def _complement_search(residues: tuple[int, ...], M: int, forbidden: bytes, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Depth-first search for complements B of A in Z/MZ that start with ``prefix``.

    The smallest uncovered residue n must be a + b for some a in A, so the
    candidates are b = n - a.  A candidate is rejected when gcd(b - b', M)
    lies in D_A for some b' already chosen; that also rules out overlaps.
    Yields each complement as a tuple in insertion order.
    """
    covered = bytearray(M)
    B: list[int] = []

    def place(b: int) -> None:
        B.append(b)
        for a in residues:
            covered[(a + b) % M] = 1

    def unplace() -> None:
        b = B.pop()
        for a in residues:
            covered[(a + b) % M] = 0

    def admissible(b: int) -> bool:
        return not any(forbidden[gcd(b - x, M)] for x in B)

    for b in prefix:
        if not admissible(b):
            return
        place(b)

    def next_uncovered(start: int) -> int:
        n = covered.find(0, start)
        return n

    n0 = next_uncovered(0)
    if n0 < 0:
        yield tuple(B)
        return

    # frame: [n, candidate list, next index, placed-before-frame?]
    stack = [[n0, [(n0 - a) % M for a in residues], 0, False]]
    while stack:
        frame = stack[-1]
        n, cands, idx, placed = frame
        if idx == len(cands):
            stack.pop()
            if placed:
                unplace()
            continue
        frame[2] = idx + 1
        b = cands[idx]
        if not admissible(b):
            continue
        place(b)
        nxt = next_uncovered(n + 1)
        if nxt < 0:
            yield tuple(B)
            unplace()
            continue
        stack.append([nxt, [(nxt - a) % M for a in residues], 0, True])


def _first_distinct(results: Iterable[tuple[int, ...]], M: int, limit: int | None) -> list[IntegerSet]:
    seen: dict[IntegerSet, None] = {}
    for B in results:
        seen.setdefault(canonical_translate(B, M), None)
        if limit is not None and len(seen) >= limit:
            break
    return list(seen)


def _branch_worker(args) -> list[IntegerSet]:
    residues, M, forbidden, prefix, limit = args
    return _first_distinct(_complement_search(residues, M, forbidden, prefix), M, limit)


def _top_level_prefixes(residues: tuple[int, ...], M: int) -> list[tuple[int, ...]]:
    covered = bytearray(M)
    for a in residues:
        covered[a] = 1
    n = covered.find(0)
    if n < 0:
        return [(0,)]
    return [(0, (n - a) % M) for a in residues]


def find_complements(A: Iterable[int], M: int, limit: int | None = None, jobs: int = 1) -> list[IntegerSet]:
    """Complements B of A in Z/MZ, one per translation class, sorted.

    Each B is reported as its least translate containing 0.  With ``limit``
    the depth-first search stops after that many distinct classes; the
    result does not depend on ``jobs``.
    """
    A = _nonempty(A)
    if M < 1 or M % len(A):
        raise TilingError(f"|A|={len(A)} does not divide M={M}")
    _require_distinct(A, M, "A")
    if limit is not None and limit < 1:
        return []
    residues = tuple(sorted(a % M for a in A))
    forbidden = bytearray(M + 1)
    for m in difference_divisor_set(A, M):
        forbidden[m] = 1
    forbidden = bytes(forbidden)

    if jobs <= 1:
        found = _first_distinct(_complement_search(residues, M, forbidden, (0,)), M, limit)
    else:
        tasks = [(residues, M, forbidden, pre, limit) for pre in _top_level_prefixes(residues, M)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_branch = list(pool.map(_branch_worker, tasks))
        found = _first_distinct(itertools.chain.from_iterable(per_branch), M, limit)
    return sorted(found)


def find_tiling(A: Iterable[int], max_modulus: int, jobs: int = 1) -> tuple[IntegerSet, int] | None:
    """First (B, M) with A (+) B = Z/MZ, trying M = |A|, 2|A|, ... <= max_modulus."""
    A = _nonempty(A)
    for M in range(len(A), max_modulus + 1, len(A)):
        if not distinct_mod(A, M):
            continue
        found = find_complements(A, M, limit=1, jobs=jobs)
        if found:
            return found[0], M
    return None


# -- exhaustive enumeration --------------------------------------------------


def is_good_cyclic(M: int) -> bool:
    """True when every factorization of Z/MZ has a periodic factor.

    This holds exactly when M divides p^a q, p^2 q^2, p^2 q r or p q r s.
    """
    exps = sorted((e for _, e in factorize(M)), reverse=True) if M > 1 else []
    k = len(exps)
    if k <= 1:
        return True
    if k == 2:
        return exps[1] == 1 or exps[0] <= 2
    if k == 3:
        return exps[0] <= 2 and exps[1] == 1
    if k == 4:
        return exps[0] == 1
    return False


_TILING_CACHE: dict[int, frozenset] = {1: frozenset({((0,), (0,))})}


def _periodic_tilings(M: int) -> frozenset:
    if M in _TILING_CACHE:
        return _TILING_CACHE[M]
    out = set()
    for p, _ in factorize(M):
        g = M // p
        for A_bar, B_bar in _periodic_tilings(g):
            A = tuple(sorted(a + g * s for a in A_bar for s in range(p)))
            A_c = canonical_translate(A, M)
            rest = [b for b in B_bar if b]
            for lift in itertools.product(range(p), repeat=len(rest)):
                B_c = canonical_translate([0] + [b + g * s for b, s in zip(rest, lift)], M)
                out.add((A_c, B_c))
                out.add((B_c, A_c))
    result = frozenset(out)
    _TILING_CACHE[M] = result
    return result


def _exhaustive_tilings(M: int) -> set:
    out = set()
    for k in divisors(M):
        for rest in itertools.combinations(range(1, M), k - 1):
            A = (0, *rest)
            if canonical_translate(A, M) != A:
                continue
            for B in find_complements(A, M):
                out.add((A, B))
    return out


def enumerate_tilings(M: int, method: str = "auto") -> list[tuple[IntegerSet, IntegerSet]]:
    """All tilings A (+) B = Z/MZ up to translating A and B, sorted by (A, B).

    ``method="periodic"`` lifts tilings of Z/(M/p)Z along a periodic factor,
    which is complete only for good M (see :func:`is_good_cyclic`).
    ``method="exhaustive"`` tries every candidate A and is practical only
    for small M.  ``"auto"`` picks periodic when it is complete.
    """
    if M < 1:
        raise ValueError("M must be positive")
    if method == "auto":
        if not is_good_cyclic(M):
            raise TilingError(f"Z/{M}Z has aperiodic factorizations; exhaustive enumeration is not supported at this size")
        method = "periodic"
    if method == "periodic":
        pairs = _periodic_tilings(M)
    elif method == "exhaustive":
        pairs = _exhaustive_tilings(M)
    else:
        raise ValueError(f"unknown method {method!r}")
    return sorted(pairs)

