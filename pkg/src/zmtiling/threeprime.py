"""Structure of tilings whose complement has size pqr, for distinct primes p, q, r.

Residues mod pqr are identified with coordinates [i, j, k] = (n mod p,
n mod q, n mod r).  ``[*, j, k]`` is the line with the first coordinate free,
``[0, *, *]`` a plane, and so on.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import NamedTuple

from zmtiling.numtheory import factorize, is_prime
from zmtiling.polynomials import _nonempty, divides_cyclotomic, make_set
from zmtiling.spectra import alpha_spectrum
from zmtiling.tiling import TilingError, is_tiling


class HypothesisViolated(ValueError):
    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


def _check_primes(p: int, q: int, r: int) -> None:
    if len({p, q, r}) != 3 or not all(is_prime(x) for x in (p, q, r)):
        raise ValueError(f"p, q, r must be distinct primes, got {p}, {q}, {r}")


def coordinates(n: int, p: int, q: int, r: int) -> tuple[int, int, int]:
    return n % p, n % q, n % r


def from_coordinates(i: int, j: int, k: int, p: int, q: int, r: int) -> int:
    """The representative n_{ijk} in 0..pqr-1 (Chinese remaindering)."""
    N = p * q * r
    n = 0
    for res, mod in ((i, p), (j, q), (k, r)):
        rest = N // mod
        n += res * rest * pow(rest, -1, mod)
    return n % N


# -- support classification --------------------------------------------------


@dataclass(frozen=True)
class SupportClassification:
    caseA: bool
    caseB: bool
    caseC: bool
    witnesses: dict[str, list] = field(default_factory=dict)


def _in_caseA(c, i, j, k) -> bool:
    # [*,j,k] u [i,*,k] u [i,j,*]: at least two coordinates match (i,j,k)
    return (c[0] == i) + (c[1] == j) + (c[2] == k) >= 2


def _in_caseB(c, i, j, k) -> bool:
    return c in ((0, 0, 0), (i, j, 0), (i, 0, k), (0, j, k))


def classify_support(B: Iterable[int], p: int, q: int, r: int) -> SupportClassification:
    """Which of the three structural cases B satisfies, given B - B in pZ u qZ u rZ.

    Every (i, j, k) witnessing case A or case B is reported, and for case C
    the planes ``"[*,*,0]"``, ``"[*,0,*]"``, ``"[0,*,*]"`` that contain B.
    """
    B = _nonempty(B)
    _check_primes(p, q, r)
    if 0 not in B:
        raise ValueError("B must contain 0; translate it first")
    for b in B:
        for b2 in B:
            d = b - b2
            if d % p and d % q and d % r:
                raise HypothesisViolated(f"difference {d} is divisible by none of {p}, {q}, {r}", (b, b2))
    coords = {coordinates(b, p, q, r) for b in B}
    triples = list(product(range(p), range(q), range(r)))
    wa = [t for t in triples if all(_in_caseA(c, *t) for c in coords)]
    wb = [t for t in triples if all(_in_caseB(c, *t) for c in coords)]
    wc = [name for axis, name in ((2, "[*,*,0]"), (1, "[*,0,*]"), (0, "[0,*,*]")) if all(c[axis] == 0 for c in coords)]
    return SupportClassification(bool(wa), bool(wb), bool(wc), {"caseA": wa, "caseB": wb, "caseC": wc})


# -- pair counts ---------------------------------------------------------------


class PairCount(NamedTuple):
    count: int
    lower_bound: Fraction
    equidistributed: bool


def count_pairs_divisible(A: Iterable[int], m: int) -> PairCount:
    """#{(a, a') : m | a - a'} against its lower bound |A|^2 / m."""
    A = _nonempty(A)
    if m < 1:
        raise ValueError("m must be positive")
    classes = Counter(a % m for a in A)
    count = sum(c * c for c in classes.values())
    bound = Fraction(len(A) ** 2, m)
    return PairCount(count, bound, count == bound)


# -- alpha relations ---------------------------------------------------------


class Relation(NamedTuple):
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class AlphaRelationReport:
    L: Fraction
    alpha: dict[int, Fraction]
    relations: list[Relation]

    @property
    def all_hold(self) -> bool:
        return all(rel.holds for rel in self.relations)


def verify_unif_relations(A: Iterable[int], p: int, q: int, r: int, hypotheses: Iterable[int]) -> AlphaRelationReport:
    """Check the linear relations among alpha_m, m | pqr, implied by cyclotomic divisibility.

    ``hypotheses`` lists moduli h (among p, q, r, pr) claimed to satisfy
    Phi_h | A(x); each claim is checked.  With p, q, r present the two
    three-equation systems from equidistribution mod p, q, r are checked;
    with pr also present, the five relations that follow from
    equidistribution mod pr as well.
    """
    A = _nonempty(A)
    _check_primes(p, q, r)
    hyps = set(hypotheses)
    allowed = {p, q, r, p * r}
    if not hyps <= allowed:
        raise ValueError(f"hypotheses must be drawn from {sorted(allowed)}")
    for h in sorted(hyps):
        if not divides_cyclotomic(A, h):
            raise HypothesisViolated(f"Phi_{h} does not divide A(x)", h)
    if not {p, q, r} <= hyps:
        raise ValueError("need Phi_p, Phi_q and Phi_r among the hypotheses")

    N = p * q * r
    al = alpha_spectrum(A, N).values
    L = Fraction(len(A) ** 2, N)
    a = lambda m: al[m]  # noqa: E731
    rels: list[Relation] = []

    # equidistribution mod each prime, written for (s; u, v) = (p; q, r) etc.
    for s, u, v in ((p, q, r), (q, p, r), (r, p, q)):
        rels.append(Relation(
            f"e1[{s}]",
            (u - 1) * (v - 1) * a(s) + (v - 1) * a(s * u) + (u - 1) * a(s * v) + a(N),
            u * v * L,
        ))
    for s, u, v in ((p, q, r), (q, p, r), (r, p, q)):
        rels.append(Relation(
            f"e2[{s}]",
            (u - 1) * (v - 1) * a(1) + (v - 1) * a(u) + (u - 1) * a(v) + a(u * v),
            u * v * L,
        ))
    if p * r in hyps:
        rels.append(Relation("e3", (q - 1) * a(p * r) + a(N), q * L))
        rels.append(Relation("e4[r]", (q - 1) * a(r) + a(q * r), q * L))
        rels.append(Relation("e4[p]", (q - 1) * a(p) + a(p * q), q * L))
        rels.append(Relation("e5", (q - 1) * a(1) + a(q), q * L))
    return AlphaRelationReport(L, dict(al), rels)


# -- axis-supported profiles ---------------------------------------------------


@dataclass(frozen=True)
class ThreePrimeProfile:
    p: int
    q: int
    r: int
    t: int
    x: tuple[int, ...]
    y: tuple[int, ...]
    z: tuple[int, ...]

    @property
    def X(self) -> int:
        return sum(self.x)

    @property
    def Y(self) -> int:
        return sum(self.y)

    @property
    def Z(self) -> int:
        return sum(self.z)

    @property
    def size(self) -> int:
        return self.t + self.X + self.Y + self.Z

    @property
    def uniform(self) -> bool:
        return all(len(set(v)) <= 1 for v in (self.x, self.y, self.z))

    @classmethod
    def uniform_profile(cls, t: int, x: int, y: int, z: int, p: int, q: int, r: int) -> ThreePrimeProfile:
        return cls(p, q, r, t, (x,) * (p - 1), (y,) * (q - 1), (z,) * (r - 1))

    def realize(self) -> list[int]:
        """A set with this profile: class counts stacked at n_{ijk} + pqr*s."""
        p, q, r = self.p, self.q, self.r
        N = p * q * r
        cells = [((0, 0, 0), self.t)]
        cells += [((i, 0, 0), c) for i, c in enumerate(self.x, 1)]
        cells += [((0, j, 0), c) for j, c in enumerate(self.y, 1)]
        cells += [((0, 0, k), c) for k, c in enumerate(self.z, 1)]
        out = []
        for coord, count in cells:
            base = from_coordinates(*coord, p, q, r)
            out.extend(base + N * s for s in range(count))
        return sorted(out)


class NotAxisSupported(ValueError):
    def __init__(self, element: int):
        super().__init__(f"element {element} is off the three axes through [0,0,0]")
        self.witness = element


def structured_profile(B: Iterable[int], p: int, q: int, r: int) -> ThreePrimeProfile:
    """Counts of B on [0,0,0] and on the axes [i,0,0], [0,j,0], [0,0,k]."""
    B = make_set(B)
    _check_primes(p, q, r)
    t = 0
    x, y, z = [0] * (p - 1), [0] * (q - 1), [0] * (r - 1)
    for b in B:
        i, j, k = coordinates(b, p, q, r)
        nonzero = (i != 0) + (j != 0) + (k != 0)
        if nonzero > 1:
            raise NotAxisSupported(b)
        if i:
            x[i - 1] += 1
        elif j:
            y[j - 1] += 1
        elif k:
            z[k - 1] += 1
        else:
            t += 1
    return ThreePrimeProfile(p, q, r, t, tuple(x), tuple(y), tuple(z))


@dataclass(frozen=True)
class MembershipVerdict:
    divides: dict[str, bool]
    required_t: dict[str, int]
    degenerate: bool

    @property
    def unsatisfiable(self) -> list[str]:
        """Conditions whose required t is negative, so no set can meet them."""
        return [name for name, t in self.required_t.items() if t < 0]


def structured_cyclotomic_membership(profile: ThreePrimeProfile) -> MembershipVerdict:
    """Closed-form tests for Phi_pq, Phi_qr, Phi_pr, Phi_pqr dividing B(x).

    At the primitive roots the mask polynomial takes the values
    t - x - y - z plus rz, px, qy or 0 respectively.
    """
    if not profile.uniform:
        raise ValueError("profile is not uniform on the axes")
    p, q, r = profile.p, profile.q, profile.r
    x = profile.x[0] if profile.x else 0
    y = profile.y[0] if profile.y else 0
    z = profile.z[0] if profile.z else 0
    s = x + y + z
    required = {"pq": s - z * r, "qr": s - x * p, "pr": s - y * q, "pqr": s}
    divides = {name: profile.t == req for name, req in required.items()}
    return MembershipVerdict(divides, required, 0 in (x, y, z))


class ExclusivityVerdict(NamedTuple):
    pqr_excludes_pairs: bool
    at_most_one_pair: bool | None

    @property
    def consistent(self) -> bool:
        return self.pqr_excludes_pairs and self.at_most_one_pair is not False


def check_exclusivity(profile: ThreePrimeProfile, cardinality_is_pqr: bool | None = None) -> ExclusivityVerdict:
    """If Phi_pqr divides then no pairwise Phi does; if |B| = pqr, at most one pairwise Phi does.

    ``at_most_one_pair`` is None when |B| != pqr (nothing is claimed).
    ``cardinality_is_pqr`` defaults to the profile's own total.
    """
    if not profile.uniform:
        raise ValueError("profile is not uniform on the axes")
    if 0 in (profile.x[0], profile.y[0], profile.z[0]):
        raise ValueError("x, y, z must be nonzero")
    N = profile.p * profile.q * profile.r
    actual = profile.size == N
    if cardinality_is_pqr is None:
        cardinality_is_pqr = actual
    elif cardinality_is_pqr and not actual:
        raise ValueError(f"profile has {profile.size} elements, not {N}")
    v = structured_cyclotomic_membership(profile).divides
    pairs = sum(v[name] for name in ("pq", "qr", "pr"))
    first = not (v["pqr"] and pairs)
    second = pairs <= 1 if cardinality_is_pqr else None
    return ExclusivityVerdict(first, second)


# -- the three-prime tiling statement -----------------------------------------


class Theorem1Check(NamedTuple):
    hypotheses_hold: bool
    conclusion_holds: bool

    @property
    def consistent(self) -> bool:
        return not self.hypotheses_hold or self.conclusion_holds


def _has_only_primes(n: int, primes: set[int]) -> bool:
    f = factorize(n) if n > 1 else ()
    return {pr for pr, _ in f} == primes


def verify_theorem1(A: Iterable[int], B: Iterable[int], p: int, q: int, r: int) -> Theorem1Check:
    """For A (+) B = Z/MZ with |B| = pqr and |A| = p^a q^b r^c (a, b, c >= 1):
    if Phi_p, Phi_q, Phi_r divide A(x) then so do Phi_pq, Phi_pr, Phi_qr, Phi_pqr.
    """
    A, B = _nonempty(A), _nonempty(B)
    _check_primes(p, q, r)
    if len(B) != p * q * r:
        raise TilingError(f"|B| = {len(B)} is not pqr = {p * q * r}")
    if not _has_only_primes(len(A), {p, q, r}):
        raise TilingError(f"|A| = {len(A)} is not of the form p^a q^b r^c with a, b, c >= 1")
    M = len(A) * len(B)
    if not is_tiling(A, B, M):
        raise TilingError("not a tiling")
    hyp = all(divides_cyclotomic(A, s) for s in (p, q, r))
    concl = all(divides_cyclotomic(A, s) for s in (p * q, p * r, q * r, p * q * r))
    return Theorem1Check(hyp, concl)

