import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import divisors as divisors_brute
from oracles import phi, power_float
from zmtiling.polynomials import (
    IntPolynomial,
    cyclotomic,
    cyclotomic_support_prime_powers,
    divides_cyclotomic,
    exact_divide,
    make_set,
    mask_poly,
    phi_at_one,
    prime_powers_with_phi_at_most,
)

P = IntPolynomial


def test_mask_poly_examples():
    assert mask_poly([0, 1]) == P((1, 1))
    assert mask_poly([0, 2]) == P((1, 0, 1))
    assert mask_poly([-1, 1]) == P((1, 0, 1))


def test_mask_poly_rejects_empty_and_duplicates():
    with pytest.raises(ValueError):
        mask_poly([])
    with pytest.raises(ValueError):
        make_set([1, 1])


def test_cyclotomic_examples():
    assert cyclotomic(1) == P((-1, 1))
    assert cyclotomic(6) == P((1, -1, 1))
    assert cyclotomic(8) == P((1, 0, 0, 0, 1))
    with pytest.raises(ValueError):
        cyclotomic(0)


def test_cyclotomic_product_is_xn_minus_1():
    for n in range(1, 121):
        prod = P((1,))
        for d in divisors_brute(n):
            prod = prod * cyclotomic(d)
        assert prod == P.monomial(n) - P((1,))


def test_cyclotomic_degree_is_totient():
    for d in range(1, 31):
        assert cyclotomic(d).degree == phi(d)
        assert power_float([0], d) == pytest.approx(phi(d))


@pytest.mark.parametrize("s, expected", [(4, 2), (9, 3), (6, 1)])
def test_phi_at_one_examples(s, expected):
    assert phi_at_one(s) == expected


def test_phi_at_one_matches_evaluation():
    for s in range(2, 201):
        assert phi_at_one(s) == cyclotomic(s)(1)
    for s in (0, 1):
        with pytest.raises(ValueError):
            phi_at_one(s)


@pytest.mark.parametrize(
    "A, d, expected",
    [([0, 2], 4, True), ([0, 1, 2, 3, 4, 5], 6, True), ([0, 1], 3, False)],
)
def test_divides_cyclotomic_examples(A, d, expected):
    assert divides_cyclotomic(A, d) is expected


@pytest.mark.parametrize(
    "A, expected",
    [([0, 2], [4]), ([0, 1, 2, 3, 4, 5], [2, 3]), ([0], []), ([0, 8], [16])],
)
def test_support_examples(A, expected):
    assert cyclotomic_support_prime_powers(A) == expected


@given(st.sets(st.integers(-40, 40), min_size=1, max_size=14))
def test_support_matches_division(A):
    span = max(A) - min(A)
    expected = [s for s in prime_powers_with_phi_at_most(span) if divides_cyclotomic(A, s)]
    assert cyclotomic_support_prime_powers(A) == expected


def test_support_on_periodic_sets():
    # {0..p^k-1} + p^k * {0..m-1} is divisible by Phi_{p^j} for j <= k
    for p, k, m in [(2, 3, 3), (3, 2, 2), (5, 1, 4)]:
        A = [i + p**k * j for i in range(p**k) for j in range(m)]
        S = cyclotomic_support_prime_powers(A)
        assert all(p**j in S for j in range(1, k + 1))
        assert S == [s for s in prime_powers_with_phi_at_most(max(A)) if divides_cyclotomic(A, s)]


def test_exact_divide_examples():
    assert exact_divide(P((-1, 0, 1)), P((-1, 1))) == P((1, 1))
    x6m1 = P.monomial(6) - P((1,))
    q = exact_divide(x6m1, cyclotomic(6))
    assert q == P((-1, -1, 0, 1, 1))
    assert q * cyclotomic(6) == x6m1
    assert exact_divide(P((1, 0, 1)), P((1, 1))) is None


def test_exact_divide_errors():
    with pytest.raises(ValueError):
        exact_divide(P((1, 1)), P(()))
    with pytest.raises(ValueError):
        exact_divide(P((1, 1)), P((1, 2)))


@given(st.lists(st.integers(-50, 50), max_size=12), st.lists(st.integers(-50, 50), min_size=0, max_size=6))
def test_exact_divide_round_trip(qc, gc):
    g = P(tuple(gc) + (1,))
    q = P(tuple(qc))
    assert exact_divide(g * q, g) == q


def test_mask_poly_at_one_is_size():
    rng = random.Random(3)
    for _ in range(200):
        A = rng.sample(range(-40, 40), rng.randint(1, 20))
        assert mask_poly(A)(1) == len(A)


def test_divisibility_translation_invariant():
    rng = random.Random(5)
    for _ in range(150):
        A = rng.sample(range(0, 25), rng.randint(1, 10))
        for d in range(1, 25):
            base = divides_cyclotomic(A, d)
            for k in range(-10, 11):
                assert divides_cyclotomic([a + k for a in A], d) == base


def test_divisibility_matches_root_evaluation():
    """Phi_d | A(x) iff A vanishes at the primitive d-th roots (float oracle)."""
    for A in itertools.chain.from_iterable(itertools.combinations(range(9), k) for k in range(1, 6)):
        A = (0,) + tuple(a for a in A if a)
        for d in range(1, 17):
            assert divides_cyclotomic(A, d) == (power_float(A, d) < 1e-9)


def test_str():
    assert str(cyclotomic(6)) == "x^2 - x + 1"
    assert str(P((-1, 1))) == "x - 1"
    assert str(P(())) == "0"
