import itertools
import random

import pytest

from conftest import corpus
from oracles import all_complements, poly_mul, sumset_tiles
from zmtiling.polynomials import cyclotomic_support_prime_powers, mask_poly
from zmtiling.tiling import (
    TilingError,
    canonical_translate,
    check_T1,
    check_T2,
    coprime_products,
    decompose_tiling,
    divisor_bound_check,
    enumerate_tilings,
    find_complements,
    find_tiling,
    is_good_cyclic,
    is_tiling,
    is_tiling_poly,
    sands_criterion,
)


@pytest.mark.parametrize(
    "A, B, M, expected",
    [([0, 2], [0, 1], 4, True), ([0, 1], [0, 1], 4, False), ([0], [0], 1, True)],
)
def test_is_tiling_examples(A, B, M, expected):
    assert is_tiling(A, B, M) is expected
    assert sumset_tiles(A, B, M) is expected


@pytest.mark.parametrize(
    "A, B, M, expected",
    [([0, 2], [0, 1], 4, True), ([0, 3], [0, 1, 2], 6, True), ([0, 1], [0, 3], 4, False)],
)
def test_is_tiling_poly_examples(A, B, M, expected):
    assert is_tiling_poly(A, B, M) is expected


def test_poly_product_matches_naive():
    A, B = [0, 3], [0, 1, 2]
    assert list((mask_poly(A) * mask_poly(B)).coeffs) == poly_mul([1, 0, 0, 1], [1, 1, 1])


def test_T1_examples():
    assert check_T1([0, 2]) == (True, 2, 2)
    assert check_T1([0, 1, 2, 4, 5, 6]) == (True, 6, 6)
    assert cyclotomic_support_prime_powers([0, 1, 2, 4, 5, 6]) == [3, 8]
    assert check_T1([0, 3]) == (True, 2, 2)
    assert cyclotomic_support_prime_powers([0, 3]) == [2]
    assert check_T1([0, 1, 3]) == (False, 3, 1)


def test_T2_examples():
    assert check_T2([0, 1, 2, 3, 4, 5]) == (True, [])
    assert check_T2([0, 1, 2, 4, 5, 6]) == (False, [24])
    assert check_T2([0, 2]) == (True, [])


def test_coprime_products():
    assert coprime_products([2, 4, 3]) == [6, 12]
    assert coprime_products([2, 3, 5]) == [6, 10, 15, 30]
    assert coprime_products([4, 8]) == []


def test_sands_examples():
    s = sands_criterion([0, 1], [0, 2], 4)
    assert (s.D_A, s.D_B, s.disjoint, s.product_is_M) == ((1,), (2,), True, True)
    s = sands_criterion([0, 1], [0, 3], 12)
    assert (s.D_A, s.D_B, s.disjoint, s.product_is_M) == ((1,), (3,), True, False)
    assert not sands_criterion([0, 1], [0, 1], 4).disjoint
    with pytest.raises(TilingError):
        sands_criterion([0, 4], [0, 1], 4)


def test_divisor_bound_examples():
    assert divisor_bound_check([0, 1], [0, 3], 12) == (True, False, True)
    assert divisor_bound_check([0, 1], [0, 2], 4) == (True, True, True)
    assert divisor_bound_check([0], [0], 1) == (True, True, True)
    with pytest.raises(TilingError):
        divisor_bound_check([0, 1], [0, 1], 4)


def test_decompose_examples():
    d = decompose_tiling([0, 1], [0, 2], 4, 2)
    assert d.parts == ((0,), (0,))
    assert d.offsets == (0, 1)
    assert d.reduced_complement == (0, 1)
    assert d.reduced_modulus == 2
    assert d.valid
    d = decompose_tiling([0, 1, 2], [0, 3], 6, 3)
    assert d.parts == ((0,), (0,), (0,))
    assert d.reduced_complement == (0, 1)
    assert d.valid
    with pytest.raises(TilingError):
        decompose_tiling([0, 3], [0, 1], 4, 2)
    with pytest.raises(TilingError):
        decompose_tiling([0, 1], [0, 2], 4, 3)
    with pytest.raises(TilingError):
        decompose_tiling([0, 1], [0, 2], 6, 2)


def test_decompose_nontrivial():
    # A = {0,1,4,5} (+) {0,2} with B = 2*{0,1}... use M = 8, B = {0, 2}
    A, B, M = (0, 1, 4, 5), (0, 2), 8
    assert is_tiling(A, B, M)
    d = decompose_tiling(A, B, M, 2)
    assert d.parts == ((0, 2), (0, 2))
    assert d.valid


def test_find_complements_examples():
    assert find_complements([0, 2], 4) == [(0, 1)]
    assert find_complements([0, 1], 4) == [(0, 2)]
    assert find_complements([0, 1, 2, 4, 5, 6], 72, limit=1) == []
    with pytest.raises(TilingError):
        find_complements([0, 1, 2], 4)


def test_non_tile_has_no_complement_at_any_small_multiple():
    A = [0, 1, 2, 4, 5, 6]
    for M in range(12, 73, 6):
        assert find_complements(A, M) == []


def test_find_complements_against_subset_oracle():
    rng = random.Random(2)
    for M in range(1, 13):
        for k in [d for d in range(1, M + 1) if M % d == 0]:
            for _ in range(6):
                A = (0,) + tuple(sorted(rng.sample(range(1, M), k - 1)))
                expected = sorted({canonical_translate(B, M) for B in all_complements(A, M)})
                assert find_complements(A, M) == expected


def test_find_complements_parallel_matches_sequential():
    for A, M in [((0, 1), 12), ((0, 4, 8), 24), ((0, 1, 2), 18)]:
        for limit in (None, 1, 3):
            assert find_complements(A, M, limit=limit, jobs=3) == find_complements(A, M, limit=limit)


def test_find_tiling_examples():
    assert find_tiling([0, 2], 8) == ((0, 1), 4)
    assert find_tiling([0, 1, 2, 3, 4, 5], 12) == ((0,), 6)
    assert find_tiling([0, 1, 3], 30) is None


def test_canonical_translate():
    assert canonical_translate([0, 3], 4) == (0, 1)
    assert canonical_translate([-1, 1], 4) == (0, 2)


def test_is_good_cyclic():
    good = [n for n in range(1, 121) if is_good_cyclic(n)]
    assert 36 in good and 30 in good and 60 in good and 24 in good
    assert 72 not in good and 108 not in good and 120 not in good
    assert min(n for n in range(1, 200) if not is_good_cyclic(n)) == 72


def test_enumeration_methods_agree():
    for M in range(1, 15):
        assert enumerate_tilings(M) == enumerate_tilings(M, "exhaustive")


def test_enumeration_rejects_bad_modulus():
    with pytest.raises(TilingError):
        enumerate_tilings(72)


def test_enumeration_known_counts():
    assert enumerate_tilings(4) == [((0,), (0, 1, 2, 3)), ((0, 1), (0, 2)), ((0, 1, 2, 3), (0,)), ((0, 2), (0, 1))]
    assert enumerate_tilings(1) == [((0,), (0,))]


def test_oracle_equivalence_exhaustive_small():
    for M in range(1, 11):
        for k in [d for d in range(1, M + 1) if M % d == 0]:
            for A in itertools.combinations(range(M), k):
                if 0 not in A:
                    continue
                for B in itertools.combinations(range(M), M // k):
                    if 0 not in B:
                        continue
                    direct = is_tiling(A, B, M)
                    assert is_tiling_poly(A, B, M) == direct
                    assert sands_criterion(A, B, M).tiles == direct


def test_oracle_equivalence_random():
    rng = random.Random(17)
    for _ in range(10_000):
        M = rng.randint(1, 36)
        k = rng.choice([d for d in range(1, M + 1) if M % d == 0])
        A = rng.sample(range(M), k)
        B = rng.sample(range(M), M // k)
        direct = is_tiling(A, B, M)
        assert is_tiling_poly(A, B, M) == direct
        assert sands_criterion(A, B, M).tiles == direct


def test_corpus_properties_small():
    for M, A, B in corpus(20):
        assert is_tiling(A, B, M)
        assert check_T1(A).holds and check_T1(B).holds
