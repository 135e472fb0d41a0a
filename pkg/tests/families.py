"""Generators of structured tilings used by several test modules."""

import itertools


def mixed_radix(radices, a_positions):
    """Split a mixed-radix digit system of Z/(prod radices)Z between A and B.

    Digit i has weight prod(radices[:i]); A takes the digits in
    ``a_positions``, B the rest.  A (+) B is always a tiling.
    """
    A, B, w = [0], [0], 1
    for i, rad in enumerate(radices):
        if i in a_positions:
            A = [x + d * w for x in A for d in range(rad)]
        else:
            B = [x + d * w for x in B for d in range(rad)]
        w *= rad
    return tuple(sorted(A)), tuple(sorted(B))


def three_prime_family(p=2, q=3, r=5):
    """All mixed-radix tilings of Z/(pqr)^2 Z with |A| = |B| = pqr."""
    out = set()
    for order in set(itertools.permutations([p, p, q, q, r, r])):
        for pos in itertools.combinations(range(6), 3):
            if sorted(order[i] for i in pos) == sorted([p, q, r]):
                out.add(mixed_radix(order, pos))
    return sorted(out)
