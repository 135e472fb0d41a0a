"""Exact tools for finite sets that tile the integers by translation."""

from zmtiling.numtheory import (
    divisors,
    euler_phi,
    factorize,
    gcd_conv,
    moebius,
    ramanujan_sum,
)
from zmtiling.polynomials import (
    cyclotomic,
    cyclotomic_support_prime_powers,
    divides_cyclotomic,
    exact_divide,
    mask_poly,
    phi_at_one,
)
from zmtiling.spectra import (
    alpha_spectrum,
    corollary_constant,
    difference_spectrum,
    power_spectrum,
    residue_class_counts,
    verify_main_identity,
)
from zmtiling.tiling import (
    check_T1,
    check_T2,
    decompose_tiling,
    divisor_bound_check,
    find_complements,
    find_tiling,
    is_tiling,
    is_tiling_poly,
    sands_criterion,
)

__version__ = "0.1.0"
