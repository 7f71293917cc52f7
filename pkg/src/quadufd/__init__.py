"""Unique factorization in quadratic orders O_D, decided from small primes."""

from .arith import (
    Discriminant,
    DiscriminantMismatch,
    InvalidDiscriminant,
    OrderElement,
    conj,
    element,
    make_discriminant,
    norm,
    is_unit,
    try_divide,
)
from .forms import class_number, is_fundamental, ufd_oracle
from .normeq import is_irreducible_rational_prime, represents
from .pell import cf_expand, fundamental_unit
from .primes import is_prime_integer
from .rabinowitsch import rabinowitsch_check
from .residues import kronecker, splitting_type, sqrt_mod_p, is_prime_in_order
from .ufd import classify_prime, decide_ufd, theorem_bound

__version__ = "0.1.0"
