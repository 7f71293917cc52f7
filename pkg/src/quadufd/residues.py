"""Kronecker symbols, square roots mod p, and how rational primes split in O_D."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import Discriminant
from .primes import is_prime_integer


def kronecker(D: int, n: int) -> int:
    """Kronecker symbol (D/n) for n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    result = 1
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5):
            result = -result
    # Jacobi symbol (D/n) for odd n
    a = D % n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _smallest_nonresidue(p: int) -> int:
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    return z


def sqrt_mod_p(a: int, p: int) -> tuple[int, ...]:
    """Square roots of a modulo an odd prime p, as a sorted tuple.

    Returns () when a is a nonresidue and (0,) when p divides a.  Uses
    Tonelli-Shanks with the smallest quadratic nonresidue, so the output is
    fully deterministic.
    """
    if p < 3 or p % 2 == 0 or not is_prime_integer(p):
        raise ValueError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return (0,)
    if pow(a, (p - 1) // 2, p) != 1:
        return ()
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    c = pow(_smallest_nonresidue(p), q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return tuple(sorted({r, p - r}))


class Kind(enum.Enum):
    INERT = "inert"
    SPLIT = "split"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class SplittingType:
    kind: Kind
    root: int | None = None


def splitting_type(disc: Discriminant, p: int) -> SplittingType:
    if not is_prime_integer(p):
        raise ValueError(f"{p} is not prime")
    D = disc.D
    if p == 2:
        if D % 2 == 0:
            # sigma = 0, m(X) = X^2 + m_const = (X + m_const)^2 mod 2
            return SplittingType(Kind.RAMIFIED, disc.m_const % 2)
        if D % 8 == 1:
            # m(X) = X^2 - X + even = X(X - 1) mod 2
            return SplittingType(Kind.SPLIT, 0)
        return SplittingType(Kind.INERT)
    half = (p + 1) // 2
    if D % p == 0:
        return SplittingType(Kind.RAMIFIED, disc.sigma * half % p)
    roots = sqrt_mod_p(D, p)
    if not roots:
        return SplittingType(Kind.INERT)
    return SplittingType(Kind.SPLIT, (disc.sigma + roots[0]) * half % p)


def is_prime_in_order(disc: Discriminant, p: int) -> bool:
    return splitting_type(disc, p).kind is Kind.INERT
