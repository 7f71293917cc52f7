"""Prime values of x^2 - x + q versus unique factorization in O_{1-4q}."""

from __future__ import annotations

from dataclasses import dataclass

from .primes import is_prime_integer, smallest_factor
from .ufd import decide_ufd

__all__ = ["RabinowitschReport", "is_prime_integer", "rabinowitsch_check"]


@dataclass(frozen=True)
class RabinowitschReport:
    q: int
    D: int
    polynomial_side: bool
    ufd_side: bool
    prime_values: list[int]  # x^2 - x + q for x = 1, 2, ... up to the first composite
    composite_witness: tuple[int, int, int] | None = None  # (x, value, smallest factor)

    @property
    def agree(self) -> bool:
        return self.polynomial_side == self.ufd_side

    @property
    def prime_prefix(self) -> int:
        """Largest k such that the value is prime for every x = 1..k."""
        return len(self.prime_values)


def rabinowitsch_check(q: int) -> RabinowitschReport:
    if q < 2:
        raise ValueError("q must be at least 2")
    primes = []
    witness = None
    for x in range(1, q):
        value = x * x - x + q
        if not is_prime_integer(value):
            witness = (x, value, smallest_factor(value))
            break
        primes.append(value)
    D = 1 - 4 * q
    return RabinowitschReport(
        q=q,
        D=D,
        polynomial_side=witness is None,
        ufd_side=decide_ufd(D, short_circuit=True).is_ufd,
        prime_values=primes,
        composite_witness=witness,
    )
