"""Deciding unique factorization in O_D from the behaviour of small rational primes.

Only primes p with 3p^2 <= |D| (D < 0) or 5p^2 <= D (D > 0) need to be
examined.  O_D is a UFD exactly when each such p is either prime in O_D
(inert) or a product of two elements of norm +-p; an irreducible p that is
not prime rules out unique factorization.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import isqrt

from .arith import Discriminant, OrderElement, element, is_unit, make_discriminant, norm, try_divide
from .normeq import prime_norm_witness
from .primes import primes_up_to
from .residues import Kind, SplittingType, splitting_type


class Status(enum.Enum):
    PRIME = "prime"
    REDUCIBLE = "reducible"
    IRREDUCIBLE_NONPRIME = "irreducible_nonprime"


@dataclass(frozen=True)
class PrimeEvidence:
    p: int
    splitting: SplittingType
    status: Status
    factor: OrderElement | None = None

    @property
    def cofactor(self) -> OrderElement | None:
        if self.factor is None:
            return None
        return try_divide(element(self.factor.disc, self.p), self.factor)


@dataclass(frozen=True)
class UfdVerdict:
    disc: Discriminant
    is_ufd: bool
    bound: int
    evidence: list[PrimeEvidence] = field(default_factory=list)
    witness: int | None = None

    @property
    def decision(self) -> str:
        return "UFD" if self.is_ufd else "NOT_UFD"


def theorem_bound(disc: Discriminant) -> int:
    """Largest B such that the primes p <= B are those with 3p^2 <= |D| (resp. 5p^2 <= D)."""
    if disc.D < 0:
        return isqrt(-disc.D // 3)
    return isqrt(disc.D // 5)


def classify_prime(disc: Discriminant, p: int) -> PrimeEvidence:
    split = splitting_type(disc, p)
    if split.kind is Kind.INERT:
        return PrimeEvidence(p, split, Status.PRIME)
    alpha = prime_norm_witness(disc, p)
    if alpha is not None:
        return PrimeEvidence(p, split, Status.REDUCIBLE, alpha)
    return PrimeEvidence(p, split, Status.IRREDUCIBLE_NONPRIME)


def decide_ufd(disc: Discriminant | int, short_circuit: bool = False, reverse: bool = False) -> UfdVerdict:
    """Check every prime up to theorem_bound(disc).

    With short_circuit=True evaluation stops at the first irreducible non-prime;
    otherwise evidence is collected for all primes.  reverse only changes the
    evaluation order (evidence is always reported in ascending p).
    """
    if isinstance(disc, int):
        disc = make_discriminant(disc)
    bound = theorem_bound(disc)
    ps = primes_up_to(bound)
    if reverse:
        ps = ps[::-1]
    evidence = []
    for p in ps:
        ev = classify_prime(disc, p)
        evidence.append(ev)
        if short_circuit and ev.status is Status.IRREDUCIBLE_NONPRIME:
            break
    evidence.sort(key=lambda e: e.p)
    failures = [e.p for e in evidence if e.status is Status.IRREDUCIBLE_NONPRIME]
    return UfdVerdict(
        disc=disc,
        is_ufd=not failures,
        bound=bound,
        evidence=evidence,
        witness=min(failures) if failures else None,
    )


def check_certificate(verdict: UfdVerdict) -> None:
    """Re-verify every claim in a verdict; raises AssertionError on a bad certificate."""
    disc = verdict.disc
    assert verdict.bound == theorem_bound(disc)
    if not verdict.is_ufd and verdict.witness is not None:
        assert verdict.witness == min(
            e.p for e in verdict.evidence if e.status is Status.IRREDUCIBLE_NONPRIME
        )
    for ev in verdict.evidence:
        assert (ev.status is Status.PRIME) == (ev.splitting.kind is Kind.INERT)
        if ev.splitting.root is not None:
            assert disc.m(ev.splitting.root) % ev.p == 0
        if ev.status is Status.REDUCIBLE:
            assert abs(norm(ev.factor)) == ev.p
            co = ev.cofactor
            assert co is not None
            assert not is_unit(ev.factor) and not is_unit(co)
