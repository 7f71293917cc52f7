"""Continued fractions of quadratic irrationals and fundamental units of real orders."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .arith import Discriminant, OrderElement, from_uv, is_square


@dataclass(frozen=True)
class CFExpansion:
    P0: int
    Q0: int
    N: int
    preperiod: list[int]
    period: list[int]
    convergents: list[tuple[int, int]] = field(repr=False)


@dataclass(frozen=True)
class FundamentalUnit:
    t: int
    u: int
    unit_norm: int
    D: int

    def element(self, disc: Discriminant) -> OrderElement:
        return from_uv(disc, self.t, self.u)


def _normalize(P0: int, Q0: int, N: int) -> tuple[int, int, int]:
    if (N - P0 * P0) % Q0 == 0:
        return P0, Q0, N
    # (P0 + sqrt(N))/Q0 == (P0*|Q0| + sqrt(N*Q0^2)) / (Q0*|Q0|)
    k = abs(Q0)
    return P0 * k, Q0 * k, N * k * k


def _partial_quotient(P: int, Q: int, s: int) -> int:
    # floor((P + sqrt(N)) / Q) with s = isqrt(N), sqrt(N) irrational
    if Q > 0:
        return (P + s) // Q
    return -((P + s) // -Q) - 1


def pqa(P0: int, Q0: int, N: int):
    """Yield (a_i, P_i, Q_i) of the PQa recurrence for (P0 + sqrt(N))/Q0 forever."""
    s = isqrt(N)
    P, Q = P0, Q0
    while True:
        a = _partial_quotient(P, Q, s)
        yield a, P, Q
        P = a * Q - P
        Q = (N - P * P) // Q


def cf_expand(P0: int, Q0: int, N: int) -> CFExpansion:
    """Preperiod, period and convergents of the continued fraction of (P0 + sqrt(N))/Q0."""
    if Q0 == 0:
        raise ZeroDivisionError("Q0 must be nonzero")
    if N <= 0 or is_square(N):
        raise ValueError(f"N={N} must be a positive nonsquare")
    P0, Q0, N = _normalize(P0, Q0, N)
    seen: dict[tuple[int, int], int] = {}
    terms: list[int] = []
    for a, P, Q in pqa(P0, Q0, N):
        if (P, Q) in seen:
            start = seen[(P, Q)]
            break
        seen[(P, Q)] = len(terms)
        terms.append(a)
    convergents = []
    p_prev, p = 1, terms[0]
    q_prev, q = 0, 1
    convergents.append((p, q))
    for a in terms[1:]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        convergents.append((p, q))
    return CFExpansion(P0, Q0, N, terms[:start], terms[start:], convergents)


def fundamental_unit(disc: Discriminant) -> FundamentalUnit:
    """Smallest unit (t + u*sqrt(D))/2 > 1 of O_D, found among continued-fraction convergents."""
    D = disc.D
    if D < 0:
        raise ValueError("imaginary quadratic orders have finitely many units")
    if disc.sigma == 0:
        P0, Q0, N = 0, 1, D // 4  # sqrt(D/4)
    else:
        P0, Q0, N = 1, 2, D  # (1 + sqrt(D))/2
    p_prev, p, q_prev, q = 1, None, 0, 1
    for a, _, _ in pqa(P0, Q0, N):
        if p is None:
            p = a
        else:
            p_prev, p = p, a * p + p_prev
            q_prev, q = q, a * q + q_prev
        # p - q*conj(omega) as (t + u*sqrt(D))/2
        t = 2 * p if disc.sigma == 0 else 2 * p - q
        n4 = t * t - D * q * q
        if n4 in (4, -4):
            return FundamentalUnit(t=t, u=q, unit_norm=n4 // 4, D=D)
