"""Representing integers as norms of elements of O_D.

For D < 0 the norm form is positive definite and a direct scan over the
tau-coordinate suffices.  For D > 0 the search is driven by reduction of
indefinite binary quadratic forms: m is primitively represented by the norm
form exactly when some form (m, B, C) of discriminant D reduces into the
principal cycle.  Each such B yields one orbit of solutions under the units
of norm +1; inside an orbit the tau-coordinate is minimized by stepping with
that unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .arith import Discriminant, OrderElement, conj, element, is_square, make_discriminant, mul, norm
from .pell import fundamental_unit
from .residues import Kind, splitting_type


@dataclass(frozen=True)
class NormSolution:
    element: OrderElement
    target: int


def _key(x: OrderElement) -> tuple[int, int, int]:
    return (abs(x.b), abs(x.a), x.b < 0)


def _sign_normalize(x: OrderElement) -> OrderElement:
    if x.a < 0 or (x.a == 0 and x.b < 0):
        return OrderElement(-x.a, -x.b, x.disc)
    return x


def _best(candidates) -> OrderElement | None:
    normalized = [_sign_normalize(c) for c in candidates]
    return min(normalized, key=_key, default=None)


def _solve_for_a(disc: Discriminant, b: int, m: int) -> list[int]:
    # a^2 + sigma*b*a + (m_const*b^2 - m) = 0  =>  (2a + sigma*b)^2 = D*b^2 + 4m
    delta = disc.D * b * b + 4 * m
    if delta < 0 or not is_square(delta):
        return []
    r = isqrt(delta)
    out = []
    for u in {r, -r}:
        if (u - disc.sigma * b) % 2 == 0:
            out.append((u - disc.sigma * b) // 2)
    return out


def _represents_definite(disc: Discriminant, m: int) -> OrderElement | None:
    if m < 0:
        return None
    b = 0
    while -disc.D * b * b <= 4 * m:
        cands = [element(disc, a, s) for s in {b, -b} for a in _solve_for_a(disc, s, m)]
        if cands:
            return _best(cands)
        b += 1
    return None


# Indefinite forms.  A matrix ((p, q), (r, s)) acts by f -> f(p*x + q*y, r*x + s*y).

def _matmul(A, B):
    (a, b), (c, d) = A
    (e, f), (g, h) = B
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


_IDENTITY = ((1, 0), (0, 1))


def _is_reduced(a: int, b: int, s: int) -> bool:
    # 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b, with s = isqrt(D)
    return 0 < b <= s and s - b + 1 <= 2 * abs(a) <= s + b


def _rho(form, D: int, s: int):
    """One reduction step; returns the new form and the transforming matrix."""
    a, b, c = form
    ac = abs(c)
    if ac > s:
        lo = -ac + 1
    else:
        lo = s - 2 * ac + 1
    # unique b' = -b (mod 2|c|) with lo <= b' < lo + 2|c|
    b2 = lo + (-b - lo) % (2 * ac)
    t = (b2 + b) // (2 * c)
    return (c, b2, (b2 * b2 - D) // (4 * c)), ((0, -1), (1, t))


def _reduce(form, D: int, s: int):
    M = _IDENTITY
    while not _is_reduced(form[0], form[1], s):
        form, step = _rho(form, D, s)
        M = _matmul(M, step)
    return form, M


@lru_cache(maxsize=4096)
def _principal_cycle(D: int):
    """Map each reduced form in the principal cycle to a matrix taking the
    reduced principal form (1, B0, C0) to it."""
    s = isqrt(D)
    B0 = s if (s - D) % 2 == 0 else s - 1
    start = (1, B0, (B0 * B0 - D) // 4)
    cycle = {start: _IDENTITY}
    form, M = start, _IDENTITY
    while True:
        form, step = _rho(form, D, s)
        M = _matmul(M, step)
        if form == start:
            break
        cycle[form] = M
    return B0, cycle


@lru_cache(maxsize=4096)
def _positive_unit(D: int) -> tuple[int, int]:
    """Coordinates of the smallest unit > 1 of norm +1."""
    disc = make_discriminant(D)
    eps = fundamental_unit(disc).element(disc)
    if norm(eps) == -1:
        eps = mul(eps, eps)
    return eps.a, eps.b


def _primitive_orbits_indefinite(disc: Discriminant, m: int):
    """One primitive solution of N(alpha) = m per orbit under norm +1 units."""
    D = disc.D
    s = isqrt(D)
    B0, cycle = _principal_cycle(D)
    k0 = (B0 - disc.sigma) // 2
    am = abs(m)
    for B in range(2 * am):
        if (B * B - D) % (4 * am):
            continue
        g = (m, B, (B * B - D) // (4 * m))
        reduced, R = _reduce(g, D, s)
        P = cycle.get(reduced)
        if P is None:
            continue
        # g = h0 o (P R^-1); the first column of P R^-1 represents m by h0
        (r11, r12), (r21, r22) = R
        x = P[0][0] * r22 - P[0][1] * r21
        y = P[1][0] * r22 - P[1][1] * r21
        yield element(disc, x + k0 * y, y)


def _minimize_in_orbit(alpha: OrderElement, eta: OrderElement) -> OrderElement:
    eta_inv = conj(eta)
    best = alpha
    for step in (eta, eta_inv):
        cur = alpha
        while True:
            nxt = mul(cur, step)
            if abs(nxt.b) > abs(cur.b):
                break
            cur = nxt
            if _key(_sign_normalize(cur)) < _key(_sign_normalize(best)):
                best = cur
    # |b| is unimodal along an orbit; look one step past the minimum for ties
    return _best([best, mul(best, eta), mul(best, eta_inv)])


def _represents_indefinite(disc: Discriminant, m: int) -> OrderElement | None:
    eta = element(disc, *_positive_unit(disc.D))
    cands = []
    g = 1
    while g * g <= abs(m):
        if m % (g * g) == 0:
            for alpha in _primitive_orbits_indefinite(disc, m // (g * g)):
                best = _minimize_in_orbit(alpha, eta)
                cands.append(OrderElement(g * best.a, g * best.b, disc))
        g += 1
    return _best(cands)


def represents(disc: Discriminant, m: int) -> NormSolution | None:
    """Find alpha in O_D with N(alpha) = m, or None.

    The witness has the smallest |b|, then the smallest |a|, and is sign
    normalized so that a >= 0.
    """
    if m == 0:
        raise ValueError("m must be nonzero")
    if disc.D < 0:
        alpha = _represents_definite(disc, m)
    else:
        alpha = _represents_indefinite(disc, m)
    if alpha is None:
        return None
    assert norm(alpha) == m, (alpha, m)
    return NormSolution(alpha, m)


def prime_norm_witness(disc: Discriminant, p: int) -> OrderElement | None:
    """Best element of norm +p or (for D > 0) -p, or None if p is irreducible."""
    targets = (p,) if disc.D < 0 else (p, -p)
    sols = [s.element for s in (represents(disc, t) for t in targets) if s is not None]
    return min(sols, key=_key, default=None)


def is_irreducible_rational_prime(disc: Discriminant, p: int) -> bool:
    if splitting_type(disc, p).kind is Kind.INERT:
        return True
    return prime_norm_witness(disc, p) is None
