"""Brute-force reference computations used by the tests.

Nothing here calls into the code paths being checked except plain
coordinate arithmetic (norm evaluation) and, for the D > 0 search box,
the fundamental unit, which is itself checked by exhaustive search.
"""

from math import isqrt

from quadufd.arith import is_valid_discriminant, make_discriminant
from quadufd.pell import fundamental_unit


def valid_discriminants(lo, hi):
    return [D for D in range(lo, hi + 1) if is_valid_discriminant(D)]


def norm_ab(D, a, b):
    sigma = D % 4
    return a * a + sigma * a * b + (sigma - D) // 4 * b * b


def normalized_best(pairs):
    """Smallest |b|, then |a|, sign-normalized so that a >= 0 (b > 0 if a == 0)."""
    best = None
    for a, b in pairs:
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        key = (abs(b), abs(a), b < 0)
        if best is None or key < best[0]:
            best = (key, (a, b))
    return None if best is None else best[1]


def box_bound(D, m):
    """Coordinate bound B such that every orbit of solutions of N = m meets |b| <= B."""
    if D < 0:
        return isqrt(4 * abs(m) // abs(D)) + 3
    fu = fundamental_unit(make_discriminant(D))
    trace = fu.t if fu.unit_norm == 1 else fu.t * fu.t + 2
    return isqrt(abs(m) * (trace + 2) // D) + 1


def brute_represents_all(D, targets):
    """Exhaustive search of the coordinate box for every target norm at once.

    Returns {m: normalized best (a, b) or None}.  For D < 0 this is a plain
    double loop.  For D > 0 the box can be millions of rows tall, so each
    row b is handled by listing the few squares r^2 within 4*max|m| of D*b^2;
    N(a + b*tau) = m is equivalent to (2a + sigma*b)^2 = D*b^2 + 4m.
    """
    targets = set(targets)
    sigma = D % 4
    sols = {m: [] for m in targets}
    B = max(box_bound(D, m) for m in targets)
    if D < 0:
        mmax = max(targets)
        for b in range(-B, B + 1):
            amax = isqrt(max(mmax, 0)) + abs(b) + 1
            for a in range(-amax, amax + 1):
                n = norm_ab(D, a, b)
                if n in sols:
                    sols[n].append((a, b))
    else:
        w = 4 * max(abs(m) for m in targets)
        for b in range(-B, B + 1):
            base = D * b * b
            r = isqrt(base + w)
            while r >= 0 and r * r >= base - w:
                for u in {r, -r}:
                    if (u - sigma * b) % 2 == 0:
                        a = (u - sigma * b) // 2
                        n = norm_ab(D, a, b)
                        if n in sols:
                            sols[n].append((a, b))
                r -= 1
    return {m: normalized_best(v) for m, v in sols.items()}


def brute_represents(D, m):
    return brute_represents_all(D, [m])[m]


def brute_roots(D, p):
    sigma = D % 4
    c = (sigma - D) // 4
    return [x for x in range(p) if (x * x - sigma * x + c) % p == 0]


def brute_min_unit_u(D, limit):
    """Smallest u in [1, limit] with D*u^2 +- 4 a square of the right parity, else None."""
    for u in range(1, limit + 1):
        for s in (4, -4):
            t2 = D * u * u + s
            if t2 > 0 and isqrt(t2) ** 2 == t2 and (isqrt(t2) - u * D) % 2 == 0:
                return u
    return None


def brute_is_prime(n):
    return n > 1 and all(n % f for f in range(2, isqrt(n) + 1))


def brute_reduced_forms_neg(D):
    """Reduced primitive definite forms, enumerated c-first with a different loop order."""
    from math import gcd

    out = set()
    amax = isqrt(-D // 3)
    for b in range(amax, -amax - 1, -1):
        for a in range(max(abs(b), 1), amax + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            ok = abs(b) <= a <= c and not (b < 0 and (abs(b) == a or a == c))
            if ok and gcd(gcd(a, b), c) == 1:
                out.add((a, b, c))
    return out
