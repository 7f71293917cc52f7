"""Class numbers from reduced binary quadratic forms.

Used as an independent check on the UFD decision: O_D is a UFD exactly when
D is fundamental and the class number is 1.  This module keeps its own
reduction code rather than sharing the norm-equation solver's.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .arith import is_valid_discriminant, make_discriminant
from .pell import fundamental_unit
from .primes import is_squarefree


@dataclass(frozen=True, order=True)
class QuadraticForm:
    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y


def is_fundamental(D: int) -> bool:
    if not is_valid_discriminant(D):
        raise ValueError(f"{D} is not a quadratic discriminant")
    if D % 4 == 1:
        return is_squarefree(D)
    m = D // 4
    return m % 4 in (2, 3) and is_squarefree(m)


def reduced_forms_neg(D: int) -> list[QuadraticForm]:
    """Reduced primitive positive definite forms of discriminant D < 0."""
    out = []
    for a in range(1, isqrt(-D // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            f = QuadraticForm(a, b, c)
            if f.is_primitive():
                out.append(f)
    return out


def class_number_neg(D: int) -> int:
    if D >= 0:
        raise ValueError("class_number_neg needs D < 0")
    make_discriminant(D)
    return len(reduced_forms_neg(D))


def _is_reduced_indef(f: QuadraticForm, s: int) -> bool:
    return 0 < f.b <= s and s - f.b < 2 * abs(f.a) <= s + f.b


def reduced_forms_pos(D: int) -> list[QuadraticForm]:
    """Reduced primitive indefinite forms of discriminant D > 0."""
    s = isqrt(D)
    out = []
    for b in range(D % 2 or 2, s + 1, 2):
        n = (D - b * b) // 4  # = -a*c
        for a in range(1, s + 1):
            if n % a:
                continue
            for sa in (a, -a):
                f = QuadraticForm(sa, b, -n // sa)
                if _is_reduced_indef(f, s) and f.is_primitive():
                    out.append(f)
    return out


def rho(f: QuadraticForm, s: int) -> QuadraticForm:
    """Map a reduced indefinite form to the next one in its cycle."""
    D = f.discriminant
    ac = abs(f.c)
    lo = s - 2 * ac + 1 if ac <= s else -ac + 1
    b = lo + (-f.b - lo) % (2 * ac)
    return QuadraticForm(f.c, b, (b * b - D) // (4 * f.c))


def cycles_pos(D: int) -> list[list[QuadraticForm]]:
    s = isqrt(D)
    remaining = set(reduced_forms_pos(D))
    cycles = []
    while remaining:
        start = min(remaining)
        cyc = [start]
        f = rho(start, s)
        while f != start:
            cyc.append(f)
            f = rho(f, s)
        remaining.difference_update(cyc)
        cycles.append(cyc)
    return cycles


def narrow_class_number(D: int) -> int:
    return len(cycles_pos(D))


def class_number_pos(D: int) -> int:
    if D <= 0:
        raise ValueError("class_number_pos needs D > 0")
    disc = make_discriminant(D)
    h_plus = narrow_class_number(D)
    if fundamental_unit(disc).unit_norm == -1:
        return h_plus
    return h_plus // 2


def class_number(D: int) -> int:
    return class_number_neg(D) if D < 0 else class_number_pos(D)


def ufd_oracle(D: int) -> bool:
    return is_fundamental(D) and class_number(D) == 1
