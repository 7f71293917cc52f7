"""Exact arithmetic in the quadratic order O_D = Z + Z*tau.

Elements are stored in coordinates (a, b) over the basis {1, tau}, where
tau = (sigma + sqrt(D)) / 2 and sigma = D mod 4.  Everything is integer
arithmetic; there is no floating point in this module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import isqrt


class InvalidDiscriminant(ValueError):
    pass


class DiscriminantMismatch(ValueError):
    pass


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


@dataclass(frozen=True)
class Discriminant:
    D: int
    sigma: int
    d: int
    m_const: int

    @property
    def min_poly(self) -> tuple[int, int, int]:
        """Coefficients (1, -sigma, m_const) of the minimal polynomial of tau."""
        return (1, -self.sigma, self.m_const)

    def m(self, x: int) -> int:
        return x * x - self.sigma * x + self.m_const

    def __str__(self) -> str:
        return str(self.D)


def make_discriminant(D: int) -> Discriminant:
    D = int(D)
    if D % 4 not in (0, 1):
        raise InvalidDiscriminant(f"D={D} is not congruent to 0 or 1 mod 4")
    if is_square(D):
        raise InvalidDiscriminant(f"D={D} is a perfect square")
    sigma = D % 4
    return Discriminant(D=D, sigma=sigma, d=(D - sigma) // 4, m_const=(sigma - D) // 4)


def is_valid_discriminant(D: int) -> bool:
    return D % 4 in (0, 1) and not is_square(D)


@dataclass(frozen=True)
class OrderElement:
    a: int
    b: int
    disc: Discriminant

    def _check(self, other: OrderElement) -> None:
        if self.disc.D != other.disc.D:
            raise DiscriminantMismatch(
                f"cannot combine elements of O_{self.disc.D} and O_{other.disc.D}"
            )

    def _coerce(self, other) -> OrderElement:
        if isinstance(other, int):
            return OrderElement(other, 0, self.disc)
        if not isinstance(other, OrderElement):
            return NotImplemented
        self._check(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(other, self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> OrderElement:
        if k < 0:
            raise ValueError("negative powers are not elements of the order in general")
        result = element(self.disc, 1, 0)
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def uv(self) -> tuple[int, int]:
        """Return (u, v) with self = (u + v*sqrt(D)) / 2."""
        return 2 * self.a + self.b * self.disc.sigma, self.b

    def __str__(self) -> str:
        return render(self)


def element(disc: Discriminant, a: int, b: int = 0) -> OrderElement:
    return OrderElement(int(a), int(b), disc)


def tau(disc: Discriminant) -> OrderElement:
    return OrderElement(0, 1, disc)


def from_uv(disc: Discriminant, u: int, v: int) -> OrderElement:
    """Build (u + v*sqrt(D))/2; requires u = v*D mod 2."""
    if (u - v * disc.D) % 2:
        raise ValueError(f"({u}+{v}*sqrt({disc.D}))/2 is not in O_{disc.D}")
    return OrderElement((u - v * disc.sigma) // 2, v, disc)


def add(x: OrderElement, y: OrderElement) -> OrderElement:
    x._check(y)
    return OrderElement(x.a + y.a, x.b + y.b, x.disc)


def sub(x: OrderElement, y: OrderElement) -> OrderElement:
    x._check(y)
    return OrderElement(x.a - y.a, x.b - y.b, x.disc)


def neg(x: OrderElement) -> OrderElement:
    return OrderElement(-x.a, -x.b, x.disc)


def mul(x: OrderElement, y: OrderElement) -> OrderElement:
    # tau^2 = sigma*tau - m_const
    x._check(y)
    s, c = x.disc.sigma, x.disc.m_const
    bb = x.b * y.b
    return OrderElement(x.a * y.a - bb * c, x.a * y.b + x.b * y.a + bb * s, x.disc)


def conj(x: OrderElement) -> OrderElement:
    # conj(tau) = sigma - tau
    return OrderElement(x.a + x.b * x.disc.sigma, -x.b, x.disc)


def norm(x: OrderElement) -> int:
    return x.a * x.a + x.a * x.b * x.disc.sigma + x.b * x.b * x.disc.m_const


def trace(x: OrderElement) -> int:
    return 2 * x.a + x.b * x.disc.sigma


def is_unit(x: OrderElement) -> bool:
    return abs(norm(x)) == 1


def try_divide(num: OrderElement, den: OrderElement) -> OrderElement | None:
    """Return q with num == den * q, or None if den does not divide num in O_D."""
    num._check(den)
    n = norm(den)
    if n == 0:
        raise ZeroDivisionError("division by zero element")
    t = mul(num, conj(den))
    if t.a % n or t.b % n:
        return None
    return OrderElement(t.a // n, t.b // n, num.disc)


# Textual forms: "a+b*t" and "(u+v*sqrt(D))/2".

def _signed(head: int, coeff: int, unit: str) -> str:
    return f"{head}{'+' if coeff >= 0 else '-'}{abs(coeff)}*{unit}"


def render(x: OrderElement) -> str:
    return _signed(x.a, x.b, "t")


def render_uv(x: OrderElement) -> str:
    u, v = x.uv()
    return "(" + _signed(u, v, f"sqrt({x.disc.D})") + ")/2"


_TAU_RE = re.compile(r"^\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*\*\s*t\s*$")
_UV_RE = re.compile(
    r"^\s*\(\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*([+-]?\d+)\s*\)\s*\)\s*/\s*2\s*$"
)


def parse_element(text: str, disc: Discriminant) -> OrderElement:
    """Parse either rendering back into an element of O_D."""
    m = _TAU_RE.match(text)
    if m:
        b = int(m.group(3))
        return OrderElement(int(m.group(1)), b if m.group(2) == "+" else -b, disc)
    m = _UV_RE.match(text)
    if m:
        if int(m.group(4)) != disc.D:
            raise DiscriminantMismatch(f"{text!r} does not belong to O_{disc.D}")
        v = int(m.group(3))
        return from_uv(disc, int(m.group(1)), v if m.group(2) == "+" else -v)
    raise ValueError(f"cannot parse order element {text!r}")
