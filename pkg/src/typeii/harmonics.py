"""Gegenbauer polynomials and their even zonal restrictions.

A degree-s zonal harmonic about a fixed vector ``y`` of norm ``m``,
evaluated at ``x`` of norm ``r``, is proportional to
``(r m)**(s/2) * C_s(<x, y> / sqrt(r m))`` with ``C_s`` the Gegenbauer
polynomial of parameter ``n/2 - 1``. For even ``s`` only even powers of
the argument occur, so the square root cancels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import normalize_primitive


@dataclass(frozen=True)
class GegenbauerPoly:
    degree: int
    lam: Fraction
    coeffs: tuple[Fraction, ...]  # coefficient of u**i at index i

    def __call__(self, u) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * u + c
        return out


def gegenbauer(d: int, lam) -> GegenbauerPoly:
    lam = Fraction(lam)
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if lam <= 0:
        raise ValueError("lambda must be positive")
    prev = [Fraction(1)]
    if d == 0:
        return GegenbauerPoly(0, lam, tuple(prev))
    cur = [Fraction(0), 2 * lam]
    for k in range(2, d + 1):
        nxt = [Fraction(0)] * (k + 1)
        a = 2 * (k + lam - 1)
        for i, c in enumerate(cur):
            nxt[i + 1] += a * c
        b = k + 2 * lam - 2
        for i, c in enumerate(prev):
            nxt[i] -= b * c
        prev, cur = cur, [x / k for x in nxt]
    return GegenbauerPoly(d, lam, tuple(cur))


@dataclass(frozen=True)
class ZonalPolynomial:
    """Primitive even integer polynomial Q(t); ``coeffs[i]`` multiplies ``t**i``."""

    dim: int
    degree: int
    r: int
    m: int
    coeffs: tuple[int, ...]

    def __call__(self, t: int) -> int:
        return zonal_eval(self, t)

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(terms) or "0"


def zonal_poly(n: int, s: int, r: int, m: int) -> ZonalPolynomial:
    if s < 0 or s % 2:
        raise ValueError(f"zonal degree must be even and nonnegative, got {s}")
    if n < 2:
        raise ValueError("dimension must be at least 2")
    if r <= 0 or m <= 0:
        raise ValueError("norms must be positive")
    if s == 0:
        return ZonalPolynomial(n, 0, r, m, (1,))
    g = gegenbauer(s, Fraction(n, 2) - 1)
    rm = r * m
    # u**i -> t**i * (rm)**((s - i)/2); odd i carry zero coefficients
    scaled = [c * rm ** ((s - i) // 2) if i % 2 == 0 else Fraction(0) for i, c in enumerate(g.coeffs)]
    ints = normalize_primitive(scaled)
    if ints[-1] < 0:
        ints = [-x for x in ints]
    return ZonalPolynomial(n, s, r, m, tuple(ints))


def zonal_eval(Q: ZonalPolynomial, t: int) -> int:
    out = 0
    for c in reversed(Q.coeffs):
        out = out * t + c
    return out
