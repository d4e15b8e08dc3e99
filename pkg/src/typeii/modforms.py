"""q-expansions of level-one modular forms and extremal theta series."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class QSeries:
    """Integer power series in q known to ``precision`` coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a q-series needs at least one known coefficient")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def truncate(self, precision: int) -> "QSeries":
        return QSeries(self.coeffs[:precision])

    def __add__(self, other: "QSeries") -> "QSeries":
        p = min(self.precision, other.precision)
        return QSeries(tuple(a + b for a, b in zip(self.coeffs[:p], other.coeffs[:p])))

    def __sub__(self, other: "QSeries") -> "QSeries":
        p = min(self.precision, other.precision)
        return QSeries(tuple(a - b for a, b in zip(self.coeffs[:p], other.coeffs[:p])))

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(tuple(other * a for a in self.coeffs))
        p = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        out = [0] * p
        for i in range(p):
            ai = a[i]
            if ai:
                for j in range(p - i):
                    out[i + j] += ai * b[j]
        return QSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QSeries":
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = QSeries((1,) + (0,) * (self.precision - 1))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, d: int) -> "QSeries":
        for c in self.coeffs:
            if c % d:
                raise ArithmeticError(f"coefficient {c} not divisible by {d}")
        return QSeries(tuple(c // d for c in self.coeffs))

    def tolist(self) -> list[int]:
        return list(self.coeffs)


def divisor_sigma(k: int, power: int) -> int:
    """Sum of ``d**power`` over positive divisors ``d`` of ``k``, by trial division."""
    total = 0
    d = 1
    while d * d <= k:
        if k % d == 0:
            total += d**power
            e = k // d
            if e != d:
                total += e**power
        d += 1
    return total


def eisenstein(weight: int, precision: int) -> QSeries:
    """Normalized Eisenstein series E4 or E6 to ``precision`` coefficients."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    if weight == 4:
        c, p = 240, 3
    elif weight == 6:
        c, p = -504, 5
    else:
        raise ValueError(f"unsupported Eisenstein weight {weight}; expected 4 or 6")
    return QSeries((1,) + tuple(c * divisor_sigma(k, p) for k in range(1, precision)))


def delta(precision: int) -> QSeries:
    """The discriminant cusp form (E4^3 - E6^2) / 1728."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    e4 = eisenstein(4, precision)
    e6 = eisenstein(6, precision)
    return (e4**3 - e6**2).exact_div(1728)


def min_norm_bound(rank: int) -> int:
    return 2 * (rank // 24) + 2


def _check_rank(rank: int) -> None:
    if rank <= 0 or rank % 8:
        raise ValueError(f"rank {rank} of a Type II lattice must be a positive multiple of 8")


@dataclass(frozen=True)
class ExtremalTheta:
    rank: int
    series: QSeries
    min_norm: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.series.coeffs


def extremal_theta(rank: int, precision: int | None = None) -> ExtremalTheta:
    """Theta series forced on any extremal Type II lattice of the given rank.

    The weight ``rank/2`` is a multiple of 4, so the space of forms is
    spanned by ``E4**((rank/2 - 12 i)/4) * Delta**i`` for ``0 <= i <= rank//24``.
    Since ``Delta**i = q**i + ...``, requiring ``1 + O(q**(rank//24 + 1))``
    gives a unit-triangular system, solved top-down.
    """
    _check_rank(rank)
    ell = rank // 24
    if precision is None:
        precision = ell + 4
    if precision < ell + 2:
        raise ValueError(f"precision must be at least {ell + 2} for rank {rank}")
    weight = rank // 2
    e4 = eisenstein(4, precision)
    d = delta(precision)
    basis = [e4 ** ((weight - 12 * i) // 4) * d**i for i in range(ell + 1)]
    target = [1] + [0] * ell
    coef = [Fraction(0)] * (ell + 1)
    # basis[i] has leading term q**i, so row k only involves columns i <= k
    for k in range(ell + 1):
        acc = sum(coef[i] * basis[i][k] for i in range(k))
        coef[k] = Fraction(target[k] - acc, basis[k][k])
    out = [Fraction(0)] * precision
    for c, b in zip(coef, basis):
        if c:
            for k in range(precision):
                out[k] += c * b[k]
    if any(x.denominator != 1 for x in out):
        raise ArithmeticError("extremal theta series has non-integral coefficients")
    series = QSeries(tuple(int(x) for x in out))
    return ExtremalTheta(rank=rank, series=series, min_norm=min_norm_bound(rank))


def shell_size(rank: int, norm: int) -> int:
    """Number of norm-``norm`` vectors in an extremal Type II lattice of this rank."""
    if norm < 0 or norm % 2:
        raise ValueError(f"norm {norm} must be even and nonnegative")
    k = norm // 2
    if k == 0:
        _check_rank(rank)
        return 1
    ell = rank // 24 if rank > 0 else 0
    theta = extremal_theta(rank, max(k + 1, ell + 2))
    return theta.coeffs[k]
