"""The linear system over inner-product counts against a minimal vector.

Fix ``x0`` of minimal norm ``m0`` in an extremal Type II lattice of rank
``n`` and let ``N_j`` count vectors of norm ``m0 + 2`` with ``<x, x0> = j``.
Each even degree ``s`` at which the shell is a spherical design gives one
homogeneous equation ``Q_s(0) N_0 + 2 sum_{j>0} Q_s(j) N_j = 0``. If the
one-dimensional solution space has mixed signs, no nonnegative counts
exist and the shell of norm ``m0 + 2`` must generate ``x0``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exact import nullspace, normalize_primitive
from .harmonics import ZonalPolynomial, zonal_poly
from .modforms import min_norm_bound

#: ranks for which the verdict semantics are claimed
SUPPORTED_RANKS = (40, 80, 120)


class Outcome(str, enum.Enum):
    CONTRADICTION = "contradiction"
    INCONCLUSIVE = "inconclusive"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class ConfigInstance:
    n: int
    m0: int
    t: int
    S: tuple[int, ...]
    J: tuple[int, ...]


@dataclass(frozen=True)
class ConfigSystem:
    instance: ConfigInstance
    polys: tuple[ZonalPolynomial, ...]
    matrix: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class ConfigVerdict:
    system: ConfigSystem
    nullity: int
    solution: tuple[int, ...] | None
    outcome: Outcome


def design_degrees(n: int) -> tuple[int, tuple[int, ...]]:
    """Design strength ``t`` and the even degrees usable in the vanishing sums."""
    if n <= 0 or n % 8:
        raise ValueError(f"rank {n} must be a positive multiple of 8")
    t = {0: 11, 8: 7, 16: 3}[n % 24]
    S = tuple(s for s in list(range(1, t + 1)) + [t + 3] if s % 2 == 0)
    return t, S


def index_set(m0: int) -> tuple[int, ...]:
    """Possible values of ``|<x, x0>|`` once ``m0/2`` has been excluded."""
    h = m0 // 2
    return tuple(range(h)) + (h + 1,)


def config_instance(n: int) -> ConfigInstance:
    t, S = design_degrees(n)
    m0 = min_norm_bound(n)
    return ConfigInstance(n=n, m0=m0, t=t, S=S, J=index_set(m0))


def build_system(n: int, scale: dict[int, int] | None = None) -> ConfigSystem:
    """Coefficient matrix with one row per degree in S and one column per j in J.

    ``scale`` optionally multiplies the zonal polynomial of a given degree
    by a positive integer; the solution is invariant under it.
    """
    inst = config_instance(n)
    polys = tuple(zonal_poly(n, s, inst.m0 + 2, inst.m0) for s in inst.S)
    rows = []
    for s, Q in zip(inst.S, polys):
        k = (scale or {}).get(s, 1)
        rows.append(tuple(Fraction(k * Q(j) * (1 if j == 0 else 2)) for j in inst.J))
    return ConfigSystem(instance=inst, polys=polys, matrix=tuple(rows))


def classify_solution(v) -> Outcome:
    if any(x < 0 for x in v) and any(x > 0 for x in v):
        return Outcome.CONTRADICTION
    return Outcome.INCONCLUSIVE


def solve_configuration(n: int, scale: dict[int, int] | None = None) -> ConfigVerdict:
    system = build_system(n, scale)
    basis = nullspace(system.matrix)
    if len(basis) != 1:
        return ConfigVerdict(system, len(basis), None, Outcome.DEGENERATE)
    v = normalize_primitive(basis[0])
    # anchor the sign on N_0, the count of vectors orthogonal to x0
    if v[0] < 0:
        v = [-x for x in v]
    return ConfigVerdict(system, 1, tuple(v), classify_solution(v))
