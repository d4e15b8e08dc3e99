"""Exact integral lattices given by Gram matrices.

Short vectors are found by Fincke-Pohst branch and bound. The quadratic
form is completed to squares exactly over the rationals and then scaled
so that every bound in the search is an integer comparison; no floating
point is involved.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from math import isqrt, lcm
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Sequence

from .exact import HermiteBuilder
from .harmonics import zonal_poly
from .modforms import min_norm_bound

BUNDLED = ("e8.gram", "d16plus.gram", "leech.gram")


class GramParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column


class NotPositiveDefinite(ValueError):
    pass


class GramMatrix:
    """Symmetric positive-definite integer Gram matrix."""

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(rows)
        if n == 0:
            raise ValueError("Gram matrix must have rank at least 1")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i}, {j})")
        self.entries = rows
        self.rank = n
        self._check_definite()

    def _check_definite(self):
        # without row swaps, Bareiss pivots are the leading principal minors
        M = [list(r) for r in self.entries]
        prev = 1
        n = self.rank
        for k in range(n):
            piv = M[k][k]
            if piv <= 0:
                raise NotPositiveDefinite(f"leading principal minor of order {k + 1} is {piv}")
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    M[i][j] = (piv * M[i][j] - M[i][k] * M[k][j]) // prev
            prev = piv
        self.det = prev

    def __eq__(self, other):
        return isinstance(other, GramMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"GramMatrix(rank={self.rank}, det={self.det})"

    def norm(self, x: Sequence[int]) -> int:
        return self.inner(x, x)

    def inner(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(xi * sum(g * yj for g, yj in zip(row, y)) for xi, row in zip(x, self.entries))

    def apply(self, x: Sequence[int]) -> tuple[int, ...]:
        """``G x``, so that ``<x, y> = sum(G x * y)``."""
        return tuple(sum(g * xj for g, xj in zip(row, x)) for row in self.entries)

    def dumps(self) -> str:
        lines = [str(self.rank)] + [" ".join(str(x) for x in row) for row in self.entries]
        return "\n".join(lines) + "\n"


def parse_gram(text: str) -> GramMatrix:
    """Parse the plain-text format: rank on the first line, then n rows of n integers."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GramParseError("missing rank on first line", 1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise GramParseError(f"rank {lines[0].strip()!r} is not an integer", 1) from None
    if n < 1:
        raise GramParseError(f"rank must be positive, got {n}", 1)
    body = lines[1:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != n:
        raise GramParseError(f"expected {n} matrix rows, found {len(body)}", len(lines))
    rows = []
    for i, line in enumerate(body):
        fields = line.split()
        if len(fields) != n:
            raise GramParseError(f"expected {n} entries, found {len(fields)}", i + 2)
        row = []
        for j, f in enumerate(fields):
            try:
                row.append(int(f))
            except ValueError:
                raise GramParseError(f"entry {f!r} is not an integer", i + 2, j + 1) from None
        rows.append(row)
    for i in range(n):
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise GramParseError(
                    f"matrix not symmetric: entry {rows[i][j]} differs from {rows[j][i]} "
                    f"at line {j + 2}, column {i + 1}",
                    i + 2,
                    j + 1,
                )
    return GramMatrix(rows)


def load_gram(path: str | os.PathLike) -> GramMatrix:
    """Read a Gram file; a missing path whose file name is a bundled asset loads that asset."""
    p = Path(path)
    if not p.exists() and p.name in BUNDLED:
        return bundled(p.name)
    return parse_gram(p.read_text())


def bundled(name: str) -> GramMatrix:
    if not name.endswith(".gram"):
        name += ".gram"
    if name not in BUNDLED:
        raise KeyError(f"no bundled lattice {name!r}; available: {', '.join(BUNDLED)}")
    text = resources.files("typeii").joinpath("assets", name).read_text()
    return parse_gram(text)


class ShellVector(NamedTuple):
    coords: tuple[int, ...]
    norm: int


def shell_vector(G: GramMatrix, coords: Sequence[int]) -> ShellVector:
    c = tuple(int(x) for x in coords)
    if len(c) != G.rank:
        raise ValueError(f"vector has {len(c)} coordinates, lattice rank is {G.rank}")
    return ShellVector(c, G.norm(c))


@dataclass
class Shell:
    lattice: GramMatrix
    norm: int
    vectors: list[tuple[int, ...]]
    complete: bool = True

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


class _Search:
    """Integer data for the completed-square form.

    With ``y_i = M_i x_i + sum_{j>i} c_ij x_j`` the form is
    ``sum_i W_i y_i**2 / K`` for integers ``M_i, c_ij, W_i, K``.
    """

    def __init__(self, G: GramMatrix):
        n = G.rank
        q = [[Fraction(x) for x in row] for row in G.entries]
        for i in range(n):
            for j in range(i + 1, n):
                q[j][i] = q[i][j]
                q[i][j] = q[i][j] / q[i][i]
            for k in range(i + 1, n):
                for l in range(k, n):
                    q[k][l] -= q[k][i] * q[i][l]
        self.n = n
        self.M = []
        self.c = []
        diag = []
        for i in range(n):
            mu = [q[i][j] for j in range(i + 1, n)]
            Mi = lcm(1, *(x.denominator for x in mu))
            self.M.append(Mi)
            self.c.append(tuple(int(Mi * x) for x in mu))
            diag.append(q[i][i] / (Mi * Mi))
        self.K = lcm(*(d.denominator for d in diag))
        self.W = [int(self.K * d) for d in diag]

    def prefixes(self, bound: int, depth: int) -> list[tuple[tuple[int, ...], int, bool]]:
        """Partial assignments of the top ``depth`` coordinates that fit under ``bound``.

        Each item is (coords from the top level down, remaining budget,
        whether all assigned coordinates are zero).
        """
        out = [((), self.K * bound, True)]
        n = self.n
        for d in range(depth):
            i = n - 1 - d
            nxt = []
            for xs, R, zero in out:
                for x, R2 in self._range(i, xs, R, zero):
                    nxt.append((xs + (x,), R2, zero and x == 0))
            out = nxt
        return out

    def _range(self, i, xs, R, zero):
        # xs holds x_{n-1}, ..., x_{i+1}
        n = self.n
        ci = self.c[i]
        s = 0
        for k, cij in enumerate(ci):
            if cij:
                s += cij * xs[n - 2 - i - k]
        Mi, Wi = self.M[i], self.W[i]
        b = isqrt(R // Wi)
        lo = -((b + s) // Mi)
        hi = (b - s) // Mi
        if zero and lo < 0:
            lo = 0
        for x in range(lo, hi + 1):
            y = Mi * x + s
            R2 = R - Wi * y * y
            if R2 >= 0:
                yield x, R2

    def complete(self, prefix, R, zero, out: list):
        """Append (coords, remaining) for every half-space completion of ``prefix``."""
        n = self.n
        depth = len(prefix)
        if depth == n:
            if not zero:
                out.append((prefix[::-1], R))
            return
        xs = list(prefix) + [0] * (n - depth)
        self._dfs(n - 1 - depth, xs, R, zero, out)

    def _dfs(self, i, xs, R, zero, out):
        n = self.n
        ci = self.c[i]
        s = 0
        # xs[k] is x_{n-1-k}; c_ij for j = i+1.. lives at xs[n-1-j]
        for k, cij in enumerate(ci):
            if cij:
                s += cij * xs[n - 2 - i - k]
        Mi, Wi = self.M[i], self.W[i]
        b = isqrt(R // Wi)
        lo = -((b + s) // Mi)
        hi = (b - s) // Mi
        if zero and lo < 0:
            lo = 0
        pos = n - 1 - i
        if i == 0:
            for x in range(lo, hi + 1):
                if zero and x == 0:
                    continue
                y = Mi * x + s
                R2 = R - Wi * y * y
                if R2 >= 0:
                    xs[pos] = x
                    out.append((tuple(xs[::-1]), R2))
            return
        for x in range(lo, hi + 1):
            y = Mi * x + s
            R2 = R - Wi * y * y
            if R2 >= 0:
                xs[pos] = x
                self._dfs(i - 1, xs, R2, zero and x == 0, out)
        xs[pos] = 0


def _run_prefix(args):
    search, bound, prefix, R, zero = args
    out = []
    search.complete(prefix, R, zero, out)
    return [(x, bound - r2 // search.K) for x, r2 in out]


def iter_half_short_vectors(
    G: GramMatrix, bound: int, workers: int = 1
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield ``(coords, norm)`` for nonzero ``x`` with norm <= bound, one of each ``+-x`` pair.

    The representative kept is the one whose last nonzero coordinate is
    positive. Work is split over prefixes of the top coordinates so that
    memory stays bounded by the largest subtree; order is deterministic.
    """
    if bound <= 0:
        return
    search = _Search(G)
    depth = min(3, G.rank)
    jobs = [(search, bound, p, R, z) for p, R, z in search.prefixes(bound, depth)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_run_prefix, jobs, chunksize=max(1, len(jobs) // (4 * workers))):
                yield from chunk
    else:
        for job in jobs:
            yield from _run_prefix(job)


def iter_shell_half(G: GramMatrix, norm: int, workers: int = 1) -> Iterator[tuple[int, ...]]:
    for x, nx in iter_half_short_vectors(G, norm, workers):
        if nx == norm:
            yield x


def enumerate_shell(G: GramMatrix, norm: int, workers: int = 1) -> Shell:
    """All vectors of the given norm, sorted lexicographically by coordinates."""
    if norm < 0:
        raise ValueError("norm must be nonnegative")
    if norm == 0:
        return Shell(G, 0, [(0,) * G.rank])
    vecs = []
    for x in iter_shell_half(G, norm, workers):
        vecs.append(x)
        vecs.append(tuple(-a for a in x))
    vecs.sort()
    return Shell(G, norm, vecs)


def shell_count(G: GramMatrix, norm: int, workers: int = 1) -> int:
    if norm == 0:
        return 1
    return 2 * sum(1 for _ in iter_shell_half(G, norm, workers))


def short_vector_counts(G: GramMatrix, bound: int, workers: int = 1) -> dict[int, int]:
    """Map norm -> number of vectors of that norm, for all norms up to ``bound``."""
    counts = {0: 1}
    for _, nx in iter_half_short_vectors(G, bound, workers):
        counts[nx] = counts.get(nx, 0) + 2
    return dict(sorted(counts.items()))


def min_norm(G: GramMatrix) -> int:
    bound = min(G.entries[i][i] for i in range(G.rank))
    return min(nx for _, nx in iter_half_short_vectors(G, bound))


@dataclass(frozen=True)
class Classification:
    rank: int
    det: int
    integral: bool
    even: bool
    unimodular: bool
    type_ii: bool
    min_norm: int
    is_extremal: bool

    def asdict(self) -> dict:
        return dict(self.__dict__)


def classify(G: GramMatrix) -> Classification:
    # integer Gram entries make the lattice integral; then even-ness is a
    # statement about basis norms alone, by the parallelogram identity
    even = all(G.entries[i][i] % 2 == 0 for i in range(G.rank))
    unimodular = G.det == 1
    type_ii = even and unimodular
    mn = min_norm(G)
    return Classification(
        rank=G.rank,
        det=G.det,
        integral=True,
        even=even,
        unimodular=unimodular,
        type_ii=type_ii,
        min_norm=mn,
        is_extremal=type_ii and mn == min_norm_bound(G.rank),
    )


@dataclass
class Span:
    hnf_basis: list[list[int]]
    rank: int
    index: int | None  # None when the span has lower rank

    @property
    def generates(self) -> bool:
        return self.index == 1


def span_vectors(n: int, vectors: Iterable[Sequence[int]]) -> Span:
    h = HermiteBuilder(n)
    for v in vectors:
        h.add(v)
        if h.rank == n and h.pivot_product() == 1:
            break
    index = h.pivot_product() if h.rank == n else None
    return Span(h.basis(), h.rank, index)


def span_shell(G: GramMatrix, norms: Iterable[int], workers: int = 1) -> Span:
    """Sublattice generated by the given shells, as an HNF basis and its index in L.

    Shells are closed under negation, so one vector of each pair suffices.
    """
    norms = sorted(set(norms))
    if not norms or max(norms) <= 0:
        return Span([], 0, None)
    wanted = set(norms)
    vectors = (x for x, nx in iter_half_short_vectors(G, max(norms), workers) if nx in wanted)
    return span_vectors(G.rank, vectors)


@dataclass
class ProfileCounts:
    x0: ShellVector
    shell_norm: int
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def shell_size(self) -> int:
        return sum(c if j == 0 else 2 * c for j, c in self.counts.items())


def _half(G: GramMatrix, norm: int, workers: int, shell: Shell | None) -> Iterator[tuple[int, ...]]:
    if shell is None:
        yield from iter_shell_half(G, norm, workers)
        return
    if shell.lattice != G or shell.norm != norm:
        raise ValueError("precomputed shell does not match the lattice and norm")
    for x in shell.vectors:
        for a in reversed(x):
            if a:
                if a > 0:
                    yield x
                break


def _as_vector(G: GramMatrix, x) -> ShellVector:
    return x if isinstance(x, ShellVector) else shell_vector(G, x)


def inner_product_profile(
    G: GramMatrix, x0, shell_norm: int, workers: int = 1, shell: Shell | None = None
) -> ProfileCounts:
    """Counts ``N_j`` of shell vectors with ``<x0, x> = j`` for ``j >= 0``.

    Streams over the shell unless a precomputed ``shell`` is passed;
    ``N_{-j} = N_j`` by negation, so only ``j >= 0`` is stored.
    """
    x0 = _as_vector(G, x0)
    g = G.apply(x0.coords)
    counts: dict[int, int] = {}
    if shell_norm == 0:
        counts[0] = 1
        return ProfileCounts(x0, 0, counts)
    for x in _half(G, shell_norm, workers, shell):
        a = abs(sum(gi * xi for gi, xi in zip(g, x)))
        counts[a] = counts.get(a, 0) + (2 if a == 0 else 1)
    return ProfileCounts(x0, shell_norm, dict(sorted(counts.items())))


def design_test(
    G: GramMatrix, shell_norm: int, degree: int, probe, workers: int = 1, shell: Shell | None = None
) -> int:
    """Exact sum over the shell of the degree-``degree`` zonal polynomial about ``probe``.

    Zero means the vanishing condition holds for this probe.
    """
    probe = _as_vector(G, probe)
    if probe.norm == 0:
        raise ValueError("probe must be nonzero")
    Q = zonal_poly(G.rank, degree, shell_norm, probe.norm)
    g = G.apply(probe.coords)
    total = 0
    found = False
    for x in _half(G, shell_norm, workers, shell):
        found = True
        a = sum(gi * xi for gi, xi in zip(g, x))
        total += 2 * Q(a)
    if not found:
        raise ValueError(f"shell of norm {shell_norm} is empty")
    return total
