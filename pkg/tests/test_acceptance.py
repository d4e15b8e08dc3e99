"""Exit criteria. Exact arithmetic, so every check is an equality.

Run with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import json
import random
import time

import pytest

from typeii.cli import main
from typeii.configproof import Outcome, build_system, config_instance, solve_configuration
from typeii.exact import det_exact, normalize_primitive, nullspace, rank
from typeii.lattice import (
    GramMatrix,
    design_test,
    enumerate_shell,
    iter_half_short_vectors,
    short_vector_counts,
    span_shell,
)
from typeii.modforms import extremal_theta, shell_size

from conftest import naive_short_vectors

criterion = pytest.mark.criterion

RANK120_FIXTURE = (732712723072, 513474040695, 179503316608, 28716173101, 2210582080, 44468039, 273941)


def cli_json(capsys, *argv):
    t = time.perf_counter()
    code = main([*argv, "--json"])
    elapsed = time.perf_counter() - t
    res = json.loads(capsys.readouterr().out)
    return code, res, elapsed


@criterion(1, "rank 40/80 solution vectors and contradiction verdict, < 1 s each")
@pytest.mark.parametrize(
    "rank, expected",
    [(40, (4688, 4293, -37)), (80, (5661456, 3946750, 711000, 88875, -553))],
)
def test_configuration_vectors(capsys, rank, expected):
    code, res, elapsed = cli_json(capsys, "config-system", "--rank", str(rank))
    assert code == 0
    assert tuple(int(x) for x in res["payload"]["solution"]) == expected
    assert res["payload"]["outcome"] == "contradiction"
    assert elapsed < 1.0


@criterion(2, "rank 120 one-dimensional nonnegative solution, inconclusive, < 1 s")
def test_rank120_remarks(capsys):
    code, res, elapsed = cli_json(capsys, "config-system", "--rank", "120")
    p = res["payload"]
    assert code == 0 and elapsed < 1.0
    assert p["nullity"] == 1 and p["outcome"] == "inconclusive"
    sol = tuple(int(x) for x in p["solution"])
    assert all(x >= 0 for x in sol)
    assert sol == RANK120_FIXTURE
    # second elimination order: reversed columns through RREF, and maximal minors
    M = build_system(120).matrix
    rev = nullspace([row[::-1] for row in M])
    assert len(rev) == 1
    assert tuple(normalize_primitive(rev[0][::-1])) == sol
    minors = [(-1) ** j * det_exact([[r[c] for c in range(7) if c != j] for r in M]) for j in range(7)]
    assert tuple(normalize_primitive(minors)) == sol


@criterion(3, "extremal shell sizes 87859200 and 7541401190400, < 1 s")
def test_shell_sizes():
    t = time.perf_counter()
    assert shell_size(40, 6) == 87859200
    assert shell_size(80, 10) == 7541401190400
    assert time.perf_counter() - t < 1.0


@criterion(4, "config matrix has rank m0/2 for n = 40, 80, 120")
@pytest.mark.parametrize("n", [40, 80, 120])
def test_linear_independence(n):
    m0 = config_instance(n).m0
    M = build_system(n).matrix
    assert rank(M) == m0 // 2
    assert len(nullspace(M)) == 1


@criterion(5, "every row annihilates the solution; degree-2 identities")
@pytest.mark.parametrize("n", [40, 80, 120])
def test_row_orthogonality(n):
    v = solve_configuration(n)
    for row in v.system.matrix:
        assert sum(a * x for a, x in zip(row, v.solution)) == 0


@criterion(5, "every row annihilates the solution; degree-2 identities")
def test_degree2_literals():
    assert -3 * 4688 + 4 * 4293 - 84 * 37 == 0
    assert -5661456 + 6 * 711000 + 16 * 88875 - 48 * 553 == 0
    assert build_system(40).matrix[0] == (-3, 4, 84)
    assert build_system(80).matrix[0] == (-1, 0, 6, 16, 48)


@criterion(6, "Fincke-Pohst equals naive box search on 50 random lattices, norms <= 20, < 30 s")
def test_enumeration_oracle():
    rng = random.Random(20261015)
    t = time.perf_counter()
    for _ in range(50):
        n = rng.randint(1, 5)
        G = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                G[i][j] = G[j][i] = rng.randint(-4, 4)
        for i in range(n):
            G[i][i] = sum(abs(G[i][j]) for j in range(n) if j != i) + rng.randint(1, 4)
        gm = GramMatrix(G)
        naive = naive_short_vectors(G, 20)
        found = {(0,) * n: 0}
        for x, nx in iter_half_short_vectors(gm, 20):
            found[x] = nx
            found[tuple(-a for a in x)] = nx
        assert found == naive
        for j in range(21):
            assert set(enumerate_shell(gm, j).vectors) == {x for x, nx in naive.items() if nx == j}
    assert time.perf_counter() - t < 30.0


@criterion(7, "span indices E8 {2} = 1, Leech {4} = 1, D16+ {2} = 2; Leech shell < 5 min")
def test_span_indices(e8, d16plus, leech, leech_min):
    assert len(leech_min) == 196560
    assert leech_min.seconds < 300
    assert span_shell(e8, [2]).index == 1
    assert span_shell(leech, [4]).index == 1
    assert span_shell(d16plus, [2]).index == 2


@criterion(8, "zonal sums vanish on E8 and Leech shells; nonzero at a non-design degree")
def test_design_vanishing(e8, e8_roots, leech, leech_min):
    rng = random.Random(8)
    for probe in rng.sample(e8_roots.vectors, 5):
        for s in (2, 4, 6):
            assert design_test(e8, 2, s, probe, shell=e8_roots) == 0
    for probe in rng.sample(leech_min.vectors, 5):
        for s in (2, 4, 6, 10):
            assert design_test(leech, 4, s, probe, shell=leech_min) == 0
    assert design_test(e8, 2, 8, (3, 1, 4, 1, 5, 9, 2, 6), shell=e8_roots) != 0


@criterion(9, "enumerated shell counts equal extremal theta coefficients")
def test_cross_module(e8, leech_min):
    th8 = extremal_theta(8, 3).coeffs
    counts = short_vector_counts(e8, 4)
    assert counts[2] == th8[1] == 240
    assert counts[4] == th8[2] == 2160
    assert len(leech_min) == extremal_theta(24, 3).coeffs[2] == 196560
