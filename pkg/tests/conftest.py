import itertools
import time
from fractions import Fraction
from math import isqrt

import pytest

from typeii.exact import rref
from typeii.lattice import bundled, enumerate_shell


def naive_short_vectors(G, bound):
    """All x with x^T G x <= bound, by scanning the box |x_i| <= sqrt(bound * (G^-1)_ii)."""
    n = len(G)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(G)]
    m, _ = rref(aug)
    inv_diag = [m[i][n + i] for i in range(n)]
    box = [isqrt(int(Fraction(bound) * d)) for d in inv_diag]
    out = {}
    for x in itertools.product(*(range(-b, b + 1) for b in box)):
        nx = sum(x[i] * G[i][j] * x[j] for i in range(n) for j in range(n))
        if nx <= bound:
            out[x] = nx
    return out


@pytest.fixture(scope="session")
def e8():
    return bundled("e8")


@pytest.fixture(scope="session")
def d16plus():
    return bundled("d16plus")


@pytest.fixture(scope="session")
def leech():
    return bundled("leech")


@pytest.fixture(scope="session")
def e8_roots(e8):
    return enumerate_shell(e8, 2)


@pytest.fixture(scope="session")
def leech_min(leech):
    t = time.perf_counter()
    shell = enumerate_shell(leech, 4)
    shell.seconds = time.perf_counter() - t
    return shell


_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    number, title = mark.args
    if rep.when == "setup" and rep.passed:
        return
    prev = _CRITERIA.get(number, (title, True))
    _CRITERIA[number] = (title, prev[1] and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}")
