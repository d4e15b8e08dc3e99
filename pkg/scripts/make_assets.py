#!/usr/bin/env python3
"""Regenerate the bundled Gram matrices in src/typeii/assets/.

E8 is written from its Dynkin diagram. D16+ and the Leech lattice are
built from generators in scaled coordinates of R^n, put in Hermite
normal form, then LLL-reduced on the Gram matrix so that short-vector
enumeration runs on a well-conditioned basis.

Usage: python scripts/make_assets.py [outdir]
"""

import sys
from fractions import Fraction
from pathlib import Path

from typeii.exact import hnf
from typeii.lattice import GramMatrix

# E8 Dynkin diagram: chain 0-1-2-3-4-5-6 with node 7 attached to node 4
E8_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]


def e8_gram():
    G = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for a, b in E8_EDGES:
        G[a][b] = G[b][a] = -1
    return G


def d16plus_generators():
    """D16 together with the glue vector (1/2)^16, all coordinates doubled."""
    n = 16
    gens = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 2, -2
        gens.append(v)
    v = [0] * n
    v[n - 2] = v[n - 1] = 2
    gens.append(v)
    gens.append([1] * n)
    return gens, 4


def golay_basis():
    """Extended binary Golay code: cyclic code of length 23 generated by
    g(x) = 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11, plus a parity bit."""
    g = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]
    rows = []
    for shift in range(12):
        w = [0] * 23
        for k, bit in enumerate(g):
            w[(k + shift) % 23] = bit
        rows.append(w + [sum(w) % 2])
    return rows


def golay_codewords(basis):
    words = set()
    for mask in range(1 << len(basis)):
        w = [0] * 24
        for i, row in enumerate(basis):
            if mask >> i & 1:
                w = [(a + b) % 2 for a, b in zip(w, row)]
        words.add(tuple(w))
    return words


def leech_generators():
    """Leech lattice scaled by sqrt(8): 2c for Golay words c, 4(e_0 + e_i), (-3, 1^23)."""
    gens = [[2 * b for b in row] for row in golay_basis()]
    for i in range(1, 24):
        v = [0] * 24
        v[0] = v[i] = 4
        gens.append(v)
    gens.append([-3] + [1] * 23)
    return gens, 8


def gram_from_generators(gens, scale):
    B = hnf(gens)
    n = len(B)
    G = []
    for i in range(n):
        row = []
        for j in range(n):
            ip = sum(a * b for a, b in zip(B[i], B[j]))
            assert ip % scale == 0
            row.append(ip // scale)
        G.append(row)
    return G


def lll_gram(G, delta=Fraction(99, 100)):
    """Exact LLL on a Gram matrix; returns the reduced Gram matrix."""
    G = [list(r) for r in G]
    n = len(G)

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        Bn = [Fraction(0)] * n
        for i in range(n):
            for j in range(i):
                s = Fraction(G[i][j])
                for k in range(j):
                    s -= mu[j][k] * mu[i][k] * Bn[k]
                mu[i][j] = s / Bn[j]
            Bn[i] = G[i][i] - sum(mu[i][k] ** 2 * Bn[k] for k in range(i))
        return mu, Bn

    def sub(k, j, q):
        # b_k -= q b_j
        diag = G[k][k] - 2 * q * G[k][j] + q * q * G[j][j]
        for t in range(n):
            if t != k:
                G[k][t] -= q * G[j][t]
                G[t][k] = G[k][t]
        G[k][k] = diag

    def swap(a, b):
        G[a], G[b] = G[b], G[a]
        for row in G:
            row[a], row[b] = row[b], row[a]

    k = 1
    mu, Bn = gso()
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                sub(k, j, q)
                mu, Bn = gso()
        if Bn[k] >= (delta - mu[k][k - 1] ** 2) * Bn[k - 1]:
            k += 1
        else:
            swap(k, k - 1)
            mu, Bn = gso()
            k = max(k - 1, 1)
    return G


def main(outdir):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    words = golay_codewords(golay_basis())
    weights = sorted({sum(w) for w in words})
    assert len(words) == 4096 and weights == [0, 8, 12, 16, 24], weights
    grams = {
        "e8.gram": e8_gram(),
        "d16plus.gram": lll_gram(gram_from_generators(*d16plus_generators())),
        "leech.gram": lll_gram(gram_from_generators(*leech_generators())),
    }
    for name, G in grams.items():
        gm = GramMatrix(G)
        assert gm.det == 1, (name, gm.det)
        (out / name).write_text(gm.dumps())
        print(f"{name}: rank {gm.rank}, det {gm.det}, diagonal {[G[i][i] for i in range(gm.rank)]}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "src" / "typeii" / "assets")
