import random

import numpy as np
import pytest

from markoff import kernels
from markoff.arith import prime_power_moduli
from markoff.unicity import hensel_roots
from oracles import roots_brute

BACKENDS = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])


@pytest.mark.parametrize("name", BACKENDS)
def test_half_roots(name):
    k = kernels.using(name)
    for m in range(1, 600):
        for l in (1, 2, 5):
            assert list(k.half_roots(l % m, m)) == roots_brute(l, m)


@pytest.mark.parametrize("name", BACKENDS)
def test_residue_counts(name):
    k = kernels.using(name)
    for m in (1, 2, 5, 25, 97, 1000, 4097):
        got = k.residue_counts(m, 20)
        assert got[0] == 0
        for l in range(1, 21):
            assert got[l] == len(roots_brute(l, m))


@pytest.mark.parametrize("name", BACKENDS)
def test_box_min(name):
    k = kernels.using(name)
    rng = random.Random(3)
    for _ in range(50):
        a, b, c = (rng.randrange(-30, 31) for _ in range(3))
        K = rng.randrange(1, 8)
        pts = [(x, y) for y in range(K + 1) for x in range(-K, K + 1) if not (y == 0 and x <= 0)]
        vals = [abs(a * x * x + b * x * y + c * y * y) for x, y in pts]
        best = min(vals)
        assert tuple(k.box_min(a, b, c, K)) == (best, *pts[vals.index(best)])


@pytest.mark.parametrize("name", BACKENDS)
def test_x2p1_table(name):
    k = kernels.using(name)
    limit = 5000
    count, root = k.x2p1_table(limit)
    for m in prime_power_moduli(limit):
        want = roots_brute(1, m)
        assert count[m] == len(want), m
        if want:
            assert root[m] == want[0]


def test_backends_agree():
    if kernels.BACKEND != "cython":
        pytest.skip("extension not built")
    cy, py = kernels.using("cython"), kernels.using("python")
    c1, r1 = cy.x2p1_table(200000)
    c2, r2 = py.x2p1_table(200000)
    assert np.array_equal(c1, c2) and np.array_equal(r1, r2)
    for m in (12345, 99991, 65536):
        assert np.array_equal(cy.residue_counts(m, 20), py.residue_counts(m, 20))


def test_table_matches_hensel():
    count, root = kernels.x2p1_table(10**5)
    for m in prime_power_moduli(10**5):
        h = hensel_roots(1, m)
        assert count[m] == len(h)
        if h:
            assert root[m] == h[0]


def test_wide_inputs():
    # too wide for machine words: routed to the bigint path
    big = 10**30
    assert kernels.box_min(big, 1, -big, 2) == kernels.using("python").box_min(big, 1, -big, 2)
    with pytest.raises(ValueError):
        kernels.residue_counts(1 << 31, 5)
    with pytest.raises(ValueError):
        kernels.x2p1_table((1 << 31) + 1)
