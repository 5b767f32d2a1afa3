import random

import pytest

from tradeforge import kernels


def random_matrix(rng, n, lo=-5, hi=5):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def test_pure_and_compiled_agree():
    if not kernels.HAVE_COMPILED:
        pytest.skip("extension not built")
    rng = random.Random(7)
    for n in range(1, 9):
        for _ in range(20):
            rows = random_matrix(rng, n)
            assert kernels.ryser_permanent_compiled(rows) == \
                kernels.ryser_permanent_pure(rows)


def test_dispatch_falls_back_on_big_entries():
    big = [[10**25, 1], [1, 10**25]]
    assert not kernels.fits_compiled(big)
    assert kernels.ryser_permanent(big) == 10**50 + 1


def test_force_pure_env(monkeypatch):
    monkeypatch.setenv("TRADEFORGE_PURE", "1")
    rows = [[1, 2], [3, 4]]
    assert kernels.ryser_permanent(rows) == 10


def test_fits_compiled_bound():
    assert kernels.fits_compiled([[1]])
    # 20 rows of sum 8: 8^20 * 2^20 is far below 2^126
    assert kernels.fits_compiled([[1] * 8 + [0] * 12 for _ in range(20)])
    # all-ones 30x30 would have 30^30 * 2^30 intermediates: refuse
    assert not kernels.fits_compiled([[1] * 30 for _ in range(30)])


def test_empty_and_single():
    assert kernels.ryser_permanent([]) == 1
    assert kernels.ryser_permanent([[7]]) == 7
    assert kernels.ryser_permanent_pure([[0]]) == 0


def test_negative_entries():
    rows = [[-1, 2], [3, -4]]
    # per = (-1)(-4) + 2*3 = 10
    assert kernels.ryser_permanent_pure(rows) == 10
    if kernels.HAVE_COMPILED:
        assert kernels.ryser_permanent_compiled(rows) == 10
