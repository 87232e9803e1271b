import numpy as np
import pytest

from gspb import kernels


def scan_runs(word: str) -> tuple[int, int]:
    rho = 1 + sum(1 for a, b in zip(word, word[1:]) if a != b)
    blocks = []
    start = 0
    for i in range(1, len(word) + 1):
        if i == len(word) or word[i] != word[i - 1]:
            blocks.append(i - start)
            start = i
    mu = sum(1 for k, size in enumerate(blocks) if size == 1 and 0 < k < len(blocks) - 1)
    return rho, mu


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_run_stats_match_string_scan(n):
    rho, mu = kernels.run_stats(n)
    for x in range(1 << n):
        word = format(x, f"0{n}b")
        assert (rho[x], mu[x]) == scan_runs(word), word


def test_backends_agree():
    for n in (1, 2, 6, 10):
        assert np.array_equal(kernels._run_stats_numpy(n)[0], kernels.run_stats(n)[0])
        assert np.array_equal(kernels._run_stats_numpy(n)[1], kernels.run_stats(n)[1])
        assert np.array_equal(kernels._popcounts_numpy(n), kernels.popcounts(n))
        assert np.array_equal(kernels._deletion_targets_numpy(n), kernels.deletion_targets(n))
        assert np.array_equal(kernels._grain_targets_numpy(n), kernels.grain_targets(n))


def test_deletion_targets_by_hand():
    # 110 (6): deleting bit0 -> 11, bit1 -> 10, bit2 -> 10
    t = kernels.deletion_targets(3)
    assert sorted(t[0b110].tolist()) == [0b10, 0b10, 0b11]
    assert set(t[0b000].tolist()) == {0}


def test_grain_targets_by_hand():
    t = kernels.grain_targets(3)
    # 010: each bit smears its right neighbor, so 010 -> 000 or 011
    row = [v for v in t[0b010].tolist() if v >= 0]
    assert sorted(row) == [0b000, 0b011]
    assert all(v == -1 for v in t[0b000].tolist())


def test_popcounts():
    pc = kernels.popcounts(6)
    assert pc[0] == 0 and pc[63] == 6 and pc[0b101010] == 3


def test_env_flag_selects_numpy_backend():
    import os
    import subprocess
    import sys
    env = dict(os.environ, GSPB_PURE_NUMPY="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from gspb import kernels; print(kernels.BACKEND); "
         "print(int(kernels.run_stats(6)[0][0b010101]))"],
        capture_output=True, text=True, env=env, check=True,
    )
    backend, runs = out.stdout.split()
    assert backend == "numpy" and runs == "6"
