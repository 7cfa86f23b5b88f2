import os
import random
import subprocess
import sys

import pytest

from dstream import _kernels, _pykernels

try:
    from dstream import _ckernels
except ImportError:
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
ALGOS = [(_kernels.STEADY, 4), (_kernels.STRETCHED, 8), (_kernels.TILTED, 8)]


def test_backend_reported():
    assert _kernels.backend() in ("cython", "python")
    assert _kernels.BACKEND == _kernels.backend()


def test_pure_python_switch():
    out = subprocess.run(
        [sys.executable, "-c", "import dstream; print(dstream.BACKEND)"],
        env={**os.environ, "DSTREAM_PURE_PYTHON": "1"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


def test_select_range_matches_site(kernels):
    for algo, _ in ALGOS:
        assert kernels.select_range(algo, 32, 0, 300) == [
            kernels.site(algo, 32, T) for T in range(300)
        ]


def test_iter_lookup_matches_lookup():
    for algo, _ in ALGOS:
        for T in (0, 5, 31, 32, 1000):
            assert list(_pykernels.iter_lookup(algo, 32, T)) == _pykernels.lookup(algo, 32, T)


@needs_ext
@pytest.mark.parametrize("algo, min_size", ALGOS)
def test_backends_agree_small(algo, min_size):
    for S in (2**e for e in range(min_size.bit_length() - 1, 8)):
        limit = min(2**S - 1, 3000)
        for T in range(limit):
            assert _ckernels.site(algo, S, T) == _pykernels.site(algo, S, T)
        for T in range(0, limit, 7):
            assert list(_ckernels.lookup(algo, S, T)) == _pykernels.lookup(algo, S, T)


@needs_ext
@pytest.mark.parametrize("algo, _", ALGOS)
def test_backends_agree_large_times(algo, _):
    rng = random.Random(algo)
    for S in (16, 32, 64):
        horizon = 2**64 - 1 if algo == _kernels.STEADY or S == 64 else 2**S - 1
        for _ in range(500):
            T = rng.randrange(horizon)
            assert _ckernels.site(algo, S, T) == _pykernels.site(algo, S, T)
            assert list(_ckernels.lookup(algo, S, T)) == _pykernels.lookup(algo, S, T)


@needs_ext
def test_bunch_site_agrees():
    for S in (8, 16, 32, 64, 128):
        for b in range(S // 2):
            assert _ckernels.bunch_site(S, b) == _pykernels.bunch_site(S, b)


def test_empty_marker(kernels):
    assert kernels.lookup(_kernels.STEADY, 8, 0)[0] == _kernels.EMPTY
