from __future__ import annotations

import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from hopfcode import _pykernels, kernels

ckernels = pytest.importorskip("hopfcode._ckernels")


def _rows(rng, r, c, p):
    return [[rng.randrange(p) for _ in range(c)] for _ in range(r)]


@given(st.integers(0, 2**32 - 1), st.sampled_from([2, 3, 7, 13, 101, 65537]), st.integers(0, 9), st.integers(1, 9))
def test_rref_backends_agree(seed, p, r, c):
    rng = random.Random(seed)
    rows = _rows(rng, r, c, p)
    py_basis, py_piv = _pykernels.rref_mod_p([list(x) for x in rows], c, p)
    c_basis, c_piv = ckernels.rref_mod_p([list(x) for x in rows], c, p)
    assert [list(x) for x in c_basis] == [list(x) for x in py_basis]
    assert list(c_piv) == list(py_piv)


@given(st.integers(0, 2**32 - 1), st.sampled_from([2, 7, 13, 65537]), st.integers(1, 6), st.integers(1, 6), st.integers(1, 6))
def test_matmul_backends_agree(seed, p, r, k, c):
    rng = random.Random(seed)
    a, b = _rows(rng, r, k, p), _rows(rng, k, c, p)
    assert [list(x) for x in ckernels.matmul_mod_p(a, b, p)] == _pykernels.matmul_mod_p(a, b, p)


def test_large_prime_uses_python_path():
    p = 4294967311  # prime above the 64-bit safe bound
    rows = [[p - 1, 2], [3, p - 5]]
    assert kernels.rref_mod_p(rows, 2, p) == _pykernels.rref_mod_p(rows, 2, p)


def test_inputs_not_mutated():
    rows = [[3, 5], [1, 1]]
    ckernels.rref_mod_p(rows, 2, 7)
    assert rows == [[3, 5], [1, 1]]


def test_pure_python_switch():
    env = dict(os.environ, HOPFCODE_PURE_PYTHON="1")
    code = (
        "import hopfcode, random\n"
        "from hopfcode.hopf.named import build_taft\n"
        "from hopfcode.scalars import PrimeField\n"
        "from hopfcode.verify import run_named\n"
        "print(hopfcode.BACKEND, run_named(build_taft(2, PrimeField(7)), random.Random(0), samples=10).passed)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "True"]
