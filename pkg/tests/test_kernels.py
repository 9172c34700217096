import os
import subprocess
import sys

import numpy as np
import pytest

from conftest import every_hypergraph
from hyperposet import _kernels
from hyperposet.lattice import pairwise_pseudo_joins, pairwise_pseudo_meets
from hyperposet.poset import build_poset, hasse, is_lattice_bruteforce, join_table, meet_table

BACKENDS = _kernels.backends()


def test_python_backend_always_available():
    assert _kernels.python_backend in BACKENDS
    assert _kernels.active is BACKENDS[0]


def test_pure_environment_flag_selects_python():
    code = "from hyperposet import _kernels; print(_kernels.active.NAME)"
    env = dict(os.environ, HYPERPOSET_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")
@pytest.mark.parametrize("n", [3, 4])
def test_backends_agree(n):
    fast, slow = BACKENDS
    for H in every_hypergraph(n):
        masks = H.masks
        assert list(map(tuple, fast.backtrack_acyclic(masks, n))) == \
            list(map(tuple, slow.backtrack_acyclic(masks, n)))
        assert list(map(tuple, fast.permutation_image(masks, n))) == \
            list(map(tuple, slow.permutation_image(masks, n)))
        P1, P2 = build_poset(H, backend=fast), build_poset(H, backend=slow)
        assert np.array_equal(P1.up, P2.up) and np.array_equal(P1.down, P2.down)
        assert hasse(P1) == hasse(P2)
        assert np.array_equal(join_table(P1), join_table(P2))
        assert np.array_equal(meet_table(P1), meet_table(P2))
        assert is_lattice_bruteforce(P1).verdict == is_lattice_bruteforce(P2).verdict
        assert np.array_equal(pairwise_pseudo_joins(P1, fast), pairwise_pseudo_joins(P1, slow))
        assert np.array_equal(pairwise_pseudo_meets(P1, fast), pairwise_pseudo_meets(P1, slow))


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.NAME)
def test_bound_rows_wider_than_one_word(backend):
    # a 70-element chain needs two words per row
    S = np.arange(70, dtype=np.int64).reshape(70, 1)
    up = backend.up_rows(S)
    assert up.shape == (70, 2)
    table = backend.bound_table(up, False)
    assert table[3, 65] == 65 and table[69, 0] == 69
    assert backend.first_missing_bound(up, False) is None
    assert len(backend.cover_pairs(up, backend.up_rows(-S))) == 69
