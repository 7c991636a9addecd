import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ortholat import _kernels, generate
from ortholat._kernels import _numba, _numpy
from ortholat.completion import distributive_table

import oracles as O
from strategies import lattices

BACKENDS = [_numpy, _numba]


def corpus():
    out = [generate(k, n).base for k, n in (("boolean", 2), ("mo", 2), ("o6", None),
                                            ("boolean", 3), ("mo", 3))]
    out.append(generate("chain", 5))
    return out


@given(st.integers(1, 9), st.data())
def test_transitive_closure(n, data):
    adj = np.array(data.draw(st.lists(st.lists(st.booleans(), min_size=n, max_size=n),
                                      min_size=n, max_size=n)), dtype=bool)
    want = adj | np.eye(n, dtype=bool)
    for _ in range(n):
        want = want | ((want.astype(int) @ want.astype(int)) > 0)
    for impl in BACKENDS:
        assert (impl.transitive_closure(adj) == want).all()


@given(lattices)
def test_bound_tables(L):
    for impl in BACKENDS:
        meet, join = impl.bound_tables(L.leq)
        for a in range(L.n):
            for b in range(L.n):
                assert meet[a, b] == O.meet(L, a, b) and join[a, b] == O.join(L, a, b)


def test_bound_tables_flag_missing_bounds():
    # two incomparable maximal elements: no join for them
    leq = np.array([[1, 1, 1], [0, 1, 0], [0, 0, 1]], dtype=bool)
    for impl in BACKENDS:
        _, join = impl.bound_tables(leq)
        assert join[1, 2] == -1


@given(lattices)
def test_subset_fold_and_downsets(L):
    for impl in BACKENDS:
        joins = impl.subset_fold(L.join, np.arange(L.n), L.bottom)
        for mask in range(0, 1 << L.n, max(1, (1 << L.n) // 64)):
            assert joins[mask] == O.lub(L, [i for i in range(L.n) if mask >> i & 1])
        got = sorted(int(m) for m in impl.downset_masks(L.down_masks))
        want = sorted(sum(1 << i for i in S) for S in O.all_downsets(L))
        assert got == want


@pytest.mark.parametrize("L", corpus(), ids=lambda L: f"n{L.n}")
def test_distributive_flags_and_violation(L):
    flags = [impl.distributive_flags(L.meet, L.join, L.subset_joins, L.bottom)
             for impl in BACKENDS]
    assert (flags[0] == flags[1]).all()
    for mask in range(1 << L.n):
        A = [i for i in range(L.n) if mask >> i & 1]
        assert bool(flags[0][mask]) == O.is_distributive_set(L, A)
    for m in _numpy.downset_masks(L.down_masks):
        m = int(m)
        got = [impl.closure_violation(m, flags[0], L.subset_joins) for impl in BACKENDS]
        assert got[0] == got[1]
        if got[0] >= 0:
            assert got[0] & ~m == 0 and flags[0][got[0]]
            assert not (m >> int(L.subset_joins[got[0]])) & 1


def test_submasks():
    assert sorted(_numpy.submasks(0b101)) == [0, 1, 4, 5]


def test_backend_flag():
    assert _kernels.BACKEND in ("numba", "numpy")
    env = dict(os.environ, ORTHOLAT_DISABLE_JIT="1")
    code = ("import ortholat._kernels as k, ortholat as o;"
            "print(k.BACKEND, len(o.enumerate_completion(o.generate('mo', 2))))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.split() == ["numpy", "16"]


def test_distributive_table_cached(mo2):
    assert distributive_table(mo2.base) is distributive_table(mo2.base)
