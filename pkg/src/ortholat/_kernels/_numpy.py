"""Pure-numpy kernels.

Every function here has a twin in ``_numba.py`` with the same signature and
the same results; the numpy versions vectorise over subsets instead of
looping.  Bitmasks are int64 with bit ``i`` standing for element ``i``.
"""
import numpy as np

_CHUNK = 1 << 20


def transitive_closure(adj):
    reach = np.array(adj, dtype=bool, copy=True)
    n = reach.shape[0]
    reach[np.arange(n), np.arange(n)] = True
    for k in range(n):
        reach |= reach[:, k : k + 1] & reach[k : k + 1, :]
    return reach


def _bound_table(below):
    # below[x, i]: x is a candidate bound of i (x <= i for meets, x >= i for joins)
    n = below.shape[0]
    common = below.T[:, None, :] & below.T[None, :, :]  # [i, j, x]
    outside = (~below).astype(np.int64)  # outside[y, x]: y is not below x
    viol = common.astype(np.int64).reshape(n * n, n) @ outside
    best = common & (viol.reshape(n, n, n) == 0)
    table = np.where(best.any(axis=2), best.argmax(axis=2), -1)
    return table.astype(np.int64)


def bound_tables(leq):
    leq = np.asarray(leq, dtype=bool)
    return _bound_table(leq), _bound_table(leq.T)


def subset_fold(table, values, identity):
    """out[mask] = fold of ``table`` over ``values[i]`` for the bits i of mask."""
    values = np.asarray(values, dtype=np.int64)
    k = values.shape[0]
    out = np.empty(1 << k, dtype=np.int64)
    out[0] = identity
    for j in range(k):
        lo = 1 << j
        out[lo : 2 * lo] = table[out[:lo], values[j]]
    return out


def downset_masks(down):
    """All nonempty masks closed downward, given ``down[i]`` = mask of the downset of i."""
    down = np.asarray(down, dtype=np.int64)
    n = down.shape[0]
    found = []
    for start in range(0, 1 << n, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, 1 << n), dtype=np.int64)
        ok = masks != 0
        for i in range(n):
            ok &= (((masks >> i) & 1) == 0) | ((masks & down[i]) == down[i])
        found.append(masks[ok])
    return np.concatenate(found)


def submasks(mask):
    bits = [i for i in range(int(mask).bit_length()) if (int(mask) >> i) & 1]
    out = np.zeros(1 << len(bits), dtype=np.int64)
    for j, b in enumerate(bits):
        lo = 1 << j
        out[lo : 2 * lo] = out[:lo] | (1 << b)
    return out


def closure_violation(ideal, dist, joins):
    """Least submask of ``ideal`` that is distributive with its join outside ``ideal``; -1 if none."""
    subs = submasks(ideal)
    bad = dist[subs] & (((int(ideal) >> joins[subs]) & 1) == 0)
    if not bad.any():
        return -1
    return int(subs[bad].min())


def distributive_flags(meet, join, joins, bottom):
    """flag[mask]: b ^ V(mask) == V{b ^ a : a in mask} for every b."""
    n = meet.shape[0]
    ok = np.ones(joins.shape[0], dtype=bool)
    for b in range(n):
        piecewise = subset_fold(join, meet[b, :], bottom)
        ok &= meet[b, joins] == piecewise
    return ok
