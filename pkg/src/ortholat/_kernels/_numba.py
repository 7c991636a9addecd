"""numba-compiled kernels; same contracts as ``_numpy.py``."""
import numpy as np
from numba import njit


@njit(cache=True)
def _closure(reach):
    n = reach.shape[0]
    for i in range(n):
        reach[i, i] = True
    for k in range(n):
        for i in range(n):
            if reach[i, k]:
                for j in range(n):
                    if reach[k, j]:
                        reach[i, j] = True
    return reach


def transitive_closure(adj):
    return _closure(np.array(adj, dtype=np.bool_, copy=True))


@njit(cache=True)
def _bound_table(below):
    n = below.shape[0]
    table = np.full((n, n), -1, dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            for x in range(n):
                if not (below[x, i] and below[x, j]):
                    continue
                greatest = True
                for y in range(n):
                    if below[y, i] and below[y, j] and not below[y, x]:
                        greatest = False
                        break
                if greatest:
                    table[i, j] = x
                    table[j, i] = x
                    break
    return table


def bound_tables(leq):
    leq = np.ascontiguousarray(leq, dtype=np.bool_)
    return _bound_table(leq), _bound_table(np.ascontiguousarray(leq.T))


@njit(cache=True)
def _subset_fold(table, values, identity):
    k = values.shape[0]
    out = np.empty(1 << k, dtype=np.int64)
    out[0] = identity
    for j in range(k):
        lo = 1 << j
        v = values[j]
        for m in range(lo):
            out[lo + m] = table[out[m], v]
    return out


def subset_fold(table, values, identity):
    return _subset_fold(
        np.ascontiguousarray(table, dtype=np.int64),
        np.ascontiguousarray(values, dtype=np.int64),
        np.int64(identity),
    )


@njit(cache=True)
def _downset_masks(down):
    n = down.shape[0]
    total = np.int64(1) << n
    keep = np.zeros(total, dtype=np.bool_)
    count = 0
    for mask in range(1, total):
        ok = True
        for i in range(n):
            if (mask >> i) & 1 and (mask & down[i]) != down[i]:
                ok = False
                break
        if ok:
            keep[mask] = True
            count += 1
    out = np.empty(count, dtype=np.int64)
    c = 0
    for mask in range(1, total):
        if keep[mask]:
            out[c] = mask
            c += 1
    return out


def downset_masks(down):
    return _downset_masks(np.ascontiguousarray(down, dtype=np.int64))


@njit(cache=True)
def _closure_violation(ideal, dist, joins):
    best = -1
    sub = ideal
    while True:
        if dist[sub] and ((ideal >> joins[sub]) & 1) == 0:
            if best < 0 or sub < best:
                best = sub
        if sub == 0:
            break
        sub = (sub - 1) & ideal
    return best


def closure_violation(ideal, dist, joins):
    return int(_closure_violation(np.int64(ideal), dist, joins))


@njit(cache=True)
def _distributive_flags(meet, join, joins, bottom):
    n = meet.shape[0]
    total = joins.shape[0]
    k = 0
    while (1 << k) < total:
        k += 1
    ok = np.ones(total, dtype=np.bool_)
    piece = np.empty(total, dtype=np.int64)
    for b in range(n):
        piece[0] = bottom
        for j in range(k):
            lo = 1 << j
            v = meet[b, j]
            for m in range(lo):
                piece[lo + m] = join[piece[m], v]
        for mask in range(total):
            if ok[mask] and meet[b, joins[mask]] != piece[mask]:
                ok[mask] = False
    return ok


def distributive_flags(meet, join, joins, bottom):
    return _distributive_flags(
        np.ascontiguousarray(meet, dtype=np.int64),
        np.ascontiguousarray(join, dtype=np.int64),
        np.ascontiguousarray(joins, dtype=np.int64),
        np.int64(bottom),
    )

