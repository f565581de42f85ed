"""Pure-numpy implementations of the hot loops.

Every function mirrors the signature of its counterpart in ``_numba``.
Witness-returning checks return ``-1`` entries when no violation exists.
"""
import numpy as np


def first_nonassociative(mul):
    n = mul.shape[0]
    for a in range(n):
        lhs = mul[mul[a, :], :]          # (ab)c indexed [b, c]
        rhs = mul[a, mul]                # a(bc)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            return a, int(b), int(c)
    return -1, -1, -1


def first_nondistributive(add, mul):
    n = mul.shape[0]
    for a in range(n):
        row = mul[a, :]
        lhs = row[add]                   # a(b+c)
        rhs = add[row[:, None], row[None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            return a, int(b), int(c)
    return -1, -1, -1


def first_action_nonassociative(rmul, act):
    nr = rmul.shape[0]
    for r in range(nr):
        lhs = act[rmul[r, :], :]         # (rs)m indexed [s, m]
        rhs = act[r, act]                # r(sm)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            s, m = bad[0]
            return r, int(s), int(m)
    return -1, -1, -1


def first_action_nondistributive(radd, madd, act):
    """Return (kind, a, b, c); kind 0 tests (r+s)m, kind 1 tests r(m+n)."""
    nr = radd.shape[0]
    for m in range(act.shape[1]):
        col = act[:, m]
        lhs = col[radd]
        rhs = madd[col[:, None], col[None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            r, s = bad[0]
            return 0, int(r), int(s), m
    for r in range(nr):
        row = act[r, :]
        lhs = row[madd]
        rhs = madd[row[:, None], row[None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            m, k = bad[0]
            return 1, r, int(m), int(k)
    return -1, -1, -1, -1


def span(add, start, gens):
    """Subgroup generated by ``gens`` over the subgroup marked in ``start``."""
    mask = start.copy()
    mask[0] = True
    gens = np.asarray(gens, dtype=np.int64)
    frontier = np.flatnonzero(mask)
    if gens.size == 0:
        return mask
    while frontier.size:
        cand = np.unique(add[np.ix_(frontier, gens)].ravel())
        cand = cand[~mask[cand]]
        mask[cand] = True
        frontier = cand
    return mask


def colon(act, target):
    return target[act].all(axis=1)


def power_hits(mul, elems, target):
    """For each element e, whether some power e^k (k >= 1) lies in target."""
    elems = np.asarray(elems, dtype=np.int64)
    cur = elems.copy()
    hit = target[cur].copy()
    for _ in range(mul.shape[0]):
        cur = mul[cur, elems]
        hit |= target[cur]
    return hit


def first_product_in(table, rows, cols, target):
    rows = np.asarray(rows, dtype=np.int64)
    cols = np.asarray(cols, dtype=np.int64)
    if rows.size == 0 or cols.size == 0:
        return -1, -1
    bad = np.argwhere(target[table[np.ix_(rows, cols)]])
    if bad.size:
        i, j = bad[0]
        return int(rows[i]), int(cols[j])
    return -1, -1
