"""numba-compiled implementations of the hot loops (see ``_numpy``)."""
import numpy as np
from numba import njit


@njit(cache=True)
def first_nonassociative(mul):
    n = mul.shape[0]
    for a in range(n):
        for b in range(n):
            ab = mul[a, b]
            for c in range(n):
                if mul[ab, c] != mul[a, mul[b, c]]:
                    return a, b, c
    return -1, -1, -1


@njit(cache=True)
def first_nondistributive(add, mul):
    n = mul.shape[0]
    for a in range(n):
        for b in range(n):
            ab = mul[a, b]
            for c in range(n):
                if mul[a, add[b, c]] != add[ab, mul[a, c]]:
                    return a, b, c
    return -1, -1, -1


@njit(cache=True)
def first_action_nonassociative(rmul, act):
    nr = rmul.shape[0]
    nm = act.shape[1]
    for r in range(nr):
        for s in range(nr):
            rs = rmul[r, s]
            for m in range(nm):
                if act[rs, m] != act[r, act[s, m]]:
                    return r, s, m
    return -1, -1, -1


@njit(cache=True)
def first_action_nondistributive(radd, madd, act):
    nr = radd.shape[0]
    nm = madd.shape[0]
    for m in range(nm):
        for r in range(nr):
            for s in range(nr):
                if act[radd[r, s], m] != madd[act[r, m], act[s, m]]:
                    return 0, r, s, m
    for r in range(nr):
        for m in range(nm):
            for k in range(nm):
                if act[r, madd[m, k]] != madd[act[r, m], act[r, k]]:
                    return 1, r, m, k
    return -1, -1, -1, -1


@njit(cache=True)
def _span(add, start, gens):
    n = add.shape[0]
    mask = start.copy()
    mask[0] = True
    queue = np.empty(n, np.int64)
    tail = 0
    for i in range(n):
        if mask[i]:
            queue[tail] = i
            tail += 1
    head = 0
    while head < tail:
        x = queue[head]
        head += 1
        for j in range(gens.shape[0]):
            y = add[x, gens[j]]
            if not mask[y]:
                mask[y] = True
                queue[tail] = y
                tail += 1
    return mask


def span(add, start, gens):
    return _span(add, start, np.asarray(gens, dtype=np.int64))


@njit(cache=True)
def colon(act, target):
    nr, nm = act.shape
    out = np.ones(nr, np.bool_)
    for r in range(nr):
        for m in range(nm):
            if not target[act[r, m]]:
                out[r] = False
                break
    return out


@njit(cache=True)
def _power_hits(mul, elems, target):
    n = mul.shape[0]
    seen = np.full(n, -1, np.int64)
    out = np.zeros(elems.shape[0], np.bool_)
    for i in range(elems.shape[0]):
        e = elems[i]
        x = e
        while True:
            if target[x]:
                out[i] = True
                break
            if seen[x] == i:
                break
            seen[x] = i
            x = mul[x, e]
    return out


def power_hits(mul, elems, target):
    return _power_hits(mul, np.asarray(elems, dtype=np.int64), target)


@njit(cache=True)
def _first_product_in(table, rows, cols, target):
    for i in range(rows.shape[0]):
        r = rows[i]
        for j in range(cols.shape[0]):
            if target[table[r, cols[j]]]:
                return r, cols[j]
    return -1, -1


def first_product_in(table, rows, cols, target):
    r, c = _first_product_in(table, np.asarray(rows, dtype=np.int64),
                             np.asarray(cols, dtype=np.int64), target)
    return int(r), int(c)
