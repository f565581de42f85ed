"""Brute-force reference implementation used only by the tests.

Works on plain Python lists and frozensets.  It shares no code with the
library beyond reading the validated tables, so agreement between the two
is meaningful.  Everything here is exponential and only meant for carriers
of at most a few dozen elements.
"""
from itertools import combinations


class Tables:
    """Plain-list copy of a ring (or module) so the oracle never touches numpy."""

    def __init__(self, carrier, act):
        self.n = carrier.size
        self.add = carrier.add.tolist()
        self.act = act.tolist()
        self.proj = carrier.proj.tolist()
        self.groups = carrier.proj.shape[1]
        # homogeneous = at most one nonzero component, recomputed from proj
        self.hom = [sum(1 for c in row if c != 0) <= 1 for row in self.proj]


def ring_tables(R):
    return Tables(R, R.mul)


def module_tables(M):
    return Tables(M, M.act)


def _close_add(add, elems):
    s = set(elems) | {0}
    while True:
        new = {add[a][b] for a in s for b in s} - s
        if not new:
            return frozenset(s)
        s |= new


def additive_subgroups(add):
    """Every subgroup of a finite abelian group given by its addition table."""
    n = len(add)
    start = frozenset({0})
    seen = {start}
    stack = [start]
    while stack:
        h = stack.pop()
        for x in range(n):
            if x in h:
                continue
            k = _close_add(add, h | {x})
            if k not in seen:
                seen.add(k)
                stack.append(k)
    return seen


def _is_sub(t, ring_size, h):
    return all(t.act[r][m] in h for r in range(ring_size) for m in h)


def _is_graded(t, h):
    return all(t.proj[x][g] in h for x in h for g in range(t.groups))


def graded_substructures(t, ring_size):
    subs = [h for h in additive_subgroups(t.add) if _is_sub(t, ring_size, h) and _is_graded(t, h)]
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def graded_ideals(R):
    t = ring_tables(R)
    return graded_substructures(t, t.n)


def graded_submodules(M):
    return graded_substructures(module_tables(M), M.ring.size)


# ------------------------------------------------------------ ring side

def radical(R, ideal):
    t = ring_tables(R)
    mul = R.mul.tolist()

    def some_power_in(x):
        p = x
        for _ in range(t.n + 1):
            if p in ideal:
                return True
            p = mul[p][x]
        return False

    return frozenset(x for x in range(t.n)
                     if all(some_power_in(t.proj[x][g]) for g in range(t.groups)))


def is_prime_ideal(R, ideal):
    t = ring_tables(R)
    if len(ideal) == t.n:
        return False
    mul = R.mul.tolist()
    out = [a for a in range(t.n) if t.hom[a] and a not in ideal]
    return all(mul[a][b] not in ideal for a in out for b in out)


def is_qp_ideal(R, ideal):
    return len(ideal) < R.size and is_prime_ideal(R, radical(R, ideal))


# ------------------------------------------------------------ module side

def colon(M, K):
    act = M.act.tolist()
    return frozenset(r for r in range(M.ring.size) if all(act[r][m] in K for m in range(M.size)))


def is_prime_submodule(M, K):
    if len(K) == M.size:
        return False
    rt, mt = ring_tables(M.ring), module_tables(M)
    c = colon(M, K)
    for r in range(rt.n):
        if not rt.hom[r] or r in c:
            continue
        for m in range(mt.n):
            if mt.hom[m] and m not in K and mt.act[r][m] in K:
                return False
    return True


def prime_submodules(M, subs):
    return [K for K in subs if is_prime_submodule(M, K)]


def module_radical(M, K, subs):
    acc = frozenset(range(M.size))
    for P in prime_submodules(M, subs):
        if K <= P:
            acc &= P
    return acc


def is_qp_submodule(M, K, subs):
    if len(K) == M.size:
        return False
    rt, mt = ring_tables(M.ring), module_tables(M)
    rc = radical(M.ring, colon(M, K))
    rm = module_radical(M, K, subs)
    for r in range(rt.n):
        if not rt.hom[r] or r in rc:
            continue
        for m in range(mt.n):
            if mt.hom[m] and m not in rm and mt.act[r][m] in K:
                return False
    return True


def satisfies_primeful(M, K, subs, ideals):
    c = colon(M, K)
    realized = {colon(M, P) for P in prime_submodules(M, subs) if K <= P}
    return all(p in realized for p in ideals if is_prime_ideal(M.ring, p) and c <= p)


def qp_spectrum(M):
    subs = graded_submodules(M)
    ideals = graded_ideals(M.ring)
    return [K for K in subs
            if is_qp_submodule(M, K, subs) and satisfies_primeful(M, K, subs, ideals)]


def qp_closed_family(M, points):
    """All varieties of all graded submodules, as frozensets of point indices."""
    rad = [radical(M.ring, colon(M, Q)) for Q in points]
    fam = set()
    for K in graded_submodules(M):
        rk = radical(M.ring, colon(M, K))
        fam.add(frozenset(i for i, r in enumerate(rad) if rk <= r))
    return fam


# ------------------------------------------------------------ topology

def closure(family, n, Y):
    acc = frozenset(range(n))
    for c in family:
        if Y <= c:
            acc &= c
    return acc


def is_t0(family, n):
    """For each pair some open set holds exactly one of them."""
    opens = [frozenset(range(n)) - c for c in family]
    for a, b in combinations(range(n), 2):
        if not any((a in u) != (b in u) for u in opens):
            return False
    return True


def is_connected(family, n):
    full = frozenset(range(n))
    return not any(c and c != full and (full - c) in family for c in family)


def is_irreducible(family, n, A):
    """Nonempty and any two nonempty relatively open subsets of A meet."""
    if not A:
        return False
    rel = {(frozenset(range(n)) - c) & A for c in family}
    rel = [u for u in rel if u]
    return all(u & v for u in rel for v in rel)


def all_subsets(n):
    for mask in range(1 << n):
        yield frozenset(i for i in range(n) if mask >> i & 1)


def to_bits(s):
    out = 0
    for i in s:
        out |= 1 << i
    return out
