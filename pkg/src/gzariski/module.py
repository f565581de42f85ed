"""Finite graded modules, graded submodules, colons and radicals."""
from dataclasses import dataclass

import numpy as np

from . import bits as B
from . import kernels
from .errors import (ActionNotAssociative, ActionNotDistributive,
                     GradingViolation, IllFormedConstants,
                     NonHomogeneousGenerator, NotUnital, SizeCapExceeded)
from .lattice import (DEFAULT_CAP, GradedIdeal, GradedSubmodule,
                      canonical_generators, enumerate_closed,
                      format_generated, generated)
from .ring import (EXHAUSTIVE_LIMIT, MAX_RING, _additive_tables, _bilinear,
                   _GradedCarrier, _labels, _presentation, graded_prime_ideals,
                   graded_radical, ideal_sum)


class GradedModule(_GradedCarrier):

    def __init__(self, ring, add, act, proj, labels, factors=None, coords=None):
        self._init_additive(ring.group, add, proj, labels, factors, coords)
        self.ring = ring
        self.act = act
        act.setflags(write=False)

    def __repr__(self):
        return f"GradedModule(|R|={self.ring.size}, |M|={self.size})"

    @property
    def whole(self):
        return GradedSubmodule(B.full(self.size))

    @property
    def zero(self):
        return GradedSubmodule(1)

    @property
    def is_zero_module(self):
        return self.size == 1

    def fmt(self, sub):
        gens = canonical_generators(self.add, self.act, self.hom_nonzero, sub.bits)
        return format_generated(self.labels, gens)


@dataclass(frozen=True)
class ModuleDescription:
    """Module presentation over a validated ring.

    ``actions`` maps ``(g, i, h, j)`` (ring generator i of R_g acting on module
    generator j of M_h) to ``(k, coords)`` in M_k.  ``regular=True`` means M=R.
    """
    components: tuple = ()
    actions: dict = None
    regular: bool = False


def validate_module_tables(M, exhaustive_limit=EXHAUSTIVE_LIMIT):
    R = M.ring
    nr, nm = R.size, M.size
    if nr * nr * nm <= exhaustive_limit ** 3:
        r, s, m = kernels.first_action_nonassociative(R.mul, M.act)
        if r >= 0:
            raise ActionNotAssociative("(rs)m != r(sm)", (int(r), int(s), int(m)))
        kind, a, b, c = kernels.first_action_nondistributive(R.add, M.add, M.act)
        if kind >= 0:
            raise ActionNotDistributive("action is not biadditive", (int(a), int(b), int(c)))
    row = M.act[R.one, :]
    bad = np.flatnonzero(row != np.arange(nm))
    if bad.size:
        raise NotUnital("1*m != m", (R.one, int(bad[0])))
    cay = R.group.cayley
    for a in R.hom_nonzero:
        prods = M.act[a, M.hom_nonzero]
        tgt = cay[R.degree[a], M.degree[M.hom_nonzero]]
        ok = M.proj[prods, tgt] == prods
        if not ok.all():
            m = int(M.hom_nonzero[np.argmin(ok)])
            raise GradingViolation("R_g M_h is not inside M_gh",
                                   (int(R.degree[a]), int(M.degree[m]), int(a), int(m)))


def validate_graded_module(R, desc, max_size=MAX_RING, exhaustive_limit=EXHAUSTIVE_LIMIT):
    if desc.regular:
        M = R.regular
        validate_module_tables(M, exhaustive_limit)
        return M
    G = R.group
    if len(desc.components) != G.order:
        raise IllFormedConstants("one module component per group element is required")
    for g, comp in enumerate(desc.components):
        if len(comp) == 0 or any(int(o) < 1 for o in comp):
            raise IllFormedConstants(f"module component {g} needs cyclic orders >= 1", (g,))
    factors, orders, strides, coords = _presentation(G, desc.components)
    nm = coords.shape[0]
    if nm > max_size:
        raise SizeCapExceeded(f"|M|={nm} exceeds cap {max_size}")
    rf = R.factors
    if rf is None:
        raise IllFormedConstants("ring has no presentation to act through")
    r_offset, m_offset = {}, {}
    for k, (g, _) in enumerate(rf):
        r_offset.setdefault(g, k)
    for k, (g, _) in enumerate(factors):
        m_offset.setdefault(g, k)
    r_orders = np.array([o for _, o in rf], dtype=np.int64)
    tensor = np.zeros((len(rf), len(factors), len(factors)), dtype=np.int64)
    for (g, i, h, j), (k, res) in sorted((desc.actions or {}).items()):
        if k != G.op(g, h):
            raise GradingViolation(
                f"R_{g}*M_{h} must land in M_{G.op(g, h)}, not M_{k}", (g, h, k))
        if i >= len(R.component_tuple(0)[g]) or j >= len(desc.components[h]):
            raise IllFormedConstants(f"generator index out of range for R_{g}*M_{h}", (g, h))
        if len(res) != len(desc.components[k]):
            raise IllFormedConstants(f"action tuple has wrong length for M_{k}", (g, h, k))
        vec = np.zeros(len(factors), dtype=np.int64)
        for t, v in enumerate(res):
            vec[m_offset[k] + t] = int(v) % orders[m_offset[k] + t]
        a, b = r_offset[g] + i, m_offset[h] + j
        if np.any((r_orders[a] * vec) % orders != 0) or np.any((orders[b] * vec) % orders != 0):
            raise IllFormedConstants(
                f"action of ({g},{i}) on ({h},{j}) is incompatible with generator orders",
                (g, h, k))
        tensor[a, b] = vec
    add, proj = _additive_tables(G, factors, orders, strides, coords)
    act = _bilinear(coords, tensor, orders, strides, n_left=R.coords)
    M = GradedModule(R, add, act, proj, _labels(G, factors, coords), factors, coords)
    validate_module_tables(M, exhaustive_limit)
    return M


# ------------------------------------------------------------ submodules

def submodule_generated_by(M, gens):
    gens = [int(g) for g in gens]
    for g in gens:
        if not M.homogeneous[g]:
            raise NonHomogeneousGenerator(f"{M.label(g)} is not homogeneous")
    return GradedSubmodule(B.from_mask(generated(M.add, M.act, gens)), tuple(gens))


def enumerate_graded_submodules(M, cap=None):
    cap = M.cap if cap is None else cap
    return M.memo(("subs", cap), lambda: [
        GradedSubmodule(b) for b in enumerate_closed(M.add, M.act, M.hom_nonzero, cap)])


def colon_ideal(M, K):
    """(K :_R M) = {r in R : rM in K}."""
    return M.memo(("colon", K.bits), lambda: GradedIdeal(
        B.from_mask(kernels.colon(M.act, B.to_mask(K.bits, M.size)))))


def annihilator(M):
    return colon_ideal(M, M.zero)


def ideal_times_module(I, M):
    gens = [r for r in I.elements() if M.ring.homogeneous[r]]
    prods = np.unique(M.act[np.asarray(gens, dtype=np.int64)][:, M.hom_indices].ravel())
    zero = np.zeros(M.size, dtype=bool)
    zero[0] = True
    return GradedSubmodule(B.from_mask(kernels.span(M.add, zero, prods)))


def submodule_sum(M, K, L):
    from .lattice import add_bits
    return GradedSubmodule(add_bits(M.add, K.bits, L.bits, M.size))


def radical_of_colon(M, K):
    return graded_radical(M.ring, colon_ideal(M, K))


def is_graded_prime_submodule(M, K):
    def compute():
        if K.bits == B.full(M.size):
            return False
        R = M.ring
        cmask = B.to_mask(colon_ideal(M, K).bits, R.size)
        kmask = B.to_mask(K.bits, M.size)
        rows = R.hom_indices[~cmask[R.hom_indices]]
        cols = M.hom_indices[~kmask[M.hom_indices]]
        r, _ = kernels.first_product_in(M.act, rows, cols, kmask)
        return r < 0
    return M.memo(("prime", K.bits), compute)


def graded_prime_submodules(M):
    return M.memo("primes", lambda: [K for K in enumerate_graded_submodules(M)
                                     if is_graded_prime_submodule(M, K)])


def graded_submodule_radical(M, K):
    """Gr_M(K): intersection of the graded prime submodules over K, else M."""
    def compute():
        acc = B.full(M.size)
        for P in graded_prime_submodules(M):
            if K <= P:
                acc &= P.bits
        return GradedSubmodule(acc)
    return M.memo(("radical", K.bits), compute)


def satisfies_primeful(M, K):
    """Every graded prime p over (K:M) is (P:M) for a graded prime P over K."""
    def compute():
        c = colon_ideal(M, K)
        colons = {colon_ideal(M, P).bits for P in graded_prime_submodules(M) if K <= P}
        return all(p.bits in colons for p in graded_prime_ideals(M.ring) if c <= p)
    return M.memo(("primeful", K.bits), compute)


def is_graded_quasi_primary_submodule(M, K):
    def compute():
        if K.bits == B.full(M.size):
            return False
        R = M.ring
        rad = B.to_mask(radical_of_colon(M, K).bits, R.size)
        mrad = B.to_mask(graded_submodule_radical(M, K).bits, M.size)
        kmask = B.to_mask(K.bits, M.size)
        rows = R.hom_indices[~rad[R.hom_indices]]
        cols = M.hom_indices[~mrad[M.hom_indices]]
        r, _ = kernels.first_product_in(M.act, rows, cols, kmask)
        return r < 0
    return M.memo(("qp", K.bits), compute)


@dataclass(frozen=True)
class SubmoduleClass:
    proper: bool
    graded_prime: bool
    graded_quasi_primary: bool
    graded_primeful: bool
    maximal: bool
    in_qp_spec: bool


def classify_graded_submodule(M, K, require_primeful=True):
    proper = K.bits != B.full(M.size)
    prime = is_graded_prime_submodule(M, K)
    qp = is_graded_quasi_primary_submodule(M, K)
    primeful = satisfies_primeful(M, K)
    maximal = proper and not any(K < L < M.whole for L in enumerate_graded_submodules(M))
    in_spec = proper and qp and (primeful or not require_primeful)
    return SubmoduleClass(proper, prime, qp, primeful, maximal, in_spec)


def is_multiplication_module(M):
    def compute():
        for K in enumerate_graded_submodules(M):
            if ideal_times_module(colon_ideal(M, K), M) != K:
                return False
        return True
    return M.memo("multiplication", compute)


def graded_maximal_submodules(M):
    subs = enumerate_graded_submodules(M)
    return [K for K in subs if K != M.whole
            and not any(K < L < M.whole for L in subs)]


def is_graded_primeful_module(M):
    return M.is_zero_module or satisfies_primeful(M, M.zero)


__all__ = [
    "GradedModule", "ModuleDescription", "validate_graded_module",
    "submodule_generated_by", "enumerate_graded_submodules", "colon_ideal",
    "annihilator", "ideal_times_module", "submodule_sum", "radical_of_colon",
    "is_graded_prime_submodule", "graded_prime_submodules",
    "graded_submodule_radical", "satisfies_primeful",
    "is_graded_quasi_primary_submodule", "SubmoduleClass",
    "classify_graded_submodule", "is_multiplication_module",
    "graded_maximal_submodules", "is_graded_primeful_module", "ideal_sum",
]
