"""Finite G-graded commutative rings and their graded ideals."""
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import bits as B
from . import kernels
from .errors import (BadUnity, GradingViolation, IllFormedConstants,
                     ImproperIdeal, InternalInconsistency, NonAssociative,
                     NonCommutative, NonDistributive, NonHomogeneousGenerator,
                     SizeCapExceeded)
from .group import FiniteGroup
from .lattice import (DEFAULT_CAP, GradedIdeal, canonical_generators, format_generated,
                      enumerate_closed, generated)

MAX_RING = 4096
MAX_GROUP = 16
EXHAUSTIVE_LIMIT = 512   # above this, axioms are checked on generator triples

ZERO_DEGREE = -1
MIXED_DEGREE = -2


class _GradedCarrier:
    """Shared additive bookkeeping for graded rings and modules."""

    def _init_additive(self, group, add, proj, labels, factors=None, coords=None):
        self.group = group
        self.add = add
        self.size = add.shape[0]
        self.proj = proj
        self.labels = tuple(labels)
        self.factors = factors
        self.coords = coords
        neg = np.argmax(add == 0, axis=1)
        self.neg = neg
        nonzero = proj != 0
        count = nonzero.sum(axis=1)
        degree = np.where(count == 0, ZERO_DEGREE,
                          np.where(count == 1, np.argmax(nonzero, axis=1), MIXED_DEGREE))
        self.degree = degree
        self.homogeneous = count <= 1
        self.hom_indices = np.flatnonzero(self.homogeneous)
        self.hom_nonzero = self.hom_indices[self.hom_indices != 0]
        self._memo = {}
        self.cap = DEFAULT_CAP
        for arr in (add, proj, neg, degree, self.homogeneous):
            arr.setflags(write=False)

    def label(self, i):
        return self.labels[int(i)]

    def component_tuple(self, i):
        """Per-component residue tuples (only for presented carriers)."""
        if self.coords is None:
            return None
        out = []
        for g in range(self.group.order):
            idx = [k for k, (h, _) in enumerate(self.factors) if h == g]
            out.append(tuple(int(c) for c in self.coords[i, idx]))
        return tuple(out)

    def memo(self, key, fn):
        try:
            return self._memo[key]
        except KeyError:
            val = self._memo[key] = fn()
            return val


def _presentation(group, components):
    factors = [(g, int(o)) for g in range(group.order) for o in components[g]]
    orders = np.array([o for _, o in factors], dtype=np.int64)
    n = int(np.prod(orders))
    strides = np.ones(len(orders), dtype=np.int64)
    for k in range(len(orders) - 2, -1, -1):
        strides[k] = strides[k + 1] * orders[k + 1]
    coords = np.array(np.unravel_index(np.arange(n), tuple(orders))).T.astype(np.int64)
    coords = coords.reshape(n, len(orders))
    return factors, orders, strides, coords


def _additive_tables(group, factors, orders, strides, coords):
    n = coords.shape[0]
    add = np.zeros((n, n), dtype=np.int64)
    for k in range(len(orders)):
        col = coords[:, k]
        add += ((col[:, None] + col[None, :]) % orders[k]) * strides[k]
    proj = np.zeros((n, group.order), dtype=np.int64)
    for g in range(group.order):
        sel = np.array([h == g for h, _ in factors])
        proj[:, g] = (coords * sel) @ strides
    return add, proj


def _labels(group, factors, coords):
    if len(factors) == 1:
        return [str(int(c[0])) for c in coords]
    per = [[k for k, (h, _) in enumerate(factors) if h == g] for g in range(group.order)]
    out = []
    for c in coords:
        parts = [",".join(str(int(c[k])) for k in idx) for idx in per]
        out.append("|".join(parts))
    return out


def _bilinear(coords, tensor, orders, strides, n_left=None):
    """Table of a bilinear map given on generator pairs (left x right)."""
    left = coords if n_left is None else n_left
    out = np.zeros((left.shape[0], coords.shape[0]), dtype=np.int64)
    for k in range(len(orders)):
        t = (left @ tensor[:, :, k] @ coords.T) % orders[k]
        out += t * strides[k]
    return out


@dataclass(frozen=True)
class RingDescription:
    """Ring presentation: cyclic component orders and generator-pair products.

    ``products`` maps ``(g, i, h, j)`` (generator i of R_g times generator j
    of R_h) to ``(k, coords)`` with coords a residue tuple in component R_k.
    Missing pairs multiply to zero; the transposed pair is filled in when
    only one orientation is given.
    """
    group: FiniteGroup
    components: tuple
    products: dict
    one: tuple


class GradedRing(_GradedCarrier):

    def __init__(self, group, add, mul, one, proj, labels, factors=None, coords=None):
        self._init_additive(group, add, proj, labels, factors, coords)
        self.mul = mul
        self.one = int(one)
        mul.setflags(write=False)

    def __repr__(self):
        return f"GradedRing(|G|={self.group.order}, |R|={self.size})"

    @cached_property
    def regular(self):
        from .module import GradedModule
        return GradedModule(self, self.add, self.mul, self.proj, self.labels,
                            self.factors, self.coords)

    @property
    def whole(self):
        return GradedIdeal(B.full(self.size))

    @property
    def zero_ideal(self):
        return GradedIdeal(1)

    def fmt(self, ideal):
        gens = canonical_generators(self.add, self.mul, self.hom_nonzero, ideal.bits)
        return format_generated(self.labels, gens)

    def is_unit(self, r):
        return bool((self.mul[r, :] == self.one).any())

    def power_in(self, r, target_bits):
        hit = kernels.power_hits(self.mul, [r], B.to_mask(target_bits, self.size))
        return bool(hit[0])


def validate_ring_tables(R, exhaustive_limit=EXHAUSTIVE_LIMIT, generators=None):
    """Check the ring axioms on a table-built ring; raise on the first failure."""
    mul, add = R.mul, R.add
    n = R.size
    bad = np.argwhere(mul != mul.T)
    if bad.size:
        a, b = (int(v) for v in bad[0])
        raise NonCommutative(f"{R.label(a)}*{R.label(b)} != {R.label(b)}*{R.label(a)}", (a, b))
    if n <= exhaustive_limit or generators is None:
        a, b, c = kernels.first_nonassociative(mul)
        if a >= 0:
            raise NonAssociative("multiplication is not associative", (int(a), int(b), int(c)))
        a, b, c = kernels.first_nondistributive(add, mul)
        if a >= 0:
            raise NonDistributive("multiplication does not distribute", (int(a), int(b), int(c)))
    else:
        # trilinear: associativity on generator triples implies it everywhere
        gen = np.asarray(generators, dtype=np.int64)
        lhs = mul[mul[np.ix_(gen, gen)][:, :, None], gen[None, None, :]]
        rhs = mul[gen[:, None, None], mul[np.ix_(gen, gen)][None, :, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            i, j, k = bad[0]
            raise NonAssociative("multiplication is not associative",
                                 (int(gen[i]), int(gen[j]), int(gen[k])))
    e = R.group.identity
    if R.proj[R.one, e] != R.one:
        raise BadUnity("unity does not lie in the identity component", (R.one,))
    row = mul[R.one, :]
    bad = np.flatnonzero(row != np.arange(n))
    if bad.size:
        raise BadUnity("unity is not a multiplicative identity", (R.one, int(bad[0])))
    hom = R.hom_nonzero
    cay = R.group.cayley
    for a in hom:
        prods = mul[a, hom]
        tgt = cay[R.degree[a], R.degree[hom]]
        ok = R.proj[prods, tgt] == prods
        if not ok.all():
            b = int(hom[np.argmin(ok)])
            raise GradingViolation("product leaves its graded component",
                                   (int(R.degree[a]), int(R.degree[b]), int(a), int(b)))


def validate_graded_ring(desc, max_size=MAX_RING, max_group=MAX_GROUP,
                         exhaustive_limit=EXHAUSTIVE_LIMIT):
    """Build a GradedRing from a presentation and verify every axiom."""
    G = desc.group
    if G.order > max_group:
        raise SizeCapExceeded(f"|G|={G.order} exceeds cap {max_group}")
    if len(desc.components) != G.order:
        raise IllFormedConstants("one component per group element is required")
    for g, comp in enumerate(desc.components):
        if len(comp) == 0 or any(int(o) < 1 for o in comp):
            raise IllFormedConstants(f"component {g} needs cyclic orders >= 1", (g,))
    factors, orders, strides, coords = _presentation(G, desc.components)
    n = coords.shape[0]
    if n > max_size:
        raise SizeCapExceeded(f"|R|={n} exceeds cap {max_size}")
    offset = {}
    for k, (g, _) in enumerate(factors):
        offset.setdefault(g, k)
    d = len(factors)
    tensor = np.zeros((d, d, d), dtype=np.int64)
    given = set()

    def place(g, i, h, j, k, res):
        if k != G.op(g, h):
            raise GradingViolation(
                f"R_{g}*R_{h} must land in R_{G.op(g, h)}, not R_{k}", (g, h, k))
        if i >= len(desc.components[g]) or j >= len(desc.components[h]):
            raise IllFormedConstants(f"generator index out of range for R_{g}*R_{h}", (g, h))
        if len(res) != len(desc.components[k]):
            raise IllFormedConstants(f"product tuple has wrong length for R_{k}", (g, h, k))
        a, b = offset[g] + i, offset[h] + j
        vec = np.zeros(d, dtype=np.int64)
        for t, v in enumerate(res):
            vec[offset[k] + t] = int(v) % orders[offset[k] + t]
        for src in (a, b):
            if np.any((orders[src] * vec) % orders != 0):
                raise IllFormedConstants(
                    f"product of generators ({g},{i})*({h},{j}) is incompatible "
                    f"with generator order {orders[src]}", (g, h, k))
        tensor[a, b] = vec

    for (g, i, h, j), (k, res) in sorted(desc.products.items()):
        place(g, i, h, j, k, res)
        given.add((offset[g] + i, offset[h] + j))
    for (g, i, h, j), (k, res) in sorted(desc.products.items()):
        if (offset[h] + j, offset[g] + i) not in given:
            place(h, j, g, i, k, res)
    add, proj = _additive_tables(G, factors, orders, strides, coords)
    mul = _bilinear(coords, tensor, orders, strides)
    og, ores = desc.one
    if og != G.identity:
        raise BadUnity(f"unity must lie in R_{G.identity}, given in R_{og}", (og,))
    if len(ores) != len(desc.components[og]):
        raise IllFormedConstants("unity tuple has wrong length")
    ucoords = np.zeros(d, dtype=np.int64)
    for t, v in enumerate(ores):
        ucoords[offset[og] + t] = int(v) % orders[offset[og] + t]
    one = int(ucoords @ strides)
    R = GradedRing(G, add, mul, one, proj, _labels(G, factors, coords), factors, coords)
    gens = [int(strides[k]) for k in range(d) if orders[k] > 1]
    validate_ring_tables(R, exhaustive_limit, generators=gens)
    return R


# ---------------------------------------------------------------- ideals

def homogeneous_elements(R):
    return [int(i) for i in R.hom_indices]


def ideal_generated_by(R, gens):
    gens = [int(g) for g in gens]
    for g in gens:
        if not R.homogeneous[g]:
            raise NonHomogeneousGenerator(f"{R.label(g)} is not homogeneous")
    mask = generated(R.add, R.mul, gens)
    return GradedIdeal(B.from_mask(mask), tuple(gens))


def enumerate_graded_ideals(R, cap=None):
    cap = R.cap if cap is None else cap
    return R.memo(("ideals", cap), lambda: [
        GradedIdeal(b) for b in enumerate_closed(R.add, R.mul, R.hom_nonzero, cap)])


def ideal_sum(R, I, J):
    from .lattice import add_bits
    return GradedIdeal(add_bits(R.add, I.bits, J.bits, R.size))


def ideal_intersection(I, J):
    return GradedIdeal(I.bits & J.bits)


def graded_radical(R, I):
    """Gr(I): elements all of whose homogeneous components have a power in I."""
    def compute():
        target = B.to_mask(I.bits, R.size)
        hit = np.zeros(R.size, dtype=bool)
        hit[R.hom_indices] = kernels.power_hits(R.mul, R.hom_indices, target)
        hit[0] = True
        return GradedIdeal(B.from_mask(hit[R.proj].all(axis=1)))
    return R.memo(("radical", I.bits), compute)


def _is_prime_bits(R, bits):
    if bits == B.full(R.size):
        return False
    inside = B.to_mask(bits, R.size)
    outside = R.hom_indices[~inside[R.hom_indices]]
    a, _ = kernels.first_product_in(R.mul, outside, outside, inside)
    return a < 0


def is_graded_prime(R, I):
    return R.memo(("prime", I.bits), lambda: _is_prime_bits(R, I.bits))


@dataclass(frozen=True)
class IdealClass:
    proper: bool
    graded_prime: bool
    graded_quasi_primary: bool
    graded_maximal: bool


def classify_graded_ideal(R, I):
    def compute():
        proper = I.bits != B.full(R.size)
        if not proper:
            return IdealClass(False, False, False, False)
        prime = is_graded_prime(R, I)
        rad = graded_radical(R, I)
        inside = B.to_mask(I.bits, R.size)
        rmask = B.to_mask(rad.bits, R.size)
        outside = R.hom_indices[~rmask[R.hom_indices]]
        a, _ = kernels.first_product_in(R.mul, outside, outside, inside)
        qp = a < 0
        if qp != is_graded_prime(R, rad):
            raise InternalInconsistency(
                f"quasi-primary routes disagree on {R.fmt(I)}")
        maximal = not any(I < J < R.whole for J in enumerate_graded_ideals(R))
        return IdealClass(proper, prime, qp, maximal)
    return R.memo(("classify", I.bits), compute)


def graded_prime_ideals(R):
    return R.memo("primes", lambda: [I for I in enumerate_graded_ideals(R)
                                     if is_graded_prime(R, I)])


def graded_maximal_ideals(R):
    return [I for I in enumerate_graded_ideals(R) if classify_graded_ideal(R, I).graded_maximal]


def minimal_elements(ideals):
    return [I for I in ideals if not any(J < I for J in ideals)]


def quotient_ring(R, I, allow_improper=False):
    """R/I with its induced grading, plus the projection array r -> coset index."""
    if I.bits == B.full(R.size) and not allow_improper:
        raise ImproperIdeal("cannot form the quotient by the whole ring")
    members = np.asarray(I.elements(), dtype=np.int64)
    rep_of = R.add[:, members].min(axis=1)       # least representative of r + I
    reps, proj = np.unique(rep_of, return_inverse=True)
    proj = proj.astype(np.int64)
    add = proj[R.add[np.ix_(reps, reps)]]
    mul = proj[R.mul[np.ix_(reps, reps)]]
    comp = proj[R.proj[reps, :]]
    Rbar = GradedRing(R.group, add, mul, proj[R.one], comp,
                      [R.label(r) for r in reps])
    return Rbar, proj


def image_ideal(Rbar, proj, I):
    return GradedIdeal(B.from_indices(np.unique(proj[I.elements()])))


def preimage_ideal(proj, Ibar):
    mask = B.to_mask(Ibar.bits, int(proj.max()) + 1)[proj]
    return GradedIdeal(B.from_mask(mask))
