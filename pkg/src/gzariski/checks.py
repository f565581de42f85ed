"""Executable statements about quasi-Zariski topologies, one check per claim.

Every check recomputes both sides of its claim from the primitives in the
spectrum and map modules and compares them.  Implications whose hypothesis
fails on an instance come back SKIPPED instead of vacuously passing.
"""
import random
import re
import time
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from . import bits as B
from .instance import build
from .lattice import GradedIdeal
from .maps import map_profile, module_profile, natural_maps
from .module import (annihilator, classify_graded_submodule, colon_ideal,
                     enumerate_graded_submodules, graded_maximal_submodules,
                     graded_submodule_radical, ideal_times_module,
                     is_graded_prime_submodule, is_graded_quasi_primary_submodule,
                     is_multiplication_module, radical_of_colon, satisfies_primeful)
from .ring import (enumerate_graded_ideals, graded_prime_ideals, graded_radical,
                   ideal_sum, is_graded_prime, minimal_elements)
from .spectrum import (build_spectrum, build_topology, closure, finite_subcover,
                       generic_points, intersection_of_points, irreducible_components,
                       is_connected, is_irreducible, is_quasi_compact, is_t0, is_t1,
                       longest_chain, principal_seed, quasi_compact_opens, topology_profile,
                       variety, zqp_radical)

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"
EXHAUSTIVE_SUBSETS = 12
SAMPLE_SEED = 20251
SAMPLE_SIZE = 2048


@dataclass(frozen=True)
class CheckResult:
    id: str
    instance: str
    status: str
    witness: str = None
    note: str = None
    seconds: float = field(default=0.0, compare=False)


@dataclass
class CheckReport:
    instance: str
    results: list

    @property
    def failed(self):
        return [r for r in self.results if r.status == FAIL]


def id_key(cid):
    m = re.match(r"([A-Z]+)([\d.]+)$", cid)
    return tuple(int(x) for x in m.group(2).split(".")), m.group(1)


class Outcome(Exception):
    """Raised inside a check to stop with a non-PASS status."""

    def __init__(self, status, witness=None, note=None):
        super().__init__(status)
        self.status, self.witness, self.note = status, witness, note


def fail(witness=None, note=None):
    raise Outcome(FAIL, witness, note)


def skip(hypothesis):
    raise Outcome(SKIPPED, None, f"hypothesis:{hypothesis}")


def tup(*parts):
    return "(" + ",".join(parts) + ")"


def flags(*vals):
    return ",".join("T" if v else "F" for v in vals)


class Context:
    """Lazily computed objects shared by the checks of one instance."""

    def __init__(self, desc, semantics=None, cache=None):
        self.desc = desc
        self.name = desc.name
        self.semantics = semantics or desc.option("semantics", "radical")
        self.require_primeful = desc.option("primeful", "required") == "required"
        self.R, self.M = build(desc)
        if cache is not None:
            cache.prime(desc, self.R, self.M)

    @property
    def alt_semantics(self):
        return "containment" if self.semantics == "radical" else "radical"

    @cached_property
    def nm(self):
        return natural_maps(self.R, self.M, self.semantics, self.require_primeful)

    @property
    def X(self):
        return self.nm.qp_module

    @property
    def S(self):
        return self.X.space

    @cached_property
    def subs(self):
        return enumerate_graded_submodules(self.M)

    @cached_property
    def ideals(self):
        return enumerate_graded_ideals(self.R)

    @cached_property
    def ideals_over_ann(self):
        return [I for I in self.ideals if self.nm.ann <= I]

    @cached_property
    def hom_ring(self):
        return [int(r) for r in self.R.hom_indices]

    @cached_property
    def profile(self):
        return topology_profile(self.X)

    @cached_property
    def mprofile(self):
        return module_profile(self.nm, self.semantics)

    @cached_property
    def phi_profile(self):
        return map_profile(self.nm.phi)

    @cached_property
    def psi_q_surjective(self):
        return map_profile(self.nm.psi_q).surjective

    @cached_property
    def multiplication(self):
        return is_multiplication_module(self.M)

    def V(self, K):
        return variety(self.S, K)

    def fmt(self, K):
        return self.M.fmt(K)

    def fmt_ideal(self, I):
        return self.R.fmt(I)

    def fmt_pts(self, sbits):
        return self.S.fmt_subset(sbits)

    def gx(self, r):
        return self.S.full & ~self.V(principal_seed(self.S, r))

    def subsets(self, n):
        """All subsets when small, else a seeded sample; returns (iterable, note)."""
        if n <= EXHAUSTIVE_SUBSETS:
            return range(1 << n), None
        rng = random.Random(SAMPLE_SEED)
        full = B.full(n)
        picks = {0, full} | {1 << i for i in range(n)}
        while len(picks) < SAMPLE_SIZE:
            picks.add(rng.getrandbits(n))
        return sorted(picks), f"sample:seed={SAMPLE_SEED},size={SAMPLE_SIZE}"

    def ring_qp_topology(self, semantics):
        return build_topology(build_spectrum(self.R, None, "qpspec_ring"), semantics)

    @cached_property
    def spec_ring(self):
        return build_topology(build_spectrum(self.R, None, "spec_ring"))


CHECKS = {}


def check(cid):
    def register(fn):
        CHECKS[cid] = fn
        return fn
    return register


def join_notes(*notes):
    notes = [n for n in notes if n]
    return ";".join(notes) if notes else None


# ---------------------------------------------------------------- varieties, maps, bases

@check("T3.1")
def closed_set_axioms(c):
    S, full = c.S, c.S.full
    zero, whole = c.M.zero, c.M.whole
    if c.V(zero) != full:
        fail(c.fmt(zero), "V(0)!=full")
    if c.V(whole) != 0:
        fail(c.fmt(whole), "V(M)!=empty")
    for f in c.X.axiom_failures:
        fail(tup(c.fmt_pts(f[1] or 0), c.fmt_pts(f[2] or 0)), f"family-not-closed:{f[0]}")
    colons = {K: colon_ideal(c.M, K) for K in c.subs}
    for N, K in combinations(c.subs, 2):
        if c.V(N) | c.V(K) != c.V(_meet(N, K)):
            fail(tup(c.fmt(N), c.fmt(K)), "union")
        meet = ideal_times_module(ideal_sum(c.R, colons[N], colons[K]), c.M)
        if c.V(N) & c.V(K) != c.V(meet):
            fail(tup(c.fmt(N), c.fmt(K)), "intersection")
    total, acc = GradedIdeal(1), full
    for K in c.subs:
        total = ideal_sum(c.R, total, colons[K])
        acc &= c.V(K)
    if acc != c.V(ideal_times_module(total, c.M)):
        fail(c.fmt_pts(acc), "intersection-of-all")


def _meet(N, K):
    return type(N)(N.bits & K.bits)


@check("P3.2.1")
def variety_antitone(c):
    for N in c.subs:
        for K in c.subs:
            if N <= K and c.V(K) & ~c.V(N):
                fail(tup(c.fmt(N), c.fmt(K)))


@check("P3.2.2")
def variety_of_radical(c):
    for K in c.subs:
        lhs, rhs = c.V(graded_submodule_radical(c.M, K)), c.V(K)
        if lhs & ~rhs:
            fail(c.fmt(K), "inclusion")
        if c.multiplication and lhs != rhs:
            fail(c.fmt(K), "equality:multiplication")
    if not c.multiplication:
        return None, "equality:hypothesis:multiplication_unmet"


@check("P3.2.3")
def variety_of_radical_colon(c):
    for K in c.subs:
        if c.V(K) != c.V(ideal_times_module(radical_of_colon(c.M, K), c.M)):
            fail(c.fmt(K))


@check("P3.2.4")
def variety_by_radical_colon(c):
    rad = {K: radical_of_colon(c.M, K) for K in c.subs}
    for N, K in combinations(c.subs, 2):
        if rad[N] == rad[K] and c.V(N) != c.V(K):
            fail(tup(c.fmt(N), c.fmt(K)))


@check("P3.2.5")
def variety_as_union_of_fibers(c):
    primes = graded_prime_ideals(c.R)
    for K in c.subs:
        col = colon_ideal(c.M, K)
        acc = 0
        for p in primes:
            if col <= p:
                acc |= c.S.fiber(p)
        if acc != c.V(K):
            fail(c.fmt(K))


@check("P3.2.6")
def subset_in_variety(c):
    ys, note = c.subsets(c.S.n)
    rad = {K: radical_of_colon(c.M, K) for K in c.subs}
    var = {K: c.V(K) for K in c.subs}
    for Y in ys:
        ry = radical_of_colon(c.M, intersection_of_points(c.S, Y))
        for K in c.subs:
            if (Y & ~var[K] == 0) != (rad[K] <= ry):
                fail(tup(c.fmt_pts(Y), c.fmt(K)), note)
    return None, note


@check("P3.4.1")
def phi_R_preimage(c):
    nm = c.nm
    for I in c.ideals_over_ann:
        Ib = nm.bar(I)
        closed = variety(nm.spec_rbar.space, Ib)
        qpv = variety(nm.qp_rbar.space, Ib, c.semantics)
        if nm.phi_R.preimage(closed) != qpv:
            fail(c.fmt_ideal(I), f"semantics:{c.semantics}")
        if nm.phi.preimage(closed) != nm.psi_q.preimage(qpv):
            fail(c.fmt_ideal(I), f"in-particular;semantics:{c.semantics}")
    return None, f"semantics:{c.semantics}"


@check("P3.4.2")
def phi_R_closed_open(c):
    nm = c.nm
    phi_R = nm.phi_R
    if not map_profile(phi_R).surjective:
        fail(None, "phi_R-not-surjective")
    S, Q = nm.spec_rbar.space, nm.qp_rbar.space
    for I in c.ideals_over_ann:
        Ib = nm.bar(I)
        v, qv = variety(S, Ib), variety(Q, Ib, c.semantics)
        if phi_R.image(qv) != v:
            fail(c.fmt_ideal(I), f"closed;semantics:{c.semantics}")
        if phi_R.image(Q.full & ~qv) != S.full & ~v:
            fail(c.fmt_ideal(I), f"open;semantics:{c.semantics}")
    return None, f"semantics:{c.semantics}"


@check("P3.4.3")
def undefined_phi_M(c):
    raise Outcome(SKIPPED, None, "undefined-map:phi^M")


@check("R3.6")
def phi_routes_agree(c):
    nm = c.nm
    for m in (nm.psi_q, nm.phi_R, nm.phi, nm.phi_alt):
        if m.failures:
            i, why = m.failures[0]
            src = m.source.space.fmt_point(i)
            fail(src, f"{m.name}:{why.replace(' ', '_')}")
    for i, Q in enumerate(c.S.points):
        route = colon_ideal(c.M, graded_submodule_radical(c.M, Q))
        if route != radical_of_colon(c.M, Q):
            fail(c.fmt(Q), "(Gr_M(Q):M)!=Gr((Q:M))")
        if not is_graded_prime(c.R, route):
            fail(c.fmt(Q), "(Gr_M(Q):M)-not-prime")
    if nm.phi.assignment != nm.phi_alt.assignment:
        fail(None, "phi-routes-differ")
    if nm.phi.assignment != nm.phi_composite:
        fail(None, "phi!=phi_R.psi_q")


def t37_sides(c):
    pts = c.S.points
    v = [c.V(Q) for Q in pts]
    s1 = len(set(v)) == len(v)
    s2 = all(c.S.fiber(p).bit_count() <= 1 for p in graded_prime_ideals(c.R))
    s3 = c.phi_profile.injective
    return s1, s2, s3


def same_variety_pair(c):
    seen = {}
    for i, Q in enumerate(c.S.points):
        v = c.V(Q)
        if v in seen:
            return tup(c.S.fmt_point(seen[v]), c.S.fmt_point(i))
        seen[v] = i
    return None


@check("T3.7")
def injectivity_equivalence(c):
    s = t37_sides(c)
    if len(set(s)) != 1:
        fail(same_variety_pair(c), "values:" + flags(*s))
    return None, "values:" + flags(*s)


@check("R3.10")
def quasi_primaryful_iff_surjective(c):
    mp = c.mprofile
    if mp.quasi_primaryful != mp.phi_surjective:
        w = ",".join(c.fmt_ideal(p) for p in mp.missing) or None
        fail(w, "values:" + flags(mp.quasi_primaryful, mp.phi_surjective))
    return None, "values:" + flags(mp.quasi_primaryful, mp.phi_surjective)


@check("T3.11")
def phi_continuity(c):
    nm = c.nm
    for I in c.ideals_over_ann:
        Ib = nm.bar(I)
        a = nm.phi.preimage(variety(nm.spec_rbar.space, Ib))
        b = nm.psi_q.preimage(variety(nm.qp_rbar.space, Ib, c.semantics))
        d = c.V(ideal_times_module(I, c.M))
        if not a == b == d:
            fail(c.fmt_ideal(I), f"semantics:{c.semantics}")
    if not c.phi_profile.continuous:
        fail(None, "phi-not-continuous")
    return None, f"semantics:{c.semantics}"


@check("T3.12")
def phi_closed_and_open(c):
    if not c.mprofile.quasi_primaryful:
        skip("quasi_primaryful")
    nm = c.nm
    S = nm.spec_rbar.space
    for K in c.subs:
        target = variety(S, nm.bar(radical_of_colon(c.M, K)))
        v = c.V(K)
        if nm.phi.image(v) != target:
            fail(c.fmt(K), "closed")
        if nm.phi.image(c.S.full & ~v) != S.full & ~target:
            fail(c.fmt(K), "open")
    p = c.phi_profile
    if not (p.closed_map and p.open_map):
        fail(None, "values:" + flags(p.closed_map, p.open_map))


@check("C3.13")
def bijective_iff_homeomorphism(c):
    p = c.phi_profile
    bij = p.injective and p.surjective
    if bij != p.homeomorphism:
        fail(None, "values:" + flags(bij, p.homeomorphism))
    return None, "values:" + flags(bij, p.homeomorphism)


@check("T3.14")
def basic_opens_form_base(c):
    basics = {r: c.gx(r) for r in c.hom_ring}
    for U in c.X.open_family:
        acc = 0
        for b in basics.values():
            if b & ~U == 0:
                acc |= b
        if acc != U:
            fail(c.fmt_pts(U), "not-a-union-of-basic-opens")
    for K in c.subs:
        rad = radical_of_colon(c.M, K)
        acc = 0
        for r in c.hom_ring:
            if r in rad:
                acc |= basics[r]
        if acc != c.S.full & ~c.V(K):
            fail(c.fmt(K), "radical-colon-union")


def ring_gx(space, r, semantics):
    return space.full & ~variety(space, principal_seed(space, r), semantics)


def t315(c, part, semantics):
    """Evaluate one part of the ring statement; returns (ok, witness)."""
    R = c.R
    T = c.ring_qp_topology(semantics)
    sp = T.space
    gx = {r: ring_gx(sp, r, semantics) for r in c.hom_ring}
    if part == 1:
        for r in c.hom_ring:
            nil = R.power_in(r, 1)
            if (gx[r] == 0) != nil:
                return False, R.label(r)
    elif part == 2:
        for r in c.hom_ring:
            if (gx[r] == sp.full) != R.is_unit(r):
                return False, R.label(r)
    elif part == 3:
        ops = {I: sp.full & ~variety(sp, I, semantics) for I in c.ideals}
        for I, J in combinations(c.ideals, 2):
            if (ops[I] == ops[J]) != (graded_radical(R, I) == graded_radical(R, J)):
                return False, tup(R.fmt(I), R.fmt(J))
    elif part == 4:
        for r in c.hom_ring:
            for s in c.hom_ring:
                rs = int(R.mul[r, s])
                if R.homogeneous[rs] and gx[rs] != gx[r] & gx[s]:
                    return False, tup(R.label(r), R.label(s))
    elif part == 5:
        if not is_quasi_compact(T, sp.full):
            return False, None
    elif part == 6:
        cl = {}
        for i in range(sp.n):
            k = closure(T, 1 << i)
            if k in cl:
                return False, tup(sp.fmt_point(cl[k]), sp.fmt_point(i))
            cl[k] = i
    return True, None


def _t315(part):
    def run(c):
        ok, w = t315(c, part, c.semantics)
        alt, _ = t315(c, part, c.alt_semantics)
        note = f"semantics:{c.semantics};alt:{c.alt_semantics}={PASS if alt else FAIL}"
        if not ok:
            fail(w, note)
        return None, note
    return run


for _p in range(1, 7):
    check(f"T3.15.{_p}")(_t315(_p))


def rbar_gx(c, r):
    nm = c.nm
    sp = nm.qp_rbar.space
    return ring_gx(sp, int(nm.proj[r]), c.semantics)


@check("P3.16.1")
def psi_q_preimage_of_basic(c):
    for r in c.hom_ring:
        if c.nm.psi_q.preimage(rbar_gx(c, r)) != c.gx(r):
            fail(c.R.label(r), f"semantics:{c.semantics}")
    return None, f"semantics:{c.semantics}"


@check("P3.16.2")
def psi_q_image_of_basic(c):
    surj = c.psi_q_surjective
    for r in c.hom_ring:
        img, tgt = c.nm.psi_q.image(c.gx(r)), rbar_gx(c, r)
        if img & ~tgt:
            fail(c.R.label(r), "inclusion")
        if surj and img != tgt:
            fail(c.R.label(r), f"equality;semantics:{c.semantics}")
    if not surj:
        return None, "equality:hypothesis:psi_q_surjective_unmet"


@check("P3.16.3")
def module_basic_multiplicative(c):
    R = c.R
    for r in c.hom_ring:
        for s in c.hom_ring:
            rs = int(R.mul[r, s])
            if R.homogeneous[rs] and c.gx(rs) != c.gx(r) & c.gx(s):
                fail(tup(R.label(r), R.label(s)))


@check("T3.16")
def basic_opens_quasi_compact(c):
    if not c.psi_q_surjective:
        skip("psi_q_surjective")
    basics = [c.gx(r) for r in c.hom_ring]
    covers = (c.X.open_family, tuple(basics))
    for r in c.hom_ring:
        if not is_quasi_compact(c.X, c.gx(r), covers):
            fail(c.R.label(r))
    if not is_quasi_compact(c.X, c.S.full, covers):
        fail(c.fmt_pts(c.S.full), "whole-space")
    if c.S.n and finite_subcover(c.S.full, basics) is None:
        fail(c.fmt_pts(c.S.full), "basic-opens-do-not-cover")


@check("T3.17")
def quasi_compact_opens_spectral_base(c):
    if not c.psi_q_surjective:
        skip("psi_q_surjective")
    qc = quasi_compact_opens(c.X)
    qcs = set(qc)
    for a in qc:
        for b in qc:
            if a & b not in qcs:
                fail(tup(c.fmt_pts(a), c.fmt_pts(b)), "intersection")
    for U in c.X.open_family:
        acc = 0
        for v in qc:
            if v & ~U == 0:
                acc |= v
        if acc != U:
            fail(c.fmt_pts(U), "base")


# ---------------------------------------------------------------- separation, components, spectrality

@check("T4.1")
def connectedness(c):
    if not c.mprofile.quasi_primaryful:
        skip("quasi_primaryful")
    nm = c.nm
    s = (is_connected(nm.spec_rbar), is_connected(nm.qp_rbar),
         is_connected(nm.qp_module), is_connected(nm.spec_module))
    note = "values:" + flags(*s)
    if not s[0] == s[1] == s[2]:
        fail(None, note)
    if s[2] and not s[3]:
        fail(None, note + ";3=>4")
    if c.mprofile.graded_primeful_module and s[3] and not s[0]:
        fail(None, note + ";4=>1")
    return None, note


@check("T4.2.1")
def closure_formula(c):
    ys, note = c.subsets(c.S.n)
    for Y in ys:
        if closure(c.X, Y) != c.V(intersection_of_points(c.S, Y)):
            fail(c.fmt_pts(Y), note)
    for i, Q in enumerate(c.S.points):
        if closure(c.X, 1 << i) != c.V(Q):
            fail(c.S.fmt_point(i), "singleton")
    return None, note


@check("T4.2.2")
def zero_point_dense(c):
    zi = c.S.index.get(c.M.zero.bits)
    if zi is None:
        skip("zero_in_space")
    ys, note = c.subsets(c.S.n)
    for Y in ys:
        if Y >> zi & 1 and closure(c.X, Y) != c.S.full:
            fail(c.fmt_pts(Y), note)
    return None, note


def max_radicals(c):
    rads = set(c.S.radicals)
    return {r for r in rads if not any(r < s for s in rads)}


@check("T4.2.3")
def closed_points(c):
    top = max_radicals(c)
    for i, Q in enumerate(c.S.points):
        p = c.S.radicals[i]
        lhs = c.X.is_closed(1 << i)
        rhs = p in top and c.S.fiber(p) == 1 << i
        if lhs != rhs:
            fail(c.S.fmt_point(i), "values:" + flags(lhs, rhs))


@check("T4.2.4")
def closed_point_maximal(c):
    closed = [i for i in range(c.S.n) if c.X.is_closed(1 << i)]
    if not closed:
        skip("closed_singleton")
    pts = c.S.points
    for i in closed:
        if any(pts[i] < P for P in pts):
            fail(c.S.fmt_point(i))


@check("T4.3")
def t0_equivalence(c):
    t0 = is_t0(c.X)
    s1, s2, s3 = t37_sides(c)
    s = (t0, s1, s2, s3)
    note = "values:" + flags(*s)
    if len(set(s)) != 1:
        fail(same_variety_pair(c), note)
    return None, note


@check("C4.4.1")
def t1_by_radicals(c):
    t1, t0 = is_t1(c.X), is_t0(c.X)
    top = max_radicals(c)
    rhs = t0 and all(r in top for r in c.S.radicals)
    if t1 != rhs:
        fail(None, "values:" + flags(t1, rhs))
    return None, "values:" + flags(t1, rhs)


def points_maximal(c):
    pts = c.S.points
    return all(not any(Q < P for P in pts) for Q in pts)


@check("C4.4.2")
def t1_by_maximal_points(c):
    t1, t0 = is_t1(c.X), is_t0(c.X)
    rhs = t0 and points_maximal(c)
    if t1 != rhs:
        fail(None, "values:" + flags(t1, rhs))
    return None, "values:" + flags(t1, rhs)


@check("C4.4.3")
def t1_with_zero_point(c):
    zi = c.S.index.get(c.M.zero.bits)
    if zi is None:
        skip("zero_in_space")
    t1 = is_t1(c.X)
    only = c.S.n == 1
    if t1 != only:
        fail(c.fmt_pts(c.S.full), "values:" + flags(t1, only))
    return None, "values:" + flags(t1, only)


@check("C4.4.4")
def t0_and_maximal_gives_t1(c):
    maxes = {K.bits for K in graded_maximal_submodules(c.M)}
    if not (is_t0(c.X) and {P.bits for P in c.S.points} == maxes):
        skip("T0_and_space_equals_Max")
    if not is_t1(c.X):
        fail()


@check("T4.5")
def t1_iff_maximal(c):
    maxes = {K.bits for K in graded_maximal_submodules(c.M)}
    pts = {P.bits for P in c.S.points}
    t1 = is_t1(c.X)
    note = "values:" + flags(t1, pts == maxes) + ";finitely-generated:finite-instance"
    if t1 != (pts == maxes):
        fail(None, note)
    if t1:
        primes = {P.bits for P in enumerate_graded_submodules(c.M)
                  if is_graded_prime_submodule(c.M, P)}
        if primes != pts:
            fail(None, note + ";Spec!=Max")
    return None, note


@check("T4.6")
def point_varieties_irreducible(c):
    for i, Q in enumerate(c.S.points):
        if not satisfies_primeful(c.M, Q):
            continue
        v = c.V(Q)
        if not (c.X.is_closed(v) and is_irreducible(c.X, v)):
            fail(c.S.fmt_point(i))


@check("T4.7")
def irreducible_from_intersection(c):
    ys, note = c.subsets(c.S.n)
    mult = c.multiplication
    for Y in ys:
        K = intersection_of_points(c.S, Y)
        qp = is_graded_quasi_primary_submodule(c.M, K)
        irr = is_irreducible(c.X, Y)
        if qp and not irr:
            fail(c.fmt_pts(Y), join_notes("forward", note))
        if mult and irr and satisfies_primeful(c.M, K) and not qp:
            fail(c.fmt_pts(Y), join_notes("converse", note))
    conv = None if mult else "converse:hypothesis:multiplication_unmet"
    return None, join_notes(conv, note)


@check("L4.8")
def ring_irreducible_iff_prime(c):
    T = c.spec_ring
    ys, note = c.subsets(T.n)
    for Y in ys:
        irr = is_irreducible(T, Y)
        prime = is_graded_prime(c.R, intersection_of_points(T.space, Y))
        if irr != prime:
            fail(T.space.fmt_subset(Y), join_notes("values:" + flags(irr, prime), note))
    return None, note


@check("T4.9")
def irreducible_closed_are_point_varieties(c):
    if not c.mprofile.quasi_primaryful:
        skip("quasi_primaryful")
    pv = {c.V(Q) for Q in c.S.points}
    for C in c.X.closed_family:
        irr = is_irreducible(c.X, C)
        if irr != (C in pv):
            fail(c.fmt_pts(C), "values:" + flags(irr, C in pv))
        if irr and not generic_points(c.X, C):
            fail(c.fmt_pts(C), "no-generic-point")


def component_radicals(c):
    """Map each component to phi(Q) for the points Q with V(Q) equal to it."""
    out = {}
    for C in irreducible_components(c.X):
        imgs = {c.nm.phi.assignment[i] for i, Q in enumerate(c.S.points) if c.V(Q) == C}
        out[C] = imgs
    return out


@check("C4.10")
def components_to_minimal_primes(c):
    if not c.phi_profile.surjective:
        skip("phi_surjective")
    S = c.nm.spec_rbar.space
    minimal = {S.index[p.bits] for p in minimal_elements(list(S.points))}
    comps = component_radicals(c)
    image = set()
    for C, imgs in comps.items():
        if len(imgs) != 1:
            fail(c.fmt_pts(C), "not-well-defined" if imgs else "no-point-variety")
        (j,) = imgs
        if j in image:
            fail(c.fmt_pts(C), "not-injective")
        image.add(j)
    if image != minimal:
        fail(S.fmt_subset(B.from_indices(image ^ minimal)), "image!=minimal-primes")
    return None, f"components:{len(comps)}"


@check("T4.11")
def components_from_minimal_radicals(c):
    if not c.mprofile.quasi_primaryful:
        skip("quasi_primaryful")
    R, ann = c.R, c.nm.ann
    over_ann = [p for p in graded_prime_ideals(R) if ann <= p]
    minimal = {p.bits for p in minimal_elements(over_ann)}
    qpR = build_spectrum(R, None, "qpspec_ring")
    phi_set = set()
    for i in B.indices(variety(qpR, ann, c.semantics)):
        g = qpR.radicals[i]
        if g.bits in minimal:
            phi_set.add(c.V(ideal_times_module(g, c.M)))
    comps = set(irreducible_components(c.X))
    if comps != phi_set:
        fail(c.fmt_pts(min(comps ^ phi_set, key=B.sort_key)), f"semantics:{c.semantics}")
    return None, f"semantics:{c.semantics}"


@check("T4.13")
def noetherian_iff_acc(c):
    zqp = [K for K in c.subs if zqp_radical(c.S, K) == K]
    for K in c.subs:
        if c.V(zqp_radical(c.S, K)) != c.V(K):
            fail(c.fmt(K), "V(Zqp(K))!=V(K)")
    dcc = longest_chain(c.X.closed_family)
    acc = longest_chain([K.bits for K in zqp])
    note = f"finite-instance:vacuously_true;closed-chain={dcc};radical-chain={acc}"
    if dcc != acc:
        fail(None, note)
    return None, note


@check("T4.14.1")
def qp_chains_stationary(c):
    if not c.mprofile.quasi_primaryful:
        skip("quasi_primaryful")
    if not c.phi_profile.injective:
        skip("phi_injective")
    pts = c.S.points
    for i, P in enumerate(pts):
        for j, Q in enumerate(pts):
            if P < Q and c.V(P) == c.V(Q):
                fail(tup(c.S.fmt_point(i), c.S.fmt_point(j)))
    return None, "finite-instance:vacuously_true"


@check("T4.14.2")
def finitely_many_minimal_primes(c):
    if not c.mprofile.quasi_primaryful:
        skip("quasi_primaryful")
    S = c.nm.spec_rbar.space
    n_min = len(minimal_elements(list(S.points)))
    n_comp = len(irreducible_components(c.X))
    note = f"finite-instance:vacuously_true;components={n_comp};minimal-primes={n_min}"
    if n_comp != n_min:
        fail(None, note)
    return None, note


@check("T4.15")
def spectral_equivalence(c):
    if not c.psi_q_surjective:
        skip("psi_q_surjective")
    prof = c.profile
    s1 = prof.is_spectral
    s2 = is_t0(c.X)
    s4, s5, s3 = t37_sides(c)
    s6 = c.phi_profile.homeomorphism
    s = (s1, s2, s3, s4, s5, s6)
    note = "values:" + flags(*s) + ";hochster:" + flags(*prof.hochster.values())
    if len(set(s)) != 1:
        fail(same_variety_pair(c), note)
    return None, note


CATALOG = tuple(sorted(CHECKS, key=id_key))


def select(selection=None):
    if not selection:
        return CATALOG
    wanted = [s.strip() for s in selection if s.strip()]
    unknown = [w for w in wanted
               if not any(cid == w or cid.startswith(w + ".") for cid in CATALOG)]
    if unknown:
        raise KeyError(f"unknown check id(s): {', '.join(unknown)}")
    return tuple(cid for cid in CATALOG
                 if any(cid == w or cid.startswith(w + ".") for w in wanted))


def run_check(ctx, cid):
    t0 = time.perf_counter()
    try:
        out = CHECKS[cid](ctx)
        witness, note = out if out else (None, None)
        status = PASS
    except Outcome as o:
        status, witness, note = o.status, o.witness, o.note
    return CheckResult(cid, ctx.name, status, witness, note, time.perf_counter() - t0)


def run_check_suite(desc, selection=None, semantics=None, cache=None):
    ids = select(selection)
    ctx = Context(desc, semantics, cache)
    results = [run_check(ctx, cid) for cid in ids]
    if cache is not None:
        cache.store(desc, ctx.R, ctx.M)
    return CheckReport(desc.name, results)
