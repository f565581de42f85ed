"""Spectra as finite point sets and their Zariski-type topologies.

Points are graded ideals or submodules; point subsets and closed sets are
Python-int bitsets over the canonical point order.
"""
from dataclasses import dataclass, field
from functools import cached_property

from . import bits as B
from .errors import KindMismatch, NonHomogeneous
from .lattice import GradedIdeal, GradedSubmodule
from .module import (classify_graded_submodule, colon_ideal,
                     enumerate_graded_submodules, is_graded_prime_submodule,
                     radical_of_colon)
from .ring import classify_graded_ideal, enumerate_graded_ideals, graded_radical

KINDS = ("spec_ring", "qpspec_ring", "spec_module", "qpspec_module")
SEMANTICS = ("radical", "containment")
RING_KINDS = ("spec_ring", "qpspec_ring")


@dataclass(frozen=True, eq=False)
class SpectrumSpace:
    kind: str
    ring: object
    module: object
    points: tuple
    radicals: tuple        # Gr(q) for ring kinds, Gr((Q:M)) for module kinds
    colons: tuple          # q itself for ring kinds, (Q:M) for module kinds

    @property
    def n(self):
        return len(self.points)

    @property
    def full(self):
        return B.full(len(self.points))

    @property
    def carrier(self):
        return self.ring if self.kind in RING_KINDS else self.module

    @cached_property
    def index(self):
        return {p.bits: i for i, p in enumerate(self.points)}

    def fmt_point(self, i):
        return self.carrier.fmt(self.points[i])

    def fmt_subset(self, sbits):
        return "{" + ",".join(self.fmt_point(i) for i in B.indices(sbits)) + "}"

    def fiber(self, prime):
        """Points whose radical equals ``prime``."""
        return B.from_indices(i for i, r in enumerate(self.radicals) if r == prime)

    def seeds(self):
        if self.kind in RING_KINDS:
            return enumerate_graded_ideals(self.ring)
        return enumerate_graded_submodules(self.module)


def build_spectrum(R, M, kind, require_primeful=True, cap=None):
    if kind not in KINDS:
        raise KindMismatch(f"unknown spectrum kind {kind!r}")
    if kind in RING_KINDS:
        ideals = enumerate_graded_ideals(R, cap)
        if kind == "spec_ring":
            pts = [I for I in ideals if classify_graded_ideal(R, I).graded_prime]
        else:
            pts = [I for I in ideals if classify_graded_ideal(R, I).graded_quasi_primary]
        rads = [graded_radical(R, I) for I in pts]
        return SpectrumSpace(kind, R, M, tuple(pts), tuple(rads), tuple(pts))
    if M is None:
        raise KindMismatch(f"{kind} needs a module")
    subs = enumerate_graded_submodules(M, cap)
    if kind == "spec_module":
        pts = [K for K in subs if is_graded_prime_submodule(M, K)]
    else:
        pts = [K for K in subs
               if classify_graded_submodule(M, K, require_primeful).in_qp_spec]
    return SpectrumSpace(kind, R, M, tuple(pts),
                         tuple(radical_of_colon(M, K) for K in pts),
                         tuple(colon_ideal(M, K) for K in pts))


def variety(space, seed, semantics="radical"):
    """Closed set cut out by ``seed`` under the kind's variety rule."""
    ring_kind = space.kind in RING_KINDS
    if ring_kind != isinstance(seed, GradedIdeal) or (
            not ring_kind and not isinstance(seed, GradedSubmodule)):
        raise KindMismatch(f"{type(seed).__name__} seed for a {space.kind} space")
    if space.kind == "qpspec_module":
        s = radical_of_colon(space.module, seed)
        return B.from_indices(i for i, r in enumerate(space.radicals) if s <= r)
    if space.kind == "spec_module":
        c = colon_ideal(space.module, seed)
        return B.from_indices(i for i, q in enumerate(space.colons) if c <= q)
    if space.kind == "spec_ring" or semantics == "containment":
        return B.from_indices(i for i, p in enumerate(space.points) if seed <= p)
    if semantics != "radical":
        raise KindMismatch(f"unknown variety semantics {semantics!r}")
    s = graded_radical(space.ring, seed)
    return B.from_indices(i for i, r in enumerate(space.radicals) if s <= r)


@dataclass(frozen=True, eq=False)
class FiniteTopology:
    space: SpectrumSpace
    closed_family: tuple              # bitsets, canonical order
    seed_map: dict                    # closed bitset -> first seed producing it
    semantics: str = "radical"
    axiom_failures: tuple = field(default=())

    @property
    def n(self):
        return self.space.n

    @property
    def full(self):
        return self.space.full

    @cached_property
    def closed_set(self):
        return frozenset(self.closed_family)

    @cached_property
    def open_family(self):
        return tuple(self.full & ~c for c in self.closed_family)

    @cached_property
    def open_set(self):
        return frozenset(self.open_family)

    def is_closed(self, s):
        return s in self.closed_set

    def is_open(self, s):
        return s in self.open_set

    def variety(self, seed):
        return variety(self.space, seed, self.semantics)


def build_topology(space, semantics="radical"):
    """Closed family = varieties of every graded seed; axioms checked, not assumed."""
    seed_map = {}
    for K in space.seeds():
        seed_map.setdefault(variety(space, K, semantics), K)
    family = sorted(seed_map, key=B.sort_key)
    fam = set(family)
    failures = []
    if 0 not in fam:
        failures.append(("empty", None, None))
    if space.full not in fam:
        failures.append(("full", None, None))
    for a in family:
        for b in family:
            if b < a:
                continue
            if a | b not in fam:
                failures.append(("union", a, b))
            if a & b not in fam:
                failures.append(("intersection", a, b))
    return FiniteTopology(space, tuple(family), seed_map, semantics, tuple(failures))


def intersection_of_points(space, Y):
    acc = B.full(space.carrier.size)
    for i in B.indices(Y):
        acc &= space.points[i].bits
    return GradedIdeal(acc) if space.kind in RING_KINDS else GradedSubmodule(acc)


def closure(T, Y):
    acc = T.full
    for c in T.closed_family:
        if Y & ~c == 0:
            acc &= c
    return acc


def principal_seed(space, r):
    """rR for ring spaces, rM for module spaces (r homogeneous)."""
    R = space.ring
    r = int(r)
    if not R.homogeneous[r]:
        raise NonHomogeneous(f"{R.label(r)} is not homogeneous")
    if space.kind in RING_KINDS:
        return GradedIdeal(B.from_indices(set(R.mul[r, :].tolist())))
    return GradedSubmodule(B.from_indices(set(space.module.act[r, :].tolist())))


def basic_open(space, r, semantics="radical"):
    return space.full & ~variety(space, principal_seed(space, r), semantics)


def zqp_radical(space, K):
    """Intersection of the qp-spectrum points in variety(K); M if none."""
    if space.kind != "qpspec_module":
        raise KindMismatch("Zqp radicals live on the module qp-spectrum")
    return intersection_of_points(space, variety(space, K))


def is_zqp_radical(space, K):
    return zqp_radical(space, K) == K


# ------------------------------------------------------------ topology

def is_irreducible(T, A):
    if A == 0:
        return False
    avoid = [c for c in T.closed_family if A & ~c]
    for i, c1 in enumerate(avoid):
        for c2 in avoid[i:]:
            if A & ~(c1 | c2) == 0:
                return False
    return True


def point_closures(T):
    return [closure(T, 1 << i) for i in range(T.n)]


def is_t0(T):
    return t0_witness(T) is None


def t0_witness(T):
    cl = point_closures(T)
    seen = {}
    for i, c in enumerate(cl):
        if c in seen:
            return seen[c], i
        seen[c] = i
    return None


def is_t1(T):
    return all(T.is_closed(1 << i) for i in range(T.n))


def is_connected(T):
    return clopen_witness(T) is None


def clopen_witness(T):
    for c in T.closed_family:
        if c and c != T.full and T.is_closed(T.full & ~c):
            return c
    return None


def irreducible_closed_sets(T):
    return [c for c in T.closed_family if is_irreducible(T, c)]


def irreducible_components(T):
    irr = irreducible_closed_sets(T)
    return [c for c in irr if not any(c != d and c & ~d == 0 for d in irr)]


def generic_points(T, C):
    cl = point_closures(T)
    return [i for i in B.indices(C) if cl[i] == C]


def finite_subcover(S, family):
    """Irredundant finite subcover of S drawn from ``family`` or None."""
    members = sorted({u for u in family if u & S}, key=B.sort_key)
    union = 0
    for u in members:
        union |= u
    if S & ~union:
        return None
    chosen = []
    left = S
    while left:
        best = max(members, key=lambda u: ((u & left).bit_count(), -members.index(u)))
        chosen.append(best)
        left &= ~best
    for u in list(chosen):
        rest = 0
        for v in chosen:
            if v != u:
                rest |= v
        if S & ~rest == 0:
            chosen.remove(u)
    return tuple(chosen)


def is_quasi_compact(T, S, covers=None):
    """Every listed open cover of S has a finite subcover.

    ``covers`` defaults to the full open family, which contains every cover.
    """
    for fam in covers or (T.open_family,):
        union = 0
        for u in fam:
            union |= u
        if S & ~union:
            continue
        if finite_subcover(S, fam) is None:
            return False
    return True


def longest_chain(sets):
    """Length of the longest strictly increasing chain (under inclusion)."""
    order = sorted(set(sets), key=B.sort_key)
    best = {}
    for s in order:
        best[s] = 1 + max((best[t] for t in best if t != s and t & ~s == 0), default=0)
    return max(best.values(), default=0)


def quasi_compact_opens(T):
    return [u for u in T.open_family if is_quasi_compact(T, u)]


def hochster_conditions(T):
    qc = quasi_compact_opens(T)
    qcs = set(qc)
    closed_under_meet = all((a & b) in qcs for a in qc for b in qc)
    base = all(_union_of_members_inside(u, qc) == u for u in T.open_family)
    generic = all(generic_points(T, c) for c in irreducible_closed_sets(T))
    return {
        "T0": is_t0(T),
        "quasi_compact": is_quasi_compact(T, T.full),
        "qc_opens_meet_base": closed_under_meet and base,
        "generic_points": generic,
    }


def _union_of_members_inside(u, family):
    acc = 0
    for v in family:
        if v & ~u == 0:
            acc |= v
    return acc


@dataclass(frozen=True)
class TopologyProfile:
    is_T0: bool
    is_T1: bool
    is_connected: bool
    is_irreducible_space: bool
    is_noetherian: bool
    is_quasi_compact: bool
    is_spectral: bool
    irreducible_components: tuple
    generic_points: dict              # closed irreducible set -> least generic point or None
    generic_unique: dict
    hochster: dict
    annotations: tuple = ()


def topology_profile(T):
    hoch = hochster_conditions(T)
    generic, unique = {}, {}
    for c in irreducible_closed_sets(T):
        pts = generic_points(T, c)
        generic[c] = pts[0] if pts else None
        unique[c] = len(pts) == 1
    chain = longest_chain(T.closed_family)
    notes = ("noetherian: finite-instance: vacuously true "
             f"(longest closed chain {chain})",
             "quasi-compact: finite-instance: cover search over finite open family")
    return TopologyProfile(
        is_T0=hoch["T0"], is_T1=is_t1(T), is_connected=is_connected(T),
        is_irreducible_space=is_irreducible(T, T.full),
        is_noetherian=True, is_quasi_compact=hoch["quasi_compact"],
        is_spectral=all(hoch.values()),
        irreducible_components=tuple(irreducible_components(T)),
        generic_points=generic, generic_unique=unique, hochster=hoch,
        annotations=notes)
