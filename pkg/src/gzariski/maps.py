"""Natural maps between the module qp-spectrum and the spectra of R/Ann(M)."""
from dataclasses import dataclass
from functools import cached_property

from . import bits as B
from .module import (annihilator, colon_ideal, graded_submodule_radical,
                     radical_of_colon)
from .ring import graded_radical, image_ideal, quotient_ring
from .spectrum import build_spectrum, build_topology, variety


@dataclass(frozen=True, eq=False)
class SpectrumMap:
    name: str
    source: object             # FiniteTopology
    target: object             # FiniteTopology
    assignment: tuple          # target index per source point, -1 if undefined
    failures: tuple = ()       # (source index, reason)

    @property
    def well_defined(self):
        return not self.failures

    def image(self, sbits):
        acc = 0
        for i in B.indices(sbits):
            if self.assignment[i] >= 0:
                acc |= 1 << self.assignment[i]
        return acc

    def preimage(self, tbits):
        return B.from_indices(i for i, j in enumerate(self.assignment)
                              if j >= 0 and tbits >> j & 1)


def _assign(name, source, target, image_of):
    """Build a map from ``image_of(i)`` (an ideal); off-target images are failures."""
    index = target.space.index
    out, failures = [], []
    for i in range(source.n):
        img = image_of(i)
        j = index.get(img.bits, -1)
        if j < 0:
            failures.append((i, f"image {target.space.carrier.fmt(img)} is not a point"))
        out.append(j)
    return SpectrumMap(name, source, target, tuple(out), tuple(failures))


def identity_map(T):
    return SpectrumMap("id", T, T, tuple(range(T.n)))


@dataclass(frozen=True, eq=False)
class NaturalMaps:
    ring: object
    module: object
    rbar: object               # R / Ann(M)
    proj: object               # r -> coset index
    ann: object
    qp_module: object          # topology on the module qp-spectrum
    spec_module: object        # topology on the graded prime submodules
    qp_rbar: object            # quasi-Zariski topology on qp.Spec(R/Ann M)
    spec_rbar: object          # Zariski topology on Spec(R/Ann M)
    psi_q: SpectrumMap
    phi_R: SpectrumMap
    phi: SpectrumMap           # image of Gr((Q:M))
    phi_alt: SpectrumMap       # image of (Gr_M(Q):M)
    psi: SpectrumMap           # Spec(M) -> Spec(R/Ann M)

    def bar(self, I):
        return image_ideal(self.rbar, self.proj, I)

    @cached_property
    def phi_composite(self):
        """phi_R after psi_q, pointwise; -1 where either leg is undefined."""
        out = []
        for j in self.psi_q.assignment:
            out.append(self.phi_R.assignment[j] if j >= 0 else -1)
        return tuple(out)


def natural_maps(R, M, semantics="radical", require_primeful=True):
    ann = annihilator(M)
    rbar, proj = quotient_ring(R, ann, allow_improper=True)
    X = build_topology(build_spectrum(R, M, "qpspec_module", require_primeful), semantics)
    SM = build_topology(build_spectrum(R, M, "spec_module"), semantics)
    Q = build_topology(build_spectrum(rbar, None, "qpspec_ring"), semantics)
    S = build_topology(build_spectrum(rbar, None, "spec_ring"), semantics)
    pts = X.space.points
    bar = lambda I: image_ideal(rbar, proj, I)
    psi_q = _assign("psi_q", X, Q, lambda i: bar(colon_ideal(M, pts[i])))
    phi_R = _assign("phi_R", Q, S, lambda i: graded_radical(rbar, Q.space.points[i]))
    phi = _assign("phi", X, S, lambda i: bar(radical_of_colon(M, pts[i])))
    phi_alt = _assign("phi_alt", X, S, lambda i: bar(
        colon_ideal(M, graded_submodule_radical(M, pts[i]))))
    psi = _assign("psi", SM, S, lambda i: bar(colon_ideal(M, SM.space.points[i])))
    return NaturalMaps(R, M, rbar, proj, ann, X, SM, Q, S,
                       psi_q, phi_R, phi, phi_alt, psi)


@dataclass(frozen=True)
class MapProfile:
    well_defined: bool
    injective: bool
    surjective: bool
    continuous: bool
    closed_map: bool
    open_map: bool
    homeomorphism: bool


def map_profile(f):
    if not f.well_defined:
        return MapProfile(False, False, False, False, False, False, False)
    a = f.assignment
    injective = len(set(a)) == len(a)
    surjective = set(a) == set(range(f.target.n))
    continuous = all(f.source.is_closed(f.preimage(c)) for c in f.target.closed_family)
    closed_map = all(f.target.is_closed(f.image(c)) for c in f.source.closed_family)
    open_map = all(f.target.is_open(f.image(u)) for u in f.source.open_family)
    homeo = injective and surjective and continuous and closed_map
    return MapProfile(True, injective, surjective, continuous, closed_map, open_map, homeo)


@dataclass(frozen=True)
class ModuleProfile:
    quasi_primaryful: bool
    graded_primeful_module: bool
    phi_surjective: bool
    missing: tuple = ()        # radicals Gr(q) over Ann(M) not hit by any point


def quasi_primaryful_witness(nm, semantics="radical"):
    """Radicals Gr(q), q quasi-primary over Ann(M), that no point realizes."""
    R, M = nm.ring, nm.module
    if M.is_zero_module:
        return ()
    qp_R = build_spectrum(R, None, "qpspec_ring")
    over = variety(qp_R, nm.ann, semantics)
    realized = {r.bits for r in nm.qp_module.space.radicals}
    missing = []
    for i in B.indices(over):
        rad = qp_R.radicals[i]
        if rad.bits not in realized and rad not in missing:
            missing.append(rad)
    return tuple(missing)


def module_profile(nm, semantics="radical"):
    from .module import is_graded_primeful_module
    missing = quasi_primaryful_witness(nm, semantics)
    return ModuleProfile(not missing, is_graded_primeful_module(nm.module),
                         map_profile(nm.phi).surjective, missing)
