"""Substructure lattices of a graded additive carrier acted on by a ring.

A carrier is described by three tables: ``add`` (N x N), ``act`` (|R| x N)
and the homogeneous mask.  Ideals are the regular-module case ``act = mul``.
"""
from dataclasses import dataclass, field

import numpy as np

from . import bits as B
from . import kernels
from .errors import BudgetExceeded

DEFAULT_CAP = 1 << 16


@dataclass(frozen=True)
class _ElementSet:
    bits: int
    generators: tuple = field(default=(), compare=False, repr=False)

    def __contains__(self, i):
        return bool(self.bits >> int(i) & 1)

    def __len__(self):
        return self.bits.bit_count()

    def __le__(self, other):
        return self.bits & ~other.bits == 0

    def __lt__(self, other):
        return self <= other and self.bits != other.bits

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def elements(self):
        return B.indices(self.bits)


class GradedIdeal(_ElementSet):
    pass


class GradedSubmodule(_ElementSet):
    pass


def orbit(act, m):
    """Distinct elements r*m for r in R."""
    return np.unique(act[:, m])


def generated(add, act, gens, start=None):
    """Mask of the substructure generated by ``gens`` (plus ``start``)."""
    n = add.shape[0]
    mask = np.zeros(n, dtype=bool) if start is None else start.copy()
    mask[0] = True
    if len(gens) == 0:
        return kernels.span(add, mask, np.empty(0, np.int64))
    prods = np.unique(act[:, np.asarray(list(gens), dtype=np.int64)].ravel())
    return kernels.span(add, mask, prods)


def add_bits(add, a, b, n):
    """Sum of two additive subgroups given as bitsets."""
    gens = np.asarray(B.indices(b), dtype=np.int64)
    return B.from_mask(kernels.span(add, B.to_mask(a, n), gens))


def enumerate_closed(add, act, hom_nonzero, cap=DEFAULT_CAP):
    """All substructures generated by homogeneous elements, canonically ordered.

    Closure under sums of the homogeneous-cyclic substructures, plus {0}.
    """
    n = add.shape[0]
    zero = np.zeros(n, dtype=bool)
    zero[0] = True
    cyclic = {}
    for m in hom_nonzero:
        cb = B.from_mask(generated(add, act, [m]))
        cyclic.setdefault(cb, orbit(act, m))
    found = {1}
    work = [1]
    cyc = list(cyclic.items())
    while work:
        s = work.pop()
        smask = B.to_mask(s, n)
        for cb, prods in cyc:
            if cb & ~s == 0:
                continue
            t = B.from_mask(kernels.span(add, smask, prods))
            if t not in found:
                found.add(t)
                if len(found) > cap:
                    raise BudgetExceeded(f"more than {cap} substructures")
                work.append(t)
    return sorted(found, key=B.sort_key)


def format_generated(labels, gens):
    """Print a substructure by its generators: ``(0)``, ``(2)``, ``(1,0;0,1)``."""
    if not gens:
        return "(0)"
    names = [labels[g] for g in gens]
    sep = ";" if any("," in x for x in names) else ","
    return "(" + sep.join(names) + ")"


def canonical_generators(add, act, hom_nonzero, sbits):
    """Greedy homogeneous generating set.

    Candidates are tried by decreasing size of the substructure they generate
    alone, then by index, so a principal substructure prints with one generator.
    """
    n = add.shape[0]
    zero = np.zeros(n, dtype=bool)
    zero[0] = True
    members = [int(m) for m in hom_nonzero if sbits >> int(m) & 1]
    size = {m: int(kernels.span(add, zero, orbit(act, m)).sum()) for m in members}
    gens = []
    cur = zero
    cur_bits = 1
    for m in sorted(members, key=lambda m: (-size[m], m)):
        if cur_bits == sbits:
            break
        if not cur[m]:
            gens.append(m)
            cur = kernels.span(add, cur, orbit(act, m))
            cur_bits = B.from_mask(cur)
    return gens
