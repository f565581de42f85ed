"""Finite groups given by Cayley tables."""
from dataclasses import dataclass

import numpy as np

from .errors import NotAGroup


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    identity: int
    cayley: np.ndarray
    inverse: np.ndarray

    def op(self, g, h):
        return int(self.cayley[g, h])

    def __eq__(self, other):
        return (isinstance(other, FiniteGroup) and self.identity == other.identity
                and np.array_equal(self.cayley, other.cayley))

    def __hash__(self):
        return hash((self.identity, self.cayley.tobytes()))

    @classmethod
    def from_table(cls, table, identity=0):
        """Validate a Cayley table exhaustively and build the group."""
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise NotAGroup("Cayley table must be a non-empty square array")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise NotAGroup("Cayley table entry out of range")
        if not 0 <= identity < n:
            raise NotAGroup("identity out of range")
        e = identity
        for g in range(n):
            if t[e, g] != g or t[g, e] != g:
                raise NotAGroup("identity is not two-sided neutral", (g,))
        lhs = t[t, :]                      # (gh)k indexed [g, h, k]
        rhs = t[:, t]                      # g(hk) indexed [g, h, k]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            raise NotAGroup("Cayley table is not associative", tuple(int(v) for v in bad[0]))
        inverse = np.full(n, -1, dtype=np.int64)
        for g in range(n):
            hits = np.flatnonzero((t[g, :] == e) & (t[:, g] == e))
            if hits.size == 0:
                raise NotAGroup("element has no two-sided inverse", (g,))
            inverse[g] = hits[0]
        t.setflags(write=False)
        inverse.setflags(write=False)
        return cls(n, e, t, inverse)

    @classmethod
    def trivial(cls):
        return cls.from_table([[0]])

    @classmethod
    def cyclic(cls, n):
        idx = np.arange(n)
        return cls.from_table((idx[:, None] + idx[None, :]) % n)
