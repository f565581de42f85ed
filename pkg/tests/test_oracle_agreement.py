"""Library enumeration and classification against the brute-force oracle."""
import pytest
from hypothesis import given, settings

import oracle
from conftest import make
from gzariski import bits as B
from gzariski.checks import Context
from gzariski.corpus import builtin_corpus
from gzariski.module import (colon_ideal, enumerate_graded_submodules,
                             graded_submodule_radical, is_graded_prime_submodule,
                             is_graded_quasi_primary_submodule, satisfies_primeful)
from gzariski.ring import (classify_graded_ideal, enumerate_graded_ideals, graded_radical,
                           is_graded_prime)
from gzariski.spectrum import build_spectrum, build_topology
from instances import instance_texts

NAMES = [d.name for d in builtin_corpus()]


def as_sets(items):
    return sorted((frozenset(x.elements()) for x in items), key=lambda s: (len(s), sorted(s)))


@pytest.mark.parametrize("name", NAMES)
def test_ideals_match_oracle(corpus, name):
    _, R, _ = corpus[name]
    assert as_sets(enumerate_graded_ideals(R)) == oracle.graded_ideals(R)


@pytest.mark.parametrize("name", NAMES)
def test_submodules_match_oracle(corpus, name):
    _, _, M = corpus[name]
    assert as_sets(enumerate_graded_submodules(M)) == oracle.graded_submodules(M)


@pytest.mark.parametrize("name", NAMES)
def test_ring_classification_matches_oracle(corpus, name):
    _, R, _ = corpus[name]
    for I in enumerate_graded_ideals(R):
        s = frozenset(I.elements())
        assert frozenset(graded_radical(R, I).elements()) == oracle.radical(R, s)
        assert is_graded_prime(R, I) == oracle.is_prime_ideal(R, s)
        assert classify_graded_ideal(R, I).graded_quasi_primary == oracle.is_qp_ideal(R, s)


@pytest.mark.parametrize("name", NAMES)
def test_module_classification_matches_oracle(corpus, name):
    _, R, M = corpus[name]
    subs = oracle.graded_submodules(M)
    ideals = oracle.graded_ideals(R)
    for K in enumerate_graded_submodules(M):
        s = frozenset(K.elements())
        assert frozenset(colon_ideal(M, K).elements()) == oracle.colon(M, s)
        assert is_graded_prime_submodule(M, K) == oracle.is_prime_submodule(M, s)
        assert frozenset(graded_submodule_radical(M, K).elements()) == \
            oracle.module_radical(M, s, subs)
        assert is_graded_quasi_primary_submodule(M, K) == oracle.is_qp_submodule(M, s, subs)
        assert satisfies_primeful(M, K) == oracle.satisfies_primeful(M, s, subs, ideals)


@pytest.mark.parametrize("name", NAMES)
def test_qp_spectrum_and_topology_match_oracle(corpus, name):
    _, R, M = corpus[name]
    space = build_spectrum(R, M, "qpspec_module")
    pts = oracle.qp_spectrum(M)
    assert as_sets(space.points) == pts
    T = build_topology(space)
    fam = oracle.qp_closed_family(M, [frozenset(p.elements()) for p in space.points])
    assert set(T.closed_family) == {oracle.to_bits(c) for c in fam}


@given(instance_texts)
@settings(max_examples=40, deadline=None)
def test_random_instances_match_oracle(text):
    _, R, M = make(text)
    assert as_sets(enumerate_graded_ideals(R)) == oracle.graded_ideals(R)
    assert as_sets(enumerate_graded_submodules(M)) == oracle.graded_submodules(M)
    space = build_spectrum(R, M, "qpspec_module")
    assert as_sets(space.points) == oracle.qp_spectrum(M)


@pytest.mark.parametrize("name", NAMES)
def test_topology_predicates_match_oracle(corpus, name):
    desc, _, _ = corpus[name]
    c = Context(desc)
    T = c.X
    n = T.n
    fam = {frozenset(B.indices(x)) for x in T.closed_family}
    from gzariski.spectrum import is_connected, is_irreducible, is_t0
    assert is_t0(T) == oracle.is_t0(fam, n)
    assert is_connected(T) == oracle.is_connected(fam, n)
    for Y in oracle.all_subsets(min(n, 10)):
        assert is_irreducible(T, oracle.to_bits(Y)) == oracle.is_irreducible(fam, n, Y)
