import pytest

from conftest import make
from gzariski.errors import (BadUnity, GradingViolation, IllFormedConstants, ImproperIdeal,
                             NonAssociative, NonHomogeneousGenerator)
from gzariski.ring import (classify_graded_ideal, enumerate_graded_ideals, graded_maximal_ideals,
                           graded_prime_ideals, graded_radical, homogeneous_elements,
                           ideal_generated_by, ideal_intersection, ideal_sum, image_ideal,
                           preimage_ideal, quotient_ring)

INST_A = """name = A
[group]
order = 2
identity = 0
table = 0 1 / 1 0
[ring]
component 0 = 2
component 1 = 2
mul 0 0 (1) (1) = (1)
mul 0 1 (1) (1) = (1)
mul 1 1 (1) (1) = {xx}
one = 0:(1)
"""


def el(R, label):
    return R.labels.index(label)


def fmt_all(R, ideals):
    return [R.fmt(I) for I in ideals]


def test_inst_a_is_a_four_element_graded_ring(corpus):
    _, R, _ = corpus["INST-A"]
    assert R.size == 4 and R.group.order == 2
    assert R.label(R.one) == "1|0"


def test_homogeneous_elements_exclude_mixed(corpus):
    _, R, _ = corpus["INST-A"]
    hom = {R.label(r) for r in homogeneous_elements(R)}
    assert hom == {"0|0", "1|0", "0|1"}
    _, Z4, _ = corpus["INST-B"]
    assert homogeneous_elements(Z4) == [0, 1, 2, 3]


def test_ideal_generated_by(corpus):
    _, R, _ = corpus["INST-A"]
    x = el(R, "0|1")
    assert sorted(ideal_generated_by(R, [x]).elements()) == [0, x]
    assert ideal_generated_by(R, []).elements() == [0]
    _, Z4, _ = corpus["INST-B"]
    assert ideal_generated_by(Z4, [2]).elements() == [0, 2]
    with pytest.raises(NonHomogeneousGenerator):
        ideal_generated_by(R, [el(R, "1|1")])


@pytest.mark.parametrize("name, expected", [
    ("INST-A", ["(0)", "(0|1)", "(1|0)"]),
    ("INST-B", ["(0)", "(2)", "(1)"]),
    ("INST-C", ["(0)", "(1)"]),
    ("INST-D", ["(0)", "(3)", "(2)", "(1)"]),
])
def test_enumerate_graded_ideals(corpus, name, expected):
    _, R, _ = corpus[name]
    assert fmt_all(R, enumerate_graded_ideals(R)) == expected


def test_graded_radicals(corpus):
    _, A, _ = corpus["INST-A"]
    assert A.fmt(graded_radical(A, A.zero_ideal)) == "(0|1)"
    assert graded_radical(A, A.whole) == A.whole
    _, B, _ = corpus["INST-B"]
    assert B.fmt(graded_radical(B, B.zero_ideal)) == "(2)"
    _, D, _ = corpus["INST-D"]
    assert graded_radical(D, D.zero_ideal) == D.zero_ideal


def test_radical_needs_more_than_component_exponent(corpus):
    # in F2[x]/(x^3) the element x has x^2 != 0, so a search bounded by the
    # additive exponent (2) would miss x^3 = 0
    _, F, _ = corpus["INST-F"]
    x = F.labels.index("0|1|0")
    assert x in graded_radical(F, F.zero_ideal)


def test_classify_inst_a(corpus):
    _, R, _ = corpus["INST-A"]
    zero, x_ideal, whole = enumerate_graded_ideals(R)
    c = classify_graded_ideal(R, x_ideal)
    assert (c.proper, c.graded_prime, c.graded_quasi_primary, c.graded_maximal) == (True,) * 4
    c = classify_graded_ideal(R, zero)
    assert (c.proper, c.graded_prime, c.graded_quasi_primary, c.graded_maximal) == \
        (True, False, True, False)
    assert not classify_graded_ideal(R, whole).proper


def test_classify_z6_zero_not_quasi_primary(corpus):
    _, R, _ = corpus["INST-D"]
    c = classify_graded_ideal(R, R.zero_ideal)
    assert c.proper and not c.graded_prime and not c.graded_quasi_primary


def test_primes_and_maximals(corpus):
    _, D, _ = corpus["INST-D"]
    assert fmt_all(D, graded_prime_ideals(D)) == ["(3)", "(2)"]
    assert fmt_all(D, graded_maximal_ideals(D)) == ["(3)", "(2)"]


def test_sum_and_intersection(corpus):
    _, D, _ = corpus["INST-D"]
    _, three, two, whole = enumerate_graded_ideals(D)
    assert ideal_sum(D, two, three) == whole
    assert ideal_intersection(two, three) == D.zero_ideal


def test_quotients(corpus):
    _, B, _ = corpus["INST-B"]
    two = enumerate_graded_ideals(B)[1]
    Q, proj = quotient_ring(B, two)
    assert Q.size == 2 and Q.is_unit(Q.one)
    assert [int(v) for v in proj] == [0, 1, 0, 1]
    Z, proj0 = quotient_ring(B, B.zero_ideal)
    assert Z.size == 4 and list(proj0) == [0, 1, 2, 3]
    assert image_ideal(Q, proj, two) == Q.zero_ideal
    assert preimage_ideal(proj, Q.zero_ideal) == two
    with pytest.raises(ImproperIdeal):
        quotient_ring(B, B.whole)


def test_quotient_of_graded_ring_keeps_grading(corpus):
    _, A, _ = corpus["INST-A"]
    x_ideal = enumerate_graded_ideals(A)[1]
    Q, _ = quotient_ring(A, x_ideal)
    assert Q.size == 2 and Q.group.order == 2
    assert bool(Q.homogeneous.all())


def test_grading_violation_rejected():
    with pytest.raises(GradingViolation):
        make(INST_A.format(xx="1:(1)"))


def test_valid_inst_a_text_builds():
    _, R, M = make(INST_A.format(xx="(0)"))
    assert R.size == 4 and M.size == 4


def test_non_associative_rejected():
    # basis 1, a, b over F2 with a*a = 0, b*b = a, a*b = b: (ab)b = a but a(bb) = 0
    text = """name = bad
[ring]
component 0 = 2 x 2 x 2
mul 0 0 (1,0,0) (1,0,0) = (1,0,0)
mul 0 0 (1,0,0) (0,1,0) = (0,1,0)
mul 0 0 (1,0,0) (0,0,1) = (0,0,1)
mul 0 0 (0,1,0) (0,1,0) = (0,0,0)
mul 0 0 (0,1,0) (0,0,1) = (0,0,1)
mul 0 0 (0,0,1) (0,0,1) = (0,1,0)
one = 0:(1,0,0)
"""
    with pytest.raises(NonAssociative) as err:
        make(text)
    assert len(err.value.witness) == 3


def test_unity_outside_identity_component():
    text = INST_A.format(xx="(0)").replace("one = 0:(1)", "one = 1:(1)")
    with pytest.raises(BadUnity):
        make(text)


def test_incompatible_orders_rejected():
    text = """name = bad
[ring]
component 0 = 3
mul 0 0 (1) (1) = (1)
one = 0:(1)
[module]
component 0 = 2
act 0 0 (1) (1) = (1)
"""
    with pytest.raises(IllFormedConstants):
        make(text)
