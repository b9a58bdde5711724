import pytest
from hypothesis import given

from qhopf.algebras import CIRCLE, SPHERE, SUQ2, gens, laurent
from qhopf.hopf import (
    CIRCLE_HOPF, SUQ2_HOPF, TensorPoly, antipode, coaction_R, coaction_via_coproduct, coproduct,
    counit, hopf_axiom_report, left_coaction, project_pi, sphere_embed, sphere_preimage,
)
from qhopf.ncpoly import NCPoly, PresentationMismatch, normalize, star, weight
from qhopf.qrat import QRat

from strategies import polys

q = QRat.q(1)
G = gens(SUQ2)
a, b, c, d = G["a"], G["b"], G["c"], G["d"]
one = NCPoly.scalar(SUQ2, 1)


def _tensor_product_oracle(x, y):
    """Independent legwise product of two tensors given as lists of (c, p1, p2)."""
    out = TensorPoly([SUQ2, SUQ2])
    for c1, p1, q1 in x:
        for c2, p2, q2 in y:
            out = out + TensorPoly.pure(p1 * p2, q1 * q2) * (c1 * c2)
    return out


def test_coproduct_generators():
    assert coproduct(a) == TensorPoly.pure(a, a) + TensorPoly.pure(b, c)
    assert coproduct(one) == TensorPoly.pure(one, one)


def test_coproduct_of_product_matches_oracle():
    da = [(QRat(1), a, a), (QRat(1), b, c)]
    db = [(QRat(1), a, b), (QRat(1), b, d)]
    assert coproduct(a * b) == _tensor_product_oracle(da, db)


def test_counit_examples():
    assert counit(a) == 1
    assert counit(b) == 0
    assert counit(a * d - q * b * c) == 1


def test_antipode_examples():
    assert antipode(b) == -QRat.q(-1) * b
    assert antipode(one) == one
    assert antipode(a * b) == antipode(b) * antipode(a)
    assert antipode(a * b) == normalize(-QRat.q(-1) * b * d)


def test_project_pi_examples():
    v = NCPoly.gen(CIRCLE, "v")
    assert project_pi(a) == v
    assert project_pi(b * a * d).is_zero()
    assert project_pi(c).is_zero()
    assert project_pi(a * d) == NCPoly.scalar(CIRCLE, 1)
    assert project_pi(d) == laurent(CIRCLE, -1)


def test_coaction_examples():
    assert coaction_R(a) == {1: a}
    assert coaction_R(b * c) == {0: normalize(b * c)}
    assert coaction_R(a + d) == {1: a, -1: d}


def test_coaction_literal_route_agrees():
    for x in (a * b + c * c * d, a * a * d + b, d * d * c - q * b):
        assert coaction_via_coproduct(x) == coaction_R(x)


def test_left_coaction_sign():
    assert left_coaction(3) == -3


def test_hopf_axioms_suq2_and_circle():
    assert hopf_axiom_report(SUQ2_HOPF).passed
    assert hopf_axiom_report(CIRCLE_HOPF).passed


def test_corrupted_antipode_fails_at_a():
    bad = SUQ2_HOPF.with_antipode({**SUQ2_HOPF.antipode_table, "a": {("a",): 1}})
    report = hopf_axiom_report(bad)
    assert not report.passed
    failing = {(f.name, f.generator) for f in report.failures()}
    assert ("antipode_left", "a") in failing
    assert all(f.name.startswith("antipode") for f in report.failures())


def test_wrong_algebra_is_rejected():
    with pytest.raises(PresentationMismatch):
        coproduct(NCPoly.gen(SPHERE, "A"))
    with pytest.raises(PresentationMismatch):
        project_pi(NCPoly.gen(CIRCLE, "v"))


@given(polys(SUQ2, 2, 3), polys(SUQ2, 2, 3))
def test_coproduct_is_multiplicative(x, y):
    assert coproduct(x * y) == coproduct(x) * coproduct(y)


@given(polys(SUQ2, 3, 3))
def test_counit_laws_on_random_elements(x):
    dx = coproduct(x)
    eps = lambda w: NCPoly.scalar(SUQ2, counit(NCPoly(SUQ2, {w: 1})))
    assert dx.map_leg(0, eps).contract() == normalize(x)
    assert dx.map_leg(1, eps).contract() == normalize(x)


@given(polys(SUQ2, 2, 3), polys(SUQ2, 2, 3))
def test_coaction_is_graded(x, y):
    dx, dy, dxy = coaction_R(x), coaction_R(y), coaction_R(x * y)
    conv = {}
    for m, xm in dx.items():
        for n, yn in dy.items():
            conv[m + n] = conv.get(m + n, NCPoly(SUQ2)) + xm * yn
    conv = {k: v for k, v in conv.items() if not v.is_zero()}
    assert dxy == conv


@given(polys(SPHERE, 3, 3))
def test_sphere_round_trip_through_coinvariants(x):
    image = sphere_embed(x)
    assert set(coaction_R(image)) <= {0}
    assert sphere_preimage(image) == normalize(x)


def test_sphere_embedding_is_a_star_morphism():
    s = gens(SPHERE)
    for x, y in [(s["A"], s["B"]), (s["B*"], s["A"]), (s["B"], s["B*"])]:
        assert sphere_embed(x * y) == sphere_embed(x) * sphere_embed(y)
        assert sphere_embed(star(x)) == star(sphere_embed(x))


def test_non_invariant_has_no_preimage():
    with pytest.raises(ValueError):
        sphere_preimage(a * b * b)


def test_weight_matches_coaction_on_homogeneous():
    for x in (a, b * c, a * a * b, d * c):
        assert list(coaction_R(x)) == [weight(x)]
