import json

import pytest
from hypothesis import given

from qhopf.algebras import DISCEXT, ISOMETRY, SUQ2, gens
from qhopf.ncpoly import NCPoly, star
from qhopf.pullback import (
    FibreElement, FibreMatrix, IncompatiblePair, embed_iota, fibre_to_json, iota_rank_check,
    iso_phi, iso_psi, ln_membership, make_fibre, pbw_words,
)
from qhopf.qrat import QRat

from strategies import polys

q = QRat.q(1)
G = gens(SUQ2)
Z = gens(DISCEXT)
UNIT = FibreElement.unit()


def test_make_fibre_examples():
    assert make_fibre({1: (Z["z*"], 1)}) == embed_iota(G["a"])
    assert make_fibre({0: (NCPoly.scalar(DISCEXT, 1), 1)}) == UNIT
    with pytest.raises(IncompatiblePair) as info:
        make_fibre({1: (Z["z"], 1)})
    assert info.value.n == 1


def test_iota_examples():
    assert embed_iota(G["a"]).components == {1: (Z["z*"], QRat(1))}
    assert embed_iota(star(G["a"]) * G["a"]) == make_fibre({0: (Z["z"] * Z["z*"], 1)})
    assert embed_iota(G["a"] * G["d"] - q * G["b"] * G["c"]) == UNIT
    assert embed_iota(G["c"]) == make_fibre({1: (Z["s"], 0)})


def test_ln_membership_examples():
    assert ln_membership(embed_iota(G["c"]), 1)
    assert ln_membership(UNIT, 0)
    assert not ln_membership(embed_iota(G["a"] + G["d"]), 1)


def test_iso_psi_phi():
    k = 1 - Z["z"] * Z["z*"]
    assert iso_psi(make_fibre({0: (k, 0)})) == k
    assert iso_phi(NCPoly.scalar(DISCEXT, 1)) == UNIT
    x = make_fibre({0: (Z["z"] * Z["z*"], 1)})
    assert iso_phi(iso_psi(x)) == x
    assert iso_psi(iso_phi(k)) == k
    with pytest.raises(ValueError):
        iso_psi(embed_iota(G["a"]))


@given(polys(SUQ2, 3, 3), polys(SUQ2, 3, 3))
def test_iota_is_a_star_morphism(x, y):
    assert embed_iota(x * y) == embed_iota(x) * embed_iota(y)
    assert embed_iota(star(x)) == embed_iota(x).star()


@given(polys(SUQ2, 3, 3), polys(SUQ2, 3, 3))
def test_products_stay_compatible(x, y):
    prod = embed_iota(x) * embed_iota(y)
    assert prod.is_compatible()
    assert prod.star().is_compatible()


@given(polys(SUQ2, 3, 3), polys(SUQ2, 3, 3))
def test_grading_is_additive(x, y):
    ix, iy = embed_iota(x), embed_iota(y)
    for m, comp_m in ix.components.items():
        for n, comp_n in iy.components.items():
            part = FibreElement(DISCEXT, {m: comp_m}) * FibreElement(DISCEXT, {n: comp_n})
            assert ln_membership(part, m + n)


def test_iota_images_of_pbw_basis_are_independent(seed):
    for qv, rank, count in iota_rank_check(5, 3, seed):
        assert rank == count, qv


def test_pbw_word_count():
    # sum over total degree t <= 5 of (t+1)(t+2)/2 + t(t+1)/2
    assert len(pbw_words(5)) == sum((t + 1) ** 2 for t in range(6))


def test_json_shape():
    data = json.loads(fibre_to_json(embed_iota(G["a"] + G["c"])))
    assert data == {"components": [{"N": 1, "t": "s + z'", "alpha": "1/1"}]}


def test_fibre_matrix_operations():
    p = FibreMatrix([[UNIT]])
    assert p.is_idempotent() and p.is_selfadjoint()
    s = p.direct_sum(FibreMatrix([[FibreElement(DISCEXT)]]))
    assert s.shape == (2, 2) and s.is_idempotent()
    assert p.padded(2) == s


def test_isometry_fibres():
    S = gens(ISOMETRY)
    x = FibreElement(ISOMETRY, {1: (S["S*"], 1), -1: (S["S"], 1)})
    assert (x * x.star()).is_compatible()
    with pytest.raises(IncompatiblePair):
        FibreElement(ISOMETRY, {1: (S["S"], 1)})
