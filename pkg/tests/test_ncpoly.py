import random
from itertools import product

import pytest
from hypothesis import given

from qhopf.algebras import CIRCLE, DISC, DISCEXT, ISOMETRY, REGISTRY, SPHERE, SUQ2, gens
from qhopf.ncpoly import (
    NON_HOMOGENEOUS, NCPoly, Presentation, PresentationMismatch, check_confluence, normalize,
    star, to_text, weight,
)
from qhopf.qrat import QRat

from strategies import homogeneous, polys

q = QRat.q(1)
G = gens(SUQ2)
a, b, c, d = G["a"], G["b"], G["c"], G["d"]


# -- an independent oracle: every reduction path ---------------------------------------

def _apply_rule(pres, word, i, lhs):
    rhs = pres.rules[lhs]
    return {word[:i] + w + word[i + len(lhs):]: coef for w, coef in rhs.items()}


def _all_results(pres, terms, memo=None):
    """All normal forms reachable by any sequence of single rewrites."""
    memo = {} if memo is None else memo
    key = frozenset(terms.items())
    if key in memo:
        return memo[key]
    results = set()
    for word in terms:
        for i in range(len(word)):
            for lhs in pres.rules:
                if word[i:i + len(lhs)] != lhs:
                    continue
                new = dict(terms)
                coef = new.pop(word)
                for w, x in _apply_rule(pres, word, i, lhs).items():
                    new[w] = new.get(w, QRat()) + coef * x
                    if new[w].is_zero():
                        del new[w]
                results |= _all_results(pres, new, memo)
    if not results:
        results = {key}
    memo[key] = results
    return results


def test_normalize_relation_gives_one():
    assert normalize(a * d - q * b * c) == NCPoly.scalar(SUQ2, 1)
    assert to_text(a * d - q * b * c) == "1"


def test_normalize_unit_is_fixed():
    one = NCPoly.scalar(SUQ2, 1)
    assert normalize(one).terms == {(): QRat(1)}


def test_normalize_dab_against_every_strategy():
    raw = NCPoly.raw(SUQ2, {("d", "a", "b"): 1})
    outcomes = _all_results(SUQ2, raw.terms)
    assert len(outcomes) == 1
    (only,) = outcomes
    assert dict(only) == normalize(raw).terms
    assert to_text(raw) == "b + q^-1 b^2 c"


def test_normalize_is_idempotent_on_examples():
    x = NCPoly.raw(SUQ2, {("d", "a", "b", "c", "a"): 1, ("c", "b", "a"): q})
    assert normalize(normalize(x)) == normalize(x)


def test_unknown_generator_is_rejected():
    with pytest.raises(PresentationMismatch):
        NCPoly.raw(SUQ2, {("z",): 1})
    with pytest.raises(PresentationMismatch):
        a * NCPoly.gen(DISC, "z")


def test_star_examples():
    assert star(a) == d
    assert star(star(b)) == b
    assert star(a * b) == -q * c * d
    assert star(b) == -q * c


def test_weight_examples():
    assert weight(a) == 1
    assert weight(b * c) == 0
    assert weight(a + b) is NON_HOMOGENEOUS
    assert weight(NCPoly(SUQ2)) is NON_HOMOGENEOUS


@pytest.mark.parametrize("pres", list(REGISTRY.values()), ids=lambda p: p.name)
def test_declared_relations_vanish(pres):
    for name, rel in pres.relations:
        assert normalize(NCPoly.raw(pres, rel)).is_zero(), name


def test_redundant_suq2_relation_is_declared_and_holds():
    names = [n for n, _ in SUQ2.relations]
    assert "d a - q^-1 b c = 1" in names
    assert normalize(d * a - QRat.q(-1) * b * c) == NCPoly.scalar(SUQ2, 1)


@pytest.mark.parametrize("pres", list(REGISTRY.values()), ids=lambda p: p.name)
def test_rules_decrease_order_and_keep_weight(pres):
    for lhs, rhs in pres.rules.items():
        for w in rhs:
            assert pres.order_key(w) < pres.order_key(lhs)
            assert pres.word_weight(w) == pres.word_weight(lhs)


def test_circle_is_confluent():
    assert check_confluence(CIRCLE, 6).passed


@pytest.mark.parametrize("pres", [SPHERE, DISC, DISCEXT, ISOMETRY], ids=lambda p: p.name)
def test_small_presentations_confluent(pres):
    report = check_confluence(pres, 6)
    assert report.passed, report.divergences[:3]


def test_confluence_needs_length_three():
    with pytest.raises(ValueError):
        check_confluence(SUQ2, 2)


def test_sampled_confluence_mode():
    report = check_confluence(SUQ2, 7, samples=300, seed=3)
    assert report.words_checked == 300 and report.passed


def test_oracle_agrees_with_engine_on_short_words():
    # exhaustive path enumeration for every suq2 word of length <= 3
    for n in range(4):
        for w in product(SUQ2.letters, repeat=n):
            outcomes = _all_results(SUQ2, {w: QRat(1)})
            assert outcomes == {frozenset(SUQ2.normal_form_word(w).items())}, w


def _corrupted():
    rules = dict(SUQ2.rules)
    rules[("a", "d")] = {("b", "c"): q}
    return Presentation("suq2-bad", SUQ2.letters, rules, SUQ2.star_map, SUQ2.weights,
                        degrees=SUQ2.degrees, relations=[(n, r) for n, r in SUQ2.relations])


def test_misoriented_rule_is_caught_with_witness():
    report = check_confluence(_corrupted(), 4)
    assert not report.passed
    assert ("a", "d") in report.witnesses()
    assert report.divergences


def test_corrupted_rule_differs_from_the_correct_one():
    bad = _corrupted()
    good = SUQ2.normal_form_word(("a", "d"))
    assert bad.normal_form_word(("a", "d")) != good


# -- termination ------------------------------------------------------------------------

def _potential_bound(pres, terms):
    """A computable bound on the number of rewrite steps from ``terms``.

    With words ranked by the order and B = 1 + the longest right-hand side,
    sum over the support of B^rank strictly drops at every step.
    """
    top = max(pres.order_key(w)[0] for w in terms)
    smaller = [w for n in range(top + 1) for w in product(pres.letters, repeat=n)
               if pres.order_key(w)[0] <= top]
    ranks = {w: r for r, w in enumerate(sorted(smaller, key=pres.order_key))}
    base = 1 + max(len(rhs) for rhs in pres.rules.values())
    return sum(base ** ranks[w] for w in terms)


def _random_walk(pres, terms, rng):
    steps = 0
    terms = dict(terms)
    while True:
        options = [(w, i, lhs) for w in terms for i, lhs in pres.redexes(w)]
        if not options:
            return steps, terms
        w, i, lhs = rng.choice(options)
        coef = terms.pop(w)
        for u, x in pres.rewrite_at(w, i, lhs).items():
            terms[u] = terms.get(u, QRat()) + coef * x
            if terms[u].is_zero():
                del terms[u]
        steps += 1


@pytest.mark.parametrize("pres", [SUQ2, SPHERE, DISCEXT, DISC], ids=lambda p: p.name)
def test_random_reductions_terminate_within_bound(pres, seed):
    rng = random.Random(seed)
    for _ in range(25):
        word = tuple(rng.choice(pres.letters) for _ in range(rng.randint(1, 4)))
        bound = _potential_bound(pres, {word: 1})
        steps, final = _random_walk(pres, {word: QRat(1)}, rng)
        assert steps <= bound
        assert final == pres.normal_form_word(word)


# -- ring laws --------------------------------------------------------------------------

@given(polys(SUQ2), polys(SUQ2), polys(SUQ2))
def test_ring_laws_suq2(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(polys(SPHERE), polys(SPHERE), polys(SPHERE))
def test_ring_laws_sphere(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(polys(DISCEXT), polys(DISCEXT))
def test_star_is_antimultiplicative(x, y):
    assert star(x * y) == star(y) * star(x)
    assert star(star(x)) == normalize(x)


@given(polys(SUQ2), polys(SUQ2))
def test_star_antimultiplicative_suq2(x, y):
    assert star(x * y) == star(y) * star(x)


@given(homogeneous(SUQ2), homogeneous(SUQ2))
def test_weight_is_additive(x, y):
    wx, wy, wxy = weight(x), weight(y), weight(x * y)
    if wx is not NON_HOMOGENEOUS and wy is not NON_HOMOGENEOUS and wxy is not NON_HOMOGENEOUS:
        assert wxy == wx + wy


@given(polys(SUQ2))
def test_normalize_idempotent(x):
    assert normalize(normalize(x)).terms == normalize(x).terms
