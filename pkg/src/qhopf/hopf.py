"""Hopf structure on O(SU_q(2)) and O(U(1)), the surjection pi and Delta_R.

Coactions of O(U(1)) are handled as weight decompositions: the circle has the
grouplike basis {v^N}, so ``Delta_R(x) = sum_N x_N (x) v^N`` is recorded as
``{N: x_N}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebras import CIRCLE, SPHERE, SUQ2, laurent
from .ncpoly import NCPoly, Presentation, PresentationMismatch, normalize, weight_decomposition
from .qrat import QRat

q = QRat.q(1)
qi = QRat.q(-1)


def _acc(acc, key, c):
    v = acc.get(key)
    v = c if v is None else v + c
    if v.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = v


class TensorPoly:
    """A finite sum of pure tensors of normal words with QRat coefficients.

    ``legs`` is the tuple of presentations, one per tensor factor; keys of
    ``terms`` are tuples of words of the same length.
    """

    __slots__ = ("legs", "terms")

    def __init__(self, legs, terms=None):
        self.legs = tuple(legs)
        acc = {}
        for words, c in (terms or {}).items():
            c = QRat.coerce(c)
            expanded = [((), c)]
            for pres, w in zip(self.legs, words):
                nf = pres.normal_form_word(tuple(w))
                expanded = [(k + (u,), a * b) for k, a in expanded for u, b in nf.items()]
            for k, a in expanded:
                _acc(acc, k, a)
        self.terms = acc

    @classmethod
    def pure(cls, *polys):
        """The tensor product of NCPolys."""
        terms = {(): QRat(1)}
        for p in polys:
            terms = {k + (w,): a * b for k, a in terms.items() for w, b in normalize(p).terms.items()}
        return cls([p.pres for p in polys], terms)

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _acc(acc, k, c)
        return _tensor(self.legs, acc)

    def __neg__(self):
        return _tensor(self.legs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TensorPoly):
            c = QRat.coerce(other)
            return _tensor(self.legs, {k: v * c for k, v in self.terms.items() if not (v * c).is_zero()})
        self._check(other)
        acc = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                expanded = [((), c1 * c2)]
                for pres, u, w in zip(self.legs, k1, k2):
                    nf = pres.normal_form_word(u + w)
                    expanded = [(k + (x,), a * b) for k, a in expanded for x, b in nf.items()]
                for k, a in expanded:
                    _acc(acc, k, a)
        return _tensor(self.legs, acc)

    __rmul__ = __mul__

    def _check(self, other):
        if tuple(p.name for p in other.legs) != tuple(p.name for p in self.legs):
            raise PresentationMismatch("tensor legs differ")

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.legs == other.legs and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def map_leg(self, i, f):
        """Apply a linear map ``f: word -> NCPoly`` on leg ``i``."""
        acc = {}
        legs = list(self.legs)
        for key, c in self.terms.items():
            image = f(key[i])
            legs[i] = image.pres
            for w, b in image.terms.items():
                _acc(acc, key[:i] + (w,) + key[i + 1:], c * b)
        return _tensor(legs, acc)

    def contract(self) -> NCPoly:
        """Multiply the legs together (all legs must share one presentation)."""
        pres = self.legs[0]
        if any(p is not pres for p in self.legs):
            raise PresentationMismatch("contract needs equal legs")
        acc = {}
        for key, c in self.terms.items():
            for w, b in pres.normal_form_word(sum(key, ())).items():
                _acc(acc, w, c * b)
        return NCPoly(pres, acc, _normal=True)

    def text(self) -> str:
        from .ncpoly import to_text
        if not self.terms:
            return "0"
        parts = []
        for key, c in sorted(self.terms.items(), key=lambda kv: [p.order_key(w) for p, w in zip(self.legs, kv[0])]):
            legs = " (x) ".join(to_text(NCPoly(p, {w: 1}, _normal=True)) for p, w in zip(self.legs, key))
            parts.append(f"{c.text()} [{legs}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"TensorPoly({self.text()})"


def _tensor(legs, terms):
    t = TensorPoly.__new__(TensorPoly)
    t.legs = tuple(legs)
    t.terms = terms
    return t


class HopfAlgebra:
    """Generator tables for a presented Hopf algebra.

    ``coproduct_table`` maps a letter to ``{(w1, w2): coeff}``, ``counit_table``
    a letter to a scalar and ``antipode_table`` a letter to raw ``{word: coeff}``.
    """

    def __init__(self, pres: Presentation, coproduct_table, counit_table, antipode_table):
        self.pres = pres
        self.coproduct_table = coproduct_table
        self.counit_table = {k: QRat.coerce(v) for k, v in counit_table.items()}
        self.antipode_table = antipode_table
        self._delta_cache = {}

    def __repr__(self):
        return f"HopfAlgebra({self.pres.name})"

    def _check(self, x):
        if x.pres is not self.pres:
            raise PresentationMismatch(f"expected an element of {self.pres.name}, got {x.pres.name}")

    def coproduct(self, x: NCPoly) -> TensorPoly:
        self._check(x)
        result = TensorPoly([self.pres, self.pres])
        for w, c in normalize(x).terms.items():
            result = result + self._coproduct_word(w) * c
        return result

    def _coproduct_word(self, word):
        cached = self._delta_cache.get(word)
        if cached is not None:
            return cached
        if not word:
            value = TensorPoly([self.pres, self.pres], {((), ()): 1})
        else:
            head = self._coproduct_word(word[:-1])
            value = head * TensorPoly([self.pres, self.pres], self.coproduct_table[word[-1]])
        self._delta_cache[word] = value
        return value

    def counit(self, x: NCPoly) -> QRat:
        self._check(x)
        total = QRat()
        for w, c in normalize(x).terms.items():
            term = c
            for letter in w:
                term = term * self.counit_table[letter]
            total = total + term
        return total

    def antipode(self, x: NCPoly) -> NCPoly:
        self._check(x)
        acc = NCPoly(self.pres)
        for w, c in normalize(x).terms.items():
            image = NCPoly.scalar(self.pres, c)
            for letter in w:
                image = NCPoly(self.pres, self.antipode_table[letter]) * image
            acc = acc + image
        return acc

    def with_antipode(self, table) -> "HopfAlgebra":
        """A copy with a replaced antipode table (used for negative controls)."""
        return HopfAlgebra(self.pres, self.coproduct_table, self.counit_table, table)


SUQ2_HOPF = HopfAlgebra(
    SUQ2,
    {
        "a": {(("a",), ("a",)): 1, (("b",), ("c",)): 1},
        "b": {(("a",), ("b",)): 1, (("b",), ("d",)): 1},
        "c": {(("c",), ("a",)): 1, (("d",), ("c",)): 1},
        "d": {(("c",), ("b",)): 1, (("d",), ("d",)): 1},
    },
    {"a": 1, "b": 0, "c": 0, "d": 1},
    {"a": {("d",): 1}, "b": {("b",): -qi}, "c": {("c",): -q}, "d": {("a",): 1}},
)

CIRCLE_HOPF = HopfAlgebra(
    CIRCLE,
    {"v": {(("v",), ("v",)): 1}, "v*": {(("v*",), ("v*",)): 1}},
    {"v": 1, "v*": 1},
    {"v": {("v*",): 1}, "v*": {("v",): 1}},
)


def coproduct(x: NCPoly) -> TensorPoly:
    return _hopf_for(x).coproduct(x)


def counit(x: NCPoly) -> QRat:
    return _hopf_for(x).counit(x)


def antipode(x: NCPoly) -> NCPoly:
    return _hopf_for(x).antipode(x)


def _hopf_for(x):
    if x.pres is SUQ2:
        return SUQ2_HOPF
    if x.pres is CIRCLE:
        return CIRCLE_HOPF
    raise PresentationMismatch(f"{x.pres.name} carries no Hopf structure")


_PI = {"a": ("v",), "d": ("v*",)}


def project_pi(x: NCPoly) -> NCPoly:
    """The Hopf *-algebra surjection O(SU_q(2)) -> O(U(1)): a -> v, d -> v^-1, b, c -> 0."""
    if x.pres is not SUQ2:
        raise PresentationMismatch("project_pi is defined on suq2")
    acc = {}
    for w, c in normalize(x).terms.items():
        if any(letter not in _PI for letter in w):
            continue
        image = sum((_PI[letter] for letter in w), ())
        for u, b in CIRCLE.normal_form_word(image).items():
            _acc(acc, u, c * b)
    return NCPoly(CIRCLE, acc, _normal=True)


def coaction_R(x: NCPoly) -> dict:
    """Right O(U(1))-coaction as ``{N: x_N}`` with ``Delta_R(x_N) = x_N (x) v^N``."""
    if x.pres is not SUQ2:
        raise PresentationMismatch("coaction_R is defined on suq2")
    return weight_decomposition(x)


def coaction_via_coproduct(x: NCPoly) -> dict:
    """``(id (x) pi) o Delta`` evaluated literally and grouped by powers of v."""
    tensor = SUQ2_HOPF.coproduct(x).map_leg(1, lambda w: project_pi(NCPoly(SUQ2, {w: 1}, _normal=True)))
    parts = {}
    for (w, vw), c in tensor.terms.items():
        n = CIRCLE.word_weight(vw)
        parts.setdefault(n, {})
        _acc(parts[n], w, c)
    return {n: NCPoly(SUQ2, t, _normal=True) for n, t in sorted(parts.items()) if t}


def left_coaction(n: int) -> int:
    """Circle power in the left coaction of a weight-``n`` element: ``v^-n (x) p``."""
    return -n


# -- Podles sphere as coinvariants ------------------------------------------------------

_SPHERE_IMAGES = {
    "A": {("b", "c"): -qi},
    "B": {("b", "a"): -1},
    "B*": {("d", "c"): q},
}


def sphere_embed(x: NCPoly) -> NCPoly:
    """The *-morphism O(S_q^2) -> O(SU_q(2)) with A = -q^-1 b c, B = -b a."""
    if x.pres is not SPHERE:
        raise PresentationMismatch("sphere_embed expects a sphere element")
    acc = NCPoly(SUQ2)
    images = {k: NCPoly(SUQ2, v) for k, v in _SPHERE_IMAGES.items()}
    for w, c in normalize(x).terms.items():
        term = NCPoly.scalar(SUQ2, c)
        for letter in w:
            term = term * images[letter]
        acc = acc + term
    return acc


def sphere_preimage(x: NCPoly) -> NCPoly:
    """Inverse of :func:`sphere_embed` on coinvariant (weight-0) elements.

    The embedding sends each sphere normal word to a nonzero multiple of one
    weight-0 normal word of SU_q(2) (A^m B^n to a^n b^(m+n) c^m, A^m B*^n to
    d^n b^m c^(m+n)), so the preimage is read off term by term.
    """
    if x.pres is not SUQ2:
        raise PresentationMismatch("sphere_preimage expects an suq2 element")
    acc = NCPoly(SPHERE)
    for w, c in normalize(x).terms.items():
        na, nd = w.count("a"), w.count("d")
        nb, nc = w.count("b"), w.count("c")
        if SUQ2.word_weight(w) != 0:
            raise ValueError(f"{x} is not coaction-invariant")
        if na:
            pre = ("A",) * nc + ("B",) * na
        else:
            pre = ("A",) * nb + ("B*",) * nd
        unit = sphere_embed(NCPoly(SPHERE, {pre: 1}))
        acc = acc + NCPoly(SPHERE, {pre: c / unit.terms[w]})
    return acc


# -- axiom report -----------------------------------------------------------------------

@dataclass
class AxiomCheck:
    name: str
    generator: str
    passed: bool
    residual: str


@dataclass
class HopfReport:
    algebra: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


def hopf_axiom_report(hopf: HopfAlgebra = SUQ2_HOPF) -> HopfReport:
    """Coassociativity, counit laws and both antipode identities on generators."""
    pres = hopf.pres
    report = HopfReport(pres.name)

    def word_poly(w):
        return NCPoly(pres, {w: 1}, _normal=True)

    def counit_poly(w):
        return NCPoly.scalar(pres, hopf.counit(word_poly(w)))

    for letter in pres.letters:
        x = NCPoly.gen(pres, letter)
        dx = hopf.coproduct(x)
        name = pres.names[letter]

        left = TensorPoly(
            [pres] * 3,
            {(k1, k2, w2): c * b
             for (w1, w2), c in dx.terms.items()
             for (k1, k2), b in hopf._coproduct_word(w1).terms.items()})
        right = TensorPoly(
            [pres] * 3,
            {(w1, k1, k2): c * b
             for (w1, w2), c in dx.terms.items()
             for (k1, k2), b in hopf._coproduct_word(w2).terms.items()})
        diff = left - right
        report.checks.append(AxiomCheck("coassociativity", name, diff.is_zero(), diff.text()))

        for leg, label in ((0, "counit_left"), (1, "counit_right")):
            collapsed = dx.map_leg(leg, counit_poly).contract() - x
            report.checks.append(AxiomCheck(label, name, collapsed.is_zero(), collapsed.text()))

        unit = NCPoly.scalar(pres, hopf.counit(x))
        s_left = dx.map_leg(0, lambda w: hopf.antipode(word_poly(w))).contract() - unit
        s_right = dx.map_leg(1, lambda w: hopf.antipode(word_poly(w))).contract() - unit
        report.checks.append(AxiomCheck("antipode_left", name, s_left.is_zero(), s_left.text()))
        report.checks.append(AxiomCheck("antipode_right", name, s_right.is_zero(), s_right.text()))
    return report


def counit_poly_for(hopf, x):
    return NCPoly.scalar(hopf.pres, hopf.counit(x))


__all__ = [
    "TensorPoly", "HopfAlgebra", "SUQ2_HOPF", "CIRCLE_HOPF", "coproduct", "counit",
    "antipode", "project_pi", "coaction_R", "coaction_via_coproduct", "left_coaction",
    "sphere_embed", "sphere_preimage", "hopf_axiom_report", "HopfReport", "laurent",
]
