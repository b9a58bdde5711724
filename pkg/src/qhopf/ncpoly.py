"""Noncommutative polynomials over Q(q) and PBW rewriting.

A :class:`Presentation` fixes an alphabet, oriented rewrite rules, a star map
and a U(1)-weight per letter.  Words are tuples of letter strings.  An
:class:`NCPoly` is a finite map ``word -> QRat``; arithmetic on NCPolys
always returns normal forms, while raw (unreduced) polynomials can be built
with :meth:`NCPoly.raw` and fed to :func:`normalize`.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .qrat import QRat

Word = tuple


class PresentationMismatch(ValueError):
    """A letter or polynomial does not belong to the expected presentation."""


class NonHomogeneous:
    """Marker returned by :func:`weight` for mixed-weight (or zero) input."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NonHomogeneous"


NON_HOMOGENEOUS = NonHomogeneous()


def _raw_terms(data):
    """Coerce ``{word: scalar}`` data into ``{tuple: QRat}`` without zeros."""
    out = {}
    for w, c in data.items():
        c = QRat.coerce(c)
        if c.is_zero():
            continue
        w = tuple(w)
        out[w] = out.get(w, QRat()) + c
        if out[w].is_zero():
            del out[w]
    return out


class Presentation:
    """Generators, rewrite rules, star map and weights of one algebra.

    ``rules`` maps a left-hand word to raw right-hand data ``{word: scalar}``.
    ``degrees`` weight the letters in the word order (weighted degree first,
    then lexicographic by position in ``letters``).  ``names`` gives the
    ASCII spelling of each letter used by the text form and the parser.
    """

    def __init__(self, name, letters, rules, star, weights, *, degrees=None,
                 names=None, relations=(), check_order=True):
        self.name = name
        self.letters = tuple(letters)
        self._index = {x: i for i, x in enumerate(self.letters)}
        self.degrees = dict(degrees or {x: 1 for x in self.letters})
        self.weights = dict(weights)
        self.names = dict(names or {x: x for x in self.letters})
        self.rules = {tuple(lhs): _raw_terms(rhs) for lhs, rhs in rules.items()}
        self.star_map = {x: _raw_terms(v) for x, v in star.items()}
        self.relations = [(name, _raw_terms(rel)) for name, rel in relations]
        self._rule_lengths = sorted({len(lhs) for lhs in self.rules})
        self._nf_cache = {}
        for x in self.letters:
            if x not in self.weights or x not in self.degrees:
                raise ValueError(f"letter {x!r} lacks a weight or degree")
        for lhs, rhs in self.rules.items():
            self.check_word(lhs)
            for w in rhs:
                self.check_word(w)
                if check_order and not self.order_key(w) < self.order_key(lhs):
                    raise ValueError(f"rule {lhs} -> {w} does not decrease the word order")
                if self.word_weight(w) != self.word_weight(lhs):
                    raise ValueError(f"rule {lhs} -> {w} is not weight-homogeneous")

    def __repr__(self):
        return f"Presentation({self.name!r})"

    # -- words --------------------------------------------------------------
    def check_word(self, word):
        for x in word:
            if x not in self._index:
                raise PresentationMismatch(f"unknown generator {x!r} for {self.name}")

    def order_key(self, word):
        return (sum(self.degrees[x] for x in word), tuple(self._index[x] for x in word))

    def word_weight(self, word) -> int:
        return sum(self.weights[x] for x in word)

    def redexes(self, word):
        """All ``(position, lhs)`` pairs where a rule applies to ``word``."""
        found = []
        for i in range(len(word)):
            for k in self._rule_lengths:
                lhs = word[i:i + k]
                if len(lhs) == k and lhs in self.rules:
                    found.append((i, lhs))
        return found

    def rewrite_at(self, word, i, lhs):
        """One rewrite step at position ``i``; returns raw ``{word: QRat}``."""
        head, tail = word[:i], word[i + len(lhs):]
        return {head + w + tail: c for w, c in self.rules[lhs].items()}

    def is_normal(self, word) -> bool:
        return not self.redexes(word)

    # -- normal forms -------------------------------------------------------
    def normal_form_word(self, word):
        """Normal form of a single word as ``{word: QRat}`` (memoised)."""
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        result = self._reduce(word)
        self._nf_cache[word] = result
        return result

    def _reduce(self, word):
        # reduce the prefix first, then push the last letter through
        if not word:
            return {(): QRat(1)}
        if len(word) == 1:
            self.check_word(word)
            return self._reduce_redex(word)
        prefix = self.normal_form_word(word[:-1])
        last = word[-1:]
        self.check_word(last)
        acc = {}
        for u, c in prefix.items():
            _accumulate(acc, self._reduce_redex(u + last), c)
        return acc

    def _reduce_redex(self, word):
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        found = self.redexes(word)
        if not found:
            result = {word: QRat(1)}
        else:
            i, lhs = found[0]
            result = {}
            for w, c in self.rewrite_at(word, i, lhs).items():
                _accumulate(result, self.normal_form_word(w), c)
        self._nf_cache[word] = result
        return result

    def normal_form(self, terms):
        acc = {}
        for w, c in terms.items():
            _accumulate(acc, self.normal_form_word(w), c)
        return acc


def _accumulate(acc, terms, scale):
    for w, c in terms.items():
        v = acc.get(w)
        v = c * scale if v is None else v + c * scale
        if v.is_zero():
            acc.pop(w, None)
        else:
            acc[w] = v


class NCPoly:
    """An element of a presented algebra, kept in normal form."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms=None, *, _normal=False):
        self.pres = pres
        if _normal:
            # trusted internal path: already reduced, no zero coefficients
            self.terms = terms if terms is not None else {}
            return
        terms = _raw_terms(terms or {})
        for w in terms:
            pres.check_word(w)
        self.terms = pres.normal_form(terms)

    @classmethod
    def raw(cls, pres, terms):
        """An unreduced polynomial (for exercising rewriting strategies)."""
        obj = cls.__new__(cls)
        obj.pres = pres
        obj.terms = _raw_terms(terms)
        for w in obj.terms:
            pres.check_word(w)
        return obj

    @classmethod
    def word(cls, pres, *letters, coeff=1):
        return cls(pres, {tuple(letters): coeff})

    @classmethod
    def scalar(cls, pres, c):
        return cls(pres, {(): c})

    @classmethod
    def gen(cls, pres, letter):
        return cls(pres, {(letter,): 1})

    # -- arithmetic -----------------------------------------------------------
    def _same(self, other):
        if isinstance(other, NCPoly):
            if other.pres is not self.pres:
                raise PresentationMismatch(
                    f"cannot combine {self.pres.name} with {other.pres.name}")
            return other
        return NCPoly(self.pres, {(): QRat.coerce(other)}, _normal=True)

    def __add__(self, other):
        other = self._same(other)
        acc = dict(self.terms)
        _accumulate(acc, other.terms, QRat(1))
        return NCPoly(self.pres, acc, _normal=True)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.pres, {w: -c for w, c in self.terms.items()}, _normal=True)

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self._scaled(QRat.coerce(other))
        other = self._same(other)
        acc = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _accumulate(acc, self.pres.normal_form_word(w1 + w2), c1 * c2)
        return NCPoly(self.pres, acc, _normal=True)

    def __rmul__(self, other):
        return self._scaled(QRat.coerce(other))

    def _scaled(self, c):
        if c.is_zero():
            return NCPoly(self.pres, {}, _normal=True)
        return NCPoly(self.pres, {w: v * c for w, v in self.terms.items()}, _normal=True)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of algebra elements are undefined")
        result = NCPoly.scalar(self.pres, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            if other.pres is not self.pres:
                return False
            return normalize(self).terms == normalize(other).terms
        try:
            other = self._same(other)
        except TypeError:
            return NotImplemented
        return normalize(self).terms == other.terms

    def __hash__(self):
        return hash((self.pres.name, frozenset(normalize(self).terms.items())))

    def is_zero(self) -> bool:
        return not normalize(self).terms

    def constant_term(self) -> QRat:
        return normalize(self).terms.get((), QRat())

    def support(self):
        return sorted(self.terms, key=self.pres.order_key)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    # -- text -----------------------------------------------------------------
    def text(self) -> str:
        return to_text(self)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"NCPoly[{self.pres.name}]({to_text(self)!r})"


def normalize(x: NCPoly) -> NCPoly:
    """Unique normal form of ``x`` in its presentation."""
    return NCPoly(x.pres, x.pres.normal_form(x.terms), _normal=True)


def star(x: NCPoly) -> NCPoly:
    """Anti-multiplicative involution; q-rational scalars are fixed."""
    pres = x.pres
    acc = {}
    for w, c in x.terms.items():
        image = {(): QRat(1)}
        for letter in reversed(w):
            try:
                s = pres.star_map[letter]
            except KeyError:
                raise PresentationMismatch(f"{pres.name} has no star for {letter!r}") from None
            nxt = {}
            for u, a in image.items():
                for v, b in s.items():
                    _accumulate(nxt, {u + v: QRat(1)}, a * b)
            image = nxt
        _accumulate(acc, pres.normal_form(image), c)
    return NCPoly(pres, acc, _normal=True)


def weight(x: NCPoly):
    """Common U(1)-weight of all terms of the normal form, or NON_HOMOGENEOUS."""
    terms = normalize(x).terms
    weights = {x.pres.word_weight(w) for w in terms}
    if len(weights) != 1:
        return NON_HOMOGENEOUS
    return weights.pop()


def weight_decomposition(x: NCPoly) -> dict:
    """Split ``x`` into homogeneous parts ``{weight: NCPoly}``."""
    parts = {}
    for w, c in normalize(x).terms.items():
        parts.setdefault(x.pres.word_weight(w), {})[w] = c
    return {n: NCPoly(x.pres, t, _normal=True) for n, t in sorted(parts.items())}


# -- canonical text --------------------------------------------------------------

def word_text(pres: Presentation, word) -> str:
    if not word:
        return "1"
    parts = []
    for letter, run in itertools.groupby(word):
        k = len(list(run))
        name = pres.names[letter]
        parts.append(name if k == 1 else f"{name}^{k}")
    return " ".join(parts)


def to_text(x: NCPoly) -> str:
    """Canonical text: terms in increasing word order, Laurent-style scalars."""
    terms = normalize(x).terms
    if not terms:
        return "0"
    out = []
    for w in sorted(terms, key=x.pres.order_key):
        c = terms[w]
        ctext = c.text()
        negative = ctext.startswith("-")
        if negative:
            ctext = ctext[1:]
        if w:
            body = word_text(x.pres, w) if ctext == "1" else f"{ctext} {word_text(x.pres, w)}"
        else:
            body = ctext
        if not out:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


# -- confluence -----------------------------------------------------------------------

@dataclass
class Divergence:
    word: tuple
    position: int
    rule: tuple
    expected: str
    got: str


@dataclass
class ConfluenceReport:
    presentation: str
    words_checked: int
    divergences: list = field(default_factory=list)
    relation_failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.divergences and not self.relation_failures

    def witnesses(self):
        """Witness words: divergent words and the offending rule left sides."""
        found = [d.word for d in self.divergences] + [d.rule for d in self.divergences]
        found += [w for _, w, _ in self.relation_failures]
        return found


def all_words(pres: Presentation, max_len: int):
    for n in range(max_len + 1):
        yield from itertools.product(pres.letters, repeat=n)


def check_confluence(pres: Presentation, max_len: int = 6, samples=None,
                     seed: int = 0) -> ConfluenceReport:
    """Check that every one-step reduct of every word has the same normal form.

    Together with termination this is equivalent to all maximal rewriting
    strategies agreeing on each checked word.  ``samples=None`` checks every
    word up to ``max_len``; otherwise a seeded random sample is used.  The
    declared relations of the presentation are also normalised and must
    vanish.
    """
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    if samples is None:
        words = all_words(pres, max_len)
    else:
        rng = random.Random(seed)
        words = (tuple(rng.choice(pres.letters) for _ in range(rng.randint(0, max_len)))
                 for _ in range(samples))
    report = ConfluenceReport(pres.name, 0)
    for word in words:
        report.words_checked += 1
        found = pres.redexes(word)
        if len(found) < 2:
            continue
        expected = pres.normal_form_word(word)
        for i, lhs in found:
            got = pres.normal_form(pres.rewrite_at(word, i, lhs))
            if got != expected:
                report.divergences.append(Divergence(
                    word, i, lhs,
                    to_text(NCPoly(pres, expected, _normal=True)),
                    to_text(NCPoly(pres, got, _normal=True))))
                break
    for name, rel in pres.relations:
        value = normalize(NCPoly.raw(pres, rel))
        if not value.is_zero():
            lead = max(rel, key=pres.order_key)
            report.relation_failures.append((name, lead, to_text(value)))
    return report
