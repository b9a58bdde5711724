"""Graded fibre products over the circle.

An element of the pullback algebra is a finite family ``{N: (t_N, alpha_N)}``
where ``t_N`` lives in a Toeplitz-type algebra (the extended disc, or the
isometry algebra), ``alpha_N`` is a scalar, and both carry an implicit factor
``v^N``.  Gluing requires ``symbol(t_N) = alpha_N u^-N``.
"""
from __future__ import annotations

import json
import random
from fractions import Fraction
from itertools import product as iproduct

from .algebras import DISCEXT, SUQ2, SYMBOL_CIRCLE, laurent
from .ncpoly import NCPoly, PresentationMismatch, normalize, star, to_text
from .oprep import symbol
from .qrat import QRat


class IncompatiblePair(ValueError):
    def __init__(self, n, sym, alpha):
        self.n, self.symbol, self.alpha = n, sym, alpha
        super().__init__(f"component {n}: symbol {to_text(sym)} does not match {alpha.text()} u^{-n}")


class FibreElement:
    """A finitely supported graded element of the pullback algebra."""

    __slots__ = ("pres", "components")

    def __init__(self, pres, components=None, *, check=True):
        self.pres = pres
        comps = {}
        for n, (t, alpha) in (components or {}).items():
            if not isinstance(t, NCPoly):
                t = NCPoly.scalar(pres, t)
            if t.pres is not pres:
                raise PresentationMismatch(f"component {n} lives in {t.pres.name}, not {pres.name}")
            t = normalize(t)
            alpha = QRat.coerce(alpha)
            if t.is_zero() and alpha.is_zero():
                continue
            if check:
                sym = symbol(t)
                if sym != laurent(SYMBOL_CIRCLE, -n, alpha):
                    raise IncompatiblePair(n, sym, alpha)
            comps[int(n)] = (t, alpha)
        self.components = dict(sorted(comps.items()))

    @classmethod
    def unit(cls, pres=DISCEXT):
        return cls(pres, {0: (NCPoly.scalar(pres, 1), 1)})

    @classmethod
    def zero(cls, pres=DISCEXT):
        return cls(pres)

    def _check(self, other):
        if not isinstance(other, FibreElement) or other.pres is not self.pres:
            raise PresentationMismatch("fibre elements over different algebras")

    def __add__(self, other):
        self._check(other)
        comps = dict(self.components)
        for n, (t, a) in other.components.items():
            if n in comps:
                t0, a0 = comps[n]
                comps[n] = (t0 + t, a0 + a)
            else:
                comps[n] = (t, a)
        return FibreElement(self.pres, comps, check=False)

    def __neg__(self):
        return FibreElement(self.pres, {n: (-t, -a) for n, (t, a) in self.components.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, FibreElement):
            c = QRat.coerce(other)
            return FibreElement(self.pres, {n: (t * c, a * c) for n, (t, a) in self.components.items()},
                                check=False)
        self._check(other)
        comps = {}
        for (m, (t1, a1)), (n, (t2, a2)) in iproduct(self.components.items(), other.components.items()):
            t, a = t1 * t2, a1 * a2
            if m + n in comps:
                t0, a0 = comps[m + n]
                comps[m + n] = (t0 + t, a0 + a)
            else:
                comps[m + n] = (t, a)
        return FibreElement(self.pres, comps, check=False)

    def __rmul__(self, other):
        return self * other

    def star(self):
        return FibreElement(self.pres, {-n: (star(t), a) for n, (t, a) in self.components.items()},
                            check=False)

    def __eq__(self, other):
        if not isinstance(other, FibreElement):
            return NotImplemented
        return self.pres is other.pres and self.components == other.components

    def __hash__(self):
        return hash(tuple((n, t, a) for n, (t, a) in self.components.items()))

    def is_zero(self):
        return not self.components

    def is_compatible(self):
        try:
            FibreElement(self.pres, self.components)
        except IncompatiblePair:
            return False
        return True

    @property
    def support(self):
        return set(self.components)

    def component(self, n):
        return self.components.get(n, (NCPoly(self.pres), QRat()))

    def text(self):
        if not self.components:
            return "0"
        return " + ".join(f"[{n}: ({to_text(t)}, {a.text()})]" for n, (t, a) in self.components.items())

    def to_json(self):
        return {"components": [{"N": n, "t": to_text(t), "alpha": _alpha_text(a)}
                               for n, (t, a) in self.components.items()]}

    def __repr__(self):
        return f"FibreElement({self.text()})"


def _alpha_text(a: QRat) -> str:
    from .qrat import poly_text
    return f"{poly_text(a.num)}/{poly_text(a.den)}"


def make_fibre(components, pres=DISCEXT) -> FibreElement:
    return FibreElement(pres, components)


def fibre_to_json(x: FibreElement) -> str:
    return json.dumps(x.to_json())


# -- the embedding of O(SU_q(2)) -------------------------------------------------------

def _iota_gens():
    s, z, zs = (NCPoly.gen(DISCEXT, x) for x in ("s", "z", "z*"))
    q = QRat.q(1)
    return {
        "a": FibreElement(DISCEXT, {1: (zs, 1)}),
        "b": FibreElement(DISCEXT, {-1: (s * (-q), 0)}),
        "c": FibreElement(DISCEXT, {1: (s, 0)}),
        "d": FibreElement(DISCEXT, {-1: (z, 1)}),
    }


_IOTA = _iota_gens()


def embed_iota(x: NCPoly) -> FibreElement:
    """The *-morphism O(SU_q(2)) -> P: a -> (z' (x) v, v), c -> (s (x) v, 0)."""
    if x.pres is not SUQ2:
        raise PresentationMismatch("embed_iota expects an suq2 element")
    acc = FibreElement(DISCEXT)
    for w, c in normalize(x).terms.items():
        term = FibreElement.unit() * c
        for letter in w:
            term = term * _IOTA[letter]
        acc = acc + term
    return acc


def ln_membership(x: FibreElement, n: int) -> bool:
    return x.support <= {n}


def iso_psi(x: FibreElement) -> NCPoly:
    """Weight-zero pullback element -> its Toeplitz leg (compact part plus scalar)."""
    if not ln_membership(x, 0):
        raise ValueError("iso_psi is defined on L_0 only")
    return x.component(0)[0]


def iso_phi(t: NCPoly) -> FibreElement:
    """Inverse of :func:`iso_psi`: the scalar leg is recovered from the symbol."""
    sym = symbol(t)
    if any(w for w in sym.terms):
        raise ValueError(f"{to_text(t)} does not have a constant symbol")
    return FibreElement(t.pres, {0: (t, sym.constant_term())})


def pbw_words(max_degree: int):
    """PBW normal words of SU_q(2) with at most ``max_degree`` letters."""
    out = []
    for total in range(max_degree + 1):
        for i in range(total + 1):
            for j in range(total - i + 1):
                k = total - i - j
                out.append(("a",) * i + ("b",) * j + ("c",) * k)
                if i:
                    out.append(("d",) * i + ("b",) * j + ("c",) * k)
    return out


def iota_rank_check(max_degree: int = 5, samples: int = 3, seed: int = 0):
    """Rank of the images of PBW words under iota at random rational q.

    Returns ``[(q, rank, count), ...]``; injectivity means rank == count.
    """
    import sympy

    rng = random.Random(seed)
    words = pbw_words(max_degree)
    images = [embed_iota(NCPoly(SUQ2, {w: 1}, _normal=True)) for w in words]
    keys = sorted({("T", n, u) for x in images for n, (t, _) in x.components.items() for u in t.terms}
                  | {("C", n) for x in images for n in x.components}, key=repr)
    index = {k: i for i, k in enumerate(keys)}
    results = []
    for _ in range(samples):
        qv = Fraction(rng.randint(1, 97), rng.randint(98, 199))
        rows = []
        for x in images:
            row = [0] * len(keys)
            for n, (t, a) in x.components.items():
                for u, c in t.terms.items():
                    row[index[("T", n, u)]] = sympy.Rational(c.evaluate(qv))
                row[index[("C", n)]] = sympy.Rational(a.evaluate(qv))
            rows.append(row)
        rank = sympy.Matrix(rows).rank()
        results.append((qv, rank, len(words)))
    return results


# -- matrices over P -------------------------------------------------------------------

class FibreMatrix:
    """A rectangular matrix of fibre elements."""

    def __init__(self, rows, pres=DISCEXT):
        self.pres = pres
        self.rows = [list(r) for r in rows]
        if any(len(r) != len(self.rows[0]) for r in self.rows):
            raise ValueError("ragged matrix")

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __matmul__(self, other):
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError("shape mismatch")
        rows = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = FibreElement(self.pres)
                for t in range(k):
                    acc = acc + self.rows[i][t] * other.rows[t][j]
                row.append(acc)
            rows.append(row)
        return FibreMatrix(rows, self.pres)

    def __sub__(self, other):
        return FibreMatrix([[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
                           self.pres)

    def __add__(self, other):
        return FibreMatrix([[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
                           self.pres)

    def star(self):
        n, m = self.shape
        return FibreMatrix([[self.rows[i][j].star() for i in range(n)] for j in range(m)], self.pres)

    def is_zero(self):
        return all(x.is_zero() for r in self.rows for x in r)

    def is_idempotent(self):
        return (self @ self - self).is_zero()

    def is_selfadjoint(self):
        return (self.star() - self).is_zero()

    def direct_sum(self, other):
        n1, m1 = self.shape
        n2, m2 = other.shape
        z = FibreElement(self.pres)
        rows = [r + [z] * m2 for r in self.rows] + [[z] * m1 + r for r in other.rows]
        return FibreMatrix(rows, self.pres)

    def padded(self, n):
        """Extend by zero rows and columns to an n x n matrix."""
        r, c = self.shape
        z = FibreElement(self.pres)
        rows = [row + [z] * (n - c) for row in self.rows] + [[z] * n for _ in range(n - r)]
        return FibreMatrix(rows, self.pres)

    def __eq__(self, other):
        if not isinstance(other, FibreMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for r1, r2 in zip(self.rows, other.rows) for x, y in zip(r1, r2))

    def text(self):
        return "\n".join(" | ".join(x.text() for x in r) for r in self.rows)

    def to_json(self):
        return {"rows": [[x.to_json() for x in r] for r in self.rows]}

    def __repr__(self):
        return f"FibreMatrix({self.shape})"
