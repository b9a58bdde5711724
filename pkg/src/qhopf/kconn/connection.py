"""Strong connections for circle coactions, graded by the basis {v^N}.

Elements of the product algebra ``A1 x A2`` (Toeplitz part times circle) are
:class:`FibreElement` values built without the gluing check; the pullback
``P`` is the glued subalgebra.  Tensors are stored in coordinates over the
ambient basis keys ``("T", N, word)`` (the element ``word (x) v^N`` of A1) and
``("C", N)`` (the element ``v^N`` of A2).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..algebras import ISOMETRY, SYMBOL_CIRCLE
from ..ncpoly import NCPoly, to_text
from ..oprep import symbol
from ..pullback import FibreElement
from ..qrat import QRat

TAGS = ("P", "A1", "A2")


def unit_of(tag: str, pres=ISOMETRY) -> FibreElement:
    t = NCPoly.scalar(pres, 0 if tag == "A2" else 1)
    return FibreElement(pres, {0: (t, 0 if tag == "A1" else 1)}, check=False)


def coords(x: FibreElement) -> dict:
    out = {}
    for n, (t, a) in x.components.items():
        for w, c in t.terms.items():
            out[("T", n, w)] = c
        if not a.is_zero():
            out[("C", n)] = a
    return out


def basis_element(key, pres) -> FibreElement:
    if key[0] == "T":
        return FibreElement(pres, {key[1]: (NCPoly(pres, {key[2]: 1}, _normal=True), 0)}, check=False)
    return FibreElement(pres, {key[1]: (NCPoly(pres), 1)}, check=False)


def _acc(acc, key, c):
    v = acc.get(key)
    v = c if v is None else v + c
    if v.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = v


class FibreTensor:
    """An element of (A1 x A2) (x) (A1 x A2) in basis-key coordinates."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres=ISOMETRY, terms=None):
        self.pres = pres
        self.terms = {}
        for k, c in (terms or {}).items():
            _acc(self.terms, k, QRat.coerce(c))

    @classmethod
    def pure(cls, x: FibreElement, y: FibreElement, coeff=1):
        coeff = QRat.coerce(coeff)
        out = cls(x.pres)
        for k1, c1 in coords(x).items():
            for k2, c2 in coords(y).items():
                _acc(out.terms, (k1, k2), coeff * c1 * c2)
        return out

    def __add__(self, other):
        out = FibreTensor(self.pres, self.terms)
        for k, c in other.terms.items():
            _acc(out.terms, k, c)
        return out

    def __neg__(self):
        return FibreTensor(self.pres, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, FibreTensor):
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def map_leg(self, leg: int, f):
        """Apply a linear map ``FibreElement -> FibreElement`` on one leg."""
        out = FibreTensor(self.pres)
        cache = {}
        for key, c in self.terms.items():
            k = key[leg]
            if k not in cache:
                cache[k] = coords(f(basis_element(k, self.pres)))
            for k2, b in cache[k].items():
                new = (k2, key[1]) if leg == 0 else (key[0], k2)
                _acc(out.terms, new, c * b)
        return out

    def map_leg_grouped(self, leg: int, f):
        """Apply ``f`` to whole leg elements, grouped by the basis key of the other leg.

        Needed for maps defined only on a subspace, where a key-by-key
        extension would leave the domain.
        """
        other = 1 - leg
        groups = {}
        for key, c in self.terms.items():
            groups.setdefault(key[other], {})[key[leg]] = c
        out = FibreTensor(self.pres)
        for k_other, parts in groups.items():
            elem = FibreElement(self.pres)
            for k, c in parts.items():
                elem = elem + basis_element(k, self.pres) * c
            for k2, b in coords(f(elem)).items():
                _acc(out.terms, (k2, k_other) if leg == 0 else (k_other, k2), b)
        return out

    def contract(self) -> FibreElement:
        """Multiply the two legs."""
        acc = FibreElement(self.pres)
        for (k1, k2), c in self.terms.items():
            acc = acc + basis_element(k1, self.pres) * basis_element(k2, self.pres) * c
        return acc

    def leg_weights(self, leg: int) -> set:
        return {key[leg][1] for key in self.terms}

    def second_leg_slices(self) -> dict:
        out = {}
        for key, c in self.terms.items():
            out.setdefault(key[1][1], FibreTensor(self.pres)).terms[key] = c
        return out

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (k1, k2), c in sorted(self.terms.items(), key=lambda kv: repr(kv[0])):
            parts.append(f"{c.text()} {_key_text(k1, self.pres)} (x) {_key_text(k2, self.pres)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FibreTensor({self.text()})"


def _key_text(key, pres):
    if key[0] == "T":
        t = to_text(NCPoly(pres, {key[2]: 1}, _normal=True))
        return f"({t} v^{key[1]}, 0)"
    return f"(0, v^{key[1]})"


def glue_defect(x: FibreElement) -> dict:
    """Coordinates of ``symbol(t_N) u^N - alpha_N``; zero exactly on P."""
    out = {}
    for n, (t, a) in x.components.items():
        sym = symbol(t) if not t.is_zero() else NCPoly(SYMBOL_CIRCLE)
        for w, c in sym.terms.items():
            k = SYMBOL_CIRCLE.word_weight(w) + n
            _acc(out, (n, k), c)
        if not a.is_zero():
            _acc(out, (n, 0), -a)
    return out


def _leg_in_p(tensor: FibreTensor, leg: int) -> bool:
    # (delta (x) id) T = 0 with delta the gluing defect
    acc = {}
    for key, c in tensor.terms.items():
        for k2, b in glue_defect(basis_element(key[leg], tensor.pres)).items():
            _acc(acc, (k2, key[1 - leg]), c * b)
    return not acc


class StrongConn:
    """A graded linear map ``v^N -> FibreTensor`` on an algebra tagged P, A1 or A2."""

    def __init__(self, func, tag="P", pres=ISOMETRY, name="connection"):
        if tag not in TAGS:
            raise ValueError(f"tag must be one of {TAGS}")
        self._func = func
        self.tag = tag
        self.pres = pres
        self.name = name
        self._cache = {}

    def __call__(self, n: int) -> FibreTensor:
        if n not in self._cache:
            self._cache[n] = self._func(n)
        return self._cache[n]

    @property
    def unit(self):
        return unit_of(self.tag, self.pres)


# -- the explicit connection on P ----------------------------------------------------

def _s_power(letter, k, pres=ISOMETRY):
    return NCPoly(pres, {(letter,) * k: 1}, _normal=True)


def _pair(t, n, alpha, pres=ISOMETRY):
    return FibreElement(pres, {n: (t, alpha)}, check=False)


def explicit_connection(pres=ISOMETRY) -> StrongConn:
    """The strong connection on P built from the lifts S'^N (x) v^N and S^N (x) v'^N."""

    def ell(n):
        k = abs(n)
        if n == 0:
            return FibreTensor.pure(unit_of("P", pres), unit_of("P", pres))
        s, ss = _s_power("S", k, pres), _s_power("S*", k, pres)
        if n > 0:
            proj = 1 - s * ss
            return (FibreTensor.pure(_pair(s, -n, 1, pres), _pair(ss, n, 1, pres))
                    + FibreTensor.pure(_pair(proj, -n, 0, pres), _pair(proj, n, 0, pres)))
        return FibreTensor.pure(_pair(ss, k, 1, pres), _pair(s, -k, 1, pres))

    return StrongConn(ell, "P", pres, "explicit")


def circle_connection(pres=ISOMETRY) -> StrongConn:
    """``v^N -> v^-N (x) v^N`` on the circle factor A2."""
    def ell(n):
        return FibreTensor.pure(_pair(NCPoly(pres), -n, 1, pres), _pair(NCPoly(pres), n, 1, pres))
    return StrongConn(ell, "A2", pres, "circle")


def trivial_connection(pres=ISOMETRY) -> StrongConn:
    """``v^N -> (1 (x) v^-N) (x) (1 (x) v^N)`` on A1 = T (x) O(U(1))."""
    def ell(n):
        one = NCPoly.scalar(pres, 1)
        return FibreTensor.pure(_pair(one, -n, 0, pres), _pair(one, n, 0, pres))
    return StrongConn(ell, "A1", pres, "trivial")


def corrupted_connection(pres=ISOMETRY) -> StrongConn:
    """The explicit connection without its (1 - S^N S'^N) correction term."""
    base = explicit_connection(pres)

    def ell(n):
        if n <= 0:
            return base(n)
        k = n
        return FibreTensor.pure(_pair(_s_power("S", k, pres), -n, 1, pres),
                                _pair(_s_power("S*", k, pres), n, 1, pres))
    return StrongConn(ell, "P", pres, "corrupted")


# -- checker ---------------------------------------------------------------------------

@dataclass
class ConnCheck:
    family: str
    n: int
    passed: bool
    residual: str


@dataclass
class ConnReport:
    connection: str
    range: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_json(self):
        return {
            "connection": self.connection,
            "range": [-self.range, self.range],
            "passed": self.passed,
            "checks": [{"name": c.family, "N": c.n, "passed": c.passed, "residual": c.residual}
                       for c in self.checks],
        }


def check_strong_connection(ell: StrongConn, rng: int = 8) -> ConnReport:
    """Exact verification of the strong-connection axioms for |N| <= rng."""
    if rng < 1:
        raise ValueError("range must be at least 1")
    report = ConnReport(ell.name, rng)
    unit = ell.unit
    one = FibreTensor.pure(unit, unit)
    zero_res = ell(0) - one
    report.checks.append(ConnCheck("normalization", 0, zero_res.is_zero(), zero_res.text()))
    for n in range(-rng, rng + 1):
        value = ell(n)
        # lifted canonical map: sum l1 l2_(0) (x) l2_(1) must be 1 (x) v^N
        bad = []
        slices = value.second_leg_slices()
        for m in sorted(set(slices) | {n}):
            got = slices[m].contract() if m in slices else FibreElement(ell.pres)
            want = unit if m == n else FibreElement(ell.pres)
            diff = got - want
            if not diff.is_zero():
                bad.append(f"v^{m}: {diff.text()}")
        report.checks.append(ConnCheck("splitting", n, not bad, "; ".join(bad) or "0"))

        wrong = sorted(w for w in value.leg_weights(1) if w != n)
        report.checks.append(ConnCheck("right_colinear", n, not wrong,
                                       "0" if not wrong else f"second-leg weights {wrong}"))
        wrong = sorted(w for w in value.leg_weights(0) if w != -n)
        report.checks.append(ConnCheck("left_colinear", n, not wrong,
                                       "0" if not wrong else f"first-leg weights {wrong}"))

        diff = value.contract() - unit
        report.checks.append(ConnCheck("counit", n, diff.is_zero(), diff.text()))

        if ell.tag == "P":
            ok = _leg_in_p(value, 0) and _leg_in_p(value, 1)
            report.checks.append(ConnCheck("legs_in_P", n, ok, "0" if ok else value.text()))
    return report


# -- the combination formula -------------------------------------------------------------

def lift_left(n: int, pres=ISOMETRY) -> FibreElement:
    """Splitting of A1 -> C(S^1) (x) O(U(1)) on the image of v^N: S'^N for N >= 0, S^|N| otherwise."""
    t = _s_power("S*", n, pres) if n >= 0 else _s_power("S", -n, pres)
    return _pair(t, n, 0, pres)


lift_right = lift_left


def alpha_21(x: FibreElement) -> FibreElement:
    """Send t (x) v^N with constant ``symbol(t) u^N`` to that constant times v^N."""
    comps = {}
    for n, (t, _) in x.components.items():
        defect = glue_defect(FibreElement(x.pres, {n: (t, 0)}, check=False))
        if any(k != 0 for (_, k) in defect):
            raise ValueError(f"{x.text()} is outside the domain of the splitting")
        comps[n] = (NCPoly(x.pres), defect.get((n, 0), QRat()))
    return FibreElement(x.pres, comps, check=False)


def _circle_map(f):
    """Extend a map on v^N (given per N) linearly to A2 elements."""
    def g(x):
        acc = FibreElement(x.pres)
        for n, (_, a) in x.components.items():
            if not a.is_zero():
                acc = acc + f(n) * a
        return acc
    return g


def combine_connections(ell1: StrongConn, ell2: StrongConn, alpha_L=lift_left, alpha_R=lift_right,
                        alpha_R21=alpha_21, pres=ISOMETRY) -> StrongConn:
    """Glue connections on A1 and A2 into one on P.

    ell = ((aL + id) (x) (aR + id)) ell2
          + (eta eps - L) * ((id (x) (id + aR21)) (ell1 - ell1 * L + (aL (x) aR) ell2))
    with ``L = m o (aL (x) aR) o ell2``.  Convolution against circle data is a
    single product because v^N is grouplike.
    """
    if ell1.tag != "A1" or ell2.tag != "A2":
        raise ValueError("combine_connections expects connections on A1 and A2")
    aL, aR = _circle_map(lambda n: alpha_L(n, pres)), _circle_map(lambda n: alpha_R(n, pres))

    def graded(f):
        def g(x):
            out = f(x)
            if not out.support <= x.support:
                raise ValueError("splitting is not graded")
            return out
        return g

    aL, aR = graded(aL), graded(aR)

    def ell(n):
        l2 = ell2(n)
        first = l2.map_leg(0, lambda x: aL(x) + x).map_leg(1, lambda x: aR(x) + x)
        lifted = l2.map_leg(0, aL).map_leg(1, aR)
        big_l = lifted.contract()
        one1 = unit_of("A1", pres)
        inner = ell1(n) - ell1(n).map_leg(1, lambda x: x * big_l) + lifted
        inner = inner.map_leg_grouped(1, lambda x: x + alpha_R21(x))
        corr = inner.map_leg(0, lambda x: (one1 - big_l) * x)
        return first + corr

    return StrongConn(ell, "P", pres, "combined")


# -- graded entwining ---------------------------------------------------------------------

class GradedEntwining:
    """psi(v^m (x) p) = p (x) v^(m+n) for p homogeneous of weight n."""

    @staticmethod
    def _weight(p: FibreElement) -> int:
        if len(p.support) != 1:
            raise ValueError("entwining is evaluated on homogeneous elements")
        return next(iter(p.support))

    def apply(self, m: int, p: FibreElement):
        return p, m + self._weight(p)

    def inverse(self, p: FibreElement, k: int):
        return k - self._weight(p), p

    def check_axioms(self, elements, powers) -> list:
        """Return a list of failure descriptions (empty when all four axioms hold)."""
        fails = []
        unit = next(iter(elements)).__class__.unit(next(iter(elements)).pres)
        for m in powers:
            if self.apply(m, unit) != (unit, m):
                fails.append(f"unit at v^{m}")
            for p in elements:
                # counit: eps(c^alpha) p_alpha = eps(c) p, since eps(v^k) = 1
                if self.apply(m, p)[0] != p:
                    fails.append(f"counit at v^{m}")
                # coproduct: p_alpha (x) Delta(c^alpha) = p_alpha beta (x) c(1)^beta (x) c(2)^alpha
                q1, k1 = self.apply(m, p)
                q2, k2 = self.apply(m, q1)
                if (q1, k1, k1) != (q2, k2, m + self._weight(p)):
                    fails.append(f"coproduct at v^{m}")
                if self.inverse(*self.apply(m, p)) != (m, p):
                    fails.append(f"bijectivity at v^{m}")
                for r in elements:
                    pr = p * r
                    if pr.is_zero():
                        continue
                    lhs = self.apply(m, pr)
                    a, k = self.apply(m, p)
                    b, k2 = self.apply(k, r)
                    if lhs != (a * b, k2):
                        fails.append(f"multiplicativity at v^{m}")
        return fails
