"""Idempotents over the pullback: the Bass construction, p_N and E_N."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebras import ISOMETRY, SUQ2, SYMBOL_CIRCLE
from ..ncpoly import NCPoly, normalize, star, weight
from ..oprep import symbol
from ..pullback import FibreElement, FibreMatrix
from ..qrat import QRat


class LiftInversionError(ValueError):
    """The symbols of the two lifts are not mutually inverse."""


class SingularSystem(ArithmeticError):
    """The coefficient system for E_N has no unique solution."""


def _as_matrix(x, pres):
    if isinstance(x, NCPoly):
        return [[x]]
    return [[e if isinstance(e, NCPoly) else NCPoly.scalar(pres, e) for e in row] for row in x]


def _mat_mul(x, y, pres):
    n, k, m = len(x), len(y), len(y[0])
    return [[sum((x[i][t] * y[t][j] for t in range(k)), NCPoly(pres)) for j in range(m)]
            for i in range(n)]


def _identity(n, pres):
    return [[NCPoly.scalar(pres, 1 if i == j else 0) for j in range(n)] for i in range(n)]


def _lin(a, x, b, y):
    return [[xa * a + ya * b for xa, ya in zip(rx, ry)] for rx, ry in zip(x, y)]


def bass_idempotent(c, d, pres=ISOMETRY) -> FibreMatrix:
    """The 2n x 2n idempotent

        [[(c(2-dc)d, 1), (c(2-dc)(1-dc), 0)],
         [((1-dc)d, 0), ((1-dc)^2, 0)]]

    for square lifts ``c``, ``d`` whose symbols are mutually inverse.
    """
    c, d = _as_matrix(c, pres), _as_matrix(d, pres)
    n = len(c)
    sc = [[symbol(e) for e in row] for row in c]
    sd = [[symbol(e) for e in row] for row in d]
    for prod in (_mat_mul(sc, sd, SYMBOL_CIRCLE), _mat_mul(sd, sc, SYMBOL_CIRCLE)):
        if prod != _identity(n, SYMBOL_CIRCLE):
            raise LiftInversionError("symbol(c) symbol(d) is not the identity")
    one = _identity(n, pres)
    dc = _mat_mul(d, c, pres)
    two_minus = _lin(2, one, -1, dc)
    one_minus = _lin(1, one, -1, dc)
    c2 = _mat_mul(c, two_minus, pres)
    blocks = [[(_mat_mul(c2, d, pres), 1), (_mat_mul(c2, one_minus, pres), 0)],
              [(_mat_mul(one_minus, d, pres), 0), (_mat_mul(one_minus, one_minus, pres), 0)]]
    rows = []
    for bi in range(2):
        for i in range(n):
            row = []
            for bj in range(2):
                t, scalar = blocks[bi][bj]
                for j in range(n):
                    alpha = scalar if i == j else 0
                    row.append(FibreElement(pres, {0: (t[i][j], alpha)}))
            rows.append(row)
    return FibreMatrix(rows, pres)


def bass_idempotent_numeric(c: np.ndarray, d: np.ndarray):
    """Operator part and scalar part of the Bass idempotent for numeric block lifts.

    ``c`` and ``d`` are (nD x nD) arrays; the scalar part is diag(1_n, 0_n).
    """
    one = np.eye(c.shape[0])
    dc = d @ c
    c2 = c @ (2 * one - dc)
    top = np.hstack([c2 @ d, c2 @ (one - dc)])
    bottom = np.hstack([(one - dc) @ d, (one - dc) @ (one - dc)])
    return np.vstack([top, bottom])


def _s_proj(k, pres):
    return NCPoly(pres, {("S",) * k + ("S*",) * k: 1}, _normal=True)


def projection_pN(n: int, pres=ISOMETRY) -> FibreMatrix:
    """diag((1, 1), (1 - S^N S'^N, 0)) for N > 0, (S^|N| S'^|N|, 1) for N < 0, (1, 1) for N = 0."""
    if n == 0:
        return FibreMatrix([[FibreElement.unit(pres)]], pres)
    if n < 0:
        return FibreMatrix([[FibreElement(pres, {0: (_s_proj(-n, pres), 1)})]], pres)
    zero = FibreElement(pres)
    return FibreMatrix([[FibreElement.unit(pres), zero],
                        [zero, FibreElement(pres, {0: (1 - _s_proj(n, pres), 0)})]], pres)


# -- E_N ------------------------------------------------------------------------------

def en_monomials(n: int):
    """b^k d^(N-k) for N > 0 and c^k a^(|N|-k) for N < 0, k = 0..|N|."""
    g = {x: NCPoly.gen(SUQ2, x) for x in "abcd"}
    if n >= 0:
        return [g["b"] ** k * g["d"] ** (n - k) for k in range(n + 1)]
    m = -n
    return [g["c"] ** k * g["a"] ** (m - k) for k in range(m + 1)]


def solve_qrat(rows, rhs):
    """Exact least-squares-free solve of an overdetermined consistent system over Q(q).

    Gaussian elimination with row pivoting; raises :class:`SingularSystem` when
    the solution is not unique or the system is inconsistent.
    """
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        p = next((i for i in range(r, len(aug)) if not aug[i][col].is_zero()), None)
        if p is None:
            raise SingularSystem(f"no pivot in column {col}")
        aug[r], aug[p] = aug[p], aug[r]
        inv = aug[r][col].inverse()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for row in aug[r:]:
        if not row[-1].is_zero():
            raise SingularSystem(f"inconsistent equation with residual {row[-1].text()}")
    return [aug[i][-1] for i in range(n)]


@dataclass
class ENProjection:
    """E_N = T T* with T = (lambda_k m_k); lambda_k are square roots of ``lambda2``."""

    n: int
    monomials: list
    lambda2: list

    @property
    def size(self):
        return len(self.monomials)

    def entry(self, i, j):
        """(surd tag lambda_i^2 lambda_j^2, monomial m_i m_j*)."""
        return self.lambda2[i] * self.lambda2[j], self.monomials[i] * star(self.monomials[j])

    def normalization(self) -> NCPoly:
        """sum_k lambda_k^2 m_k* m_k, which must equal 1."""
        return sum((star(m) * m * l2 for m, l2 in zip(self.monomials, self.lambda2)), NCPoly(SUQ2))

    def entry_weights(self):
        return {(i, j): weight(self.entry(i, j)[1]) for i in range(self.size) for j in range(self.size)}

    def numeric_entry(self, i, j, q: float) -> NCPoly:
        """Entry with the surd evaluated at q, as an NCPoly with float-valued scale."""
        tag, mono = self.entry(i, j)
        return float(np.sqrt(tag.evaluate(q))), mono


def projection_EN(n: int, bound: int = 6) -> ENProjection:
    if abs(n) > bound:
        raise ValueError(f"|N| = {abs(n)} exceeds the configured bound {bound}")
    monos = en_monomials(n)
    products = [normalize(star(m) * m) for m in monos]
    words = sorted({w for p in products for w in p.terms} | {()}, key=SUQ2.order_key)
    rows = [[p.terms.get(w, QRat()) for p in products] for w in words]
    rhs = [QRat(1) if w == () else QRat() for w in words]
    lam2 = solve_qrat(rows, rhs)
    proj = ENProjection(n, monos, lam2)
    if not (proj.normalization() - 1).is_zero():
        raise SingularSystem("solution does not normalize to 1")
    return proj
