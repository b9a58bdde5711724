"""Index pairing of idempotents over L_0 with two K-homology classes.

``id-eps`` compares the Toeplitz leg with the scalar leg: Tr(rho(t) - alpha).
``eps-eps0`` compares the scalar leg with alpha S S*: Tr(alpha (1 - S S*)).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebras import DISCEXT, ISOMETRY
from ..ncpoly import NCPoly
from ..oprep import RepConfig, represent
from ..pullback import FibreMatrix, embed_iota
from .projections import ENProjection


class NotIdempotent(ValueError):
    pass


_KIND = {ISOMETRY.name: "shift", DISCEXT.name: "mu_disc_ext"}


@dataclass(frozen=True)
class KHomClass:
    """A pair of evaluators (plus side, minus side) on weight-zero pairs (t, alpha)."""

    name: str

    def difference(self, t: NCPoly, alpha: float, q: float, dim: int) -> np.ndarray:
        """Matrix of (rho_+ - rho_-)(t, alpha) compressed to ``dim``."""
        eye = np.eye(dim)
        if self.name == "id-eps":
            return represent(t, RepConfig(_KIND[t.pres.name], q, dim)).matrix - alpha * eye
        if self.name == "eps-eps0":
            s = represent(NCPoly(ISOMETRY, {("S", "S*"): 1}), RepConfig("shift", q, dim)).matrix
            return alpha * eye - alpha * s
        raise ValueError(f"unknown class {self.name!r}")


ID_EPS = KHomClass("id-eps")
EPS_EPS0 = KHomClass("eps-eps0")
CLASSES = {c.name: c for c in (ID_EPS, EPS_EPS0)}


def _entries_fibre(p: FibreMatrix, q):
    """Yield (i, j, t, alpha) for weight-zero entries of an exact matrix."""
    for i, row in enumerate(p.rows):
        for j, x in enumerate(row):
            if not x.support <= {0}:
                raise ValueError("pairing needs entries in L_0")
            t, a = x.component(0)
            yield i, j, t, a.evaluate(q)


def _entries_en(p: ENProjection, q):
    for i in range(p.size):
        for j in range(p.size):
            scale, mono = p.numeric_entry(i, j, q)
            t, a = embed_iota(mono).component(0)
            yield i, j, t, scale * a.evaluate(q), scale


def numeric_blocks(p, q: float, dim: int, cls=ID_EPS) -> np.ndarray:
    """The block matrix (rho_+ - rho_-)(p), of size (k dim) x (k dim)."""
    if isinstance(p, FibreMatrix):
        k = p.shape[0]
        entries = ((i, j, t, a, 1.0) for i, j, t, a in _entries_fibre(p, q))
    else:
        k = p.size
        entries = _entries_en(p, q)
    out = np.zeros((k * dim, k * dim))
    for i, j, t, a, scale in entries:
        out[i * dim:(i + 1) * dim, j * dim:(j + 1) * dim] = _scaled(cls, t, a, scale, q, dim)
    return out


def _scaled(cls, t, a, scale, q, dim):
    eye = np.eye(dim)
    if cls.name == "id-eps":
        return scale * represent(t, RepConfig(_KIND[t.pres.name], q, dim)).matrix - a * eye
    return cls.difference(t, a, q, dim)


def plus_blocks(p, q: float, dim: int) -> np.ndarray:
    """rho_+(p) for the id-eps class: the represented Toeplitz leg as a block matrix."""
    if isinstance(p, FibreMatrix):
        k = p.shape[0]
        out = np.zeros((k * dim, k * dim))
        for i, j, t, _ in _entries_fibre(p, q):
            out[i * dim:(i + 1) * dim, j * dim:(j + 1) * dim] = \
                represent(t, RepConfig(_KIND[t.pres.name], q, dim)).matrix
        return out
    k = p.size
    out = np.zeros((k * dim, k * dim))
    for i, j, t, _, scale in _entries_en(p, q):
        out[i * dim:(i + 1) * dim, j * dim:(j + 1) * dim] = \
            scale * represent(t, RepConfig("mu_disc_ext", q, dim)).matrix
    return out


def idempotency_defect(p, q: float, dim: int, margin: int = 0) -> float:
    """max |(P^2 - P)| on the interior corner of every block."""
    m = plus_blocks(p, q, dim)
    k = m.shape[0] // dim
    keep = np.concatenate([np.arange(b * dim, b * dim + dim - margin) for b in range(k)])
    sq = (m @ m - m)[np.ix_(keep, keep)]
    return float(np.abs(sq).max()) if sq.size else 0.0


def index_pairing(cls, p, q, dim: int, *, tol: float = 1e-10) -> float:
    """Tr(Tr_Mat((rho_+ - rho_-)(p))) over the truncated space."""
    if isinstance(cls, str):
        cls = CLASSES[cls]
    q = float(q)
    if not q ** (2 * dim) < 1e-12:
        raise ValueError(f"dimension {dim} too small: q^(2D) = {q ** (2 * dim):.3g}")
    if isinstance(p, FibreMatrix):
        if not p.is_idempotent():
            raise NotIdempotent("matrix is not idempotent")
        entries = ((t, a, 1.0) for i, j, t, a in _entries_fibre(p, q) if i == j)
    elif isinstance(p, ENProjection):
        margin = 2 * abs(p.n) + 2
        defect = idempotency_defect(p, q, dim, margin)
        if defect > tol:
            raise NotIdempotent(f"numeric idempotency defect {defect:.3g}")
        entries = ((t, a, s) for i, j, t, a, s in _entries_en(p, q) if i == j)
    else:
        raise TypeError("expected a FibreMatrix or an ENProjection")
    total = 0.0
    for t, a, scale in entries:
        total += float(np.trace(_scaled(cls, t, a, scale, q, dim)))
    return total


def snap(value: float, tol: float = 1e-6):
    """Nearest integer when within ``tol``, else None."""
    r = round(value)
    return int(r) if abs(value - r) <= tol else None
