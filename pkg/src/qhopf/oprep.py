"""Truncated representations on l^2(N) at a numeric q in (0, 1).

Every generator image is banded with bandwidth one, so the image of a word of
length L is computed at dimension D + L and then compressed to the leading
D x D block.  The result is the exact compression of the infinite operator,
not the product of truncated factors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebras import DISC, DISCEXT, ISOMETRY, SPHERE, SUQ2, SYMBOL_CIRCLE
from .ncpoly import NCPoly, PresentationMismatch, normalize

KINDS = {
    "rho_suq2": SUQ2,
    "rho_plus_sphere": SPHERE,
    "mu_disc": DISC,
    "mu_disc_ext": DISCEXT,
    "shift": ISOMETRY,
}


@dataclass(frozen=True)
class RepConfig:
    kind: str
    q: float
    dim: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown representation {self.kind!r}")
        if not 0 < float(self.q) < 1:
            raise ValueError("q must lie strictly between 0 and 1")
        if self.dim < 1:
            raise ValueError("dimension must be positive")

    @property
    def algebra(self):
        return KINDS[self.kind]


@dataclass(frozen=True, eq=False)
class TruncOp:
    """A D x D real matrix standing for the compression of an operator."""

    matrix: np.ndarray
    q: float

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("TruncOp needs a square matrix")
        if not np.all(np.isfinite(m)):
            raise ValueError("TruncOp entries must be finite")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __matmul__(self, other):
        return TruncOp(self.matrix @ other.matrix, self.q)

    def __add__(self, other):
        return TruncOp(self.matrix + other.matrix, self.q)

    def __sub__(self, other):
        return TruncOp(self.matrix - other.matrix, self.q)

    def corner(self, k: int) -> np.ndarray:
        return self.matrix[:k, :k]

    def dump(self) -> str:
        """Row-major text with 17 significant digits."""
        return "\n".join(" ".join(f"{x:.17g}" for x in row) for row in self.matrix) + "\n"

    def stats(self) -> dict:
        return {"dim": self.dim, "q": self.q, "trace": trace(self), "norm": norm(self)}


def _generator_matrices(kind: str, q: float, n: int) -> dict:
    idx = np.arange(n, dtype=float)
    up = np.zeros((n, n))  # e_j -> e_{j+1}
    up[np.arange(1, n), np.arange(n - 1)] = 1.0
    if kind == "rho_suq2":
        a = np.zeros((n, n))
        a[np.arange(n - 1), np.arange(1, n)] = np.sqrt(1 - q ** (2 * idx[1:]))
        d = a.T.copy()
        return {"a": a, "d": d, "b": np.diag(-q ** (idx + 1)), "c": np.diag(q ** idx)}
    if kind == "rho_plus_sphere":
        bmat = np.zeros((n, n))
        bmat[np.arange(n - 1), np.arange(1, n)] = q ** idx[1:] * np.sqrt(1 - q ** (2 * idx[1:]))
        return {"A": np.diag(q ** (2 * idx)), "B": bmat, "B*": bmat.T.copy()}
    if kind in ("mu_disc", "mu_disc_ext"):
        z = np.zeros((n, n))
        z[np.arange(1, n), np.arange(n - 1)] = np.sqrt(1 - q ** (2 * idx[:-1] + 2))
        gens = {"z": z, "z*": z.T.copy()}
        if kind == "mu_disc_ext":
            gens["s"] = np.diag(q ** idx)
        return gens
    return {"S": up, "S*": up.T.copy()}


def represent(x: NCPoly, conf: RepConfig) -> TruncOp:
    if x.pres is not conf.algebra:
        raise PresentationMismatch(f"{conf.kind} represents {conf.algebra.name}, got {x.pres.name}")
    x = normalize(x)
    q = float(conf.q)
    pad = max((len(w) for w in x.terms), default=0)
    big = conf.dim + pad
    gens = _generator_matrices(conf.kind, q, big)
    out = np.zeros((big, big))
    for w, c in x.terms.items():
        m = np.eye(big)
        for letter in w:
            m = m @ gens[letter]
        out += c.evaluate(q) * m
    return TruncOp(out[:conf.dim, :conf.dim], q)


def letter_product(word, conf: RepConfig) -> TruncOp:
    """Product of the truncated letter matrices, without padding."""
    gens = _generator_matrices(conf.kind, float(conf.q), conf.dim)
    m = np.eye(conf.dim)
    for letter in word:
        m = m @ gens[letter]
    return TruncOp(m, float(conf.q))


_SYMBOLS = {"z": ("u",), "z*": ("u*",), "S": ("u",), "S*": ("u*",)}


def symbol(x: NCPoly) -> NCPoly:
    """The symbol map onto Laurent polynomials in u (s is killed)."""
    if x.pres not in (DISC, DISCEXT, ISOMETRY):
        raise PresentationMismatch(f"no symbol map on {x.pres.name}")
    acc = {}
    for w, c in normalize(x).terms.items():
        if "s" in w:
            continue
        image = sum((_SYMBOLS[letter] for letter in w), ())
        for u, b in SYMBOL_CIRCLE.normal_form_word(image).items():
            acc[u] = acc.get(u, 0) + c * b
    return NCPoly(SYMBOL_CIRCLE, {w: c for w, c in acc.items() if not c.is_zero()}, _normal=True)


def elementary_matrix(n: int, m: int, q, dim: int) -> TruncOp:
    """Approximation of the matrix unit e_{n+m,n} built by functional calculus from z."""
    if n < 0 or n + m < 0:
        raise ValueError("need n >= 0 and n + m >= 0")
    if dim <= n + abs(m):
        raise ValueError(f"dimension {dim} too small for n={n}, m={m}")
    q = float(q)
    k = abs(m)
    big = dim + k
    z = _generator_matrices("mu_disc", q, big)["z"]
    y = np.eye(big) - z @ z.T
    eig = np.diag(y)

    def chi(j):
        target = q ** (2 * j)
        sel = np.abs(eig - target) <= 1e-6 * target
        return np.diag(sel.astype(float))

    def inv_abs(power):
        # (prod_{i=1}^{power} (1 - q^{2i} y))^{-1/2}, diagonal in the e_j basis
        prod = np.ones(big)
        for i in range(1, power + 1):
            prod = prod * (1 - q ** (2 * i) * eig)
        return np.diag(prod ** -0.5)

    zk = np.linalg.matrix_power(z, k)
    if m >= 0:
        out = zk @ inv_abs(k) @ chi(n)
    else:
        out = chi(n - k) @ inv_abs(k) @ zk.T
    return TruncOp(out[:dim, :dim], q)


def matrix_unit(i: int, j: int, dim: int) -> np.ndarray:
    e = np.zeros((dim, dim))
    e[i, j] = 1.0
    return e


def trace(t: TruncOp) -> float:
    return float(np.trace(t.matrix))


def norm(t: TruncOp) -> float:
    """Operator 2-norm (largest singular value)."""
    if t.dim == 0:
        return 0.0
    return float(np.linalg.norm(t.matrix, 2))


def parse_q(text) -> Fraction:
    """Parse ``0.5`` or ``1/2`` into an exact fraction."""
    return Fraction(str(text))


__all__ = [
    "RepConfig", "TruncOp", "represent", "letter_product", "symbol", "elementary_matrix",
    "matrix_unit", "trace", "norm", "KINDS",
]
