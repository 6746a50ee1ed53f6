"""Subspaces of F_q^n: canonical bases, duality, distance, LCD tests.

Vectors are rows; a subspace is identified by the reduced row echelon form of
any spanning set, so equality and hashing are structural.  The bilinear form
throughout is the standard dot product u . v = sum_i u_i v_i, and the dual
U^perp is taken with respect to it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AmbientMismatch,
    FieldMismatch,
    InternalInconsistency,
    NotLCD,
)
from .gf import GF


class Subspace:
    """An immutable subspace of F_q^n held as an rref basis matrix."""

    __slots__ = ("field", "n", "basis", "_key")

    def __init__(self, field, n, vectors=None, *, _rref=None):
        self.field = field
        self.n = int(n)
        if _rref is not None:
            B = _rref
        else:
            if vectors is None:
                vectors = np.zeros((0, self.n), dtype=np.int64)
            V = np.asarray(vectors, dtype=np.int64)
            if V.ndim == 1:
                V = V[None, :]
            if V.shape[1] != self.n and V.size:
                raise AmbientMismatch(f"vectors of length {V.shape[1]} in ambient {self.n}")
            if V.size == 0:
                V = V.reshape(0, self.n)
            R, piv = field.rref(V)
            B = R[: len(piv)]
        B = np.ascontiguousarray(B, dtype=np.int64)
        B.setflags(write=False)
        self.basis = B
        self._key = (field.p, field.r, self.n, B.shape[0], B.tobytes())

    # --- constructors ---

    @classmethod
    def span(cls, field, n, vectors):
        return cls(field, n, vectors)

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, np.zeros((0, n), dtype=np.int64))

    @classmethod
    def full(cls, field, n):
        return cls(field, n, _rref=np.eye(n, dtype=np.int64))

    # --- basic structure ---

    @property
    def dim(self):
        return self.basis.shape[0]

    def contains(self, v):
        """Membership test by reduction against the rref basis."""
        w = np.array(v, dtype=np.int64, copy=True).ravel()
        if w.shape[0] != self.n:
            raise AmbientMismatch(f"vector of length {w.shape[0]} in ambient {self.n}")
        f = self.field
        for row in self.basis:
            c = int(np.flatnonzero(row)[0])  # pivot column, entry 1
            if w[c]:
                w = f.sub(w, f.mul(np.int64(w[c]), row))
        return not w.any()

    def _check_mate(self, other):
        if not isinstance(other, Subspace):
            raise TypeError(f"expected Subspace, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if other.n != self.n:
            raise AmbientMismatch(f"ambient {self.n} vs {other.n}")
        return other

    # --- lattice operations ---

    def __add__(self, other):
        other = self._check_mate(other)
        stacked = np.vstack([self.basis, other.basis])
        return Subspace(self.field, self.n, stacked)

    def dual(self):
        """Orthogonal complement under the standard dot product."""
        K = self.field.kernel(self.basis)
        return Subspace(self.field, self.n, _rref=K)

    def __and__(self, other):
        other = self._check_mate(other)
        return (self.dual() + other.dual()).dual()

    # --- dunder plumbing ---

    def __eq__(self, other):
        return isinstance(other, Subspace) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Subspace(q={self.field.q}, n={self.n}, dim={self.dim})"


def span(field, n, vectors):
    return Subspace.span(field, n, vectors)


def subspace_sum(U, W):
    return U + W


def intersect(U, W):
    return U & W


def dual(U):
    return U.dual()


def distance(U, W):
    """Subspace distance dim(U+W) - dim(U n W) = 2 dim(U+W) - dim U - dim W."""
    W = U._check_mate(W)
    return 2 * (U + W).dim - U.dim - W.dim


@dataclass(frozen=True)
class LcdCheck:
    """Outcome of an LCD test: Gram determinant vs radical dimension."""

    ok: bool
    gram_det: int
    radical_dim: int

    def __bool__(self):
        return self.ok


def is_lcd(U):
    """True iff U meets U^perp trivially.

    Computed two independent ways (det of the Gram matrix of the basis, and
    the dimension of U n U^perp); a disagreement would be a bug and raises.
    """
    f = U.field
    gram = f.matmul(U.basis, U.basis.T)
    d = f.det(gram)
    radical = (U & U.dual()).dim
    ok_det = d != 0
    ok_dim = radical == 0
    if ok_det != ok_dim:
        raise InternalInconsistency(
            f"Gram det {d} vs radical dim {radical}", witness=(d, radical))
    return LcdCheck(ok_det, d, radical)


@dataclass(frozen=True)
class PairwiseLcdCheck:
    """ok: both U n W^perp and W n U^perp are zero.

    det_nonsingular reports whether the cross Gram matrix of the two bases is
    nonsingular; it is None when the dimensions differ (no square matrix to
    test) and implies ok when True.
    """

    ok: bool
    det_nonsingular: bool | None

    def __bool__(self):
        return self.ok


def pairwise_lcd(U, W):
    W = U._check_mate(W)
    ok = (U & W.dual()).dim == 0 and (W & U.dual()).dim == 0
    det_ns = None
    if U.dim == W.dim:
        f = U.field
        cross = f.matmul(W.basis, U.basis.T)
        det_ns = f.det(cross) != 0
    return PairwiseLcdCheck(ok, det_ns)


def projector_complement(U):
    """Matrix P with v P = projection of v onto U^perp along U.

    Exists iff U is LCD (the ambient space splits as U + U^perp); P is
    idempotent, kills U and fixes U^perp pointwise.
    """
    f = U.field
    n = U.n
    W = U.dual()
    S = np.vstack([U.basis, W.basis])
    if f.rank(S) != n:
        raise NotLCD(f"subspace meets its dual in dimension {n - f.rank(S)}")
    Sinv = f.inv_matrix(S)
    tail = np.vstack([np.zeros((U.dim, n), dtype=np.int64), W.basis])
    return f.matmul(Sinv, tail)
