"""Symmetric association schemes, equitable partitions, quotient algebras.

A scheme is presented as its list of 0/1 relation matrices [A_0, ..., A_d]
with A_0 = I.  Construction verifies all axioms and computes the full tensor
of intersection numbers p_{ij}^k from matrix products, spot-checking a sample
of them combinatorially (common-neighbour counting) so the two computation
paths stay independent.  All arithmetic is exact int64.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InternalInconsistency,
    MissingIdentity,
    NonIntegralQuotient,
    NotAPartition,
    NotClosed,
    NotEquitable,
    NotSymmetric,
    TooManyClasses,
)
from .linalg import as_int_matrix, int_matmul

_SPOT_SEED = 0x5C4E
_SPOT_PAIRS = 10


class AssociationScheme:
    """Verified scheme: relation matrices plus intersection-number tensor."""

    __slots__ = ("mats", "tensor", "size", "classes")

    def __init__(self, mats, tensor):
        self.mats = mats
        self.tensor = tensor
        self.size = mats[0].shape[0]
        self.classes = len(mats) - 1

    @property
    def valencies(self):
        return tuple(int(self.tensor[i, i, 0]) for i in range(self.classes + 1))

    def __repr__(self):
        return f"AssociationScheme(|X|={self.size}, d={self.classes})"

    @classmethod
    def from_matrices(cls, mats):
        return scheme_from_matrices(mats)


def scheme_from_matrices(mats):
    """Verify the scheme axioms and return the scheme with its tensor.

    Checks: square matrices of one size, 0/1 entries, A_0 = I, symmetry,
    the matrices partition X x X, and closure of products in their span.
    """
    mats = [as_int_matrix(M) for M in mats]
    if not mats:
        raise MissingIdentity("no matrices given")
    n = mats[0].shape[0]
    for idx, M in enumerate(mats):
        if M.shape != (n, n):
            raise DimensionMismatch(f"matrix {idx} has shape {M.shape}, expected {(n, n)}")
        if not ((M == 0) | (M == 1)).all():
            raise NotAPartition(f"matrix {idx} has entries outside {{0,1}}", witness=idx)
    if not (mats[0] == np.eye(n, dtype=np.int64)).all():
        raise MissingIdentity("the 0th matrix must be the identity")
    for idx, M in enumerate(mats):
        if not (M == M.T).all():
            raise NotSymmetric(f"matrix {idx} is not symmetric", witness=idx)
    total = sum(mats)
    if not (total == 1).all():
        bad = np.argwhere(total != 1)[0]
        raise NotAPartition(
            f"matrices do not partition X x X at position {tuple(bad)}",
            witness=tuple(int(v) for v in bad))

    d = len(mats) - 1
    supports = [M == 1 for M in mats]
    tensor = np.zeros((d + 1, d + 1, d + 1), dtype=np.int64)
    for i in range(d + 1):
        for j in range(i, d + 1):
            P = int_matmul(mats[i], mats[j])
            for k in range(d + 1):
                vals = P[supports[k]]
                if vals.size == 0:
                    continue
                v0 = int(vals[0])
                if not (vals == v0).all():
                    raise NotClosed(
                        f"product A_{i} A_{j} is not constant on relation {k}",
                        witness=(i, j, k))
                tensor[i, j, k] = v0
                tensor[j, i, k] = v0

    _spot_check_tensor(mats, tensor)
    return AssociationScheme(tuple(mats), tensor)


def _spot_check_tensor(mats, tensor):
    """Recount a sample of p_{ij}^k by common-neighbour sets.

    Independent path from the matrix products: neighbour lists and set
    intersections, ten random positions per relation.
    """
    rng = random.Random(_SPOT_SEED)
    d = len(mats) - 1
    nbrs = [[set(np.flatnonzero(M[x]).tolist()) for x in range(M.shape[0])]
            for M in mats]
    for k in range(d + 1):
        pos = np.argwhere(mats[k] == 1)
        if len(pos) == 0:
            continue
        picks = [pos[rng.randrange(len(pos))] for _ in range(_SPOT_PAIRS)]
        for x, y in picks:
            x, y = int(x), int(y)
            for i in range(d + 1):
                for j in range(d + 1):
                    count = len(nbrs[i][x] & nbrs[j][y])
                    if count != tensor[i, j, k]:
                        raise InternalInconsistency(
                            f"tensor p_{i}{j}^{k} = {tensor[i, j, k]} but "
                            f"counting at ({x},{y}) gives {count}",
                            witness=(i, j, k, x, y))


class EquitablePartition:
    """Ordered partition of {0..n-1} with its 0/1 characteristic matrix."""

    __slots__ = ("size", "cells", "char_matrix", "cell_sizes", "cell_of")

    def __init__(self, cells, size):
        size = int(size)
        seen = np.full(size, -1, dtype=np.int64)
        norm = []
        for ci, cell in enumerate(cells):
            cell = sorted(int(v) for v in cell)
            if not cell:
                raise NotAPartition("empty cell")
            for v in cell:
                if not 0 <= v < size:
                    raise IndexOutOfRange(f"index {v} outside [0, {size})")
                if seen[v] != -1:
                    raise NotAPartition(f"index {v} appears in two cells", witness=v)
                seen[v] = ci
            norm.append(tuple(cell))
        if (seen == -1).any():
            missing = int(np.flatnonzero(seen == -1)[0])
            raise NotAPartition(f"index {missing} not covered", witness=missing)
        order = sorted(range(len(norm)), key=lambda c: norm[c][0])
        self.cells = tuple(norm[c] for c in order)
        self.size = size
        H = np.zeros((size, len(self.cells)), dtype=np.int64)
        for ci, cell in enumerate(self.cells):
            H[list(cell), ci] = 1
        self.char_matrix = H
        self.cell_sizes = tuple(len(c) for c in self.cells)
        cell_of = np.zeros(size, dtype=np.int64)
        for ci, cell in enumerate(self.cells):
            cell_of[list(cell)] = ci
        self.cell_of = cell_of

    @property
    def t(self):
        return len(self.cells)

    @property
    def equal_cells(self):
        return len(set(self.cell_sizes)) == 1

    @classmethod
    def singletons(cls, size):
        return cls([[i] for i in range(size)], size)

    @classmethod
    def contiguous_blocks(cls, size, block):
        if size % block:
            raise NotAPartition(f"{size} points cannot split into blocks of {block}")
        return cls([range(i, i + block) for i in range(0, size, block)], size)

    def __repr__(self):
        return f"EquitablePartition(n={self.size}, t={self.t})"


def _matrix_list(matrices):
    if isinstance(matrices, AssociationScheme):
        return list(matrices.mats)
    if isinstance(matrices, np.ndarray) and matrices.ndim == 2:
        return [as_int_matrix(matrices)]
    return [as_int_matrix(M) for M in matrices]


@dataclass(frozen=True)
class EquitableCheck:
    ok: bool
    witness: dict | None

    def __bool__(self):
        return self.ok


def verify_equitable(partition, matrices):
    """Constant block row sums and block column sums for every matrix."""
    mats = _matrix_list(matrices)
    H = partition.char_matrix
    for mi, A in enumerate(mats):
        if A.shape[0] != partition.size:
            raise DimensionMismatch(
                f"matrix {mi} of order {A.shape[0]} vs partition on {partition.size}")
        for side, S in (("row", int_matmul(A, H)), ("col", int_matmul(A.T, H))):
            for ci, cell in enumerate(partition.cells):
                block = S[list(cell)]
                if (block != block[0]).any():
                    rows = np.argwhere(block != block[0])[0]
                    return EquitableCheck(False, {
                        "matrix": mi, "side": side, "cell": ci,
                        "point": cell[int(rows[0])], "target_cell": int(rows[1]),
                    })
    return EquitableCheck(True, None)


@dataclass(frozen=True)
class QuotientSet:
    """Integer quotient matrices M_i with A_i H = H M_i."""

    quotients: tuple
    cell_sizes: tuple
    equal_cells: bool


def quotient_matrices(partition, matrices):
    """Exact quotients (H^T H)^{-1} H^T A_i H of an equitable partition."""
    mats = _matrix_list(matrices)
    check = verify_equitable(partition, mats)
    if not check.ok:
        raise NotEquitable("partition is not equitable", witness=check.witness)
    H = partition.char_matrix
    sizes = np.array(partition.cell_sizes, dtype=np.int64)
    quotients = []
    for A in mats:
        num = int_matmul(int_matmul(H.T, A), H)
        if (num % sizes[:, None] != 0).any():
            bad = np.argwhere(num % sizes[:, None] != 0)[0]
            raise NonIntegralQuotient(
                f"entry {tuple(bad)} not divisible by cell size", witness=tuple(bad))
        M = num // sizes[:, None]
        if not (int_matmul(A, H) == int_matmul(H, M)).all():
            raise InternalInconsistency("A H != H M after quotient")
        quotients.append(M)
    return QuotientSet(tuple(quotients), partition.cell_sizes,
                       partition.equal_cells)


@dataclass(frozen=True)
class QuotientAlgebraCheck:
    ok: bool
    witness: tuple | None

    def __bool__(self):
        return self.ok


def verify_quotient_algebra(scheme, quotient_set):
    """M_i M_j = sum_k p_{ij}^k M_k over the integers, for all i, j."""
    Ms = quotient_set.quotients
    d = scheme.classes
    if len(Ms) != d + 1:
        raise DimensionMismatch(f"{len(Ms)} quotients for {d + 1} relations")
    for i in range(d + 1):
        for j in range(d + 1):
            lhs = int_matmul(Ms[i], Ms[j])
            rhs = sum(int(scheme.tensor[i, j, k]) * Ms[k] for k in range(d + 1))
            if not (lhs == rhs).all():
                return QuotientAlgebraCheck(False, (i, j))
    return QuotientAlgebraCheck(True, None)


def divisibility_screen(scheme, p):
    """All maximal index sets I with p | p_{ij}^k for all i, j in I and all k.

    Vertices are the classes i with p dividing every p_{ii}^k; edges join
    compatible pairs; maximal cliques via Bron-Kerbosch.  Singletons count.
    """
    d = scheme.classes
    if d + 1 > 20:
        raise TooManyClasses(f"{d + 1} classes exceed the screen cap of 20")
    T = scheme.tensor
    good = [i for i in range(d + 1) if not (T[i, i, :] % p).any()]
    adj = {i: set() for i in good}
    for a, i in enumerate(good):
        for j in good[a + 1:]:
            if not (T[i, j, :] % p).any():
                adj[i].add(j)
                adj[j].add(i)
    return _maximal_cliques(adj)


def _maximal_cliques(adj):
    cliques = []

    def expand(R, P, X):
        if not P and not X:
            cliques.append(tuple(sorted(R)))
            return
        pivot = max(sorted(P | X), key=lambda u: len(adj[u] & P))
        for v in sorted(P - adj[pivot]):
            expand(R | {v}, P & adj[v], X & adj[v])
            P = P - {v}
            X = X | {v}

    expand(set(), set(adj), set())
    return sorted(c for c in cliques if c)
