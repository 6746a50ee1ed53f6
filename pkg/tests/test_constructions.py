import numpy as np
import pytest

import oracles
from lcdsubspace.codes import is_lcd_subspace_code, params
from lcdsubspace.constructions import (
    AlgebraBasis,
    algebra_closure,
    build_block,
    bush_schemes,
    lcd_code_thm42,
    murh_scheme,
    subspace_code_from_algebra,
    theorem_pipeline,
)
from lcdsubspace.errors import (
    DimensionBlowup,
    DivisibilityFails,
    HypothesisFailed,
    IdentityFails,
    IndexOutOfRange,
    InvalidSpec,
    NotBushType,
    UnequalCells,
    VerificationFailed,
    ZeroAlpha,
)
from lcdsubspace.gf import field_new
from lcdsubspace.hadamard import (
    HadamardMatrix,
    UnbiasedSet,
    gramian_B,
    search_unbiased_extension,
    sylvester,
)
from lcdsubspace.schemes import EquitablePartition, scheme_from_matrices


def swap_matrix():
    return np.array([[0, 1], [1, 0]], dtype=np.int64)


# --- algebra closure ---


def test_closure_dims(f2, f3):
    assert algebra_closure(f2, [np.eye(2, dtype=np.int64)]).dim == 1
    basis = algebra_closure(f2, [swap_matrix()])
    assert basis.dim == 2  # the swap matrix and its square span dimension 2
    assert basis.field is f2 and basis.t == 2


def test_closure_is_product_closed(f3, f4):
    rng = np.random.default_rng(3)
    for f in (f3, f4):
        gens = [rng.integers(0, f.q, size=(3, 3)) for _ in range(2)]
        basis = algebra_closure(f, gens, cap=64)
        flat = [b.reshape(-1).tolist() for b in basis.basis]
        r0 = oracles.rank(f, flat)
        assert r0 == basis.dim
        for a in basis.basis:
            for b in basis.basis:
                prod = f.matmul(a, b).reshape(-1).tolist()
                assert oracles.rank(f, flat + [prod]) == r0


def test_closure_rejections(f2):
    with pytest.raises(InvalidSpec):
        algebra_closure(f2, [np.zeros((2, 2), dtype=np.int64)])
    with pytest.raises(DimensionBlowup):
        algebra_closure(f2, [swap_matrix()], cap=1)


# --- block builder ---


def test_build_block_pinned(f2):
    N = build_block(f2, np.zeros((2, 2), dtype=np.int64), 1)
    assert N.tolist() == [[0, 0, 1, 0], [0, 0, 0, 1]]
    N = build_block(f2, np.eye(2, dtype=np.int64), 1)
    assert N.tolist() == [[1, 0, 1, 0], [0, 1, 0, 1]]
    with pytest.raises(ZeroAlpha):
        build_block(f2, np.eye(2, dtype=np.int64), 0)


# --- classical construction from one scheme class ---


def test_thm42_one_cell(k44_scheme):
    part = EquitablePartition([tuple(range(8))], 8)
    rep = lcd_code_thm42(k44_scheme, part, 1, 2)
    assert rep.kind == "thm42" and rep.t == 1 and rep.lcd_verified
    assert rep.generator.tolist() == [[0, 1]]
    assert rep.length == 2
    assert all(ok for _, ok in rep.hypotheses)


def test_thm42_singletons_and_halves(k44_scheme):
    rep = lcd_code_thm42(k44_scheme, EquitablePartition.singletons(8), 1, 2)
    assert rep.t == 8 and rep.lcd_verified
    part = EquitablePartition([tuple(range(4)), tuple(range(4, 8))], 8)
    rep = lcd_code_thm42(k44_scheme, part, 1, 2)
    assert rep.t == 2 and rep.lcd_verified
    assert rep.generator.tolist() == [[0, 0, 1, 0], [0, 0, 0, 1]]


def test_thm42_divisibility_gate():
    I2 = np.eye(2, dtype=np.int64)
    J2 = np.ones((2, 2), dtype=np.int64)
    k2 = scheme_from_matrices([I2, J2 - I2])
    # p_{11}^0 = 1 here, so no prime passes the divisibility hypothesis
    for p in (2, 3):
        with pytest.raises(DivisibilityFails):
            lcd_code_thm42(k2, EquitablePartition([(0, 1)], 2), 1, p)
    # the target object still exists: [1 | alpha] is classically LCD over F_3
    from lcdsubspace.codes import classical_lcd_check

    assert classical_lcd_check(field_new(3), [[1, 1]])


def test_thm42_rejections(k44_scheme):
    with pytest.raises(IndexOutOfRange):
        lcd_code_thm42(k44_scheme, EquitablePartition.singletons(8), 3, 2)
    ragged = EquitablePartition([(0,), tuple(range(1, 8))], 8)
    with pytest.raises(UnequalCells):
        lcd_code_thm42(k44_scheme, ragged, 1, 2)


# --- code from a matrix algebra ---


def test_algebra_code_pinned(f3):
    J = np.ones((3, 3), dtype=np.int64)
    basis = algebra_closure(f3, [J])
    assert basis.dim == 1
    rep = subspace_code_from_algebra(basis, alphas=(1, 2))
    p = rep.params
    assert (p.n, p.size, p.d, p.dims, p.q) == (6, 2, 2, (3,), 3)
    assert rep.lcd_verified and rep.enumeration_complete and rep.distance_exhaustive
    assert rep.tallies == {"x_alpha_pairs": 4, "row_spaces": 2}
    assert rep.alphas == (1, 2)
    assert rep.identity_all_pairs
    assert bool(is_lcd_subspace_code(rep.code))


def test_algebra_code_zero_x_variant(f3):
    J = np.ones((3, 3), dtype=np.int64)
    basis = algebra_closure(f3, [J])
    rep = subspace_code_from_algebra(basis, alphas=(1, 2), include_zero_x=True)
    assert rep.include_zero_x
    assert rep.params.size == 3  # the [0 | alpha I] row space joins the code
    assert rep.tallies["x_alpha_pairs_with_zero"] == 6
    assert rep.tallies["row_spaces_with_zero"] == 3
    assert rep.lcd_verified


def test_algebra_code_identity_recomputed(f3):
    # N_x N_y^T = alpha_x alpha_y I, re-derived here from scratch
    J = np.ones((3, 3), dtype=np.int64)
    basis = algebra_closure(f3, [J])
    blocks = []
    for c in range(1, 3):
        X = f3.mul(c, J)
        for alpha in (1, 2):
            blocks.append((build_block(f3, X, alpha), alpha))
    for N, a in blocks:
        for M, b in blocks:
            prod = f3.matmul(N, M.T)
            expect = f3.mul(f3.mul(a, b), np.eye(3, dtype=np.int64))
            assert prod.tolist() == expect.tolist()


def test_algebra_code_rejects_non_lcd(f2):
    basis = algebra_closure(f2, [np.eye(1, dtype=np.int64)])
    with pytest.raises(VerificationFailed):
        subspace_code_from_algebra(basis)


def test_algebra_code_truncated_enumeration(f3):
    J = np.ones((3, 3), dtype=np.int64)
    basis = algebra_closure(f3, [J])
    rep = subspace_code_from_algebra(basis, alphas=(1,), cap=2, sample=50, seed=1)
    assert not rep.enumeration_complete
    assert rep.params.size >= 1 and rep.lcd_verified


def test_algebra_code_distance_fallback(f3):
    J = np.ones((3, 3), dtype=np.int64)
    basis = algebra_closure(f3, [J])
    rep = subspace_code_from_algebra(basis, alphas=(1, 2), pair_budget=0)
    assert not rep.distance_exhaustive
    assert rep.params.d is not None  # sampled upper bound still reported


# --- three-class symmetric quotient structure ---


def murh_expected_tables(n, m):
    half = n // 2
    return {
        ("B1", "B1"): ((2 * n * n + n) * m, (n * n + 3 * half) * (m - 1),
                       (n * n + half) * (m - 1), (n * n + n) * m),
        ("B2", "B2"): ((2 * n * n - n) * m, (n * n - half) * (m - 1),
                       (n * n - 3 * half) * (m - 1), (n * n - n) * m),
        ("B1", "B2"): (0, (n * n - half) * (m - 1), (n * n + half) * (m - 1),
                       n * n * m),
        ("B1", "B3"): (0, 2 * n * n + n - 1, 2 * n * n + n, 0),
        ("B2", "B3"): (0, 2 * n * n - n, 2 * n * n - n - 1, 0),
    }


def test_murh_identities_exact(bush_uset):
    B1, B2, B3 = gramian_B(bush_uset)
    I = np.eye(48, dtype=np.int64)
    by_name = {"B1": B1, "B2": B2, "B3": B3}
    n, m = 2, 2
    tables = murh_expected_tables(n, m)
    # pinned spot values for n = 2, m = 2
    assert tables[("B1", "B1")][0] == (2 * n * n + n) * m == 20
    assert tables[("B1", "B3")][1] == 2 * n * n + n - 1 == 9
    for (na, nb), (c0, c1, c2, c3) in tables.items():
        lhs = by_name[na] @ by_name[nb]
        rhs = c0 * I + c1 * B1 + c2 * B2 + c3 * B3
        assert (lhs == rhs).all(), (na, nb)


def test_murh_scheme_built(bush_uset):
    B1, B2, B3 = gramian_B(bush_uset)
    sch = murh_scheme(B1, B2, B3, 2, 2)
    assert sch.size == 48 and sch.classes == 3
    mats = [np.asarray(M).tolist() for M in sch.mats]
    expect = oracles.intersection_tensor(mats)
    assert expect is not None
    for i in range(4):
        for j in range(4):
            for k in range(4):
                assert int(sch.tensor[i, j, k]) == expect[i][j][k]


def test_murh_scheme_rejects_tampering(bush_uset):
    B1, B2, B3 = gramian_B(bush_uset)
    bad = B1.copy()
    bad[0, 1] ^= 1
    bad[1, 0] ^= 1
    with pytest.raises(IdentityFails):
        murh_scheme(bad, B2, B3, 2, 2)


# --- bush-type refinements ---


def test_bush_schemes_shapes(bush_pair_schemes):
    five = bush_pair_schemes.five_class
    eight = bush_pair_schemes.eight_class
    assert five.size == 48 and five.classes == 5
    assert eight.size == 96 and eight.classes == 8
    assert bush_pair_schemes.n == 2 and bush_pair_schemes.m == 2


def test_bush_five_class_pinned_identity(bush_pair_schemes):
    n = 2
    A = [np.asarray(M) for M in bush_pair_schemes.five_class.mats]
    lhs = A[1] @ A[1]
    rhs = (2 * n - 1) * A[0] + (2 * n - 2) * A[1]
    assert (lhs == rhs).all()


def test_bush_eight_class_pinned_identity(bush_pair_schemes):
    n, m = 2, 2
    T = [np.asarray(M) for M in bush_pair_schemes.eight_class.mats]
    lhs = T[4] @ T[5]
    rhs = 2 * m * n * (T[2] + T[8]) + 2 * n * (m - 1) * T[5]
    assert (lhs == rhs).all()


def test_bush_schemes_reject_non_bush(bush_pair):
    A, B = bush_pair
    flipped = A.entries.copy()
    flipped[0] *= -1
    us = UnbiasedSet([HadamardMatrix(flipped), B])
    with pytest.raises(NotBushType):
        bush_schemes(us)


# --- the one-call pipelines ---


def test_pipeline_thm51(order4_pair):
    rep = theorem_pipeline("thm51", p=2, matrices=list(order4_pair.matrices))
    p = rep.params
    assert (p.n, p.size, p.d, p.dims, p.q) == (8, 1, None, (4,), 2)
    assert rep.lcd_verified and rep.kind == "thm51"


def test_pipeline_thm51_wrong_prime(order4_pair):
    with pytest.raises(HypothesisFailed, match="sqrt"):
        theorem_pipeline("thm51", p=3, matrices=list(order4_pair.matrices))


def test_pipeline_thm52_weighing(order4_pair):
    mats = [m.entries for m in order4_pair.matrices]
    rep = theorem_pipeline("thm52", p=2, matrices=mats, weight=4)
    assert rep.params.n == 8 and rep.params.size == 1
    assert rep.lcd_verified


def test_pipeline_thm54_partitions(order4_pair):
    mats = list(order4_pair.matrices)
    rep = theorem_pipeline("thm54", p=2, matrices=mats,
                           partition=EquitablePartition.singletons(4))
    assert rep.params.n == 8 and rep.lcd_verified
    with pytest.raises(HypothesisFailed, match="equitable"):
        theorem_pipeline("thm54", p=2, matrices=mats,
                         partition=EquitablePartition([(0, 1), (2, 3)], 4))


def test_pipeline_cor45(c4):
    from lcdsubspace.drg import PermutationGroup

    ident = PermutationGroup(4, [(0, 1, 2, 3)])
    rep = theorem_pipeline("cor45", p=2, graph=c4, group=ident, indices=(1,))
    assert rep.params.n == 8 and rep.params.dims == (4,) and rep.lcd_verified
    refl = PermutationGroup(4, [(0, 3, 2, 1)])
    with pytest.raises(HypothesisFailed, match="equal length"):
        theorem_pipeline("cor45", p=2, graph=c4, group=refl, indices=(1,))
    rot = PermutationGroup(4, [(1, 2, 3, 0)])
    with pytest.raises(HypothesisFailed, match="nonzero mod p"):
        theorem_pipeline("cor45", p=2, graph=c4, group=rot, indices=(1,))


def test_pipeline_thm43(k44_scheme):
    rep = theorem_pipeline("thm43", p=2, r=2, scheme=k44_scheme,
                           partition=EquitablePartition.singletons(8),
                           indices=(1,))
    p = rep.params
    assert (p.n, p.size, p.d, p.dims, p.q) == (16, 3, 4, (8,), 4)
    assert rep.lcd_verified and rep.enumeration_complete
    assert rep.tallies == {"x_alpha_pairs": 3, "row_spaces": 3}


def test_pipeline_bush_gates(bush_pair):
    for kind in ("thm56", "thm58"):
        with pytest.raises(HypothesisFailed, match="n/2"):
            theorem_pipeline(kind, p=2, matrices=list(bush_pair),
                             partition=None)


def test_pipeline_thm59(thm59_report):
    rep = thm59_report
    p = rep.params
    assert (p.n, p.size, p.d, p.dims, p.q) == (192, 31, 4, (96,), 2)
    assert rep.lcd_verified and rep.enumeration_complete
    assert rep.algebra_dim == 5
    assert rep.identity_all_pairs and rep.identity_pairs_checked == 31 * 31
    assert rep.tallies == {"x_alpha_pairs": 31, "row_spaces": 31}
    assert rep.source["generator_classes"] == [3, 4, 5, 6, 7]
    assert all(ok for _, ok in rep.hypotheses)
    assert bool(is_lcd_subspace_code(rep.code))


def test_pipeline_unknown_kind():
    with pytest.raises(InvalidSpec):
        theorem_pipeline("thm99", p=2)
