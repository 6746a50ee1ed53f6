import random

import numpy as np
import pytest

import oracles
from lcdsubspace.codes import (
    ProjectionDecoder,
    SubspaceCode,
    classical_lcd_check,
    decode_naive,
    decode_projection,
    is_lcd_subspace_code,
    params,
    sampled_min_distance,
)
from lcdsubspace.errors import (
    DegenerateCode,
    EmptyCode,
    NotLCDCode,
    PairBudgetExceeded,
    RankDeficient,
)
from lcdsubspace.subspaces import Subspace, distance, dual, intersect, span


def line(field, v):
    return span(field, len(v), [v])


def block_code(field, xs, t):
    """Row spaces of [X | I_t] for each X in xs."""
    eye = np.eye(t, dtype=np.int64)
    words = [Subspace.span(field, 2 * t, np.hstack([np.array(x), eye]).tolist())
             for x in xs]
    return SubspaceCode(words)


def test_constructor_dedups_and_orders(f3):
    a = line(f3, [1, 0])
    b = line(f3, [1, 1])
    code = SubspaceCode([b, a, span(f3, 2, [[2, 2]])])
    assert len(code) == 2
    assert set(code) == {a, b}
    assert SubspaceCode([a, b]) == SubspaceCode([b, a])
    with pytest.raises(EmptyCode):
        SubspaceCode([])


def test_block_code_pinned(f2):
    code = block_code(f2, [np.eye(2, dtype=np.int64), np.array([[0, 1], [1, 0]])], 2)
    assert len(code) == 2
    p = params(code)
    assert p.n == 4 and p.size == 2 and p.dims == (2,) and p.constant_dimension


def test_params_pinned(f3):
    code = SubspaceCode([line(f3, [1, 0]), line(f3, [1, 1])])
    p = params(code)
    assert (p.n, p.size, p.d, p.dims, p.q) == (2, 2, 2, (1,), 3)
    assert p.constant_dimension


def test_params_degenerate_and_budget(f3):
    one = SubspaceCode([line(f3, [1, 0])])
    with pytest.raises(DegenerateCode):
        params(one)
    assert params(one, allow_degenerate=True).d is None
    three = SubspaceCode([line(f3, [1, 0]), line(f3, [1, 1]), line(f3, [0, 1])])
    with pytest.raises(PairBudgetExceeded):
        params(three, pair_budget=2)
    assert params(three, pair_budget=3).d == 2


def test_sampled_distance_bounds_exact(f3):
    code = SubspaceCode([line(f3, [1, 0]), line(f3, [1, 1]), line(f3, [0, 1])])
    exact = params(code).d
    assert sampled_min_distance(code, samples=50, seed=1) >= exact
    assert sampled_min_distance(code, samples=2000, seed=1) == exact


def test_lcd_code_membership_pinned(f3):
    good = SubspaceCode([line(f3, [1, 0]), line(f3, [1, 1])])
    assert bool(is_lcd_subspace_code(good))
    # <(0,1)> is the dual of <(1,0)>, so the cross intersection is nonzero
    bad = SubspaceCode([line(f3, [1, 0]), line(f3, [0, 1])])
    assert not is_lcd_subspace_code(bad)


def test_lcd_code_matches_direct_intersections(f2, f3, f4):
    rng = random.Random(12)
    for f in (f2, f3, f4):
        for _ in range(20):
            n = rng.randrange(1, 5)
            words = []
            for _ in range(rng.randrange(1, 4)):
                k = rng.randrange(0, n + 1)
                rows = [[rng.randrange(f.q) for _ in range(n)] for _ in range(k)]
                words.append(Subspace.span(f, n, rows))
            code = SubspaceCode(words)
            expect = all(
                intersect(u, dual(w)).dim == 0 for u in code for w in code)
            assert bool(is_lcd_subspace_code(code)) == expect


def test_decode_pinned_failures(f3):
    tied = SubspaceCode([line(f3, [1, 0]), line(f3, [0, 1])])
    out = decode_naive(tied, line(f3, [1, 1]))
    assert out.status == "failure" and out.index is None and out.distance == 2
    code = SubspaceCode([line(f3, [1, 0]), line(f3, [1, 1])])
    out = decode_naive(code, Subspace.full(f3, 2))
    assert out.status == "failure" and out.distance == 1


def test_decode_unique_winner(f3):
    code = SubspaceCode([line(f3, [1, 0]), line(f3, [1, 1])])
    for i, w in enumerate(code):
        out = decode_naive(code, w)
        assert out.status == "decoded" and out.index == i and out.distance == 0
        assert decode_projection(code, w) == out


def test_projection_requires_lcd(f3):
    bad = SubspaceCode([line(f3, [1, 0]), line(f3, [0, 1])])
    with pytest.raises(NotLCDCode):
        decode_projection(bad, line(f3, [1, 1]))
    with pytest.raises(NotLCDCode):
        ProjectionDecoder(bad)


def test_decoders_agree_randomized(f2, f3, f4):
    rng = random.Random(77)
    checked = 0
    for f in (f2, f3, f4):
        while checked < 40:
            n = rng.randrange(2, 5)
            words = []
            for _ in range(rng.randrange(2, 4)):
                k = rng.randrange(1, n)
                rows = [[rng.randrange(f.q) for _ in range(n)] for _ in range(k)]
                words.append(Subspace.span(f, n, rows))
            code = SubspaceCode(words)
            if not is_lcd_subspace_code(code):
                continue
            checked += 1
            dec = ProjectionDecoder(code)
            for _ in range(5):
                k = rng.randrange(0, n + 1)
                rows = [[rng.randrange(f.q) for _ in range(n)] for _ in range(k)]
                R = Subspace.span(f, n, rows)
                a = decode_naive(code, R)
                b = dec.decode(R)
                assert a == b
                assert b == decode_projection(code, R)
                # the reported distance is the true minimum either way
                assert a.distance == min(distance(R, w) for w in code)
        checked = 0


def test_classical_lcd_pinned(f2, f3):
    assert not classical_lcd_check(f2, [[1, 1]])
    assert classical_lcd_check(f3, [[1, 1]])
    with pytest.raises(RankDeficient):
        classical_lcd_check(f3, [[1, 1], [2, 2]])


def test_classical_lcd_matches_intersection(all_fields):
    rng = random.Random(5)
    for f in all_fields:
        done = 0
        while done < 25:
            k = rng.randrange(1, 4)
            n = rng.randrange(k, 7)
            G = [[rng.randrange(f.q) for _ in range(n)] for _ in range(k)]
            if oracles.rank(f, G) != k:
                continue
            done += 1
            U = Subspace.span(f, n, G)
            expect = intersect(U, dual(U)).dim == 0
            assert bool(classical_lcd_check(f, G)) == expect


def test_classical_check_is_the_gram_determinant(f3):
    G = [[1, 1]]
    gram_det = f3.det(f3.matmul(f3.asmatrix(G), f3.asmatrix(G).T))
    assert classical_lcd_check(f3, G) == (gram_det != 0)
    assert gram_det == 2
