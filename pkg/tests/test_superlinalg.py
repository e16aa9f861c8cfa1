from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from upqgl.field import ONE, RatFunc, var
from upqgl.rmatrix import build_affine_R
from upqgl.superlinalg import (GradedSpace, GradedTensor, ShapeError, compose, conjugate_21, graded_embed,
                               kron, permutation_operator, plain_permutation, super_permutation, theta)


def splits(lo, hi):
    return [(m, N - m) for N in range(lo, hi + 1) for m in range(N + 1)]


@pytest.mark.parametrize("m,n", splits(1, 5))
def test_P_and_theta_square_to_identity(m, n):
    sp = GradedSpace(m, n)
    assert compose(super_permutation(sp), super_permutation(sp)).is_identity()
    assert compose(theta(sp), theta(sp)).is_identity()


@pytest.mark.parametrize("m,n", splits(1, 4))
def test_P13_two_ways(m, n):
    sp = GradedSpace(m, n)
    P = super_permutation(sp)
    P12, P23 = graded_embed(P, (1, 2), 3), graded_embed(P, (2, 3), 3)
    direct = permutation_operator(sp, (2, 1, 0))
    assert compose(compose(P12, P23), P12).equals(direct)
    assert graded_embed(P, (1, 3), 3).equals(direct)
    assert P12.equals(permutation_operator(sp, (1, 0, 2)))


@pytest.mark.parametrize("m,n", splits(1, 3))
def test_R13_is_P23_conjugate(m, n):
    sp = GradedSpace(m, n)
    R = build_affine_R(m, n) if m + n >= 2 else GradedTensor.identity(sp, 2)
    P23 = graded_embed(super_permutation(sp), (2, 3), 3)
    assert graded_embed(R, (1, 3), 3).equals(compose(compose(P23, graded_embed(R, (1, 2), 3)), P23))


def test_embed_P_on_two_legs_is_P():
    sp = GradedSpace(1, 1)
    P = super_permutation(sp)
    assert graded_embed(P, (1, 2), 2).equals(P)
    assert graded_embed(P, (2, 1), 2).equals(P)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(splits(2, 3)), st.sampled_from([(1, 2), (1, 3), (2, 3), (3, 1)]))
def test_embed_respects_composition(mn, legs):
    m, n = mn
    sp = GradedSpace(m, n)
    a = build_affine_R(m, n)
    b = super_permutation(sp)
    lhs = compose(graded_embed(a, legs, 3), graded_embed(b, legs, 3))
    assert lhs.equals(graded_embed(compose(a, b), legs, 3))


def test_embed_identity():
    sp = GradedSpace(2, 1)
    I2 = GradedTensor.identity(sp, 2)
    for legs in [(1, 2), (1, 3), (2, 3)]:
        assert graded_embed(I2, legs, 3).is_identity()


def test_embed_leaves_untouched_leg_diagonal():
    R = build_affine_R(1, 1)
    E = graded_embed(R, (2, 3), 3)
    assert all(r[0] == c[0] for r, c in E.entries)


def test_super_permutation_examples():
    P = super_permutation(GradedSpace(2, 0))
    assert P.equals(plain_permutation(GradedSpace(2, 0)))
    P = super_permutation(GradedSpace(1, 1))
    assert P.get((2, 2), (2, 2)).eq(RatFunc.const(-1))
    assert P.get((1, 2), (2, 1)).eq(ONE)
    sp = GradedSpace(0, 2)
    P = super_permutation(sp)
    for a, b in product((1, 2), repeat=2):
        assert P.get((b, a), (a, b)).eq(RatFunc.const(-1))
    assert len(P.entries) == 4


def test_theta_examples():
    d = lambda t: [t.get(r, r).evaluate({}) for r in t.space.basis(2)]
    assert d(theta(GradedSpace(1, 1))) == [1, 1, 1, -1]
    assert theta(GradedSpace(2, 0)).is_identity()
    assert d(theta(GradedSpace(0, 2))) == [-1, -1, -1, -1]
    assert d(theta(GradedSpace(2, 1))) == [1, 1, 1, 1, 1, 1, 1, 1, -1]


def test_conjugate_21():
    sp = GradedSpace(2, 1)
    assert conjugate_21(GradedTensor.identity(sp, 2)).is_identity()
    R = build_affine_R(2, 1)
    assert conjugate_21(conjugate_21(R)).equals(R)
    assert conjugate_21(R).equals(graded_embed(R, (2, 1), 2))


def test_compose_identity_and_weight():
    R = build_affine_R(2, 1)
    assert compose(GradedTensor.identity(R.space, 2), R).equals(R)
    assert R.weight_conserving()
    assert not GradedTensor(R.space, 2, {((1, 1), (1, 3)): ONE}).weight_conserving()


def test_plain_embedding_drops_signs():
    sp = GradedSpace(1, 2)
    Pp = plain_permutation(sp)
    assert graded_embed(Pp, (1, 3), 3, graded=False).equals(permutation_operator(sp, (2, 1, 0), graded=False))


def test_kron():
    sp = GradedSpace(1, 1)
    I1 = GradedTensor.identity(sp, 1)
    assert kron(I1, I1).is_identity()


def test_shape_errors():
    with pytest.raises(ShapeError):
        GradedSpace(0, 0)
    sp = GradedSpace(1, 1)
    with pytest.raises(ShapeError):
        GradedTensor(sp, 1, {((3,), (1,)): ONE})
    with pytest.raises(ShapeError):
        graded_embed(super_permutation(sp), (1, 4), 3)
    with pytest.raises(ShapeError):
        graded_embed(super_permutation(sp), (2, 2), 3)
    with pytest.raises(ShapeError):
        compose(super_permutation(sp), GradedTensor.identity(GradedSpace(2, 0), 2))
    with pytest.raises(ShapeError):
        sp.parity(0)
