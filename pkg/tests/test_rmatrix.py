from fractions import Fraction

import pytest

from upqgl.field import ONE, RatFunc, var
from upqgl.rmatrix import (GOLDEN, build_affine_R, build_basic_R, check_graded_YBE, check_homogeneity,
                           check_symmetry, check_unitarity, one_parameter_factor, verify_golden)
from upqgl.superlinalg import GradedSpace, GradedTensor, compose, conjugate_21, plain_permutation

p, q, z, w = (var(s) for s in "pqzw")
SPLITS = [(m, N - m) for N in range(1, 5) for m in range(N, -1, -1)]


@pytest.mark.parametrize("m,n", SPLITS)
def test_ybe(m, n):
    r = check_graded_YBE(m, n, compare_forms=False)
    assert r.ok and r.residual == ""


@pytest.mark.parametrize("m,n", SPLITS)
def test_unitarity_and_symmetry(m, n):
    assert check_unitarity(m, n, compare_forms=False).ok
    assert check_symmetry(m, n).ok


@pytest.mark.parametrize("m,n", SPLITS[1:])
def test_homogeneity_and_weight(m, n):
    assert check_homogeneity(m, n).ok
    assert build_affine_R(m, n).weight_conserving()
    assert build_basic_R(m, n).weight_conserving()


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1)])
def test_identity_R_passes(m, n):
    I = GradedTensor.identity(GradedSpace(m, n), 2)
    assert check_graded_YBE(m, n, R=I).ok
    assert check_unitarity(m, n, R=I).ok
    assert check_symmetry(m, n, R=I).ok


def test_scaled_entry_fails_ybe():
    R = build_affine_R(1, 1)
    key = ((1, 2), (2, 1))
    ent = dict(R.entries)
    ent[key] = ent[key] * 2
    r = check_graded_YBE(1, 1, R=GradedTensor(R.space, 2, ent))
    assert r.status == "fail" and r.residual


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1)])
def test_tilde_form_recorded_as_failing_ybe(m, n):
    assert check_graded_YBE(m, n, R=build_affine_R(m, n, "tilde")).status == "fail"
    notes = check_graded_YBE(m, n).notes
    assert any(s.startswith("tilde form: fail") for s in notes)


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden(name):
    assert verify_golden(name).ok


def test_type2_entry():
    R = build_affine_R(1, 1)
    assert R.at(4, 4).eq(-(w * q - z / p) / (z * q - w / p))


def test_z_equals_w_gives_permutation():
    R = build_affine_R(2, 0).substitute({"w": "z"})
    assert R.equals(plain_permutation(GradedSpace(2, 0)))


def test_basic_R_examples():
    assert build_basic_R(1, 0).get((1, 1), (1, 1)).eq(ONE)
    assert len(build_basic_R(1, 0).entries) == 1
    assert build_basic_R(1, 1).get((2, 2), (2, 2)).eq(-p * q)


def _at_zero(f, pt):
    # z -> 0 limit of an entry polynomial in z: evaluate numerator and denominator at z = 0
    pt = dict(pt, z=Fraction(0))
    return f.num.evaluate(pt) / f.den.evaluate(pt)


def test_basic_R_is_a_limit_of_type1():
    # basic R = R(z/w -> 0) P, entrywise, at a generic rational point
    pt = {"p": Fraction(2), "q": Fraction(5, 3), "w": Fraction(7)}
    sp = GradedSpace(2, 0)
    RP = compose(build_affine_R(2, 0), plain_permutation(sp))
    B = build_basic_R(2, 0)
    for r in sp.basis(2):
        for c in sp.basis(2):
            assert _at_zero(RP.get(r, c), pt) == B.get(r, c).evaluate(pt)


def test_type1_symmetry_product():
    R = build_affine_R(2, 0)
    R21 = conjugate_21(R.substitute({"z": "w", "w": "z"}))
    assert compose(R, R21).is_identity()


def test_one_parameter_factor():
    assert one_parameter_factor().eq(ONE)
    assert not (q / p).eq(ONE)
