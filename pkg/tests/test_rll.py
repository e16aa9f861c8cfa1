import pytest

from upqgl.field import ONE, ZERO, var
from upqgl.ncalg import NCPoly
from upqgl.relations import find
from upqgl.rll import (E_TUPLE, PRINTED_TUPLE, check_pre_rel1, derive_x1x2, extract_entry, gauss_L,
                       gauss_L_inverse, pre_rel1_fixture, verify_derive_x1x2, verify_gauss_inverse)
from upqgl.superlinalg import ShapeError

p, q, z, w = (var(s) for s in "pqzw")
D = z * q - w / p


@pytest.mark.parametrize("N", [1, 2, 3, 4])
@pytest.mark.parametrize("level", "+-")
def test_gauss_inverse(N, level):
    assert verify_gauss_inverse(N, level).ok


def test_gauss_shapes():
    L = gauss_L(2, "+")
    assert L.get(1, 1).equals(NCPoly.word(*next(iter(L.get(1, 1).terms))))
    assert len(L.get(2, 2).terms) == 2
    assert gauss_L(1, "+").get(1, 1).terms and gauss_L_inverse(1, "+").get(1, 1).terms


@pytest.mark.parametrize("m,n", [(2, 0), (1, 1)])
@pytest.mark.parametrize("graded", [True, False])
def test_extract_hand_oracle(m, n, graded):
    lhs, rhs = extract_entry("rel1", (1, 1, 1, 1), m, n, ("+", "+"), graded)
    Lz, Lwi = gauss_L(2, "+", "z", m, n), gauss_L_inverse(2, "+", "w", m, n)
    c = q - 1 / p
    want_l = Lwi.get(1, 1) * Lz.get(1, 1) + (Lwi.get(1, 2) * Lz.get(2, 1)).scale(z * c / D)
    want_r = Lz.get(1, 1) * Lwi.get(1, 1) + (Lz.get(1, 2) * Lwi.get(2, 1)).scale(w * c / D)
    assert lhs.equals(want_l) and rhs.equals(want_r)


def test_grading_changes_odd_entries_only():
    for idx in [(1, 2, 2, 1), (2, 2, 2, 2)]:
        a = extract_entry("rel1", idx, 2, 0, graded=True)
        b = extract_entry("rel1", idx, 2, 0, graded=False)
        assert a[0].equals(b[0]) and a[1].equals(b[1])
    a = extract_entry("rel1", (2, 2, 2, 2), 1, 1, graded=True)
    b = extract_entry("rel1", (2, 2, 2, 2), 1, 1, graded=False)
    assert not (a[0].equals(b[0]) and a[1].equals(b[1]))


def test_extract_errors():
    with pytest.raises(ShapeError):
        extract_entry("rel1", (4, 1, 1, 1), 2, 1)
    with pytest.raises(ShapeError):
        extract_entry("rel1", (1, 1, 1), 2, 1)
    with pytest.raises(ValueError):
        extract_entry("rel1", (1, 1, 1, 1), 2, 1, ("+", "-"))
    with pytest.raises(ValueError):
        extract_entry("rel2", (1, 1, 1, 1), 2, 1, ("+", "+"))


def _collapse(x, kill_ef):
    total = ZERO
    for word, c in x.terms.items():
        if kill_ef and any(l.name[0] in "ef" for l in word):
            continue
        total = total + c
    return total


def _all_entries(m, n):
    N = m + n
    for i1 in range(1, N + 1):
        for k1 in range(1, N + 1):
            for i2 in range(1, N + 1):
                for k2 in range(1, N + 1):
                    yield (i1, k1, i2, k2), extract_entry("rel1", (i1, k1, i2, k2), m, n)


def test_identity_collapse():
    # L = 1 (e, f -> 0, k -> 1) turns both sides into the same R21 entry
    for idx, (lhs, rhs) in _all_entries(2, 1):
        assert _collapse(lhs, True).eq(_collapse(rhs, True)), idx


@pytest.mark.xfail(strict=True, reason="letters -> 1 does not equate the two sides (43 of 81 entries differ)")
def test_scalar_collapse_all_letters_to_one():
    bad = [idx for idx, (lhs, rhs) in _all_entries(2, 1) if not _collapse(lhs, False).eq(_collapse(rhs, False))]
    assert not bad


def test_pre_rel1_display_tuple():
    assert check_pre_rel1(E_TUPLE, "+").ok
    assert check_pre_rel1(E_TUPLE, "-").ok


def test_pre_rel1_printed_tuple_differs():
    r = check_pre_rel1(PRINTED_TUPLE, "+")
    assert r.status == "fail" and "extracted lhs" in r.residual


def test_fixture_is_one_word_against_four():
    lhs, rhs = pre_rel1_fixture()
    assert len(lhs.terms) == 1 and len(rhs.terms) == 4


@pytest.mark.parametrize("m", [3, 2, 1, 0])
def test_derive_x1x2(m):
    assert verify_derive_x1x2(m, 3 - m).ok
    for d in derive_x1x2(m, 3 - m):
        assert d.catalog_match
        assert find(m, 3 - m, tag=d.id.tag)


def test_derive_m2_example():
    up = derive_x1x2(2, 1)[0]
    assert up.id.tag == "X1X2 rel1"
    assert (up.alpha / up.beta).eq((z - w) * q / p / (z * q - w / p))


def test_derive_m1_example():
    up = derive_x1x2(1, 2)[0]
    assert up.id.tag == "X1X2 rel2"
    assert (up.alpha / up.beta).eq((w - z) * q / p / (w * q - z / p))


def test_derive_one_parameter_limit():
    up = derive_x1x2(2, 1)[0]
    r = (up.alpha / up.beta).substitute({"g": 1, "q": "p"})
    assert r.eq((z - w) / (z * p - w / p))
