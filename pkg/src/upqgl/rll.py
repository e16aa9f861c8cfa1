"""
Gauss forms of L^{+-}(z), entry extraction from the theta-twisted RLL
relations and the scripted rank-three derivation of the X1 X2 exchange
relations.

Entry equations (summations over j1, j2)::

    rel1:  (L^l(w)^-1)_{i1 j1} R21(z/w)_{(j1 i2),(k1 j2)} L^l(z)_{j2 k2}
         = L^l(z)_{i2 j2} R21(z/w)_{(i1 j2),(j1 k2)} (L^l(w)^-1)_{j1 k1}
    rel2:  the same with L^{-l}(w)^-1, R21(z_l/w_-l) on the left and
           R21(z_-l/w_l) on the right, where l is the level of L(z)

Grading enters through the theta factors (-1)^{[k1][j2]+[k1][k2]} on the
left and (-1)^{[i1][i2]+[i1][j2]} on the right.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path

from .field import ONE, ZERO, Monomial, RatFunc, var
from .ncalg import (CancelRule, ExchangeRule, Letter, NCPoly, Ranking, RewriteSystem, name_parity,
                    normal_order, parse_ncpoly)
from .relations import RelationId, adjacent_scalars, instantiate_relation
from .report import Report
from .rmatrix import build_affine_R
from .superlinalg import GradedSpace, ShapeError, conjugate_21


class DerivationMismatch(RuntimeError):
    def __init__(self, msg, residual=None):
        super().__init__(msg)
        self.residual = residual


# Gauss forms ------------------------------------------------------------------

@dataclass
class LMatrixForm:
    N: int
    level: str
    shape: str
    entries: dict       # (i, j) -> NCPoly, 1-based

    def get(self, i, j):
        return self.entries.get((i, j), NCPoly())


def _letter(name, arg, m, n, inv=False):
    return Letter(name, Monomial.of(arg), name_parity(name, m, n), 0, inv)


def _matmul(A, B, N):
    out = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            acc = NCPoly()
            for k in range(1, N + 1):
                a, b = A.get((i, k)), B.get((k, j))
                if a is not None and b is not None:
                    acc = acc + a * b
            if not acc.is_zero():
                out[(i, j)] = acc
    return out


def _factors(N, level, arg, m, n):
    one = NCPoly.scalar(ONE)
    E, K, F = {}, {}, {}
    for i in range(1, N + 1):
        E[(i, i)] = one
        F[(i, i)] = one
        K[(i, i)] = NCPoly.word(_letter(f"k{i}{level}", arg, m, n))
        for j in range(1, i):
            E[(i, j)] = NCPoly.word(_letter(f"e{i}{j}{level}", arg, m, n))
            F[(j, i)] = NCPoly.word(_letter(f"f{j}{i}{level}", arg, m, n))
    return E, K, F


def _unipotent_inverse(U, N, upper):
    """Inverse of a unipotent triangular NCPoly matrix by back substitution."""
    one = NCPoly.scalar(ONE)
    G = {(i, i): one for i in range(1, N + 1)}
    if upper:
        for d in range(1, N):
            for i in range(1, N - d + 1):
                j = i + d
                acc = NCPoly()
                for k in range(i + 1, j + 1):
                    acc = acc + U[(i, k)] * G[(k, j)]
                G[(i, j)] = -acc
    else:
        for d in range(1, N):
            for j in range(1, N - d + 1):
                i = j + d
                acc = NCPoly()
                for k in range(j, i):
                    acc = acc + U[(i, k)] * G[(k, j)]
                G[(i, j)] = -acc
    return G


def gauss_L(N, level="+", arg="z", m=None, n=None):
    """L(z) = E K F with E lower and F upper unipotent."""
    m = N if m is None else m
    n = N - m if n is None else n
    E, K, F = _factors(N, level, arg, m, n)
    return LMatrixForm(N, level, "gauss", _matmul(_matmul(E, K, N), F, N))


def gauss_L_inverse(N, level="+", arg="z", m=None, n=None):
    """L(z)^-1 = F^-1 K^-1 E^-1."""
    m = N if m is None else m
    n = N - m if n is None else n
    E, K, F = _factors(N, level, arg, m, n)
    Kinv = {(i, i): NCPoly.word(_letter(f"k{i}{level}", arg, m, n, True)) for i in range(1, N + 1)}
    Fi = _unipotent_inverse(F, N, True)
    Ei = _unipotent_inverse(E, N, False)
    return LMatrixForm(N, level, "gauss-inverse", _matmul(_matmul(Fi, Kinv, N), Ei, N))


def k_cancel_system(N, levels="+-"):
    return RewriteSystem([CancelRule(f"k{i}{lv}") for i in range(1, N + 1) for lv in levels])


def verify_gauss_inverse(N, level="+", m=None, n=None):
    """L(z) L(z)^-1 = 1 = L(z)^-1 L(z) using only k-cancellation."""
    t0 = time.perf_counter()
    Lz = gauss_L(N, level, "z", m, n)
    Li = gauss_L_inverse(N, level, "z", m, n)
    sys_ = k_cancel_system(N, level)
    bad = []
    for name, prod in (("L L^-1", _matmul(Lz.entries, Li.entries, N)),
                       ("L^-1 L", _matmul(Li.entries, Lz.entries, N))):
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                v = normal_order(prod.get((i, j), NCPoly()), sys_)
                want = NCPoly.scalar(ONE) if i == j else NCPoly()
                if not v.equals(want):
                    bad.append(f"{name} ({i},{j})")
    ok = not bad
    return Report("gauss", {"N": N, "level": level}, "pass" if ok else "fail",
                  "" if ok else f"{len(bad)} entries differ, e.g. {bad[0]}",
                  int((time.perf_counter() - t0) * 1000),
                  ["k-cancellation rules only"])


# entry extraction -------------------------------------------------------------

def _R21(m, n, a, b):
    R = build_affine_R(m, n).substitute({"z": a, "w": b})
    return conjugate_21(R)


def extract_entry(eqn, indices, m, n, levels=("+", "+"), graded=True):
    """Both sides of one entry of the inverse-form RLL relation.

    ``levels`` = (level of L(z), level of L(w)); rel1 needs them equal and
    rel2 needs them opposite.
    """
    N = m + n
    if len(indices) != 4 or not all(isinstance(x, int) and 1 <= x <= N for x in indices):
        raise ShapeError(f"indices {indices} outside 1..{N}")
    i1, k1, i2, k2 = indices
    lz, lw = levels
    if eqn in ("rel1", "RLL rel1"):
        if lz != lw:
            raise ValueError("rel1 needs equal levels")
        z, w = var("z"), var("w")
        Rl = Rr = _R21(m, n, z, w)
    elif eqn in ("rel2", "RLL rel2"):
        if lz == lw:
            raise ValueError("rel2 needs opposite levels")
        e = 1 if lz == "+" else -1
        g = var("g")
        z, w = var("z"), var("w")
        Rl = _R21(m, n, z * g ** e, w * g ** -e)
        Rr = _R21(m, n, z * g ** -e, w * g ** e)
    else:
        raise ValueError(f"unknown equation {eqn!r}")
    sp = GradedSpace(m, n)
    par = sp.parity if graded else (lambda i: 0)
    Lz = gauss_L(N, lz, "z", m, n)
    Lwi = gauss_L_inverse(N, lw, "w", m, n)
    lhs = NCPoly()
    rhs = NCPoly()
    for j1 in range(1, N + 1):
        for j2 in range(1, N + 1):
            c = Rl.get((j1, i2), (k1, j2))
            if not c.is_zero():
                s = (-1) ** (par(k1) * par(j2) + par(k1) * par(k2))
                lhs = lhs + (Lwi.get(i1, j1) * Lz.get(j2, k2)).scale(c * s)
            c = Rr.get((i1, j2), (j1, k2))
            if not c.is_zero():
                s = (-1) ** (par(i1) * par(i2) + par(i1) * par(j2))
                rhs = rhs + (Lz.get(i2, j2) * Lwi.get(j1, k1)).scale(c * s)
    return lhs, rhs


# rank-three derivation ----------------------------------------------------------

# index tuple whose entry equation carries e21(z) k1(z) k3(w)^-1 e32(w)
E_TUPLE = (3, 2, 2, 1)
# mirror tuple for the f-letters: f23(w) k3(w)^-1 k1(z) f12(z)
F_TUPLE = (2, 3, 1, 2)



def _k13_rules(m, n):
    """k1k3 rel1, k1k3 rel2 and the e/f-k commutations, as rules."""
    rules = []
    for lv in "+-":
        r = instantiate_relation(RelationId("k-k", "k1k3 rel1", m, n, 1, 3, "", lv))
        rules += r.rules()
        r = instantiate_relation(RelationId("mixed-level", "k1k3 rel2", m, n, 3, 1, "", lv))
        rules += r.rules()
    for tag, a, b in (("k3e1", "e21", "k3"), ("k3f1", "k3", "f12"), ("k1f2", "k1", "f23"),
                      ("e2k1", "e32", "k1")):
        for e1 in "+-":
            for e2 in "+-":
                r = instantiate_relation(RelationId("k-k" if tag.startswith("k") else "mixed-level",
                                                    f"{tag} rel1", m, n, 0, 0, e1 + e2))
                rules += r.rules()
    rules += [CancelRule(f"k{i}{lv}") for i in (1, 2, 3) for lv in "+-"]
    return rules


def _strip_k(expr, m, n, left, right, k_last):
    """left * expr * right, then move k-letters out with the catalog rules."""
    order = []
    for lv in "+-":
        order += [f"e21{lv}", f"e32{lv}", f"e31{lv}", f"f12{lv}", f"f23{lv}", f"f13{lv}"]
    ks = [f"k{i}{lv}" for i in (1, 2, 3) for lv in "+-"]
    order = (order + ks) if k_last else (ks + order)
    sys_ = RewriteSystem(_k13_rules(m, n), Ranking(order))
    out = normal_order(left * expr * right, sys_)
    for w in out.terms:
        if any(x.name.startswith("k") for x in w):
            raise DerivationMismatch("k-letters survive after stripping", out)
    return out


def _subst(expr, zs, ws):
    g = "g"
    return expr.substitute({"z": Monomial.of(f"z*{g}^{zs}"), "w": Monomial.of(f"w*{g}^{ws}")})


def _nullspace(rows, k):
    """Nonzero vector c (length k) with sum_j rows[i][j] c_j = 0 for all i, or None."""
    A = [list(r) for r in rows if any(not x.is_zero() for x in r)]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, len(A)) if not A[i][col].is_zero()), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = A[r][col].inv()
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and not A[i][col].is_zero():
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
        if r == len(A):
            break
    free = [c for c in range(k) if c not in pivots]
    if not free:
        return None
    f = free[0]
    c = [ZERO] * k
    c[f] = ONE
    for i, pc in enumerate(pivots):
        c[pc] = -A[i][f]
    return c


def _current(kind, idx, arg_var, m, n):
    """X^+_i = e_{i+1,i}^+(x_-) - e^-(x_+);  X^-_i = f_{i,i+1}^+(x_+) - f^-(x_-)."""
    if kind == "+":
        nm = f"e{idx + 1}{idx}"
        plus, minus = -1, 1
    else:
        nm = f"f{idx}{idx + 1}"
        plus, minus = 1, -1
    a = NCPoly.word(_letter(nm + "+", f"{arg_var}*g^{plus}", m, n))
    b = NCPoly.word(_letter(nm + "-", f"{arg_var}*g^{minus}", m, n))
    return a - b


def _derive_pieces(m, n, kind):
    """The four simplified entry relations (levels ++, --, +-, -+) after substitution."""
    pieces = []
    for lz, lw in (("+", "+"), ("-", "-"), ("+", "-"), ("-", "+")):
        eqn = "rel1" if lz == lw else "rel2"
        if kind == "+":
            lhs, rhs = extract_entry(eqn, E_TUPLE, m, n, (lz, lw))
            left = NCPoly.word(_letter(f"k3{lw}", "w", m, n))
            right = NCPoly.word(_letter(f"k1{lz}", "z", m, n, True))
            rel = _strip_k(lhs - rhs, m, n, left, right, k_last=True)
            # x_l -> x_{-l}: e-type currents use e^+(x_-) and e^-(x_+)
            zs = -1 if lz == "+" else 1
            ws = -1 if lw == "+" else 1
        else:
            lhs, rhs = extract_entry(eqn, F_TUPLE, m, n, (lz, lw))
            left = NCPoly.word(_letter(f"k1{lz}", "z", m, n, True))
            right = NCPoly.word(_letter(f"k3{lw}", "w", m, n))
            rel = _strip_k(lhs - rhs, m, n, left, right, k_last=False)
            zs = 1 if lz == "+" else -1
            ws = 1 if lw == "+" else -1
        pieces.append(_subst(rel, zs, ws))
    return pieces


@dataclass
class Derived:
    id: RelationId
    alpha: RatFunc      # alpha X1(z) X2(w) = beta X2(w) X1(z)
    beta: RatFunc
    combination: list
    catalog_match: bool

    def text(self):
        s = self.id.eps
        return (f"({self.alpha.to_text()}) X1{s}(z) X2{s}(w) = "
                f"({self.beta.to_text()}) X2{s}(w) X1{s}(z)")


def derive_one(m, n, kind):
    if m + n != 3:
        raise ValueError("derive_x1x2 needs m + n = 3")
    pieces = _derive_pieces(m, n, kind)
    target_names = ("e21", "e32") if kind == "+" else ("f12", "f23")
    X1 = _current(kind, 1, "z", m, n)
    X2 = _current(kind, 2, "w", m, n)
    keep = set((X1 * X2).terms) | set((X2 * X1).terms)
    words = sorted({w for p in pieces for w in p.terms if w not in keep},
                   key=lambda w: " ".join(x.to_text() for x in w))
    rows = [[p.coefficient(w) for p in pieces] for w in words]
    c = _nullspace(rows, len(pieces))
    if c is None:
        raise DerivationMismatch("no combination eliminates the auxiliary words")
    total = NCPoly()
    for ci, p in zip(c, pieces):
        total = total + p.scale(ci)
    x12 = X1 * X2
    x21 = X2 * X1
    w12 = next(iter(sorted(x12.terms, key=lambda w: " ".join(x.to_text() for x in w))))
    w21 = next(iter(sorted(x21.terms, key=lambda w: " ".join(x.to_text() for x in w))))
    alpha = total.coefficient(w12) / x12.coefficient(w12)
    beta = -(total.coefficient(w21) / x21.coefficient(w21))
    residual = total - (x12.scale(alpha) - x21.scale(beta))
    if not residual.is_zero() or (alpha.is_zero() and beta.is_zero()):
        raise DerivationMismatch("combined relation is not an X1 X2 exchange", residual)
    ca, cb = adjacent_scalars(m, 1, kind)
    k = {("+", True): 1, ("+", False): 2, ("-", True): 3, ("-", False): 4}[(kind, 1 < m)]
    rid = RelationId("X-X-adjacent", f"X1X2 rel{k}", m, n, 1, 2, kind)
    cat = instantiate_relation(rid)
    match = (alpha * cb).eq(beta * ca)
    if not match:
        raise DerivationMismatch(
            f"derived ({alpha.to_text()}) X1X2 = ({beta.to_text()}) X2X1 differs from {rid.tag}", residual)
    return Derived(cat.id, alpha, beta, c, match)


def derive_x1x2(m, n):
    """Both X1 X2 relations (X^+ and X^-) of gl(m|n), m + n = 3."""
    return [derive_one(m, n, "+"), derive_one(m, n, "-")]


def verify_derive_x1x2(m, n):
    t0 = time.perf_counter()
    try:
        out = derive_x1x2(m, n)
    except DerivationMismatch as exc:
        return Report("derive-x1x2", {"m": m, "n": n}, "fail", str(exc),
                      int((time.perf_counter() - t0) * 1000))
    return Report("derive-x1x2", {"m": m, "n": n}, "pass", "",
                  int((time.perf_counter() - t0) * 1000), [d.id.tag + ": " + d.text() for d in out])


# fixtures -----------------------------------------------------------------------

FIXTURES = Path(__file__).parent / "fixtures"

# index tuple printed alongside the pre rel1 display
PRINTED_TUPLE = (3, 1, 2, 1)


def load_equation(path, m, n):
    """Two-sided NCPoly fixture: lhs lines, a line '=', rhs lines."""
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln.split("#", 1)[0].rstrip() for ln in text.splitlines()]
    if "=" not in [ln.strip() for ln in lines]:
        raise ValueError(f"{path}: missing '=' separator line")
    k = [ln.strip() for ln in lines].index("=")
    return (parse_ncpoly("\n".join(lines[:k]), m, n),
            parse_ncpoly("\n".join(lines[k + 1:]), m, n))


def swap_level(x):
    """Rename every level-tagged letter + <-> -."""
    def flip(letter):
        nm = letter.name
        if nm[-1] in "+-":
            nm = nm[:-1] + ("-" if nm[-1] == "+" else "+")
        return Letter(nm, letter.param, letter.parity, letter.leg, letter.inv)
    return NCPoly({tuple(flip(x_) for x_ in w): c for w, c in x.terms.items()})


def pre_rel1_fixture(level="+"):
    lhs, rhs = load_equation(FIXTURES / "x1x2_pre_rel1.ncp", 2, 1)
    if level == "-":
        lhs, rhs = swap_level(lhs), swap_level(rhs)
    return lhs, rhs


def check_pre_rel1(indices=PRINTED_TUPLE, level="+"):
    """Canonical-text match of an extracted entry against the transcribed display.

    The display writes the single-term side first, so the pair is compared
    in either order.
    """
    t0 = time.perf_counter()
    lhs, rhs = extract_entry("rel1", tuple(indices), 2, 1, (level, level))
    flhs, frhs = pre_rel1_fixture(level)
    got = (lhs.to_text(), rhs.to_text())
    want = (flhs.to_text(), frhs.to_text())
    ok = got == want or got == want[::-1]
    notes = [f"indices (i1,k1,i2,k2) = {tuple(indices)}"]
    res = ""
    if not ok:
        res = f"extracted lhs:\n{got[0]}\nextracted rhs:\n{got[1]}"
    return Report("rll-extract", {"m": 2, "n": 1, "indices": list(indices), "level": level},
                  "pass" if ok else "fail", res, int((time.perf_counter() - t0) * 1000), notes)
