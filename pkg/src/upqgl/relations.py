"""
Catalog of the Drinfeld-current relations of U_{p,q}(gl(m|n)^), the rewrite
systems they induce and the cubic Serre verifiers.

Every relation is stored as a displayed pair (lhs, rhs) of NCPoly together
with, when it is a two-letter exchange, the scalar s of A(z) B(w) = s B(w) A(z).
The two are built independently and ``self_check`` confirms that the
display normal-orders to zero under its own rule.

Shift convention: z_+ = z*g, z_- = z/g where g stands for q^{c/2}.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache

from .field import ONE, Monomial, RatFunc, var
from .ncalg import (CancelRule, ExchangeRule, Letter, NCPoly, Ranking, RewriteSystem, check_local_confluence,
                    name_parity, normal_order)
from .report import Report


class NotApplicable(ValueError):
    pass


class NotOrientable(ValueError):
    pass


FAMILIES = ("k-k", "k-X", "X-X-same", "X-X-adjacent", "X-anticommute", "serre", "mixed-level")

P, Q, Z, W, G = (var(s) for s in ("p", "q", "z", "w", "g"))
Z1, Z2 = var("z1"), var("z2")


@dataclass(frozen=True)
class RelationId:
    family: str
    tag: str
    m: int
    n: int
    i: int = 0
    j: int = 0
    eps: str = ""
    level: str = ""

    def label(self):
        parts = [self.tag, f"m={self.m}", f"n={self.n}"]
        if self.i:
            parts.append(f"i={self.i}")
        if self.j:
            parts.append(f"j={self.j}")
        if self.eps:
            parts.append(f"eps={self.eps}")
        if self.level:
            parts.append(f"level={self.level}")
        return " ".join(parts)

    def sort_key(self):
        return (self.tag, self.m, self.n, self.i, self.j, self.eps, self.level)


@dataclass
class Relation:
    id: RelationId
    lhs: NCPoly
    rhs: NCPoly
    exchange: tuple | None = None      # (name A, name B, scalar s in slots z, w, g)
    kind: str = "exchange"             # exchange | serre | delta
    note: str = ""
    serre: dict = field(default_factory=dict)

    def rules(self):
        if self.exchange is None:
            raise NotOrientable(f"{self.id.label()} is not a scalar exchange relation")
        a, b, s = self.exchange
        return [ExchangeRule(a, b, s, self.id.label())]

    def text(self):
        return f"{self.id.label()}\n  lhs: {_flat(self.lhs)}\n  rhs: {_flat(self.rhs)}"


def _flat(x):
    return " + ".join(f"[{c.to_text()}] {' '.join(l.to_text() for l in w) or '1'}"
                      for w, c in x.sorted_terms()) or "0"


# helpers ----------------------------------------------------------------------

def _sh(v, k):
    """Monomial v*g^k."""
    return Monomial.of(v) * Monomial.of("g") ** k


def _shift(x, k):
    return x * G ** k


def _pm(level):
    return 1 if level == "+" else -1


def _flip(level):
    return "-" if level == "+" else "+"


class _Builder:
    def __init__(self, m, n):
        self.m, self.n = m, n

    def lt(self, name, arg, inv=False):
        mono = arg if isinstance(arg, Monomial) else Monomial.of(arg)
        return Letter(name, mono, name_parity(name, self.m, self.n), 0, inv)

    def word(self, *letters, c=ONE):
        return NCPoly.word(*letters, coeff=c)


# k-k relations ------------------------------------------------------------------

def _kk_same(b, i, j, level):
    rid = RelationId("k-k", "kikj same level", b.m, b.n, i, j, "", level)
    A, B = f"k{i}{level}", f"k{j}{level}"
    lhs = b.word(b.lt(A, "z"), b.lt(B, "w"))
    rhs = b.word(b.lt(B, "w"), b.lt(A, "z"))
    return Relation(rid, lhs, rhs, (A, B, ONE))


def _kk_mixed_even(b, i):
    rid = RelationId("k-k", "kiki even", b.m, b.n, i, i, "", "+-")
    A, B = f"k{i}+", f"k{i}-"
    return Relation(rid, b.word(b.lt(A, "z"), b.lt(B, "w")), b.word(b.lt(B, "w"), b.lt(A, "z")), (A, B, ONE))


def _kiki(b, i):
    rid = RelationId("k-k", "kiki", b.m, b.n, i, i, "", "+-")
    zp, zm, wp, wm = _shift(Z, 1), _shift(Z, -1), _shift(W, 1), _shift(W, -1)
    alpha = (wm * P - zp / Q) / (zp * P - wm / Q)
    beta = (wp * P - zm / Q) / (zm * P - wp / Q)
    A, B = f"k{i}+", f"k{i}-"
    lhs = b.word(b.lt(A, "z"), b.lt(B, "w"), c=alpha)
    rhs = b.word(b.lt(B, "w"), b.lt(A, "z"), c=beta)
    return Relation(rid, lhs, rhs, (A, B, beta / alpha))


def _kikj(b, i, j, level):
    # alpha k_i^{-l}(w)^-1 k_j^{l}(z) = beta k_j^{l}(z) k_i^{-l}(w)^-1, i > j
    e = _pm(level)
    zl, zo = _shift(Z, e), _shift(Z, -e)
    wo, wl = _shift(W, -e), _shift(W, e)
    alpha = (zl - wo) / (zl * P - wo / Q)
    beta = (zo - wl) / (zo * P - wl / Q)
    rid = RelationId("mixed-level", "kikj", b.m, b.n, i, j, "", level)
    A, B = f"k{j}{level}", f"k{i}{_flip(level)}"
    lhs = b.word(b.lt(B, "w", True), b.lt(A, "z"), c=alpha)
    rhs = b.word(b.lt(A, "z"), b.lt(B, "w", True), c=beta)
    return Relation(rid, lhs, rhs, (A, B, beta / alpha))


# k-X relations ------------------------------------------------------------------

def _conj(b, rid, kname, xname, c, k_first_inverse, note=""):
    """k^{-1} X k = c X  (k_first_inverse) or k X k^{-1} = c X."""
    if k_first_inverse:
        lhs = b.word(b.lt(kname, "z", True), b.lt(xname, "w"), b.lt(kname, "z"))
        s = c.inv()
    else:
        lhs = b.word(b.lt(kname, "z"), b.lt(xname, "w"), b.lt(kname, "z", True))
        s = c
    rhs = b.word(b.lt(xname, "w"), c=c)
    return Relation(rid, lhs, rhs, (kname, xname, s), note=note)


def _kX_trivial(b, tag, j, i, eps, level):
    rid = RelationId("k-X", tag, b.m, b.n, i, j, eps, level)
    return _conj(b, rid, f"k{j}{level}", f"X{i}{eps}", ONE, True)


def _kX(b, which, i, eps, level):
    """Conjugation of X_i^eps by k_i or k_{i+1} (which = 0 or 1), i != m."""
    m = b.m
    e = _pm(level)
    low = i < m
    if eps == "-":
        zs = _shift(Z, -e)
        if which == 0:
            c = (zs * P - W / Q) / (zs - W) if low else (zs / Q - W * P) / (zs - W)
        else:
            c = (zs / Q - W * P) / (zs - W) if low else (zs * P - W / Q) / (zs - W)
        first_inv = True
    else:
        zs = _shift(Z, e)
        if which == 0:
            c = (zs * P - W / Q) / (zs - W) if low else (zs / Q - W * P) / (zs - W)
        else:
            c = (zs / Q - W * P) / (zs - W) if low else (zs * P - W / Q) / (zs - W)
        first_inv = False
    j = i + which
    tag = ("kiXi" if which == 0 else "ki+1Xi") + (" i<m" if low else " i>m")
    rid = RelationId("k-X", tag, b.m, b.n, i, j, eps, level)
    return _conj(b, rid, f"k{j}{level}", f"X{i}{eps}", c, first_inv)


def _kiXm(b, j, eps, level):
    # k_j^{l}(z)^{eps} X_m^{eps}(w) k_j^{l}(z)^{-eps} = (z_{-l} p - w q^-1)/(z_{-l} - w) X_m^{eps}(w)
    e = _pm(level)
    zs = _shift(Z, -e)
    c = (zs * P - W / Q) / (zs - W)
    rid = RelationId("k-X", "kiXm rel1", b.m, b.n, b.m, j, eps, level)
    return _conj(b, rid, f"k{j}{level}", f"X{b.m}{eps}", c, eps == "-")


# X-X relations ------------------------------------------------------------------

def same_index_scalars(m, i, eps, variant="consistent"):
    """(alpha, beta) with alpha X(z)X(w) = beta X(w)X(z) for X_i^eps, i != m.

    ``consistent`` uses the rank-two forms for X^+; ``literal`` takes the
    lower sign of the general display for X^+ as printed.  The two differ by
    the overall factor qp^-1 on both sides, so they define the same relation.
    """
    if i < m:
        if eps == "-":
            return Z / Q - W * P, Z * P - W / Q
        if variant == "literal":
            return Z * Q - W / P, Z / P - W * Q
        return Z * P - W / Q, Z / Q - W * P
    if eps == "-":
        return W / Q - Z * P, W * P - Z / Q
    if variant == "literal":
        return W * Q - Z / P, W / P - Z * Q
    return Z / Q - W * P, Z * P - W / Q


def _XX_same(b, i, eps, variant="consistent"):
    alpha, beta = same_index_scalars(b.m, i, eps, variant)
    tag = "X-X same i<m" if i < b.m else "X-X same i>m"
    if variant == "literal":
        tag += " literal"
    rid = RelationId("X-X-same", tag, b.m, b.n, i, i, eps)
    A = f"X{i}{eps}"
    note = ""
    if eps == "+" and variant == "consistent":
        note = "X^+ form taken from the rank-two catalogs; the general display's lower sign is qp^-1 times it"
    return Relation(rid, b.word(b.lt(A, "z"), b.lt(A, "w"), c=alpha),
                    b.word(b.lt(A, "w"), b.lt(A, "z"), c=beta), (A, A, beta / alpha), note=note)


def _XX_anti(b, eps):
    i = b.m
    rid = RelationId("X-anticommute", "Xm anticommute", b.m, b.n, i, i, eps)
    A = f"X{i}{eps}"
    lhs = b.word(b.lt(A, "z"), b.lt(A, "w")) + b.word(b.lt(A, "w"), b.lt(A, "z"))
    return Relation(rid, lhs, NCPoly(), (A, A, RatFunc.const(-1)))


def adjacent_scalars(m, i, eps):
    """(alpha, beta): alpha X_i(z) X_{i+1}(w) = beta X_{i+1}(w) X_i(z)."""
    r = Q / P
    if eps == "+":
        if i < m:
            return (Z - W) * r, Z * Q - W / P
        return (W - Z) * r, W * Q - Z / P
    if i < m:
        return Z * Q - W / P, (Z - W) * r
    return W * Q - Z / P, (W - Z) * r


def _XX_adj(b, i, eps):
    alpha, beta = adjacent_scalars(b.m, i, eps)
    tag = {("+", True): "com rels4 Xi", ("+", False): "com rels5 Xi",
           ("-", True): "com rels6 Xi", ("-", False): "com rels7 Xi"}[(eps, i < b.m)]
    rid = RelationId("X-X-adjacent", tag, b.m, b.n, i, i + 1, eps)
    A, B = f"X{i}{eps}", f"X{i + 1}{eps}"
    return Relation(rid, b.word(b.lt(A, "z"), b.lt(B, "w"), c=alpha),
                    b.word(b.lt(B, "w"), b.lt(A, "z"), c=beta), (A, B, beta / alpha))


def _delta(b, i, j):
    """[X_i^+, X_j^-] / {X_m^+, X_m^-}: stored as data only."""
    odd = i == j == b.m
    tag = "XmXm delta" if odd else "XiXj delta"
    rid = RelationId("mixed-level", tag, b.m, b.n, i, j)
    A, B = f"X{i}+", f"X{j}-"
    sgn = 1 if odd else -1
    lhs = b.word(b.lt(A, "z"), b.lt(B, "w")) + b.word(b.lt(B, "w"), b.lt(A, "z")).scale(sgn)
    rhs = NCPoly()
    if i == j:
        # opaque delta letters delta1(w/z g^2) and delta2(w/z g^-2)
        d1 = Letter("delta1", Monomial.of("w*z^-1*g^2"))
        d2 = Letter("delta2", Monomial.of("w*z^-1*g^-2"))
        pre = (P - 1 / Q) * (1 if odd else -1)
        rhs = (b.word(d1, b.lt(f"k{i + 1}+", "w*g"), b.lt(f"k{i}+", "w*g", True), c=pre)
               - b.word(d2, b.lt(f"k{i + 1}-", "z*g"), b.lt(f"k{i}-", "z*g", True), c=pre))
    return Relation(rid, lhs, rhs, None, kind="delta",
                    note="delta-function relation, catalogued as data")


# Serre relations ----------------------------------------------------------------

def serre_patterns(mutate=False):
    mid = -(Q + P) if mutate else -(Q + 1 / P)
    r = Q / P
    return {"A": (r, mid, ONE), "B": (ONE, mid, r)}


SERRE_GENERAL = {
    # tag: (sign, offset of repeated index, offset of other index, pattern, prefactor)
    1: ("+", 0, 1, "A", None),
    2: ("-", 0, 1, "B", None),
    3: ("+", 1, 0, "B", None),
    4: ("-", 1, 0, "A", None),
    5: ("+", None, -1, "B", Z1 / P - Z2 * Q),
    6: ("-", None, -1, "A", Z1 * P - Z2 / Q),
    7: ("+", None, 1, "A", Z2 / P - Z1 * Q),
    8: ("-", None, 1, "B", Z2 * P - Z1 / Q),
}

# N = 3 displays: case m -> list of (sign, repeated, other, pattern, prefactor)
SERRE_N3 = {
    3: [("+", 1, 2, "A", None), ("-", 1, 2, "B", None), ("+", 2, 1, "B", None), ("-", 2, 1, "A", None)],
    2: [("+", 1, 2, "A", None), ("+", 2, 1, "B", Z1 / P - Z2 * Q),
        ("-", 1, 2, "B", None), ("-", 2, 1, "A", Z1 * Q - Z2 / P)],
    1: [("+", 1, 2, "A", Z2 / P - Z1 * Q), ("+", 2, 1, "B", None),
        ("-", 1, 2, "B", Z2 * Q - Z1 / P), ("-", 2, 1, "A", None)],
    0: [("+", 1, 2, "A", None), ("-", 1, 2, "B", None), ("+", 2, 1, "B", None), ("-", 2, 1, "A", None)],
}

SERRE_N3_NOTES = {
    (1, 3): "the third word's X_2^+ is read as X_2^- (all other letters are X^-)",
}


def serre_expression(b, sign, rep, other, pattern, pref, mutate=False):
    """Symmetrized cubic Serre expression as an NCPoly."""
    cs = serre_patterns(mutate)[pattern]
    Xi, Xj = f"X{rep}{sign}", f"X{other}{sign}"
    total = NCPoly()
    for a, c in (("z1", "z2"), ("z2", "z1")):
        words = [(b.lt(Xi, a), b.lt(Xi, c), b.lt(Xj, "w")),
                 (b.lt(Xi, a), b.lt(Xj, "w"), b.lt(Xi, c)),
                 (b.lt(Xj, "w"), b.lt(Xi, a), b.lt(Xi, c))]
        pf = ONE if pref is None else pref.substitute({"z1": a, "z2": c})
        for coef, wd in zip(cs, words):
            total = total + b.word(*wd, c=coef * pf)
    return total


def _serre_general(b, k, i):
    sign, dr, do, pat, pref = SERRE_GENERAL[k]
    if k <= 4:
        rep, other = i + dr, i + do
    else:
        rep, other = b.m, b.m + do
    rid = RelationId("serre", f"ser rel{k} N", b.m, b.n, rep, other, sign)
    expr = serre_expression(b, sign, rep, other, pat, pref)
    note = ""
    if k >= 5:
        note = ("prefactor takes the upper sign for X^+ and the lower sign for X^-"
                if True else "")
    return Relation(rid, expr, NCPoly(), None, kind="serre", note=note,
                    serre={"sign": sign, "rep": rep, "other": other, "pattern": pat, "pref": pref})


def _serre_n3(b, k):
    sign, rep, other, pat, pref = SERRE_N3[b.m][k - 1]
    rid = RelationId("serre", f"ser{k} m={b.m}", b.m, b.n, rep, other, sign)
    expr = serre_expression(b, sign, rep, other, pat, pref)
    return Relation(rid, expr, NCPoly(), None, kind="serre", note=SERRE_N3_NOTES.get((b.m, k), ""),
                    serre={"sign": sign, "rep": rep, "other": other, "pattern": pat, "pref": pref})


# catalog ----------------------------------------------------------------------

def theorem_relations(m, n, variant="consistent"):
    """All instances of the general relation list for gl(m|n)."""
    b = _Builder(m, n)
    N = m + n
    out = []
    for lv in "+-":
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                out.append(_kk_same(b, i, j, lv))
    for i in range(1, N + 1):
        out.append(_kk_mixed_even(b, i) if i <= m else _kiki(b, i))
    for i in range(1, N + 1):
        for j in range(1, i):
            for lv in "+-":
                out.append(_kikj(b, i, j, lv))
    for i in range(1, N):
        for j in range(1, N + 1):
            for eps in "+-":
                for lv in "+-":
                    if j - i <= -1:
                        out.append(_kX_trivial(b, "kjXi rel2", j, i, eps, lv))
                    elif j - i >= 2:
                        out.append(_kX_trivial(b, "KjXi rel2", j, i, eps, lv))
        for eps in "+-":
            for lv in "+-":
                if i != m:
                    out.append(_kX(b, 0, i, eps, lv))
                    out.append(_kX(b, 1, i, eps, lv))
                else:
                    out.append(_kiXm(b, m, eps, lv))
                    out.append(_kiXm(b, m + 1, eps, lv))
        for eps in "+-":
            out.append(_XX_anti(b, eps) if i == m else _XX_same(b, i, eps, variant))
        if i + 1 <= N - 1:
            for eps in "+-":
                out.append(_XX_adj(b, i, eps))
        out.append(_delta(b, i, i))
    for k in range(1, 9):
        for i in _serre_range(m, n, k):
            out.append(_serre_general(b, k, i))
    return out


def _serre_range(m, n, k):
    N = m + n
    if k in (1, 2):
        return [i for i in range(1, N - 1) if i != m]
    if k in (3, 4):
        return [i for i in range(1, N - 1) if i != m - 1]
    if k in (5, 6):
        return [m] if m - 1 >= 1 and m <= N - 1 else []
    return [m] if m >= 1 and m + 1 <= N - 1 else []


def n2_relations(m, n):
    """Relations displayed for the three rank-two types (kept verbatim)."""
    if m + n != 2:
        raise NotApplicable("rank-two catalog needs m + n = 2")
    b = _Builder(m, n)
    out = []
    zs = lambda e: _shift(Z, e)
    ws = lambda e: _shift(W, e)
    for lv in "+-":
        for i in (1, 2):
            for j in (1, 2):
                r = _kk_same(b, i, j, lv)
                out.append(_retag(r, f"type kk same {m}{n}"))
    if (m, n) == (1, 1):
        for lv in "+-":
            e = _pm(lv)
            alpha = (zs(e) - ws(-e)) / (zs(e) * Q - ws(-e) / P)
            beta = (zs(-e) - ws(e)) / (zs(-e) * Q - ws(e) / P)
            out.append(_mixed_k2k1(b, lv, alpha, beta, "type2 k2k1"))
        out.append(_retag(_kk_mixed_even(b, 1), "type2 k1k1"))
        alpha = (ws(-1) * Q - zs(1) / P) / (zs(1) * Q - ws(-1) / P)
        beta = (ws(1) * Q - zs(-1) / P) / (zs(-1) * Q - ws(1) / P)
        out.append(_kk_pair(b, 2, alpha, beta, "type2 k2k2"))
        for eps in "+-":
            for lv in "+-":
                e = _pm(lv) * _pm(eps)
                c = (zs(e) * Q - W / P) / ((zs(e) - W) * Q / P)
                rid = RelationId("k-X", "type2 k1X1", m, n, 1, 1, eps, lv)
                out.append(_conj(b, rid, f"k1{lv}", f"X1{eps}", c, eps == "-"))
                c2 = (zs(e) / P - W * Q) / ((zs(e) - W) * Q / P)
                rid = RelationId("k-X", "type2 k2X1", m, n, 1, 2, eps, lv)
                out.append(_conj(b, rid, f"k2{lv}", f"X1{eps}", c2, eps == "-",
                                 note="right-hand letter read as X_1^eps"))
        for eps in "+-":
            out.append(_retag(_XX_anti(b, eps), "X1X1 rel1 type2"))
    else:
        for i in (1, 2):
            if (m, n) == (2, 0):
                out.append(_retag(_kk_mixed_even(b, i), "type1 kiki"))
            else:
                alpha = (ws(-1) * Q - zs(1) / P) / (zs(1) * Q - ws(-1) / P)
                beta = (ws(1) * Q - zs(-1) / P) / (zs(-1) * Q - ws(1) / P)
                out.append(_kk_pair(b, i, alpha, beta, "type3 kiki"))
        for lv in "+-":
            e = _pm(lv)
            alpha = (zs(e) - ws(-e)) / (zs(e) * P - ws(-e) / Q)
            beta = (zs(-e) - ws(e)) / (zs(-e) * P - ws(e) / Q)
            out.append(_mixed_k2k1(b, lv, alpha, beta, f"type{1 if m == 2 else 3} k2k1"))
        t = "type1" if m == 2 else "type3"
        for eps in "+-":
            for lv in "+-":
                if m == 2:
                    # k_1^{l}(z)^-1 X^eps(w) k_1^{l}(z) = (z p - w_{-l eps} q^-1)/(z - w_{-l eps}) X
                    e = -_pm(lv) * _pm(eps)
                    c = (Z * P - ws(e) / Q) / (Z - ws(e))
                    rid = RelationId("k-X", "type1 k1X1", m, n, 1, 1, eps, lv)
                    out.append(_conj(b, rid, f"k1{lv}", f"X1{eps}", c, True))
                    # k_2^{l}(w)^-1 X^eps(z) k_2^{l}(w) = ((z_{-l eps} - w)/(z_{-l eps} p - w q^-1))^eps X
                    c2 = (zs(e) - W) / (zs(e) * P - W / Q)
                    if eps == "-":
                        c2 = c2.inv()
                    rid = RelationId("k-X", "type1 k2X1", m, n, 1, 2, eps, lv)
                    out.append(_conj_swapped(b, rid, f"k2{lv}", f"X1{eps}", c2))
                else:
                    e = _pm(lv) * _pm(eps)
                    c = (zs(e) / P - W * Q) / ((zs(e) - W) * Q / P)
                    rid = RelationId("k-X", "type3 k1X1", m, n, 1, 1, eps, lv)
                    out.append(_conj(b, rid, f"k1{lv}", f"X1{eps}", c, eps == "-"))
                    c2 = (zs(e) * Q - W / P) / ((zs(e) - W) * Q / P)
                    rid = RelationId("k-X", "type3 k2X1", m, n, 1, 2, eps, lv)
                    out.append(_conj(b, rid, f"k2{lv}", f"X1{eps}", c2, eps == "-"))
        for k, eps in ((1, "-"), (2, "+")):
            if m == 2:
                alpha, beta = ((Z / Q - W * P, Z * P - W / Q) if eps == "-"
                               else (Z * P - W / Q, Z / Q - W * P))
            else:
                alpha, beta = ((Z * P - W / Q, Z / Q - W * P) if eps == "-"
                               else (Z / Q - W * P, Z * P - W / Q))
            rid = RelationId("X-X-same", f"X1X1 rel{k} {t}", m, n, 1, 1, eps)
            A = f"X1{eps}"
            out.append(Relation(rid, b.word(b.lt(A, "z"), b.lt(A, "w"), c=alpha),
                                b.word(b.lt(A, "w"), b.lt(A, "z"), c=beta), (A, A, beta / alpha)))
    out.append(_retag(_delta(b, 1, 1), f"type delta {m}{n}"))
    return out


def _retag(r, tag):
    rid = r.id
    r.id = RelationId(rid.family, tag, rid.m, rid.n, rid.i, rid.j, rid.eps, rid.level)
    return r


def _kk_pair(b, i, alpha, beta, tag):
    rid = RelationId("k-k", tag, b.m, b.n, i, i, "", "+-")
    A, B = f"k{i}+", f"k{i}-"
    return Relation(rid, b.word(b.lt(A, "z"), b.lt(B, "w"), c=alpha),
                    b.word(b.lt(B, "w"), b.lt(A, "z"), c=beta), (A, B, beta / alpha))


def _mixed_k2k1(b, level, alpha, beta, tag):
    rid = RelationId("mixed-level", tag, b.m, b.n, 2, 1, "", level)
    A, B = f"k1{level}", f"k2{_flip(level)}"
    lhs = b.word(b.lt(B, "w", True), b.lt(A, "z"), c=alpha)
    rhs = b.word(b.lt(A, "z"), b.lt(B, "w", True), c=beta)
    return Relation(rid, lhs, rhs, (A, B, beta / alpha))


def _conj_swapped(b, rid, kname, xname, c):
    """k(w)^-1 X(z) k(w) = c X(z), stored with k in slot z of the rule."""
    lhs = b.word(b.lt(kname, "w", True), b.lt(xname, "z"), b.lt(kname, "w"))
    rhs = b.word(b.lt(xname, "z"), c=c)
    s = c.inv().substitute({"z": "w", "w": "z"})
    return Relation(rid, lhs, rhs, (kname, xname, s))


def n3_relations(m):
    """Relations displayed in the rank-three derivation, for m + n = 3."""
    n = 3 - m
    b = _Builder(m, n)
    out = []
    for lv in "+-":
        r = _kk_same(b, 1, 3, lv)
        out.append(_retag(r, "k1k3 rel1"))
        e = _pm(lv)
        alpha = (_shift(Z, e) - _shift(W, -e)) / (_shift(Z, e) * Q - _shift(W, -e) / P)
        beta = (_shift(Z, -e) - _shift(W, e)) / (_shift(Z, -e) * Q - _shift(W, e) / P)
        rid = RelationId("mixed-level", "k1k3 rel2", m, n, 3, 1, "", lv)
        A, B = f"k1{lv}", f"k3{_flip(lv)}"
        out.append(Relation(rid, b.word(b.lt(B, "w", True), b.lt(A, "z"), c=alpha),
                            b.word(b.lt(A, "z"), b.lt(B, "w", True)).scale(beta),
                            (A, B, beta / alpha)))
    pairs = [("k3e1", "e21", "k3", "z", "w"), ("k3f1", "k3", "f12", "w", "z"),
             ("k1f2", "k1", "f23", "w", "z"), ("e2k1", "e32", "k1", "w", "z"),
             ("e2f1", "e32", "f12", "w", "z"), ("f2e1", "f23", "e21", "w", "z")]
    for tag, a, bb, pa, pb in pairs:
        for e1 in "+-":
            for e2 in "+-":
                A, B = a + e1, bb + e2
                rid = RelationId("k-k" if tag.startswith("k") else "mixed-level",
                                 f"{tag} rel1", m, n, 0, 0, e1 + e2)
                out.append(Relation(rid, b.word(b.lt(A, pa), b.lt(B, pb)),
                                    b.word(b.lt(B, pb), b.lt(A, pa)), (A, B, ONE)))
    for eps in "+-":
        i = 1
        alpha, beta = adjacent_scalars(m, i, eps)
        k = {("+", True): 1, ("+", False): 2, ("-", True): 3, ("-", False): 4}[(eps, i < m)]
        rid = RelationId("X-X-adjacent", f"X1X2 rel{k}", m, n, 1, 2, eps)
        A, B = f"X1{eps}", f"X2{eps}"
        out.append(Relation(rid, b.word(b.lt(A, "z"), b.lt(B, "w"), c=alpha),
                            b.word(b.lt(B, "w"), b.lt(A, "z"), c=beta), (A, B, beta / alpha)))
    for k in range(1, 5):
        out.append(_serre_n3(b, k))
    return out


def d_factor(m, zarg=None, warg=None):
    """d(z/w): 1 for m = 2, 3; (wq - zp^-1)/(zq - wp^-1) for m = 1, 0."""
    z = Z if zarg is None else zarg
    w = W if warg is None else warg
    if m >= 2:
        return ONE
    return (w * Q - z / P) / (z * Q - w / P)


@lru_cache(maxsize=None)
def catalog(m, n, variant="consistent"):
    rels = list(theorem_relations(m, n, variant))
    if m + n == 2:
        rels += n2_relations(m, n)
    if m + n == 3:
        rels += n3_relations(m)
    out = {}
    for r in rels:
        if r.id in out:
            raise RuntimeError(f"duplicate relation id {r.id.label()}")
        out[r.id] = r
    return out


def relation(rid):
    return instantiate_relation(rid)


def instantiate_relation(rid, m=None, n=None):
    m = rid.m if m is None else m
    n = rid.n if n is None else n
    if m < 0 or n < 0 or m + n < 1:
        raise NotApplicable(f"invalid (m, n) = ({m}, {n})")
    key = RelationId(rid.family, rid.tag, m, n, rid.i, rid.j, rid.eps, rid.level)
    cat = catalog(m, n)
    if key not in cat:
        raise NotApplicable(f"{key.label()} does not apply")
    return cat[key]


def instantiate(rid, m=None, n=None):
    r = instantiate_relation(rid, m, n)
    return r.lhs, r.rhs


def find(m, n, tag=None, family=None, **kw):
    out = []
    for rid, r in catalog(m, n).items():
        if tag is not None and rid.tag != tag:
            continue
        if family is not None and rid.family != family:
            continue
        if any(getattr(rid, k) != v for k, v in kw.items()):
            continue
        out.append(r)
    return sorted(out, key=lambda r: r.id.sort_key())


def default_ranking(m, n):
    N = m + n
    order = []
    for s in "+-":
        order += [f"X{i}{s}" for i in range(1, N)]
    order += [f"psi{i}" for i in range(1, N)] + [f"phi{i}" for i in range(1, N)]
    for i in range(1, N + 1):
        order += [f"k{i}+", f"k{i}-"]
    return Ranking(order)


def as_rewrite_system(ids, m=None, n=None, ranking=None, budget=None, extra=()):
    rules = []
    invertible = set()
    mm = nn = None
    for rid in ids:
        r = instantiate_relation(rid, m, n)
        mm, nn = r.id.m, r.id.n
        rules += r.rules()
        for w in list(r.lhs.terms) + list(r.rhs.terms):
            for x in w:
                if x.inv:
                    invertible.add(x.name)
    rules += [CancelRule(s) for s in sorted(invertible)]
    rules += list(extra)
    if ranking is None and mm is not None:
        ranking = default_ranking(mm, nn)
    return RewriteSystem(rules, ranking, budget=budget)


def self_check(rel, ranking=None):
    """Normal-order lhs - rhs under the relation's own rule; True iff zero."""
    rules = rel.rules()
    names = {x.name for w in list(rel.lhs.terms) + list(rel.rhs.terms) for x in w if x.inv}
    rules += [CancelRule(s) for s in names]
    a, b, _ = rel.exchange
    ranking = ranking or Ranking([b, a] if a != b else [a])
    sys_ = RewriteSystem(rules, ranking)
    return normal_order(rel.lhs - rel.rhs, sys_).is_zero()


# Serre verification -------------------------------------------------------------

def serre_system(m, n, sign, rep, other, variant="consistent"):
    """Rewrite system for X_rep / X_other words, ranked X_rep < X_other."""
    b = _Builder(m, n)
    rels = []
    rels.append(_XX_anti(b, sign) if rep == m else _XX_same(b, rep, sign, variant))
    lo = min(rep, other)
    rels.append(_XX_adj(b, lo, sign))
    rules = [r for rel in rels for r in rel.rules()]
    return RewriteSystem(rules, Ranking([f"X{rep}{sign}", f"X{other}{sign}"]))


def _serre_check(m, n, rel_info, mutate=False, variant="consistent"):
    b = _Builder(m, n)
    s = rel_info
    expr = serre_expression(b, s["sign"], s["rep"], s["other"], s["pattern"], s["pref"], mutate)
    sys_ = serre_system(m, n, s["sign"], s["rep"], s["other"], variant)
    nf = normal_order(expr, sys_)
    target = (b.lt(f"X{s['rep']}{s['sign']}", "z1"), b.lt(f"X{s['rep']}{s['sign']}", "z2"),
              b.lt(f"X{s['other']}{s['sign']}", "w"))
    return nf, nf.coefficient(target)


def verify_serre(case=None, rel=None, m=None, n=None, i=None, *, mutate=False, variant="consistent"):
    """Serre coefficient check.

    ``case`` in {"m3", "m2", "m1", "m0"} with ``rel`` in 1..4 selects a
    rank-three display; otherwise ``rel`` in 1..8 with (m, n, i) selects an
    instance of the general list.
    """
    t0 = time.perf_counter()
    if case is not None:
        mc = int(str(case).lstrip("m"))
        if mc not in SERRE_N3 or rel not in (1, 2, 3, 4):
            raise NotApplicable(f"no rank-three Serre display for case={case} rel={rel}")
        r = _serre_n3(_Builder(mc, 3 - mc), rel)
        mm, nn = mc, 3 - mc
    else:
        if rel not in SERRE_GENERAL:
            raise NotApplicable(f"no Serre relation {rel}")
        if i is None:
            rng = _serre_range(m, n, rel)
            if not rng:
                raise NotApplicable(f"ser rel{rel} N has no instance at m={m} n={n}")
            i = rng[0]
        if i not in _serre_range(m, n, rel):
            raise NotApplicable(f"ser rel{rel} N does not apply at m={m} n={n} i={i}")
        r = _serre_general(_Builder(m, n), rel, i)
        mm, nn = m, n
    nf, coef = _serre_check(mm, nn, r.serre, mutate, variant)
    ok = nf.is_zero()
    notes = [f"canonical word coefficient: {coef.to_text()}"]
    if r.note:
        notes.append(r.note)
    if mutate:
        notes.append("middle coefficient mutated to -(q+p)")
    params = {"m": mm, "n": nn, "tag": r.id.tag, "i": r.id.i, "j": r.id.j, "sign": r.id.eps}
    return Report("serre", params, "pass" if ok else "fail",
                  "" if ok else f"{len(nf.terms)} surviving words; coefficient {coef.to_text()}",
                  int((time.perf_counter() - t0) * 1000), notes)


def all_serre_instances(m, n):
    out = []
    for k in range(1, 9):
        for i in _serre_range(m, n, k):
            out.append((k, i))
    return out


def verify_gauss_inverse(N, level="+", m=None, n=None):
    from .rll import verify_gauss_inverse as _v
    return _v(N, level, m, n)


# confluence ----------------------------------------------------------------------

def _theorem_ids(m, n, pred):
    out = []
    for rid, rel in catalog(m, n).items():
        if rel.exchange is None or rid.tag.startswith(("type", "k1k3", "k3", "k1f", "e2", "f2", "X1X2")):
            continue
        a, b, _ = rel.exchange
        if pred(rid, a, b):
            out.append(rid)
    return sorted(out, key=lambda r: r.sort_key())


def confluence_systems(m, n):
    """Named orientable systems from the general relation list of gl(m|n).

    For N >= 4 the extra system "X-X far" is "X-X" plus X_i X_j = X_j X_i
    for |i - j| >= 2, which the list itself does not state.
    """
    is_k = lambda s: s.startswith("k")
    groups = {
        "k-k": lambda rid, a, b: is_k(a) and is_k(b),
        "k-X": lambda rid, a, b: is_k(a) or is_k(b),
        "X-X": lambda rid, a, b: not is_k(a) and not is_k(b),
    }
    out = {}
    for name, pred in groups.items():
        ids = _theorem_ids(m, n, pred)
        if ids:
            out[name] = as_rewrite_system(ids, m, n)
    if m + n >= 4 and "X-X" in out:
        # the list has no X_i X_j relation for |i - j| >= 2; this extension adds plain commutation
        xx = out["X-X"]
        far = [ExchangeRule(f"X{i}{e}", f"X{j}{e}", ONE, "far commutation (added)")
               for e in "+-" for i in range(1, m + n) for j in range(i + 2, m + n)]
        out["X-X far"] = RewriteSystem(xx.rules + far, xx.ranking)
    return out


def verify_confluence(m, n, maxlen=3, systems=None):
    reports = []
    for name, sys_ in confluence_systems(m, n).items():
        if systems and name not in systems:
            continue
        r = check_local_confluence(sys_, maxlen, lambda s: name_parity(s, m, n), "confluence")
        r.params = {"m": m, "n": n, "system": name, "maxlen": maxlen}
        reports.append(r)
    return reports
