"""
Parity-graded spaces and sparse multi-leg operators over RatFunc.

An operator on V^{(x)k} is stored as ``{(row, col): RatFunc}`` with ``row`` and
``col`` tuples of 1-based basis indices, one per leg.  The entry at
``((i, k), (j, l))`` is the coefficient of E_ij (x) E_kl.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .field import ONE, ZERO, RatFunc


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class GradedSpace:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ShapeError(f"invalid graded space m={self.m} n={self.n}")

    @property
    def N(self):
        return self.m + self.n

    def parity(self, i):
        if not 1 <= i <= self.N:
            raise ShapeError(f"basis index {i} outside 1..{self.N}")
        return 0 if i <= self.m else 1

    def basis(self, legs=1):
        return product(range(1, self.N + 1), repeat=legs)


def _sum(values):
    values = [v for v in values if not v.is_zero()]
    if not values:
        return ZERO
    if len(values) == 1:
        return values[0]
    # group by denominator so most additions skip the cross multiplication
    groups = {}
    for v in values:
        groups.setdefault(v.den, []).append(v.num)
    total = ZERO
    for den, nums in groups.items():
        num = nums[0]
        for x in nums[1:]:
            num = num + x
        total = total + RatFunc(num, den)
    return total


class GradedTensor:
    __slots__ = ("space", "legs", "entries")

    def __init__(self, space, legs, entries=None):
        self.space = space
        self.legs = legs
        clean = {}
        N = space.N
        for (r, c), v in (entries or {}).items():
            r, c = tuple(r), tuple(c)
            if len(r) != legs or len(c) != legs:
                raise ShapeError(f"index {(r, c)} does not have {legs} legs")
            if any(not 1 <= x <= N for x in r + c):
                raise ShapeError(f"index {(r, c)} outside 1..{N}")
            if not isinstance(v, RatFunc):
                v = RatFunc.const(v) if not hasattr(v, "num") else v
            if not v.is_zero():
                clean[(r, c)] = v
        self.entries = clean

    @classmethod
    def identity(cls, space, legs=1):
        return cls(space, legs, {(b, b): ONE for b in space.basis(legs)})

    @classmethod
    def from_rows(cls, space, legs, rows):
        """Dense nested list with flattened row/column numbering."""
        idx = list(space.basis(legs))
        if len(rows) != len(idx) or any(len(r) != len(idx) for r in rows):
            raise ShapeError("dense matrix has the wrong size")
        ent = {}
        for a, row in enumerate(rows):
            for b, v in enumerate(row):
                ent[(idx[a], idx[b])] = v
        return cls(space, legs, ent)

    # flattened numbering, 1-based, first leg most significant
    def flat(self, multi):
        N = self.space.N
        k = 0
        for x in multi:
            k = k * N + (x - 1)
        return k + 1

    def unflat(self, k):
        N = self.space.N
        k -= 1
        out = []
        for _ in range(self.legs):
            k, r = divmod(k, N)
            out.append(r + 1)
        return tuple(reversed(out))

    @property
    def dim(self):
        return self.space.N ** self.legs

    def get(self, row, col):
        return self.entries.get((tuple(row), tuple(col)), ZERO)

    def at(self, i, j):
        """Entry by flattened 1-based (row, column) numbering."""
        return self.get(self.unflat(i), self.unflat(j))

    def _check(self, other):
        if not isinstance(other, GradedTensor):
            raise ShapeError("expected a GradedTensor")
        if other.space != self.space or other.legs != self.legs:
            raise ShapeError("tensors live on different spaces")

    def __add__(self, other):
        self._check(other)
        ent = dict(self.entries)
        for k, v in other.entries.items():
            ent[k] = ent[k] + v if k in ent else v
        return GradedTensor(self.space, self.legs, ent)

    def __neg__(self):
        return GradedTensor(self.space, self.legs, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return GradedTensor(self.space, self.legs, {k: v * c for k, v in self.entries.items()})

    def __matmul__(self, other):
        return compose(self, other)

    def map(self, fn):
        return GradedTensor(self.space, self.legs, {k: fn(v) for k, v in self.entries.items()})

    def substitute(self, mapping):
        return self.map(lambda v: v.substitute(mapping))

    def transpose(self):
        return GradedTensor(self.space, self.legs, {(c, r): v for (r, c), v in self.entries.items()})

    def equals(self, other):
        self._check(other)
        return not differing_entries(self, other)

    def is_identity(self):
        return self.equals(GradedTensor.identity(self.space, self.legs))

    def weight_conserving(self):
        par = self.space.parity
        for (r, c) in self.entries:
            if sum(par(x) for x in r + c) % 2:
                return False
        return True

    def to_rows(self):
        idx = list(self.space.basis(self.legs))
        return [[self.get(r, c) for c in idx] for r in idx]

    def __repr__(self):
        return f"GradedTensor(m={self.space.m}, n={self.space.n}, legs={self.legs}, nnz={len(self.entries)})"


def differing_entries(a, b):
    """Index pairs where a and b differ (cross-multiplication equality)."""
    out = []
    for k in set(a.entries) | set(b.entries):
        if not a.entries.get(k, ZERO).eq(b.entries.get(k, ZERO)):
            out.append(k)
    return sorted(out)


def compose(a, b):
    """Operator product a.b (apply b first)."""
    a._check(b)
    by_row = {}
    for (r, c), v in b.entries.items():
        by_row.setdefault(r, []).append((c, v))
    acc = {}
    for (r, c), v in a.entries.items():
        for c2, w in by_row.get(c, ()):
            acc.setdefault((r, c2), []).append(v * w)
    return GradedTensor(a.space, a.legs, {k: _sum(vs) for k, vs in acc.items()})


def super_permutation(space):
    par = space.parity
    ent = {}
    for a, b in space.basis(2):
        ent[((b, a), (a, b))] = RatFunc.const(-1 if par(a) * par(b) else 1)
    return GradedTensor(space, 2, ent)


def plain_permutation(space):
    return GradedTensor(space, 2, {((b, a), (a, b)): ONE for a, b in space.basis(2)})


def theta(space):
    par = space.parity
    return GradedTensor(space, 2, {((a, b), (a, b)): RatFunc.const(-1 if par(a) * par(b) else 1)
                                   for a, b in space.basis(2)})


def _front_sign(idx, s, t, par):
    """Koszul sign of moving legs s then t (0-based) to the front."""
    ps = [par(x) for x in idx]
    e = ps[s] * sum(ps[:s])
    e += ps[t] * sum(ps[r] for r in range(t) if r != s)
    return -1 if e % 2 else 1


def graded_embed(a, legs, total, graded=True):
    """Operator acting as ``a`` on legs (s, t) of V^{(x)total}, identity elsewhere.

    Legs are 1-based.  ``(2, 1)`` gives the leg-swapped operator a_21.
    With ``graded=False`` the Koszul signs are dropped.
    """
    if a.legs != 2:
        raise ShapeError("graded_embed expects a two-leg operator")
    s, t = legs
    if not (1 <= s <= total and 1 <= t <= total) or s == t:
        raise ShapeError(f"legs {legs} invalid for {total} tensor factors")
    s -= 1
    t -= 1
    par = a.space.parity
    cols_of = {}
    for (r, c), v in a.entries.items():
        cols_of.setdefault(c, []).append((r, v))
    ent = {}
    for col in a.space.basis(total):
        hits = cols_of.get((col[s], col[t]))
        if not hits:
            continue
        sc = _front_sign(col, s, t, par) if graded else 1
        for (i, j), v in hits:
            row = list(col)
            row[s], row[t] = i, j
            row = tuple(row)
            sr = _front_sign(row, s, t, par) if graded else 1
            ent[(row, col)] = v if sc * sr == 1 else -v
    return GradedTensor(a.space, total, ent)


def permutation_operator(space, perm, graded=True):
    """Signed operator v_{c_1}..v_{c_k} -> +-v_{c_perm^-1(1)}..: leg r moves to slot perm[r].

    Built by direct enumeration of Koszul signs (inversions among odd
    factors), independent of ``graded_embed``.
    """
    k = len(perm)
    par = space.parity
    ent = {}
    for col in space.basis(k):
        row = [None] * k
        for r, x in enumerate(col):
            row[perm[r]] = x
        sign = 1
        if graded:
            for r1 in range(k):
                for r2 in range(r1 + 1, k):
                    if perm[r1] > perm[r2] and par(col[r1]) and par(col[r2]):
                        sign = -sign
        ent[(tuple(row), col)] = RatFunc.const(sign)
    return GradedTensor(space, k, ent)


def conjugate_21(a, graded=True):
    P = super_permutation(a.space) if graded else plain_permutation(a.space)
    return compose(compose(P, a), P)


def kron(a, b):
    """a (x) b on legs (1..ka, ka+1..) for even operators (no Koszul sign)."""
    if a.space != b.space:
        raise ShapeError("kron of different spaces")
    ent = {}
    for (r1, c1), v in a.entries.items():
        for (r2, c2), w in b.entries.items():
            ent[(r1 + r2, c1 + c2)] = v * w
    return GradedTensor(a.space, a.legs + b.legs, ent)
