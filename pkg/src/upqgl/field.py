"""
Exact coefficient field Q(p, q, z, w, ...).

Scalars are Python ``Fraction``.  Polynomials are sparse Laurent polynomials
stored as ``{exponent tuple: Fraction}`` with exponent tuples indexed by the
variable registry and trimmed of trailing zeros.  ``RatFunc`` keeps a reduced
quotient of two true polynomials whose denominator has leading coefficient 1
under graded-lex order.

Equality of rational functions is decided by cross multiplication, so it
never depends on the gcd having cancelled anything.  The gcd itself is
delegated to sympy's sparse polynomial rings over ZZ.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
import threading

RESERVED = ("p", "q", "z", "w", "z1", "z2", "u", "g", "g1", "g2", "g3")


class FieldError(Exception):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class UnsupportedSubstitution(FieldError):
    pass


class VarRegistry:
    """Append-only map name -> ordinal.  Reserved names come first."""

    def __init__(self, names=RESERVED):
        self._names = []
        self._index = {}
        self._lock = threading.Lock()
        for name in names:
            self.register(name)

    def register(self, name):
        if not isinstance(name, str) or not name.isidentifier():
            raise ValueError(f"bad variable name {name!r}")
        with self._lock:
            if name not in self._index:
                self._index[name] = len(self._names)
                self._names.append(name)
            return self._index[name]

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __contains__(self, name):
        return name in self._index

    def name(self, i):
        return self._names[i]

    def names(self):
        return tuple(self._names)

    def __len__(self):
        return len(self._names)


REGISTRY = VarRegistry()


# exponent tuple helpers ------------------------------------------------------

def _trim(e):
    n = len(e)
    while n and e[n - 1] == 0:
        n -= 1
    return tuple(e[:n]) if n != len(e) else tuple(e)


def _eadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _eneg(a):
    return tuple(-x for x in a)


def _emin(a, b):
    n = max(len(a), len(b))
    out = [min(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _pad(e, n):
    return e + (0,) * (n - len(e))


def _glex_key(e):
    # graded lex: total degree first, then earlier registry variables dominate
    return (sum(e), e)


def _fmt_monomial(e):
    parts = []
    for i, k in enumerate(e):
        if k == 0:
            continue
        name = REGISTRY.name(i)
        parts.append(name if k == 1 else f"{name}^{k}")
    return "*".join(parts)


# Laurent polynomials ---------------------------------------------------------

class LaurentPoly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    e = _trim(tuple(e))
                    c = clean.get(e, 0) + Fraction(c)
                    if c:
                        clean[e] = c
                    else:
                        clean.pop(e, None)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c):
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, name, power=1):
        i = REGISTRY.register(name)
        e = [0] * (i + 1)
        e[i] = power
        return cls._raw({_trim(e): Fraction(1)})

    @classmethod
    def monomial(cls, exps, coeff=1):
        e = []
        for name, k in exps.items():
            i = REGISTRY.register(name)
            if len(e) <= i:
                e.extend([0] * (i + 1 - len(e)))
            e[i] += k
        return cls._raw({_trim(e): Fraction(coeff)} if coeff else {})

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def const_value(self):
        if not self.terms:
            return Fraction(0)
        if self.is_const():
            return self.terms[()]
        raise ValueError("not a constant")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        if len(self.terms) < len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for e, c in b.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s += c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            c = Fraction(other)
            if not c:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: v * c for e, v in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _eadd(e1, e2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial():
                raise DivisionByZero("negative power of a non-monomial Laurent polynomial")
            (e, c), = self.terms.items()
            return LaurentPoly._raw({_trim(tuple(x * k for x in e)): c ** k})
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, e):
        """Multiply by the monomial with exponent tuple ``e``."""
        return LaurentPoly._raw({_eadd(x, e): c for x, c in self.terms.items()})

    def min_exponent(self):
        terms = self.terms
        if len(terms) == 1:
            return next(iter(terms))
        n = max(map(len, terms))
        # a variable missing from a shorter tuple has exponent 0 there
        return _trim([min(e[i] if i < len(e) else 0 for e in terms) for i in range(n)])

    def leading(self):
        e = max(self.terms, key=_glex_key)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _glex_key(t[0]), reverse=True)

    def variables(self):
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(REGISTRY.name(i))
        return used

    def substitute(self, images):
        """``images``: ordinal -> (exponent tuple, Fraction) monomial."""
        out = {}
        for e, c in self.terms.items():
            ne = ()
            cc = c
            for i, k in enumerate(e):
                if not k:
                    continue
                img = images.get(i)
                if img is None:
                    v = [0] * (i + 1)
                    v[i] = k
                    ne = _eadd(ne, tuple(v))
                else:
                    ie, ic = img
                    ne = _eadd(ne, tuple(x * k for x in ie))
                    cc *= ic ** k
            s = out.get(ne, 0) + cc
            if s:
                out[ne] = s
            else:
                out.pop(ne, None)
        return LaurentPoly._raw(out)

    def evaluate(self, point):
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v *= Fraction(point[REGISTRY.name(i)]) ** k
            total += v
        return total

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == LaurentPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def to_text(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = _fmt_monomial(e)
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"LaurentPoly({self.to_text()})"


# gcd through sympy -----------------------------------------------------------

@lru_cache(maxsize=None)
def _zz_ring(nvars):
    from sympy.polys.rings import ring
    from sympy.polys.domains import ZZ
    names = [f"x{i}" for i in range(nvars)]
    return ring(names, ZZ)[0]


def _to_zz(terms, n):
    den = 1
    for c in terms.values():
        den = lcm(den, c.denominator)
    R = _zz_ring(n)
    return R.from_dict({_pad(e, n): int(c * den) for e, c in terms.items()}), den


_GCD_CACHE = {}
_GCD_CACHE_MAX = 200_000


def _poly_gcd_cofactors(a, b):
    """gcd of two polynomials (no negative exponents), returns cofactors a/g, b/g."""
    key = (a, b)
    hit = _GCD_CACHE.get(key)
    if hit is not None:
        return hit
    # compress to the variables actually present; heuristic gcd cost grows with ring size
    used = sorted({i for e in list(a.terms) + list(b.terms) for i, k in enumerate(e) if k})
    pos = {v: j for j, v in enumerate(used)}
    n = max(len(used), 1)

    def pack(terms):
        out = {}
        for e, c in terms.items():
            v = [0] * n
            for i, k in enumerate(e):
                if k:
                    v[pos[i]] = k
            out[tuple(v)] = c
        return out

    def unpack(poly):
        out = {}
        width = (used[-1] + 1) if used else 0
        for e, c in poly.items():
            v = [0] * width
            for j, k in enumerate(e):
                if k:
                    v[used[j]] = k
            out[_trim(tuple(v))] = Fraction(int(c))
        return out

    A, da = _to_zz(pack(a.terms), n)
    B, db = _to_zz(pack(b.terms), n)
    _, ca, cb = A.cofactors(B)
    # A = da*a, B = db*b so a/b = (ca/cb) * (db/da)
    res = (unpack(ca), unpack(cb), Fraction(db, da))
    if len(_GCD_CACHE) >= _GCD_CACHE_MAX:
        _GCD_CACHE.clear()
    _GCD_CACHE[key] = res
    return res


# Rational functions ----------------------------------------------------------

def _as_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly.const(x)


class RatFunc:
    """Reduced quotient num/den of polynomials; den has leading coefficient 1."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, reduce=True):
        num = _as_poly(num)
        den = LaurentPoly.const(1) if den is None else _as_poly(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if reduce:
            num, den = _canonical(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c):
        return cls._raw(LaurentPoly.const(c), LaurentPoly.const(1))

    @classmethod
    def var(cls, name, power=1):
        return RatFunc(LaurentPoly.var(name, power))

    def is_zero(self):
        return self.num.is_zero()

    def is_const(self):
        return self.num.is_const() and self.den.is_const()

    def const_value(self):
        return self.num.const_value() / self.den.const_value()

    def is_monomial(self):
        return self.num.is_monomial() and self.den.is_monomial()

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if other.is_const():
            c = other.const_value()
            return RatFunc._raw(self.num * c, self.den) if c != 1 else self
        if self.is_const():
            c = self.const_value()
            return RatFunc._raw(other.num * c, other.den) if c != 1 else other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self):
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        return RatFunc._raw(self.num ** k, self.den ** k)

    def eq(self, other):
        other = _coerce(other)
        if self.num == other.num and self.den == other.den:
            return True
        return (self.num * other.den - other.num * self.den).is_zero()

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.eq(other)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def substitute(self, mapping):
        """Simultaneous substitution var -> unit monomial."""
        images = {}
        for name, img in mapping.items():
            mono = _as_monomial(img)
            images[REGISTRY.index(name) if isinstance(name, str) else name] = mono
        n = self.num.substitute(images)
        d = self.den.substitute(images)
        if d.is_zero():
            raise DivisionByZero("substitution annihilates the denominator")
        return RatFunc(n, d)

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if d == 0:
            raise DivisionByZero("denominator vanishes at evaluation point")
        return self.num.evaluate(point) / d

    def variables(self):
        return self.num.variables() | self.den.variables()

    def to_text(self):
        if self.den.is_const() and self.den.const_value() == 1:
            return self.num.to_text()
        return f"({self.num.to_text()})/({self.den.to_text()})"

    __str__ = to_text

    def __repr__(self):
        return f"RatFunc({self.to_text()})"


def _as_monomial(img):
    if isinstance(img, Monomial):
        return img.exps, Fraction(1)
    if isinstance(img, str):
        return LaurentPoly.var(img).leading()
    if isinstance(img, (int, Fraction)):
        if not img:
            raise UnsupportedSubstitution("image 0 is not invertible")
        return (), Fraction(img)
    if isinstance(img, RatFunc):
        if not img.is_monomial():
            raise UnsupportedSubstitution(f"image {img} is not a monomial")
        (en, cn), = img.num.terms.items()
        (ed, cd), = img.den.terms.items()
        return _eadd(en, _eneg(ed)), cn / cd
    if isinstance(img, LaurentPoly):
        if not img.is_monomial():
            raise UnsupportedSubstitution(f"image {img.to_text()} is not a monomial")
        return img.leading()
    raise UnsupportedSubstitution(f"cannot substitute {img!r}")


def _canonical(num, den):
    if num.is_zero():
        return num, LaurentPoly.const(1)
    # clear negative exponents and common monomial content
    mn, md = num.min_exponent(), den.min_exponent()
    shift = _eneg(_emin(mn, md))
    if any(shift):
        num = num.shift(shift)
        den = den.shift(shift)
        mn, md = _eadd(mn, shift), _eadd(md, shift)
    common = _emin(mn, md)
    if any(common):
        num = num.shift(_eneg(common))
        den = den.shift(_eneg(common))
    if len(num.terms) > 1 and len(den.terms) > 1:
        a, b, scale = _poly_gcd_cofactors(num, den)
        num = LaurentPoly._raw(a) * scale
        den = LaurentPoly._raw(b)
    _, lc = den.leading()
    if lc != 1:
        num = num * (1 / lc)
        den = den * (1 / lc)
    return num, den


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc.const(x)
    if isinstance(x, LaurentPoly):
        return RatFunc(x)
    return None


ZERO = RatFunc.const(0)
ONE = RatFunc.const(1)


def var(name, power=1):
    return RatFunc.var(name, power)


def gcd_reduce(a):
    """Canonical representative of ``a`` (recomputed from scratch)."""
    return RatFunc(a.num, a.den)


def eq(a, b):
    return _coerce(a).eq(_coerce(b))


def substitute(a, mapping):
    return _coerce(a).substitute(mapping)


# Monomials (spectral arguments of letters) ----------------------------------

class Monomial:
    """Unit monomial with coefficient 1, e.g. ``z*g^-1``."""

    __slots__ = ("exps",)

    def __init__(self, exps=()):
        self.exps = _trim(tuple(exps))

    @classmethod
    def of(cls, spec=None, **powers):
        if spec is None:
            e = LaurentPoly.monomial(powers).leading()[0] if powers else ()
            return cls(e)
        if isinstance(spec, Monomial):
            return spec
        if isinstance(spec, str):
            e, c = _as_monomial(_parse_monomial_text(spec))
            if c != 1:
                raise ValueError(f"monomial {spec!r} must have coefficient 1")
            return cls(e)
        raise TypeError(spec)

    def __mul__(self, other):
        return Monomial(_eadd(self.exps, other.exps))

    def __truediv__(self, other):
        return Monomial(_eadd(self.exps, _eneg(other.exps)))

    def __pow__(self, k):
        return Monomial(tuple(x * k for x in self.exps))

    def substitute(self, mapping):
        out = ()
        for i, k in enumerate(self.exps):
            if not k:
                continue
            name = REGISTRY.name(i)
            if name in mapping:
                e, c = _as_monomial(mapping[name])
                if c != 1:
                    raise UnsupportedSubstitution("letter arguments need coefficient 1")
                out = _eadd(out, tuple(x * k for x in e))
            else:
                v = [0] * (i + 1)
                v[i] = k
                out = _eadd(out, tuple(v))
        return Monomial(out)

    def to_ratfunc(self):
        pos = tuple(max(x, 0) for x in self.exps)
        neg = tuple(max(-x, 0) for x in self.exps)
        return RatFunc._raw(LaurentPoly._raw({_trim(pos): Fraction(1)}),
                            LaurentPoly._raw({_trim(neg): Fraction(1)}))

    def variables(self):
        return {REGISTRY.name(i) for i, k in enumerate(self.exps) if k}

    def sort_key(self):
        return self.exps

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(("mono", self.exps))

    def to_text(self):
        if not self.exps:
            return "1"
        return _fmt_monomial(self.exps)

    __str__ = to_text

    def __repr__(self):
        return f"Monomial({self.to_text()})"


def _parse_monomial_text(text):
    from .text import parse_expr
    return parse_expr(text)
