"""
Free associative superalgebra on tagged letters, scalar-exchange rewriting
and normal ordering.

A letter carries a name (``X1+``, ``k2-``, ``e21+``, ``psi1`` ...), a parity,
a spectral argument (unit Monomial), a tensor leg (0 = plain) and an
inverse flag.  Multi-leg words are kept leg-sorted; moving a letter past a
lower-leg letter costs the Koszul sign of the two parities.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from itertools import permutations, product

from .field import ONE, ZERO, Monomial, RatFunc, _coerce
from .report import Report


DEFAULT_BUDGET = 10 ** 6


def set_default_budget(steps):
    global DEFAULT_BUDGET
    DEFAULT_BUDGET = int(steps)


class BudgetExceeded(RuntimeError):
    pass


LEG_MARKER = {0: "g", 1: "g1", 2: "g2", 3: "g3"}

_NAME1 = re.compile(r"^(X|k|psi|phi|delta)(\d+)([+-]?)$")
_NAME2 = re.compile(r"^(e|f|l)(\d)(\d)([+-]?)$")


def name_parity(name, m, n):
    """Parity of a generator name for gl(m|n)."""
    mm = _NAME1.match(name)
    if mm:
        fam, i = mm.group(1), int(mm.group(2))
        return 1 if fam == "X" and i == m and n > 0 and m > 0 else 0
    mm = _NAME2.match(name)
    if mm:
        i, j = int(mm.group(2)), int(mm.group(3))
        pi = 0 if i <= m else 1
        pj = 0 if j <= m else 1
        return (pi + pj) % 2
    raise ValueError(f"unknown generator name {name!r}")


@dataclass(frozen=True)
class Letter:
    name: str
    param: Monomial = field(default_factory=Monomial)
    parity: int = 0
    leg: int = 0
    inv: bool = False

    def inverse(self):
        return Letter(self.name, self.param, self.parity, self.leg, not self.inv)

    def with_param(self, param):
        return Letter(self.name, param, self.parity, self.leg, self.inv)

    def on_leg(self, leg):
        return Letter(self.name, self.param, self.parity, leg, self.inv)

    def substitute(self, mapping):
        return self.with_param(self.param.substitute(mapping))

    def to_text(self):
        s = f"{self.name}({self.param.to_text()})"
        if self.inv:
            s += "^-1"
        if self.leg:
            s += f"@{self.leg}"
        return s

    __str__ = to_text


def L(name, param="z", *, m=None, n=None, parity=None, leg=0, inv=False):
    """Convenience constructor; parity from (m, n) unless given."""
    if parity is None:
        parity = name_parity(name, m, n) if m is not None else 0
    return Letter(name, Monomial.of(param), parity, leg, inv)


def _koszul(w1, w2):
    s = 0
    for x in w1:
        if not x.parity:
            continue
        for y in w2:
            if x.leg > y.leg and y.parity:
                s ^= 1
    return -1 if s else 1


def _concat(w1, w2):
    if not w1:
        return w2, 1
    if not w2:
        return w1, 1
    if w1[-1].leg <= w2[0].leg:
        return w1 + w2, 1
    sign = _koszul(w1, w2)
    return tuple(sorted(w1 + w2, key=lambda x: x.leg)), sign


class NCPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for w, c in (terms or {}).items():
            c = _coerce(c)
            w = tuple(w)
            if w in clean:
                c = clean[w] + c
            if c.is_zero():
                clean.pop(w, None)
            else:
                clean[w] = c
        self.terms = clean

    @classmethod
    def word(cls, *letters, coeff=ONE):
        # fold letter by letter so mixed-leg input is leg-sorted with its Koszul sign
        w, sign = (), 1
        for x in letters:
            w, s = _concat(w, (x,))
            sign *= s
        return cls({w: coeff if sign == 1 else -_coerce(coeff)})

    @classmethod
    def scalar(cls, c):
        return cls({(): c})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return NCPoly(out)

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _coerce(c)
        if c.is_zero():
            return NCPoly()
        return NCPoly({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return nc_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def map_words(self, fn):
        """fn(word) -> NCPoly; results summed with coefficients."""
        out = NCPoly()
        for w, c in self.terms.items():
            out = out + fn(w).scale(c)
        return out

    def substitute(self, mapping):
        out = {}
        for w, c in self.terms.items():
            nw = tuple(x.substitute(mapping) for x in w)
            nc = c.substitute(mapping)
            out[nw] = out[nw] + nc if nw in out else nc
        return NCPoly(out)

    def coefficient(self, word):
        return self.terms.get(tuple(word), ZERO)

    def equals(self, other):
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(k).eq(other.coefficient(k)) for k in keys)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: word_text(t[0]))

    def to_text(self):
        """Canonical text: one term per line, ``coefficient : letters``."""
        if not self.terms:
            return "0"
        return "\n".join(f"{c.to_text()} : {word_text(w) or '1'}" for w, c in self.sorted_terms())

    def __repr__(self):
        return f"NCPoly({len(self.terms)} terms)"


def word_text(w):
    return " ".join(x.to_text() for x in w)


def nc_mul(a, b):
    out = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            w, sign = _concat(w1, w2)
            c = c1 * c2
            if sign < 0:
                c = -c
            out[w] = out[w] + c if w in out else c
    return NCPoly(out)


def word_poly(letters):
    return NCPoly.word(*letters)


# rewriting --------------------------------------------------------------------

_SLOTS = ("z", "w", "g")


def _instantiate(template, a, b, leg):
    return template.substitute({"z": a.param, "w": b.param, "g": Monomial.of(LEG_MARKER[leg])})


@dataclass(eq=False)
class ExchangeRule:
    """A(z) B(w) = s(z, w, g) B(w) A(z) for letters named ``a`` and ``b``."""
    a: str
    b: str
    scalar: RatFunc
    source: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    kind = "exchange"

    def names(self):
        return {(self.a, self.b), (self.b, self.a)}

    def apply(self, x, y):
        """Rewrite the adjacent pair x y as coefficient * (y x)."""
        key = (x.name, y.name, x.param, y.param, x.inv, y.inv, x.leg)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if x.name == self.a and y.name == self.b:
            s = _instantiate(self.scalar, x, y, x.leg)
            e = 1
        elif x.name == self.b and y.name == self.a:
            s = _instantiate(self.scalar, y, x, x.leg)
            e = -1
        else:
            return None
        if x.inv != y.inv:
            e = -e
        s = s if e == 1 else s.inv()
        out = [(s, (y, x))]
        self._cache[key] = out
        return out


@dataclass(eq=False)
class CancelRule:
    """x(u) x(u)^-1 -> 1 and x(u)^-1 x(u) -> 1."""
    name: str
    source: str = "inverse"

    kind = "cancel"

    def names(self):
        return {(self.name, self.name)}

    def apply(self, x, y):
        if x.name == y.name == self.name and x.param == y.param and x.inv != y.inv:
            return [(ONE, ())]
        return None


@dataclass(eq=False)
class GeneralRule:
    """fn(x, y) -> list of (coefficient, replacement word) or None."""
    pairs: set
    fn: object
    source: str = ""

    kind = "general"

    def names(self):
        return set(self.pairs)

    def apply(self, x, y):
        return self.fn(x, y)


_PARAM_ORDER = ("z1", "z2", "z3", "z", "w", "u")


def param_key(mono):
    names = mono.variables()
    base = len(_PARAM_ORDER)
    for k, v in enumerate(_PARAM_ORDER):
        if v in names:
            base = k
            break
    return (base, mono.exps)


class Ranking:
    def __init__(self, symbols):
        self.order = {s: i for i, s in enumerate(symbols)}

    def key(self, x):
        return (self.order.get(x.name, len(self.order)), param_key(x.param), x.inv)

    def out_of_order(self, x, y):
        return self.key(x) > self.key(y)

    def __contains__(self, name):
        return name in self.order


class RewriteSystem:
    """Ordered rules; exchange rules fire only on rank inversions."""

    def __init__(self, rules=(), ranking=None, alphabet=None, budget=None, invertible=()):
        self.rules = list(rules)
        names = []
        for r in self.rules:
            for a, b in r.names():
                for s in (a, b):
                    if s not in names:
                        names.append(s)
        self.alphabet = list(alphabet) if alphabet is not None else names
        self.ranking = ranking or Ranking(self.alphabet)
        self.budget = DEFAULT_BUDGET if budget is None else budget
        self.invertible = set(invertible) | {r.name for r in self.rules if r.kind == "cancel"}
        self._index = {}
        for r in self.rules:
            for pair in r.names():
                self._index.setdefault(pair, []).append(r)

    def __len__(self):
        return len(self.rules)

    def candidates(self, x, y):
        """All rewrites of the adjacent pair (x, y) permitted by the system."""
        if x.leg != y.leg:
            return []
        out = []
        for r in self._index.get((x.name, y.name), ()):
            if r.kind == "exchange":
                if not self.ranking.out_of_order(x, y):
                    continue
                if x.name == y.name and x.param == y.param:
                    continue
            res = r.apply(x, y)
            if res is not None:
                out.append(res)
        return out

    def first_rewrite(self, w):
        for i in range(len(w) - 1):
            c = self.candidates(w[i], w[i + 1])
            if c:
                return i, c[0]
        return None

    def all_rewrites(self, w):
        for i in range(len(w) - 1):
            for res in self.candidates(w[i], w[i + 1]):
                yield i, res


def _splice(w, i, repl):
    return w[:i] + repl + w[i + 2:]


def normal_order(x, rules, budget=None):
    """Exhaustive leftmost rewriting; returns the NCPoly fixed point."""
    budget = rules.budget if budget is None else budget
    steps = 0
    pending = dict(x.terms)
    done = {}
    while pending:
        w, c = pending.popitem()
        if c.is_zero():
            continue
        hit = rules.first_rewrite(w)
        if hit is None:
            done[w] = done[w] + c if w in done else c
            continue
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"normal ordering exceeded {budget} rewrite steps")
        i, res = hit
        for coef, repl in res:
            nw = _splice(w, i, tuple(repl))
            nc = c * coef
            pending[nw] = pending[nw] + nc if nw in pending else nc
    return NCPoly(done)


def is_normal(x, rules):
    return all(rules.first_rewrite(w) is None for w in x.terms)


# confluence -------------------------------------------------------------------

_CONF_PARAMS = ("z1", "z2", "z3", "z4")


def _assignments(shape, invertible):
    k = len(shape)
    base = [Monomial.of(**{p: 1}) for p in _CONF_PARAMS[:k]]
    seen = set()
    names = [s for s, _ in shape]
    if len(set(names)) < len(names):
        perms = permutations(range(k))
    else:
        perms = [tuple(range(k))]
    for perm in perms:
        a = tuple(base[j] for j in perm)
        if a not in seen:
            seen.add(a)
            yield a
    # equal arguments for letter / inverse pairs so cancel rules get exercised
    for i in range(k):
        for j in range(i + 1, k):
            if shape[i][0] == shape[j][0] and shape[i][1] != shape[j][1]:
                a = list(base)
                a[j] = a[i]
                a = tuple(a)
                if a not in seen:
                    seen.add(a)
                    yield a


def check_local_confluence(rules, maxlen=3, parity=None, name="confluence"):
    """Every one-step reduct of every word up to ``maxlen`` has the same normal form."""
    t0 = time.perf_counter()
    parity = parity or (lambda s: 0)
    symbols = []
    for s in rules.alphabet:
        symbols.append((s, False))
        if s in rules.invertible:
            symbols.append((s, True))
    words = 0
    bad = []
    for k in range(2, maxlen + 1):
        for shape in product(symbols, repeat=k):
            for args in _assignments(shape, rules.invertible):
                w = tuple(Letter(s, a, parity(s), 0, inv) for (s, inv), a in zip(shape, args))
                words += 1
                reducts = list(rules.all_rewrites(w))
                if len(reducts) < 2 and not any(len(res) > 1 for _, res in reducts):
                    # a single one-step reduct cannot diverge locally
                    continue
                forms = []
                for i, res in reducts:
                    poly = NCPoly({_splice(w, i, tuple(r)): c for c, r in res})
                    forms.append(normal_order(poly, rules))
                ref = forms[0]
                for f in forms[1:]:
                    if not f.equals(ref):
                        bad.append(word_text(w))
                        break
    ms = int((time.perf_counter() - t0) * 1000)
    notes = [f"{words} words up to length {maxlen}", f"{len(rules)} rules"]
    if bad:
        return Report(name, {"maxlen": maxlen}, "fail", f"{len(bad)} divergent words, e.g. {bad[0]}", ms, notes)
    return Report(name, {"maxlen": maxlen}, "pass", "", ms, notes)


# text -------------------------------------------------------------------------

_LETTER = re.compile(r"([A-Za-z]+\d*[+-]?)\(([^()]*)\)(\^-1)?(?:@(\d))?")


def parse_word(text, m, n):
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    pos = 0
    for tok in text.split():
        mm = _LETTER.fullmatch(tok)
        if not mm:
            raise ValueError(f"bad letter {tok!r}")
        name, arg, inv, leg = mm.groups()
        out.append(Letter(name, Monomial.of(arg), name_parity(name, m, n), int(leg or 0), bool(inv)))
        pos += 1
    return tuple(out)


def parse_ncpoly(text, m, n):
    """Inverse of ``NCPoly.to_text``: lines ``coefficient : letters``."""
    from .text import parse_expr

    terms = {}
    for line in text.strip().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line or line == "0":
            continue
        coef, _, word = line.rpartition(":")
        w = parse_word(word, m, n)
        c = parse_expr(coef)
        terms[w] = terms[w] + c if w in terms else c
    return NCPoly(terms)
