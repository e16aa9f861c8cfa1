from fractions import Fraction

from hypothesis import strategies as st

from upqgl.field import LaurentPoly, RatFunc

VARS = ("p", "q", "z", "w", "g")


@st.composite
def laurent(draw, max_terms=3, lo=-2, hi=2, vars_=VARS):
    n = draw(st.integers(1, max_terms))
    terms = {}
    for _ in range(n):
        exps = {v: draw(st.integers(lo, hi)) for v in draw(st.lists(st.sampled_from(vars_), max_size=2, unique=True))}
        c = draw(st.integers(-4, 4))
        if c:
            terms[tuple(sorted(exps.items()))] = Fraction(c)
    poly = LaurentPoly.const(0)
    for exps, c in terms.items():
        poly = poly + LaurentPoly.monomial(dict(exps), c)
    return poly


@st.composite
def ratfunc(draw, nonzero=False, **kw):
    num = draw(laurent(**kw))
    den = draw(laurent(**kw).filter(lambda d: not d.is_zero()))
    if nonzero and num.is_zero():
        num = LaurentPoly.const(1)
    return RatFunc(num, den)


def point(draw_ints):
    return {v: Fraction(x) for v, x in zip(VARS, draw_ints)}


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
