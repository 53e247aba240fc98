from fractions import Fraction

from hypothesis import strategies as st

from symvol import Chain, corpus

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=7)
nonzero_rationals = rationals.filter(bool)


@st.composite
def simplices(draw, K, n):
    faces = sorted(f for f in K.faces if len(f) <= n + 1)
    f = draw(st.sampled_from(faces))
    return tuple(draw(st.lists(st.sampled_from(f), min_size=n + 1, max_size=n + 1)))


@st.composite
def chains(draw, K, n, max_terms=4):
    terms = draw(st.lists(st.tuples(simplices(K, n), rationals), max_size=max_terms))
    return Chain(n, terms)


complex_names = st.sampled_from(corpus.NAMES)


def frac(s):
    return Fraction(s)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            for key, value in rep.user_properties:
                if key == "criterion":
                    lines.append((value, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for value, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {value}")
