import sys

import pytest
from hypothesis import settings, strategies as st

from cylpieri.polyring import TPoly, linear_diff, linear_product
from cylpieri.shapes import Rect, make_partition

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

GOLDEN_LATEX = (
    r"(t_5-t_1)(t_3-t_1)\sigma_{(2,1,1)} + (t_5-t_1)\sigma_{(2,2,1)}"
    r" + q(t_3-t_1)\sigma_{\emptyset} + q\sigma_{(1)}"
)


def P(m, n, *parts):
    return make_partition(Rect(m, n), parts)


def L(a, b):
    return linear_diff(a, b)


def lp(*pairs):
    return linear_product(pairs)


@st.composite
def partitions(draw, rect):
    parts = sorted((draw(st.integers(0, rect.width)) for _ in range(rect.m)), reverse=True)
    return make_partition(rect, parts)


@st.composite
def rects(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    m = draw(st.integers(1, n - 1))
    return Rect(m, n)


@st.composite
def polys(draw, max_var=6, max_terms=5, max_deg=3):
    out = TPoly()
    for _ in range(draw(st.integers(0, max_terms))):
        c = draw(st.integers(-4, 4))
        mono = [(draw(st.integers(1, max_var)), 1) for _ in range(draw(st.integers(0, max_deg)))]
        out = out + TPoly.from_terms([(c, mono)])
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k][1])
