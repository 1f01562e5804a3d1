import pytest
from hypothesis import given, strategies as st

from cylpieri.cylinder import (
    NotContained,
    classify_strip,
    cylindric_skew,
    loop_entry,
    loop_rows,
    loop_to_partition,
)
from cylpieri.shapes import Rect, enumerate_partitions, transpose

from conftest import P, partitions, rects


def test_loop_rows():
    assert loop_rows(P(3, 5, 1), 1).rows == (3, 2, 1)
    assert loop_rows(P(3, 5, 2, 1, 1), 0).rows == (2, 1, 1)
    assert loop_rows(P(3, 5), 1).rows == (3, 1, 1)
    with pytest.raises(ValueError):
        loop_rows(P(3, 5), 2)


def test_loop_entry_periodicity():
    lam = P(3, 5, 2, 1)
    assert [loop_entry(lam, k) for k in range(-2, 7)] == [4, 3, 2, 2, 1, 0, 0, -1, -2]


def test_cylindric_skew():
    s = cylindric_skew(P(3, 5, 2, 1, 1), 0, P(3, 5, 2, 1))
    assert s.boxes == {(3, 1)}
    s = cylindric_skew(P(3, 5, 1), 1, P(3, 5, 2, 1))
    assert s.boxes == {(1, 3), (2, 2), (3, 1)}
    with pytest.raises(NotContained):
        cylindric_skew(P(3, 5, 1, 1), 0, P(3, 5, 2, 1))


def test_classify_strip():
    k = classify_strip(cylindric_skew(P(3, 5, 2, 1, 1), 0, P(3, 5, 2, 1)))
    assert (k.vertical_r, k.horizontal_r) == (1, 1)
    k = classify_strip(cylindric_skew(P(3, 5, 1), 1, P(3, 5, 2, 1)))
    assert (k.vertical_r, k.horizontal_r) == (3, None)
    k = classify_strip(cylindric_skew(P(3, 5, 1), 0, P(3, 5, 1)))
    assert (k.vertical_r, k.horizontal_r) == (0, 0)


@given(rects(7).flatmap(partitions), st.integers(0, 1))
def test_loop_inverse(lam, d):
    assert loop_to_partition(lam.rect, loop_rows(lam, d).rows, d) == lam


@given(rects(7).flatmap(lambda r: st.tuples(partitions(r), partitions(r))))
def test_skew_properties(pair):
    lam, mu = pair
    rect = lam.rect
    for d in (0, 1):
        try:
            s = cylindric_skew(lam, d, mu)
        except NotContained:
            continue
        assert len(s) == len(s.boxes) == lam.size + d * rect.n - mu.size
        if d == 0:
            classical = {(i, j) for i in range(1, rect.m + 1) for j in range(mu.row(i) + 1, lam.row(i) + 1)}
            assert s.boxes == classical


def test_transpose_swaps_strip_kinds():
    for rect in (Rect(2, 5), Rect(3, 5), Rect(3, 6), Rect(2, 6)):
        parts = enumerate_partitions(rect)
        for lam in parts:
            for mu in parts:
                for d in (0, 1):
                    try:
                        s = cylindric_skew(lam, d, mu)
                    except NotContained:
                        continue
                    dual = cylindric_skew(transpose(lam), d, transpose(mu))
                    a, b = classify_strip(s), classify_strip(dual)
                    assert (a.vertical_r, a.horizontal_r) == (b.horizontal_r, b.vertical_r)
