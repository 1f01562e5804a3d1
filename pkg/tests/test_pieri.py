import pytest

from cylpieri.cylinder import classify_strip, cylindric_skew, try_skew
from cylpieri.expansion import expand_factored
from cylpieri.pieri import (
    AddableBox,
    InvalidK,
    InvalidP,
    addable_candidates,
    column_pieri,
    extensions,
    h_extensions,
    pieri,
    pieri_word,
    postnikov_pieri,
    row_pieri,
    row_pieri_direct,
    wt_h,
    wt_v,
)
from cylpieri.polyring import TPoly, graham_decompose, is_graham_positive
from cylpieri.shapes import Rect, column, enumerate_partitions, row

from conftest import GOLDEN_LATEX, L, P, lp

MU_GR715 = P(7, 15, 6, 6, 6, 3, 2)
LAM_GR715 = P(7, 15, 7, 6, 6, 4, 2, 1)

WEIGHT_FORM = lp((12, 3), (11, 3)) + lp((12, 3), (5, 2)) + lp((11, 2), (5, 2))
SCHUR_FORM = lp((12, 2), (11, 2)) + lp((12, 2), (5, 3)) + lp((11, 3), (5, 3))



def small_rects(max_n):
    return [Rect(m, n) for n in range(2, max_n + 1) for m in range(1, n)]


def test_addable_candidates():
    s = cylindric_skew(LAM_GR715, 0, MU_GR715)
    assert [a.row for a in addable_candidates(s)] == [2, 3, 5]
    s = cylindric_skew(P(3, 5), 1, P(3, 5, 2, 1))
    assert [(a.row, a.col) for a in addable_candidates(s)] == [(2, 1)]
    s = cylindric_skew(P(3, 5), 0, P(3, 5))
    assert addable_candidates(s) == []


def test_extensions_gr715():
    s = cylindric_skew(LAM_GR715, 0, MU_GR715)
    exts = extensions(s, 5)
    assert len(exts) == 3
    top_two = next(e for e in exts if [a.row for a in e.added] == [2, 3])
    assert [wt_v(a) for a in top_two.added] == [L(12, 3), L(11, 3)]
    assert len(extensions(s, 3)) == 1 and extensions(s, 3)[0].added == ()
    assert extensions(s, 7) == []


def test_wt_v():
    s = cylindric_skew(P(3, 5), 1, P(3, 5, 2, 1))
    (ext,) = extensions(s, 3)
    assert [wt_v(a) for a in ext.added] == [L(3, 1)]
    assert wt_v(AddableBox(1, 1, u=5, r=3, b=1)) == L(5, 2)


def test_wt_h_worked_case():
    s = cylindric_skew(LAM_GR715, 0, MU_GR715)
    assert classify_strip(s).horizontal_r == 3
    ext = next(e for e in h_extensions(s, 5) if [a.col for a in e.added] == [2, 6])
    left, right = ext.added
    assert (right.s, right.c, right.rt) == (10, 3, 1)
    assert (left.s, left.c, left.rt) == (4, 7, 3)
    assert wt_h(right, 15) == L(14, 10)
    assert wt_h(left, 15) == L(12, 4)


def test_golden_gr35():
    e = column_pieri(3, P(3, 5, 2, 1))
    assert e.render() == GOLDEN_LATEX
    assert dict(e.items()) == {
        (P(3, 5, 2, 1, 1), 0): lp((5, 1), (3, 1)),
        (P(3, 5, 2, 2, 1), 0): L(5, 1),
        (P(3, 5), 1): L(3, 1),
        (P(3, 5, 1), 1): TPoly.const(1),
    }


def test_golden_gr715_coefficient():
    e = column_pieri(5, MU_GR715)
    assert e[(LAM_GR715, 0)] == WEIGHT_FORM == SCHUR_FORM
    assert e.factored[(LAM_GR715, 0)] == (((12, 3), (11, 3)), ((12, 3), (5, 2)), ((11, 2), (5, 2)))


def test_empty_mu():
    for p in (1, 2, 3):
        e = column_pieri(p, P(3, 5))
        assert dict(e.items()) == {(column(Rect(3, 5), p), 0): TPoly.const(1)}
    assert dict(row_pieri(1, P(3, 5)).items()) == {(P(3, 5, 1), 0): TPoly.const(1)}


def test_row_quantum_term():
    e = row_pieri(2, P(3, 5, 2, 2, 2))
    assert e[(P(3, 5, 1, 1, 1), 1)] == 1
    assert e[(P(3, 5, 1, 1), 1)] == L(5, 2)


def test_range_errors():
    with pytest.raises(InvalidP):
        column_pieri(0, P(3, 5))
    with pytest.raises(InvalidP):
        column_pieri(4, P(3, 5))
    with pytest.raises(InvalidK):
        row_pieri(3, P(3, 5))
    with pytest.raises(ValueError):
        pieri(1, P(3, 5), "diagonal")


def test_postnikov_examples():
    R = Rect(3, 5)
    assert postnikov_pieri(3, P(3, 5, 2, 1)) == {(P(3, 5, 1), 1): 1}
    assert postnikov_pieri(3, P(3, 5)) == {(column(R, 3), 0): 1}
    assert postnikov_pieri(2, P(3, 5), "row") == {(row(R, 2), 0): 1}


def _all_products(max_n):
    for rect in small_rects(max_n):
        for mu in enumerate_partitions(rect):
            for p in range(1, rect.m + 1):
                yield "column", p, mu, column_pieri(p, mu)
            for k in range(1, rect.width + 1):
                yield "row", k, mu, row_pieri(k, mu)


def test_degree_positivity_and_shadow():
    for shape, size, mu, e in _all_products(6):
        n = mu.rect.n
        for (lam, d), c in e.items():
            assert c.is_homogeneous(mu.size + size - lam.size - d * n)
            assert is_graham_positive(c, n)
        assert e.specialize_to_zero() == postnikov_pieri(size, mu, shape)


def test_constructive_enumeration_complete():
    for rect in small_rects(7):
        parts = enumerate_partitions(rect)
        for mu in parts:
            for p in range(1, rect.m + 1):
                brute = set()
                for lam in parts:
                    for d in (0, 1):
                        s = try_skew(lam, d, mu)
                        if s is None or classify_strip(s).vertical_r is None or len(s) > p:
                            continue
                        if extensions(s, p):
                            brute.add((lam, d))
                assert set(column_pieri(p, mu).terms) == brute


def test_row_routes_agree():
    for rect in small_rects(7):
        for mu in enumerate_partitions(rect):
            for k in range(1, rect.width + 1):
                assert row_pieri(k, mu) == row_pieri_direct(k, mu)


def test_horizontal_weights_never_vanish():
    for rect in small_rects(6):
        for mu in enumerate_partitions(rect):
            for k in range(1, rect.width + 1):
                for fac in row_pieri_direct(k, mu).factored.values():
                    assert all(a > b for prod in fac for a, b in prod)


def test_vertical_weights_are_positive_roots():
    for rect in small_rects(6):
        for mu in enumerate_partitions(rect):
            for p in range(1, rect.m + 1):
                for fac in column_pieri(p, mu).factored.values():
                    assert all(a > b >= 1 for prod in fac for a, b in prod)


def test_pieri_commutativity():
    for rect in small_rects(6):
        classes = [("column", p) for p in range(1, rect.m + 1)] + [("row", k) for k in range(1, rect.width + 1)]
        for mu in enumerate_partitions(rect):
            for i, a in enumerate(classes):
                for b in classes[i + 1:]:
                    assert pieri_word([a, b], mu) == pieri_word([b, a], mu)


def test_factored_matches_expanded():
    e = column_pieri(4, P(4, 8, 3, 2, 2))
    for key, fac in e.factored.items():
        assert expand_factored(fac) == e[key]
