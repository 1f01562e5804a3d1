import json

from hypothesis import given

from cylpieri.expansion import Expansion, expand_factored
from cylpieri.pieri import column_pieri, row_pieri
from cylpieri.polyring import TPoly
from cylpieri.shapes import Rect, enumerate_partitions

from conftest import L, P, partitions


def test_zero_terms_dropped_and_render_zero():
    e = Expansion(Rect(2, 4), {(P(2, 4, 1), 0): TPoly()})
    assert len(e) == 0 and e.render() == "0"


def test_render_variants():
    rect = Rect(2, 4)
    e = Expansion(rect, {(P(2, 4, 1), 0): L(3, 2), (P(2, 4), 2): TPoly.const(1), (P(2, 4, 2), 0): TPoly.const(1)})
    assert e.render() == r"(-t_2 + t_3)\sigma_{(1)} + \sigma_{(2)} + q^{2}\sigma_{\emptyset}"
    assert e.render("text") == "(-t_2 + t_3)*s(1) + s(2) + q^2*s()"


def test_two_digit_indices_braced():
    e = column_pieri(5, P(7, 15, 6, 6, 6, 3, 2))
    assert "t_{12}" in e.render()


def test_coefficient_lookup_and_diff():
    e = column_pieri(3, P(3, 5, 2, 1))
    assert e.coefficient((2, 2, 1)) == L(5, 1)
    assert e.coefficient((1,), 1) == 1
    other = Expansion(e.rect, dict(e.terms))
    assert e.diff(other) == []
    other.terms[(P(3, 5, 1), 1)] = TPoly.const(2)
    assert e.diff(other) == [(P(3, 5, 1), 1)]


def test_specialize_to_zero():
    e = column_pieri(3, P(3, 5, 2, 1))
    assert e.specialize_to_zero() == {(P(3, 5, 1), 1): 1}


@given(partitions(Rect(3, 6)))
def test_json_round_trip(mu):
    for e in [column_pieri(p, mu) for p in (1, 2, 3)] + [row_pieri(k, mu) for k in (1, 2, 3)]:
        data = json.loads(json.dumps(e.to_json()))
        assert Expansion.from_json(data) == e


def test_factored_expands_to_terms():
    for mu in enumerate_partitions(Rect(3, 6)):
        e = column_pieri(2, mu)
        for key, fac in e.factored.items():
            assert expand_factored(fac) == e[key]
