from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wqeuler.algebra_core import MultiPolyT, PolyT
from wqeuler.ncsf import S, phi_n, s_to_r, sigma_t
from wqeuler.serialization import (
    decode_coeff,
    decode_moments,
    decode_sym,
    decode_wq,
    decode_ws,
    dumps,
    encode_coeff,
    encode_goldberg,
    encode_moments,
    encode_sym,
    encode_wq,
    encode_ws,
)
from wqeuler.words import enumerate_packed
from wqeuler.wqsym import U_series, U_series_K, moment_poly_wq
from wqeuler.wsym import phi_idempotent, top

fractions = st.fractions(max_denominator=10**12)


def roundtrip(obj):
    return json.loads(dumps(obj))


@given(fractions)
def test_rational_roundtrip(x):
    assert decode_coeff(roundtrip(encode_coeff(x))) == x


@given(st.lists(fractions, max_size=6))
def test_poly_roundtrip(cs):
    p = PolyT(cs)
    assert decode_coeff(roundtrip(encode_coeff(p))) == p


def test_coeff_formats():
    assert encode_coeff(Fraction(-3, 6)) == "-1/2"
    assert encode_coeff(4) == "4"
    assert encode_coeff(PolyT((0, Fraction(1, 2)))) == {"coeffs": ["0", "1/2"]}
    m = MultiPolyT(2, {(1, 0): 2, (0, 1): Fraction(1, 3)})
    assert decode_coeff(roundtrip(encode_coeff(m))) == m


def test_element_roundtrips():
    for f in [phi_n(4), s_to_r(S(2, 1)), sigma_t(3)]:
        assert decode_sym(roundtrip(encode_sym(f))) == f
    assert encode_sym(phi_n(2))["degree"] == 2
    for F in [U_series((1, 1, 2)), U_series_K((1, 2, 1)), moment_poly_wq((2, 1, 3, 1, 2))]:
        assert decode_wq(roundtrip(encode_wq(F))) == F
    G = phi_idempotent(top(4))
    assert decode_ws(roundtrip(encode_ws(G))) == G


def test_output_is_sorted_and_stable():
    F = U_series((1, 1, 2))
    words = [t["word"] for t in encode_wq(F)["terms"]]
    assert words == sorted(words)
    assert dumps(encode_wq(F)) == dumps(encode_wq(U_series((1, 1, 2))))


def test_moment_table_roundtrip():
    table = {u: Fraction(i, 7) for i, u in enumerate(enumerate_packed(3))}
    assert decode_moments(roundtrip(encode_moments(table))) == table


def test_moment_table_errors():
    with pytest.raises(ValueError):
        decode_moments({"values": []})
    with pytest.raises(ValueError):
        decode_moments({"moments": [{"word": [1], "value": "1"}, {"word": [1], "value": "2"}]})
    with pytest.raises(ValueError):
        decode_moments({"moments": [{"word": [1, 3], "value": "1"}]})


def test_goldberg_record():
    rec = encode_goldberg((2, 1), PolyT((0, Fraction(-1, 2), Fraction(1, 2))), Fraction(-1, 2))
    assert rec == {"word": [2, 1], "c_t": {"coeffs": ["0", "-1/2", "1/2"]}, "c_classical": "-1/2"}
