"""JSON encodings for scalars, polynomials and algebra elements.

Rationals are strings ``"p/q"`` (``"p"`` when ``q = 1``), polynomials in t are
``{"coeffs": [...]}`` in ascending degree, words and compositions are integer
arrays and set partitions are arrays of arrays.  Terms are always emitted in
sorted key order so that output is byte-stable.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .algebra_core import MultiPolyT, PolyT, as_rational, format_rational
from .ncsf import SymElement
from .words import canonical_partition, check_packed
from .wqsym import WQElement
from .wsym import WSElement


def encode_coeff(c):
    if isinstance(c, PolyT):
        return {"coeffs": [format_rational(x) for x in c.coeffs]}
    if isinstance(c, MultiPolyT):
        return {
            "nvars": c.nvars,
            "terms": [{"exp": list(e), "coeff": format_rational(c.terms[e])} for e in sorted(c.terms)],
        }
    return format_rational(as_rational(c))


def decode_coeff(obj):
    if isinstance(obj, dict):
        if "coeffs" in obj:
            return PolyT(as_rational(x) for x in obj["coeffs"])
        return MultiPolyT(obj["nvars"], {tuple(t["exp"]): as_rational(t["coeff"]) for t in obj["terms"]})
    return as_rational(obj)


def _degree(element):
    try:
        d = element.degree
    except ValueError:
        d = None
    return d


def encode_sym(f: SymElement) -> dict:
    return {
        "degree": _degree(f),
        "basis": f.basis or "S",
        "terms": [{"comp": list(k), "coeff": encode_coeff(c)} for k, c in f.sorted_items()],
    }


def decode_sym(obj) -> SymElement:
    return SymElement({tuple(t["comp"]): decode_coeff(t["coeff"]) for t in obj["terms"]}, basis=obj["basis"])


def encode_wq(F: WQElement) -> dict:
    return {
        "degree": _degree(F),
        "basis": F.basis or "N",
        "terms": [{"word": list(k), "coeff": encode_coeff(c)} for k, c in F.sorted_items()],
    }


def decode_wq(obj) -> WQElement:
    return WQElement(
        {check_packed(tuple(t["word"])): decode_coeff(t["coeff"]) for t in obj["terms"]},
        basis=obj["basis"],
    )


def encode_ws(F: WSElement) -> dict:
    return {
        "degree": _degree(F),
        "terms": [{"partition": [list(b) for b in k], "coeff": encode_coeff(c)} for k, c in F.sorted_items()],
    }


def decode_ws(obj) -> WSElement:
    return WSElement({canonical_partition(t["partition"]): decode_coeff(t["coeff"]) for t in obj["terms"]})


def encode_moments(moments) -> dict:
    return {"moments": [{"word": list(w), "value": format_rational(as_rational(v))} for w, v in sorted(moments.items())]}


def decode_moments(obj) -> dict:
    """``{"moments": [{"word": [...], "value": "p/q"}]}`` -> ``{word: Fraction}``."""
    if not isinstance(obj, dict) or "moments" not in obj:
        raise ValueError('a moment table needs a top-level "moments" list')
    out: dict = {}
    for entry in obj["moments"]:
        w = check_packed(tuple(entry["word"]))
        if w in out:
            raise ValueError(f"duplicate moment for {list(w)}")
        out[w] = as_rational(entry["value"])
    return out


def encode_goldberg(u, c_t: PolyT, c_classical: Fraction) -> dict:
    return {"word": list(u), "c_t": encode_coeff(c_t), "c_classical": format_rational(c_classical)}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)
