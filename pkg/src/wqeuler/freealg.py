"""Truncated power series in noncommuting letters ``a_1..a_m``.

Used as an independent brute-force oracle for the Goldberg/Hausdorff
coefficients: the series ``g = e^{a_1} ... e^{a_m}``, ``log g`` and
``g^t = exp(t log g)`` are expanded word by word.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .algebra_core import PolyT


class NCSeries:
    """``{word: coefficient}`` truncated at total degree ``max_degree``.

    Coefficients are Fractions or :class:`PolyT`.
    """

    __slots__ = ("num_letters", "max_degree", "terms")

    def __init__(self, num_letters: int, max_degree: int, terms=()):
        self.num_letters = num_letters
        self.max_degree = max_degree
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict = {}
        for w, c in items:
            w = tuple(w)
            if len(w) > max_degree:
                continue
            if any(not 1 <= a <= num_letters for a in w):
                raise ValueError(f"word {w} uses letters outside 1..{num_letters}")
            if isinstance(c, int):
                c = Fraction(c)
            acc[w] = acc[w] + c if w in acc else c
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def one(cls, m: int, D: int) -> "NCSeries":
        return cls(m, D, {(): 1})

    @classmethod
    def letter(cls, i: int, m: int, D: int) -> "NCSeries":
        return cls(m, D, {(i,): 1})

    def _check(self, other):
        if (self.num_letters, self.max_degree) != (other.num_letters, other.max_degree):
            raise ValueError("series live in different truncated algebras")

    def __add__(self, other):
        self._check(other)
        return NCSeries(self.num_letters, self.max_degree, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return self.scalar_mul(-1)

    def __sub__(self, other):
        return self + (-other)

    def scalar_mul(self, c) -> "NCSeries":
        if isinstance(c, int):
            c = Fraction(c)
        return NCSeries(self.num_letters, self.max_degree, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NCSeries):
            return self.scalar_mul(other)
        self._check(other)
        D = self.max_degree
        acc: dict = {}
        for w1, c1 in self.terms.items():
            room = D - len(w1)
            for w2, c2 in other.terms.items():
                if len(w2) > room:
                    continue
                w = w1 + w2
                term = c1 * c2
                acc[w] = acc[w] + term if w in acc else term
        out = NCSeries(self.num_letters, D)
        out.terms = {w: c for w, c in acc.items() if c}
        return out

    def __eq__(self, other):
        if not isinstance(other, NCSeries):
            return NotImplemented
        return (
            self.num_letters == other.num_letters
            and self.max_degree == other.max_degree
            and self.terms == other.terms
        )

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def coefficient(self, word):
        return self.terms.get(tuple(word), Fraction(0))

    def map_coefficients(self, f) -> "NCSeries":
        return NCSeries(self.num_letters, self.max_degree, {w: f(c) for w, c in self.terms.items()})

    def __repr__(self):
        return f"NCSeries(m={self.num_letters}, D={self.max_degree}, {len(self.terms)} terms)"


def mul(f: NCSeries, g: NCSeries) -> NCSeries:
    return f * g


def add(f: NCSeries, g: NCSeries) -> NCSeries:
    return f + g


def scalar_mul(f: NCSeries, c) -> NCSeries:
    return f.scalar_mul(c)


def coefficient(series: NCSeries, word):
    return series.coefficient(word)


def exp_series(f: NCSeries) -> NCSeries:
    """``sum_{k=0}^{D} f^k / k!``; ``f`` must have zero constant term."""
    if f.constant_term():
        raise ValueError("exp needs a series without constant term")
    m, D = f.num_letters, f.max_degree
    out = NCSeries.one(m, D)
    power = NCSeries.one(m, D)
    for k in range(1, D + 1):
        power = power * f
        out = out + power.scalar_mul(Fraction(1, factorial(k)))
    return out


def log_series(g: NCSeries) -> NCSeries:
    """``sum_{k=1}^{D} (-1)^(k-1) (g-1)^k / k``; ``g`` must have constant term 1."""
    if g.constant_term() != 1:
        raise ValueError("log needs a series with constant term 1")
    m, D = g.num_letters, g.max_degree
    x = g - NCSeries.one(m, D)
    out = NCSeries(m, D)
    power = NCSeries.one(m, D)
    for k in range(1, D + 1):
        power = power * x
        out = out + power.scalar_mul(Fraction((-1) ** (k - 1), k))
    return out


def group_exponentials(m: int, D: int) -> NCSeries:
    """``e^{a_1} e^{a_2} ... e^{a_m}`` truncated at degree ``D``."""
    out = NCSeries.one(m, D)
    for i in range(1, m + 1):
        out = out * exp_series(NCSeries.letter(i, m, D))
    return out


def power_t(g: NCSeries) -> NCSeries:
    """``g^t = exp(t log g)`` with PolyT coefficients.

    ``(t L)^k / k! = t^k L^k / k!``, so the powers of ``L = log g`` are taken
    with rational coefficients and ``t^k`` is attached afterwards.
    """
    L = log_series(g)
    m, D = g.num_letters, g.max_degree
    acc: dict = {(): PolyT((1,))}
    power = NCSeries.one(m, D)
    for k in range(1, D + 1):
        power = power * L
        mono = PolyT.monomial(k, Fraction(1, factorial(k)))
        for w, c in power.terms.items():
            term = mono * c
            acc[w] = acc[w] + term if w in acc else term
    return NCSeries(m, D, acc)
