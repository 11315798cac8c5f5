"""WQSym* (the opposite Solomon-Tits algebra) in the N and K bases.

Elements are :class:`WQElement` -- combinations of packed words tagged with
basis ``"N"`` or ``"K"``.  The internal product is
``N_u * N_v = N_{pack(u over v)}``; Sym embeds through
``S^I -> sum_{ev(u) = I} N_u``.

Most closed formulas come with a ``method=`` switch selecting either the
closed form or the direct (brute force) computation, so the two can be
compared.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Mapping

from .algebra_core import (
    LinComb,
    MultiPolyT,
    PolyT,
    as_rational,
    bilinear,
    binomial_poly,
    integer_binomial,
    linear_extension,
)
from .goldberg import c_u_qsym
from .ncsf import SymElement, eulerian_idempotent, s_power, to_s
from .words import (
    a0,
    biletter_pack,
    block_restrictions,
    blocks_J,
    check_packed,
    enumerate_packed,
    ev,
    is_weakly_finer,
    max_letter,
    pack,
    refinement_word,
    refinements,
    right_action,
    runs_I,
    weak_refinements,
    word_str,
    words_with_ev,
)


class MissingMoment(KeyError):
    """A moment table has no entry for a word in the support."""

    def __init__(self, word):
        super().__init__(word)
        self.word = word

    def __str__(self):
        return f"no moment given for the word {word_str(self.word)}"


class WQElement(LinComb):
    """Element of WQSym*; keys are packed words (tuples)."""

    __slots__ = ()

    def __init__(self, terms=(), basis: str = "N"):
        super().__init__(terms, basis=basis)

    @property
    def degree(self):
        degrees = {len(u) for u in self}
        if len(degrees) > 1:
            raise ValueError("element is not homogeneous")
        return degrees.pop() if degrees else None

    def __mul__(self, other):
        """Outer product in the N (or K) basis; scalars scale."""
        if isinstance(other, WQElement):
            return n_outer_product(self, other)
        if isinstance(other, LinComb):
            return NotImplemented
        return self.scale(other)


def N(u, coeff=1) -> WQElement:
    return WQElement({check_packed(u): coeff})


def K(u, coeff=1) -> WQElement:
    return WQElement({check_packed(u): coeff}, basis="K")


def _require(f: WQElement, basis: str):
    if f and f.basis != basis:
        raise ValueError(f"expected the {basis} basis, got {f.basis}")


# ---------------------------------------------------------------- products

def _pack_key(u, v):
    if len(u) != len(v):
        raise ValueError(f"degree mismatch: {word_str(u)} vs {word_str(v)}")
    return biletter_pack(u, v)


def internal_product(f: WQElement, g: WQElement) -> WQElement:
    """Bilinear extension of ``N_u * N_v = N_{pack(u over v)}``."""
    _require(f, "N")
    _require(g, "N")
    return bilinear(f, g, _pack_key, basis="N")


def _shifted_shuffles(u: tuple, v: tuple):
    """Words whose letters <= max(u) spell ``u`` and whose others pack to ``v``."""
    shift = max_letter(u)
    v = tuple(a + shift for a in v)
    out = []

    def go(i, j, prefix):
        if i == len(u) and j == len(v):
            out.append(tuple(prefix))
            return
        if i < len(u):
            go(i + 1, j, prefix + [u[i]])
        if j < len(v):
            go(i, j + 1, prefix + [v[j]])

    go(0, 0, [])
    return out


def _outer_key(u, v):
    return ((w, 1) for w in _shifted_shuffles(u, v))


_outer_key.multi = True


def n_outer_product(f: WQElement, g: WQElement) -> WQElement:
    """Outer product; the structure constants are those of the N basis.

    Works in whichever basis both factors share: the K basis multiplies
    with the same constants.
    """
    if f and g and f.basis != g.basis:
        raise ValueError("factors are in different bases")
    return bilinear(f, g, _outer_key, basis=f.basis if f else g.basis)


def act(f: WQElement, sigma) -> WQElement:
    """Right action ``N_u . sigma = N_{u sigma}`` extended linearly."""
    return f.map_keys(lambda u: right_action(u, sigma))


# ---------------------------------------------------------------- Sym <-> WQSym*

def embed_sym(f: SymElement) -> WQElement:
    f = to_s(f)
    return linear_extension(f, lambda I: WQElement({u: 1 for u in words_with_ev(I)}), basis="N")


def collect_sym(F: WQElement) -> SymElement:
    """Inverse of :func:`embed_sym` on its image.

    Raises ``ValueError`` if the coefficients are not constant along the
    fibres of ``ev``; that never happens for images of Sym.
    """
    _require(F, "N")
    seen: dict = {}
    for u, c in F.items():
        I = ev(u)
        if I in seen:
            if seen[I] != c:
                raise ValueError(f"coefficient of N_{word_str(u)} differs within the fibre of {I}")
        else:
            seen[I] = c
    for I in seen:
        for u in words_with_ev(I):
            if u not in F:
                raise ValueError(f"N_{word_str(u)} missing from the fibre of {I}")
    return SymElement(seen)


@lru_cache(maxsize=None)
def sigma_t_wq(n: int) -> WQElement:
    """Degree ``n`` slice of ``sigma_1^t``: ``sum_u C(t, max u) N_u``."""
    return WQElement({u: binomial_poly(0, max_letter(u)) for u in enumerate_packed(n)})


@lru_cache(maxsize=None)
def _embedded_eulerian(n: int, k: int) -> WQElement:
    return embed_sym(eulerian_idempotent(n, k, max_degree=n))


# ---------------------------------------------------------------- Adams substitutes and K basis

def _split_counts(v: tuple, u: tuple) -> list:
    """For ``v`` finer than ``u``: number of ``v``-blocks inside each ``u``-block."""
    m = refinement_word(u, v)
    return list(ev(m)) if m else []


def adams_wq(u, k: int, method: str = "closed") -> WQElement:
    """``psi_k(N_u) = N_u * sigma_1^k = sum_{v >= u} beta_k(v, u) N_v``."""
    u = check_packed(u)
    if method == "closed":
        return WQElement(
            {v: prod(integer_binomial(k, c) for c in _split_counts(v, u)) for v in refinements(u)}
        )
    if method == "product":
        return internal_product(N(u), embed_sym(s_power(len(u), k, max_degree=len(u))))
    raise ValueError(f"unknown method {method!r}")


def cumulant_K_u(u, method: str = "closed") -> WQElement:
    """``K_u = N_u * E^[max u]`` expanded on the N basis."""
    u = check_packed(u)
    if method == "closed":
        r = max_letter(u)
        return WQElement(
            {
                v: Fraction((-1) ** (max_letter(v) - r), prod(_split_counts(v, u)))
                for v in refinements(u)
            }
        )
    if method == "product":
        if not u:
            return N(())
        return internal_product(N(u), _embedded_eulerian(len(u), max_letter(u)))
    raise ValueError(f"unknown method {method!r}")


def k_to_n(v) -> WQElement:
    """``K_v = sum_{w in raff(v)} (-1)^(max w - max v) / pi_ev(m(v, w)) N_w``."""
    v = check_packed(v)
    out = {}
    for w in refinements(v):
        m = refinement_word(v, w)
        out[w] = Fraction((-1) ** (max_letter(w) - max_letter(v)), prod(ev(m)))
    return WQElement(out)


def n_to_k(v) -> WQElement:
    """``N_v = sum_{w in raff(v)} 1 / pi_ev(m(v, w))! K_w``."""
    v = check_packed(v)
    out = {}
    for w in refinements(v):
        m = refinement_word(v, w)
        out[w] = Fraction(1, prod(factorial(c) for c in ev(m)))
    return WQElement(out, basis="K")


def to_k_basis(F: WQElement) -> WQElement:
    _require(F, "N")
    return linear_extension(F, n_to_k, basis="K")


def to_n_basis(F: WQElement) -> WQElement:
    _require(F, "K")
    return linear_extension(F, k_to_n, basis="N")


# ---------------------------------------------------------------- sigma_1^t on either side

def U_series(v, method: str = "closed") -> WQElement:
    """``U_v(t) = sigma_1^t * N_v``.

    methods: ``"direct"`` (sum over all u of C(t, max u) N_u * N_v),
    ``"closed"`` (through ``a0(v, w)``), ``"refinement_word"`` (through the
    run statistics of ``m(v, w)``).
    """
    v = check_packed(v)
    if method == "direct":
        return internal_product(sigma_t_wq(len(v)), N(v))
    out = {}
    for w in weak_refinements(v):
        a = max_letter(w)
        if method == "closed":
            out[w] = binomial_poly(a - a0(v, w), a)
        elif method == "refinement_word":
            m = refinement_word(v, w)
            out[w] = binomial_poly(len(blocks_J(m)) - len(runs_I(m)), sum(blocks_J(m)))
        else:
            raise ValueError(f"unknown method {method!r}")
    return WQElement(out)


def weisner_coefficient(v, w) -> Fraction:
    """Coefficient of ``N_w`` in ``E^[1] * N_v``: ``(-1)^(a0-1) (a-a0)! (a0-1)! / a!``."""
    v, w = check_packed(v), check_packed(w)
    if not is_weakly_finer(w, v):
        return Fraction(0)
    a, b = max_letter(w), a0(v, w)
    return Fraction((-1) ** (b - 1) * factorial(a - b) * factorial(b - 1), factorial(a))


def V_series(u, method: str = "closed") -> WQElement:
    """``V_u(t) = N_u * sigma_1^t = sum_{w >= u} prod_i C(t, max w^(i)) N_w``."""
    u = check_packed(u)
    if method == "direct":
        return internal_product(N(u), sigma_t_wq(len(u)))
    if method == "closed":
        return WQElement(
            {
                w: _poly_prod(binomial_poly(0, max_letter(x)) for x in block_restrictions(u, w))
                for w in refinements(u)
            }
        )
    raise ValueError(f"unknown method {method!r}")


def _poly_prod(polys) -> PolyT:
    out = PolyT((1,))
    for p in polys:
        out = out * p
    return out


def V_set(u, w) -> list:
    """``V(u, w) = {v : pack(u over v) = w}`` by exhaustive search."""
    u, w = check_packed(u), check_packed(w)
    return [v for v in enumerate_packed(len(u)) if biletter_pack(u, v) == w]


def m_product(u, v) -> list:
    """Support of ``M_u M_v`` in WQSym (each word occurs once)."""
    u, v = check_packed(u), check_packed(v)
    n, p = len(u), len(u) + len(v)
    return [w for w in enumerate_packed(p) if pack(w[:n]) == u and pack(w[n:]) == v]


def W_set(u, v) -> list:
    """Words finer than ``u`` and weakly finer than ``v``."""
    return [w for w in refinements(u) if is_weakly_finer(w, v)]


def mixed_series(u, v, method: str = "closed") -> WQElement:
    """``N_u * sigma_1^t * N_v``."""
    u, v = check_packed(u), check_packed(v)
    if len(u) != len(v):
        raise ValueError("degree mismatch")
    if method == "direct":
        return internal_product(internal_product(N(u), sigma_t_wq(len(u))), N(v))
    if method == "closed":
        out = {}
        for w in W_set(u, v):
            factors = []
            for vi, wi in zip(block_restrictions(u, v), block_restrictions(u, w)):
                a = max_letter(wi)
                factors.append(binomial_poly(a - a0(vi, wi), a))
            out[w] = _poly_prod(factors)
        return WQElement(out)
    raise ValueError(f"unknown method {method!r}")


def U_series_K(v, method: str = "closed") -> WQElement:
    """``U_v(t)`` on the K basis: ``sum_{x in raffbis(v)} c_{m(v, x)}(t) K_x``."""
    v = check_packed(v)
    if method == "closed":
        return WQElement({x: c_u_qsym(refinement_word(v, x)) for x in weak_refinements(v)}, basis="K")
    if method == "basis_change":
        return to_k_basis(U_series(v))
    raise ValueError(f"unknown method {method!r}")


def mixed_series_K(u, v, method: str = "closed") -> WQElement:
    """``N_u * sigma_1^t * N_v`` on the K basis, one Goldberg factor per block of ``u``."""
    u, v = check_packed(u), check_packed(v)
    if method == "closed":
        out = {}
        for w in W_set(u, v):
            out[w] = _poly_prod(
                c_u_qsym(refinement_word(vi, wi))
                for vi, wi in zip(block_restrictions(u, v), block_restrictions(u, w))
            )
        return WQElement(out, basis="K")
    if method == "basis_change":
        return to_k_basis(mixed_series(u, v))
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------- several binomial scalars

def moment_poly_wq(u) -> WQElement:
    """``N_u(T) = sum_{v >= u} prod_p C(t_p, #v-blocks in block p) N_v``."""
    u = check_packed(u)
    r = max_letter(u)
    out = {}
    for v in refinements(u):
        coeff = MultiPolyT.constant(r)
        for p, c in enumerate(_split_counts(v, u)):
            coeff = coeff * MultiPolyT.from_poly(binomial_poly(0, c), p, r)
        out[v] = coeff
    return WQElement(out)


def partial_cumulant_wq(u, j: int, method: str = "replace") -> WQElement:
    """``d/dt_j`` at ``t_j = 0`` of ``N_u(T)``; ``j`` is a 1-based block index.

    ``"replace"`` puts ``(-1)^(l-1)/l`` on the ``j``-th block (split into
    ``l`` pieces) instead of ``C(t_j, l)``.
    """
    u = check_packed(u)
    r = max_letter(u)
    if not 1 <= j <= r:
        raise ValueError(f"j must lie in 1..{r}, got {j}")
    if method == "derivative":
        return moment_poly_wq(u).map_coefficients(
            lambda c: c.derivative(j - 1).substitute_zero(j - 1)
        )
    if method != "replace":
        raise ValueError(f"unknown method {method!r}")
    out = {}
    for v in refinements(u):
        coeff = MultiPolyT.constant(r)
        for p, c in enumerate(_split_counts(v, u)):
            if p == j - 1:
                coeff = coeff * Fraction((-1) ** (c - 1), c)
            else:
                coeff = coeff * MultiPolyT.from_poly(binomial_poly(0, c), p, r)
        out[v] = coeff
    return WQElement(out)


# ---------------------------------------------------------------- moment functionals

def evaluate_functional(element: WQElement, moments: Mapping) -> Fraction:
    """Linear extension of ``N_u -> moments[u]``."""
    _require(element, "N")
    total = Fraction(0)
    for u, c in element.items():
        if u not in moments:
            raise MissingMoment(u)
        total += c * as_rational(moments[u])
    return total


def cumulants_from_moments(moments: Mapping, n: int) -> dict:
    """``{u: phi(K_u)}`` for every packed word of length ``n``."""
    return {u: evaluate_functional(cumulant_K_u(u), moments) for u in enumerate_packed(n)}


def evaluate_t(F: WQElement, x) -> WQElement:
    return F.map_coefficients(lambda c: c(x) if isinstance(c, PolyT) else c)
