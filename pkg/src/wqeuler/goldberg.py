"""t-Goldberg coefficients of ``(e^{a_1} e^{a_2} ...)^t``.

``c_u(t)`` is the coefficient of ``M_u`` in ``g^t``; it depends only on the
run composition ``I(u)`` (weakly increasing factors) and the block
composition ``J(u)`` (factors of equal letters).  Two closed forms are
provided:

* :func:`c_u_theorem` -- ``F_{s-r}(E^J(t))`` with Eulerian polynomials,
* :func:`c_u_qsym`    -- ``sum_{H >= J} C(t + l(J) - l(I), l(H)) / H!``.

The classical coefficient of the Hausdorff series is ``[t] c_u(t)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .algebra_core import PolyT, apply_F, binomial_poly, coeff_of_t
from .words import blocks_J, check_packed, pack, refinements_of, runs_I


@lru_cache(maxsize=None)
def eulerian_numbers(n: int) -> tuple:
    """Row ``n`` of the Eulerian triangle: ``A(n, d)`` for ``d = 0..n-1``."""
    if n <= 0:
        return (1,)
    row = [1]
    for m in range(2, n + 1):
        prev = row + [0]
        row = [(d + 1) * prev[d] + (m - d) * (prev[d - 1] if d else 0) for d in range(m)]
    return tuple(row)


@lru_cache(maxsize=None)
def eulerian_E(n: int) -> PolyT:
    """``E_n(t, t+1) = sum_d A(n, d) t^d (t+1)^(n-1-d)``, homogeneous of degree ``n-1``."""
    if n < 1:
        raise ValueError("n must be positive")
    t, t1 = PolyT.t(), PolyT((1, 1))
    out = PolyT()
    for d, a in enumerate(eulerian_numbers(n)):
        out = out + (t**d) * (t1 ** (n - 1 - d)) * a
    return out


@lru_cache(maxsize=None)
def E_J(J: tuple) -> PolyT:
    """``prod_k t E_{j_k}(t, t+1) / j_k!``."""
    out = PolyT((1,))
    for j in J:
        out = out * PolyT.t() * eulerian_E(j) * Fraction(1, factorial(j))
    return out


@lru_cache(maxsize=None)
def _c_theorem(I: tuple, J: tuple) -> PolyT:
    return apply_F(len(J) - len(I), E_J(J))


@lru_cache(maxsize=None)
def _c_qsym(I: tuple, J: tuple) -> PolyT:
    shift = len(J) - len(I)
    out = PolyT()
    for H in refinements_of(J):
        out = out + binomial_poly(shift, len(H)) * Fraction(1, prod(factorial(h) for h in H))
    return out


def c_u_theorem(u) -> PolyT:
    u = check_packed(u)
    if not u:
        return PolyT((1,))
    return _c_theorem(runs_I(u), blocks_J(u))


def c_u_qsym(u) -> PolyT:
    u = check_packed(u)
    if not u:
        return PolyT((1,))
    return _c_qsym(runs_I(u), blocks_J(u))


def beta_map_t_coefficient(k: int, s: int, r: int) -> Fraction:
    """``[t] F_{s-r}(t^k) = (-1)^(k-s+r-1) (s-r)! (k-s+r-1)! / k!`` (needs ``k >= s``, ``r >= 1``)."""
    e = k - s + r - 1
    if e < 0:
        raise ValueError("needs k >= s and r >= 1")
    return Fraction((-1) ** e * factorial(s - r) * factorial(e), factorial(k))


def goldberg_classical(u) -> Fraction:
    """Coefficient of any word packing to ``u`` in ``log(e^{a_1} e^{a_2} ...)``."""
    u = check_packed(u)
    if not u:
        return Fraction(0)
    I, J = runs_I(u), blocks_J(u)
    r, s = len(I), len(J)
    return sum(
        (c * beta_map_t_coefficient(k, s, r) for k, c in enumerate(E_J(J).coeffs) if c),
        Fraction(0),
    )


def goldberg_t_coefficient(u) -> Fraction:
    return coeff_of_t(c_u_theorem(u))


def hausdorff_table(m: int, D: int) -> dict:
    """``{word: coefficient in log g}`` for all nonempty words over ``m`` letters up to length ``D``."""
    from itertools import product

    return {
        w: goldberg_classical(pack(w))
        for d in range(1, D + 1)
        for w in product(range(1, m + 1), repeat=d)
    }
