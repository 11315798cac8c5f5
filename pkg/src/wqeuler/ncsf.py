"""Noncommutative symmetric functions in the S (complete) and R (ribbon) bases.

Elements are :class:`SymElement` -- sparse combinations of compositions.
The outer product is concatenation ``S^I S^J = S^{IJ}``; the internal product
``*`` is the (opposite) descent-algebra product on each homogeneous component.
Coefficients may be Fractions, :class:`PolyT` (one binomial scalar ``t``) or
:class:`MultiPolyT` (several scalars ``t_1..t_r``).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .algebra_core import (
    LinComb,
    MultiPolyT,
    PolyT,
    bilinear,
    binomial_poly,
    integer_binomial,
    linear_extension,
)
from .words import (
    check_composition,
    coarsenings_of,
    compositions,
    refinements_of,
    split_by,
)

DEFAULT_MAX_DEGREE = 8


class SymElement(LinComb):
    """Homogeneous or inhomogeneous element of Sym; keys are compositions."""

    __slots__ = ()

    def __init__(self, terms=(), basis: str = "S"):
        super().__init__(terms, basis=basis)

    @property
    def degree(self):
        degrees = {sum(I) for I in self}
        if len(degrees) > 1:
            raise ValueError("element is not homogeneous")
        return degrees.pop() if degrees else None

    def homogeneous_part(self, n: int) -> "SymElement":
        return self._new({I: c for I, c in self.items() if sum(I) == n})

    def __mul__(self, other):
        """Outer (concatenation) product; scalars scale."""
        if isinstance(other, SymElement):
            return concat_product(self, other)
        if isinstance(other, LinComb):
            return NotImplemented
        return self.scale(other)


def _check_degree(n: int, max_degree: int):
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n > max_degree:
        raise ValueError(f"degree {n} exceeds the cap {max_degree}; pass max_degree= to raise it")


def S(*parts, coeff=1) -> SymElement:
    """``S^I`` for the composition ``I = parts`` (``S(2, 1)`` is ``S^{21}``)."""
    if len(parts) == 1 and isinstance(parts[0], (tuple, list)):
        parts = tuple(parts[0])
    return SymElement({check_composition(parts): coeff})


def R(*parts, coeff=1) -> SymElement:
    if len(parts) == 1 and isinstance(parts[0], (tuple, list)):
        parts = tuple(parts[0])
    return SymElement({check_composition(parts): coeff}, basis="R")


def _require_basis(f: SymElement, basis: str):
    if f and f.basis != basis:
        raise ValueError(f"expected an element in the {basis} basis, got {f.basis}")


# ---------------------------------------------------------------- S <-> R

def s_to_r(f: SymElement) -> SymElement:
    """``S^I = sum of R_J`` over ``J`` coarser than ``I``."""
    _require_basis(f, "S")
    return linear_extension(
        f, lambda I: SymElement({J: 1 for J in coarsenings_of(I)}, basis="R"), basis="R"
    )


def r_to_s(f: SymElement) -> SymElement:
    """Inverse of :func:`s_to_r` (inclusion-exclusion on descent sets)."""
    _require_basis(f, "R")
    return linear_extension(
        f,
        lambda I: SymElement({J: (-1) ** (len(I) - len(J)) for J in coarsenings_of(I)}),
        basis="S",
    )


def to_s(f: SymElement) -> SymElement:
    return r_to_s(f) if f.basis == "R" else f


# ---------------------------------------------------------------- products

def concat_product(f: SymElement, g: SymElement) -> SymElement:
    _require_basis(f, "S")
    _require_basis(g, "S")
    return bilinear(f, g, lambda I, J: I + J, basis="S")


def _matrices(rows: tuple, cols: tuple):
    """Nonnegative integer matrices with the given row and column sums."""
    if not rows:
        if all(c == 0 for c in cols):
            yield ()
        return

    def fill(r, remaining_cols, k):
        if k == len(remaining_cols) - 1:
            if r <= remaining_cols[k]:
                yield (r,)
            return
        for x in range(min(r, remaining_cols[k]) + 1):
            for rest in fill(r - x, remaining_cols, k + 1):
                yield (x,) + rest

    for row in fill(rows[0], cols, 0):
        left = tuple(c - x for c, x in zip(cols, row))
        for tail in _matrices(rows[1:], left):
            yield (row,) + tail


@lru_cache(maxsize=None)
def _internal_SS(I: tuple, J: tuple) -> tuple:
    """``S^I * S^J`` as ``((K, multiplicity), ...)``.

    Sum over matrices with row sums ``I`` and column sums ``J``, read row by
    row with zeros dropped. Each matrix records the block intersections of
    an ordered set partition of type ``I`` with one of type ``J``.
    """
    acc: dict = {}
    for M in _matrices(I, J):
        K = tuple(x for row in M for x in row if x)
        acc[K] = acc.get(K, 0) + 1
    return tuple(sorted(acc.items()))


def _internal_key(I, J):
    if sum(I) != sum(J):
        raise ValueError(f"internal product of components of degrees {sum(I)} and {sum(J)}")
    return _internal_SS(I, J)


_internal_key.multi = True


def internal_product_sym(f: SymElement, g: SymElement, method: str = "mackey") -> SymElement:
    """Internal product ``f * g`` of homogeneous elements of the same degree.

    ``method="mackey"`` sums over intersection matrices; ``method="embedding"``
    pushes both factors into WQSym*, multiplies there and collects back.
    """
    f, g = to_s(f), to_s(g)
    if f and g and f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    if method == "mackey":
        return bilinear(f, g, _internal_key, basis="S")
    if method == "embedding":
        from .wqsym import collect_sym, embed_sym, internal_product

        return collect_sym(internal_product(embed_sym(f), embed_sym(g)))
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------- formal series in the S basis

def _series_mul(a: dict, b: dict, n: int) -> dict:
    out: dict = {}
    for I, x in a.items():
        wI = sum(I)
        for J, y in b.items():
            if wI + sum(J) > n:
                continue
            K = I + J
            out[K] = out.get(K, 0) + x * y
    return {K: c for K, c in out.items() if c}


@lru_cache(maxsize=None)
def _log_sigma(n: int) -> dict:
    """``log(1 + S_1 + S_2 + ...)`` truncated at degree ``n``."""
    x = {(k,): Fraction(1) for k in range(1, n + 1)}
    power = dict(x)
    out: dict = {}
    for k in range(1, n + 1):
        for I, c in power.items():
            out[I] = out.get(I, 0) + c * Fraction((-1) ** (k - 1), k)
        power = _series_mul(power, x, n)
    return {I: c for I, c in out.items() if c}


@lru_cache(maxsize=None)
def _eulerian_table(n: int) -> tuple:
    """``[(log sigma_1)^k / k!]`` of degree exactly ``n``, for ``k = 0..n``."""
    phi = _log_sigma(n)
    power = {(): Fraction(1)}
    out = []
    for k in range(n + 1):
        out.append({I: c / factorial(k) for I, c in power.items() if sum(I) == n})
        power = _series_mul(power, phi, n)
    return tuple(out)


def phi_n(n: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> SymElement:
    """Solomon's idempotent ``sum_I (-1)^(l(I)-1)/l(I) S^I`` over compositions of ``n``."""
    _check_degree(n, max_degree)
    if n < 1:
        raise ValueError("phi_n needs n >= 1")
    return SymElement({I: Fraction((-1) ** (len(I) - 1), len(I)) for I in compositions(n)})


def eulerian_idempotent(n: int, k: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> SymElement:
    """``E_n^[k]``: degree ``n`` part of ``(log sigma_1)^k / k!``."""
    _check_degree(n, max_degree)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")
    return SymElement(_eulerian_table(n)[k])


def sigma_t(n: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> SymElement:
    """Degree ``n`` slice of ``sigma_1^t``: ``sum_I C(t, l(I)) S^I``, PolyT coefficients."""
    _check_degree(n, max_degree)
    return SymElement({I: binomial_poly(0, len(I)) for I in compositions(n)})


def s_power(n: int, k: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> SymElement:
    """``S_n^[k]``, the degree ``n`` part of ``sigma_1^k``."""
    _check_degree(n, max_degree)
    return SymElement(
        {I: integer_binomial(k, len(I)) for I in compositions(n) if len(I) <= k or k < 0}
    )


def eulerian_A(n: int, k: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> SymElement:
    """``A(n, k) = sum of R_I`` over compositions of length ``k``, in the S basis."""
    _check_degree(n, max_degree)
    return r_to_s(SymElement({I: 1 for I in compositions(n) if len(I) == k}, basis="R"))


def adams_sym(f: SymElement, k: int) -> SymElement:
    """``f(A) -> f(kA)``: ``S^I -> sum_{J >= I} prod_p C(k, l(J_p)) S^J``."""
    f = to_s(f)

    def image(I):
        return SymElement(
            {J: prod(integer_binomial(k, len(p)) for p in split_by(J, I)) for J in refinements_of(I)}
        )

    return linear_extension(f, image, basis="S")


def cumulant_K_I(I, method: str = "closed") -> SymElement:
    """Cumulant basis element ``K_I = S^I * E^[l(I)]``.

    ``method="closed"`` uses ``sum_{J >= I} (-1)^(l(J)-l(I)) / l(J, I) S^J``;
    ``method="product"`` performs the internal product.
    """
    I = check_composition(I)
    if method == "closed":
        return SymElement(
            {
                J: Fraction((-1) ** (len(J) - len(I)), prod(len(p) for p in split_by(J, I)))
                for J in refinements_of(I)
            }
        )
    if method == "product":
        n = sum(I)
        if n == 0:
            return S(())
        return internal_product_sym(S(I), eulerian_idempotent(n, len(I), max_degree=n))
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------- several binomial scalars

def _moment_factor(m: int, var: int, nvars: int) -> SymElement:
    """``S_m(t_var A) = sum_{H |= m} C(t_var, l(H)) S^H``."""
    return SymElement(
        {H: MultiPolyT.from_poly(binomial_poly(0, len(H)), var, nvars) for H in compositions(m)}
    )


def _phi_factor(m: int, nvars: int) -> SymElement:
    return phi_n(m, max_degree=m).map_coefficients(lambda c: MultiPolyT.constant(nvars, c))


def _product(factors) -> SymElement:
    out = factors[0]
    for f in factors[1:]:
        out = concat_product(out, f)
    return out


def moment_poly(I) -> SymElement:
    """``S^I(T; A) = S_{i_1}(t_1 A) ... S_{i_r}(t_r A)``, MultiPolyT coefficients."""
    I = check_composition(I)
    r = len(I)
    if r == 0:
        return SymElement({(): MultiPolyT.constant(0)})
    return _product([_moment_factor(m, k, r) for k, m in enumerate(I)])


def partial_cumulant(I, j: int, method: str = "replace") -> SymElement:
    """``d/dt_j`` at ``t_j = 0`` of ``S^I(T; A)`` (``j`` is 1-based).

    ``method="replace"`` substitutes ``phi_{i_j}`` for the ``j``-th factor;
    ``method="derivative"`` differentiates the coefficients.  The result keeps
    all ``l(I)`` variables; ``t_j`` no longer occurs.
    """
    I = check_composition(I)
    r = len(I)
    if not 1 <= j <= r:
        raise ValueError(f"j must lie in 1..{r}, got {j}")
    if method == "replace":
        factors = [
            _phi_factor(m, r) if k == j - 1 else _moment_factor(m, k, r) for k, m in enumerate(I)
        ]
        return _product(factors)
    if method == "derivative":
        return moment_poly(I).map_coefficients(lambda c: c.derivative(j - 1).substitute_zero(j - 1))
    raise ValueError(f"unknown method {method!r}")


def moment_derivative(I, j: int) -> SymElement:
    """Full formal derivative ``d/dt_j S^I(T; A)`` (not evaluated at 0)."""
    I = check_composition(I)
    return moment_poly(I).map_coefficients(lambda c: c.derivative(j - 1))


# ---------------------------------------------------------------- misc

def evaluate_t(f: SymElement, x) -> SymElement:
    """Specialize PolyT coefficients at ``t = x``."""
    return f.map_coefficients(lambda c: c(x) if isinstance(c, PolyT) else c)


def zero(basis: str = "S") -> SymElement:
    return SymElement({}, basis=basis)
