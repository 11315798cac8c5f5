"""Exhaustive (and sampled) identity checks driven by ``wqeuler verify``.

Each suite is a generator of ``(label, ok)`` pairs; :func:`run_suite` stops at
the first failure and reports it as the counterexample.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import ncsf, wqsym, wsym
from .algebra_core import PolyT, binomial_poly, integer_binomial
from .freealg import group_exponentials, power_t
from .goldberg import c_u_qsym, c_u_theorem, goldberg_classical
from .words import (
    all_partitions,
    compositions,
    enumerate_packed,
    pack,
    permutations_of,
    right_action,
    word_str,
)


def _eulerian_orthogonality(max_degree, rng):
    for n in range(1, max_degree + 1):
        E = {k: ncsf.eulerian_idempotent(n, k, max_degree=n) for k in range(1, n + 1)}
        total = ncsf.zero()
        for k in E:
            total = total + E[k]
            for l in E:
                prod_kl = ncsf.internal_product_sym(E[k], E[l])
                want = E[k] if k == l else ncsf.zero()
                yield f"E_{n}^[{k}] * E_{n}^[{l}]", prod_kl == want
        yield f"sum_k E_{n}^[k] = S_{n}", total == ncsf.S(n)


def _eulerian_identities(max_degree, rng):
    for n in range(1, max_degree + 1):
        E = {k: ncsf.eulerian_idempotent(n, k, max_degree=n) for k in range(1, n + 1)}
        for k in range(0, 5):
            rhs = ncsf.zero()
            for i in E:
                rhs = rhs + E[i].scale(k**i)
            yield f"S2E n={n} k={k}", ncsf.s_power(n, k, max_degree=n) == rhs
        for p in range(1, n + 1):
            rhs = ncsf.zero()
            for i in range(p + 1):
                rhs = rhs + ncsf.s_power(n, p - i, max_degree=n).scale(integer_binomial(n + 1, i) * (-1) ** i)
            yield f"A2S n={n} p={p}", ncsf.eulerian_A(n, p, max_degree=n) == rhs
        x = PolyT.t()
        lhs = ncsf.zero()
        rhs = ncsf.zero()
        for k in E:
            lhs = lhs + E[k].map_coefficients(lambda c, k=k: x**k * c)
            rhs = rhs + ncsf.eulerian_A(n, k, max_degree=n).map_coefficients(
                lambda c, k=k: binomial_poly(n - k, n) * c
            )
        yield f"Worpitzky n={n}", lhs == rhs


def _useries_paths(max_degree, rng):
    for n in range(1, max_degree + 1):
        for v in enumerate_packed(n):
            closed = wqsym.U_series(v, "closed")
            yield f"U_{word_str(v)} direct", closed == wqsym.U_series(v, "direct")
            yield f"U_{word_str(v)} refinement word", closed == wqsym.U_series(v, "refinement_word")


def _useries_sampled(max_degree, rng):
    words = enumerate_packed(max_degree)
    for v in rng.sample(words, min(200, len(words))):
        closed = wqsym.U_series(v, "closed")
        yield f"U_{word_str(v)} direct", closed == wqsym.U_series(v, "direct")
        yield f"U_{word_str(v)} refinement word", closed == wqsym.U_series(v, "refinement_word")


def _vseries(max_degree, rng):
    for n in range(1, max_degree + 1):
        for u in enumerate_packed(n):
            yield f"V_{word_str(u)}", wqsym.V_series(u, "closed") == wqsym.V_series(u, "direct")


def _mixed(max_degree, rng):
    for n in range(1, max_degree + 1):
        for u in enumerate_packed(n):
            left = wqsym.internal_product(wqsym.N(u), wqsym.sigma_t_wq(n))
            for v in enumerate_packed(n):
                direct = wqsym.internal_product(left, wqsym.N(v))
                yield f"mixed {word_str(u)},{word_str(v)}", wqsym.mixed_series(u, v) == direct


def _transitions(max_degree, rng):
    for n in range(1, max_degree + 1):
        for v in enumerate_packed(n):
            yield f"K_{word_str(v)} closed", wqsym.k_to_n(v) == wqsym.cumulant_K_u(v)
            back = wqsym.to_k_basis(wqsym.k_to_n(v))
            yield f"n_to_k(k_to_n({word_str(v)}))", back == wqsym.K(v)
            yield f"k_to_n(n_to_k({word_str(v)}))", wqsym.to_n_basis(wqsym.n_to_k(v)) == wqsym.N(v)


def _k_series(max_degree, rng):
    for n in range(1, max_degree + 1):
        for v in enumerate_packed(n):
            yield f"U^K_{word_str(v)}", wqsym.U_series_K(v) == wqsym.U_series_K(v, "basis_change")
        if n <= 4:
            for u in enumerate_packed(n):
                for v in enumerate_packed(n):
                    yield (
                        f"mixed^K {word_str(u)},{word_str(v)}",
                        wqsym.mixed_series_K(u, v) == wqsym.mixed_series_K(u, v, "basis_change"),
                    )


def _goldberg_oracle(max_degree, rng):
    m = 3
    gt = power_t(group_exponentials(m, max_degree))
    for d in range(1, max_degree + 1):
        for w in product(range(1, m + 1), repeat=d):
            u = pack(w)
            c = gt.coefficient(w)
            yield f"c_{word_str(w)} theorem", c == c_u_theorem(u)
            yield f"c_{word_str(w)} qsym", c == c_u_qsym(u)
            yield f"c_{word_str(w)} classical", c.coeff(1) == goldberg_classical(u)


def _moebius(max_degree, rng):
    for n in range(1, max_degree + 1):
        lattice = all_partitions(n)
        phis = {p: wsym.phi_idempotent(p) for p in lattice}
        unit = wsym.WSElement()
        for p in lattice:
            unit = unit + phis[p]
            yield f"mu{p}", wsym.mobius_top(p) == wsym.mobius_top_by_inversion(p)
            for q in lattice:
                want = phis[p] if p == q else wsym.WSElement()
                yield f"phi{p} * phi{q}", wsym.meet_product(phis[p], phis[q]) == want
            if p != wsym.top(n):
                killed = wsym.meet_product(wsym.WSElement({p: 1}), phis[wsym.top(n)])
                yield f"N{p} * phi_top", not killed
        yield f"sum phi = N_top (n={n})", unit == wsym.WSElement({wsym.top(n): 1})
        yield f"image of phi_{n}", wsym.check_phi_image(n)


def _equivariance(max_degree, rng):
    for n in range(1, max_degree + 1):
        perms = permutations_of(n)
        for I in compositions(n):
            SI = wqsym.embed_sym(ncsf.S(*I))
            for u in enumerate_packed(n):
                base = wqsym.internal_product(wqsym.N(u), SI)
                for sigma in perms:
                    lhs = wqsym.internal_product(wqsym.N(right_action(u, sigma)), SI)
                    yield f"u={word_str(u)} I={I} sigma={word_str(sigma)}", lhs == wqsym.act(base, sigma)


def _eigenvectors(max_degree, rng):
    for n in range(1, max_degree + 1):
        for N in (2, 3):
            power = wqsym.embed_sym(ncsf.s_power(n, N, max_degree=n))
            for u in enumerate_packed(n):
                K = wqsym.cumulant_K_u(u)
                yield (
                    f"K_{word_str(u)} * S_n({N}A)",
                    wqsym.internal_product(K, power) == K.scale(Fraction(N ** max(u))),
                )


def _k_product_rule(max_degree, rng):
    for total in range(0, max_degree + 1):
        for p in range(total + 1):
            for u in enumerate_packed(p):
                for v in enumerate_packed(total - p):
                    lhs = wqsym.n_outer_product(wqsym.N(u), wqsym.N(v))
                    lhs_k = wqsym.WQElement(dict(lhs.items()), basis="K")
                    rhs = wqsym.n_outer_product(wqsym.cumulant_K_u(u), wqsym.cumulant_K_u(v))
                    yield f"K_{word_str(u)} K_{word_str(v)}", wqsym.to_n_basis(lhs_k) == rhs


@dataclass(frozen=True)
class Suite:
    run: object
    default_degree: int
    description: str


SUITES = {
    "eulerian-orthogonality": Suite(_eulerian_orthogonality, 5, "E^[k] * E^[l] = delta E^[k], sum = S_n"),
    "eulerian-identities": Suite(_eulerian_identities, 5, "S2E, A2S and Worpitzky expansions"),
    "useries-paths": Suite(_useries_paths, 5, "U_v(t): direct, a0 form and refinement-word form"),
    "useries-sampled": Suite(_useries_sampled, 6, "U_v(t) paths on 200 random v of one degree"),
    "vseries": Suite(_vseries, 5, "V_u(t): closed form against the internal product"),
    "mixed": Suite(_mixed, 4, "N_u * sigma_1^t * N_v: closed form against direct"),
    "transitions": Suite(_transitions, 5, "K/N transition matrices"),
    "k-series": Suite(_k_series, 4, "U_v(t) and mixed series on the K basis"),
    "goldberg-oracle": Suite(_goldberg_oracle, 6, "c_u(t) against (e^a e^b e^c)^t, three letters"),
    "moebius": Suite(_moebius, 5, "orthogonal idempotents of the partition lattice"),
    "equivariance": Suite(_equivariance, 4, "N_{u sigma} * S^I = (N_u * S^I) . sigma"),
    "eigenvectors": Suite(_eigenvectors, 5, "K_u * S_n(NA) = N^max(u) K_u"),
    "k-product-rule": Suite(_k_product_rule, 4, "N_w -> K_w is multiplicative"),
}


@dataclass
class SuiteResult:
    name: str
    max_degree: int
    checked: int
    counterexample: str | None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def run_suite(name: str, max_degree: int | None = None, seed: int = 0) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    suite = SUITES[name]
    degree = suite.default_degree if max_degree is None else max_degree
    rng = random.Random(seed)
    checked = 0
    for label, ok in suite.run(degree, rng):
        checked += 1
        if not ok:
            return SuiteResult(name, degree, checked, label)
    return SuiteResult(name, degree, checked, None)
