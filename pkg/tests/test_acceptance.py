"""Acceptance criteria, one test per criterion.

Every check is exact (tolerance 0).  Each test prints a single
``PASS``/``FAIL`` line; the lines are also repeated in the pytest terminal
summary by ``conftest.py``.  Run this file directly to see only those lines:

    python tests/test_acceptance.py
"""
from __future__ import annotations

import time
from fractions import Fraction
from itertools import product

import pytest

from wqeuler import ncsf, wqsym
from wqeuler.algebra_core import MultiPolyT, binomial_poly
from wqeuler.checks import run_suite
from wqeuler.freealg import group_exponentials, log_series, power_t
from wqeuler.goldberg import c_u_qsym, c_u_theorem, goldberg_classical
from wqeuler.words import (
    enumerate_packed,
    inverse_permutation,
    pack,
    parse_word,
    right_action,
    underlying_partition,
)

W = parse_word
C = binomial_poly
RESULTS: list = []


def report(number: int, title: str, check) -> None:
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title} ({elapsed:.1f} s){'' if ok else ' -- ' + detail}"
    RESULTS.append(line)
    print(line)
    assert ok, detail


def suites(*names_and_degrees):
    for name, degree in names_and_degrees:
        r = run_suite(name, degree)
        if not r.ok:
            return False, f"{name} fails at {r.counterexample}"
    return True, ""


# ---------------------------------------------------------------- 1, 2: Eulerian algebra

def check_1():
    return suites(("eulerian-orthogonality", 5))


def check_2():
    return suites(("eulerian-identities", 5))


# ---------------------------------------------------------------- 3, 4, 5, 6: series

U1122_CLASSES = {
    (2, 4): "1324 1342 3124 3142",
    (1, 4): "1234 1243 1423 1432 2134 2143 2314 2341 2413 2431 3214 3241 4123 4132 4213 4231",
    (1, 3): "1123 1132 1233 1322 2133 2213 2231 3122",
    (1, 2): "1122",
    (0, 4): "3412 3421 4312 4321",
    (0, 3): "2311 3211 3312 3321",
    (0, 2): "2211",
}


def check_3():
    U112 = wqsym.WQElement(
        {
            W("112"): C(1, 2),
            W("221"): C(0, 2),
            **{W(w): C(1, 3) for w in ("123", "132", "213", "312")},
            **{W(w): C(0, 3) for w in ("231", "321")},
        }
    )
    if wqsym.U_series(W("112")) != U112:
        return False, "U_112(t) differs from the 8-term display"
    U = wqsym.U_series(W("1122"))
    if len(U) != 38:
        return False, f"U_1122(t) has {len(U)} terms"
    for (s, k), ws in U1122_CLASSES.items():
        for w in ws.split():
            if U[W(w)] != C(s, k):
                return False, f"coefficient of N_{w} in U_1122(t)"
    return True, ""


def check_4():
    return suites(("useries-paths", 5))


def check_5():
    ok, detail = suites(("vseries", 5))
    if not ok:
        return ok, detail
    V = sorted(wqsym.V_set(W("1122"), W("2133")))
    if V != sorted(W(w) for w in ("2111", "2122", "2133", "3122", "3211")):
        return False, f"V(1122, 2133) = {V}"
    if C(0, 2) * 2 + C(0, 3) * 3 != C(0, 2) * C(0, 1):
        return False, "2C(t,2) + 3C(t,3) != C(t,2)C(t,1)"
    if wqsym.V_series(W("1122"))[W("2133")] != C(0, 2) * C(0, 1):
        return False, "coefficient of N_2133 in V_1122(t)"
    return True, ""


def check_6():
    ok, detail = suites(("mixed", 4))
    if not ok:
        return ok, detail
    M = wqsym.mixed_series(W("11122"), W("12234"))
    expected = {
        "23145": C(1, 3) * C(1, 2),
        "21354": C(1, 3) * C(0, 2),
        "31245": C(0, 3) * C(1, 2),
        "31254": C(0, 3) * C(0, 2),
        "12243": C(1, 2) * C(0, 2),
    }
    for w, c in expected.items():
        if M[W(w)] != c:
            return False, f"coefficient of N_{w}"
    return True, ""


# ---------------------------------------------------------------- 7, 8: Goldberg

def check_7():
    m, D = 3, 6
    g = group_exponentials(m, D)
    gt = power_t(g)
    H = log_series(g)
    count = 0
    for d in range(1, D + 1):
        for w in product(range(1, m + 1), repeat=d):
            u = pack(w)
            c = gt.coefficient(w)
            count += 1
            if c != c_u_qsym(u) or c != c_u_theorem(u):
                return False, f"c_{u} at word {w}"
            if c(1) != g.coefficient(w):
                return False, f"c_u(1) at word {w}"
            if c.coeff(1) != H.coefficient(w) or goldberg_classical(u) != H.coefficient(w):
                return False, f"[t]c_u(t) at word {w}"
    if count != 1092:
        return False, f"{count} words checked"
    return True, ""


def check_8():
    q, h = Fraction(1, 4), Fraction(1, 2)
    c113223 = C(2, 4) * q + C(2, 5) * h + C(2, 5) * h + C(2, 6)
    c311211 = C(1, 4) * q + C(1, 5) * h + C(1, 5) * h + C(1, 6)
    for u, want in (("113223", c113223), ("311211", c311211)):
        if c_u_theorem(W(u)) != want or c_u_qsym(W(u)) != want:
            return False, f"c_{u}(t)"
    if wqsym.U_series_K(W("111123"))[W("356241")] != c311211:
        return False, "coefficient of K_356241 in U_111123(t)"
    return True, ""


# ---------------------------------------------------------------- 9: transitions

def check_9():
    return suites(("transitions", 5), ("k-series", 4))


# ---------------------------------------------------------------- 10: Moebius algebra

def check_10():
    return suites(("moebius", 5))


# ---------------------------------------------------------------- 11: several scalars

def _mono(nvars, *powers):
    return MultiPolyT(nvars, {tuple(powers): 1})


def _c2(var, nvars):
    return MultiPolyT.from_poly(C(0, 2), var - 1, nvars)


def check_11():
    h = Fraction(1, 2)
    sym = ncsf.SymElement
    # Sym displays
    S221 = sym(
        {
            (2, 2, 1): _mono(3, 1, 1, 1),
            (2, 1, 1, 1): _mono(3, 1, 0, 1) * _c2(2, 3),
            (1, 1, 2, 1): _c2(1, 3) * _mono(3, 0, 1, 1),
            (1, 1, 1, 1, 1): _c2(1, 3) * _c2(2, 3) * _mono(3, 0, 0, 1),
        }
    )
    if ncsf.moment_poly((2, 2, 1)) != S221:
        return False, "S^221(T;A)"
    head = sym({(2,): _mono(4, 1, 0, 0, 0), (1, 1): _c2(1, 4)})
    if ncsf.moment_poly((2, 1, 1, 1)) != ncsf.concat_product(head, sym({(1, 1, 1): _mono(4, 0, 1, 1, 1)})):
        return False, "S^2111(T;A)"
    half3 = MultiPolyT.constant(3, h)
    K221 = sym(
        {
            (2, 2, 1): _mono(3, 1, 0, 1),
            (2, 1, 1, 1): -(_mono(3, 1, 0, 1) * half3),
            (1, 1, 2, 1): _c2(1, 3) * _mono(3, 0, 0, 1),
            (1, 1, 1, 1, 1): -(_c2(1, 3) * _mono(3, 0, 0, 1) * half3),
        }
    )
    if ncsf.partial_cumulant((2, 2, 1), 2) != K221:
        return False, "K_(221);2"
    K2111 = ncsf.concat_product(head, sym({(1, 1, 1): _mono(4, 0, 1, 0, 1)}))
    if ncsf.partial_cumulant((2, 1, 1, 1), 3) != K2111:
        return False, "K_(2111);3"
    renamed = K2111.map_coefficients(lambda c: c.rename({0: 0, 1: 1, 3: 2}, 3))
    if K221 + renamed != ncsf.moment_derivative((2, 2, 1), 2):
        return False, "derivative identity"
    # WQSym displays, compared as whole elements
    displays = [
        (
            "N_21312(T)",
            wqsym.moment_poly_wq(W("21312")),
            {
                "21312": _mono(3, 1, 1, 1),
                "21413": _mono(3, 1, 0, 1) * _c2(2, 3),
                "31423": _c2(1, 3) * _mono(3, 0, 1, 1),
                "31524": _c2(1, 3) * _c2(2, 3) * _mono(3, 0, 0, 1),
            },
        ),
        (
            "N_21413(T)",
            wqsym.moment_poly_wq(W("21413")),
            {"21413": _mono(4, 1, 1, 1, 1), "31524": _c2(1, 4) * _mono(4, 0, 1, 1, 1)},
        ),
        (
            "K_21312;2",
            wqsym.partial_cumulant_wq(W("21312"), 2),
            {
                "21312": _mono(3, 1, 0, 1),
                "21413": -(_mono(3, 1, 0, 1) * half3),
                "31423": _c2(1, 3) * _mono(3, 0, 0, 1),
                "31524": -(_c2(1, 3) * _mono(3, 0, 0, 1) * half3),
            },
        ),
        (
            "K_21413;3",
            wqsym.partial_cumulant_wq(W("21413"), 3),
            {"21413": _mono(4, 1, 1, 0, 1), "31524": _c2(1, 4) * _mono(4, 0, 1, 0, 1)},
        ),
    ]
    problems = []
    for name, got, shown in displays:
        expected = wqsym.WQElement({W(w): c for w, c in shown.items()})
        if got != expected:
            extra = sorted("".join(map(str, w)) for w in set(got) - set(expected))
            problems.append(f"{name} has {len(got)} terms, the display {len(expected)} (extra {' '.join(extra)})")
    return not problems, "; ".join(problems)


# ---------------------------------------------------------------- 12: equivariance

def check_12():
    ok, detail = suites(("equivariance", 4))
    if not ok:
        return ok, detail
    tau = W("451623")
    u, v = W("111122"), W("212211")
    if right_action(u, tau) != W("121211") or right_action(v, inverse_permutation(tau)) != W("211212"):
        return False, "right action in the worked instance"
    if wqsym.internal_product(wqsym.N(u), wqsym.N(W("211212"))) != wqsym.N(W("211234")):
        return False, "pack(111122 over 211212)"
    lhs = wqsym.internal_product(wqsym.N(right_action(u, tau)), wqsym.N(v))
    rhs = wqsym.act(wqsym.internal_product(wqsym.N(u), wqsym.N(right_action(v, inverse_permutation(tau)))), tau)
    if not lhs == rhs == wqsym.N(W("232411")):
        return False, "worked instance result"
    return True, ""


# ---------------------------------------------------------------- 13: vanishing of mixed cumulants

def check_13():
    # X_i for i in `left` drawn from one sequence, the rest from an independent one;
    # a block of the underlying partition contributes a_p b_q (p, q positions on each side)
    a = [Fraction(1), Fraction(2), Fraction(-3), Fraction(5, 2), Fraction(7)]
    b = [Fraction(1), Fraction(-1, 3), Fraction(4), Fraction(1, 5), Fraction(-6)]
    mixed_seen = 0
    for n in range(1, 5):
        for mask in product((False, True), repeat=n):
            left = {i + 1 for i in range(n) if mask[i]}
            table = {}
            for u in enumerate_packed(n):
                value = Fraction(1)
                for block in underlying_partition(u):
                    p = len(left.intersection(block))
                    value *= a[p] * b[len(block) - p]
                table[u] = value
            for u, k in wqsym.cumulants_from_moments(table, n).items():
                blocks = map(set, underlying_partition(u))
                if any(block & left and not block <= left for block in blocks):
                    mixed_seen += 1
                    if k != 0:
                        return False, f"K_{u} = {k} with positions {sorted(left)} independent"
    return mixed_seen > 0, "no mixing word was checked"


CRITERIA = [
    (1, "Eulerian idempotents are orthogonal and sum to S_n, n <= 5", check_1),
    (2, "S2E, A2S and Worpitzky identities, n <= 5", check_2),
    (3, "U_112(t) display and the 38 terms of U_1122(t)", check_3),
    (4, "three computations of U_v(t) agree, |v| <= 5", check_4),
    (5, "V_u(t) closed form, V(1122,2133) and 2C(t,2)+3C(t,3)", check_5),
    (6, "mixed series closed form, |u| = |v| <= 4, and the worked example", check_6),
    (7, "Goldberg oracle over 3 letters up to length 6", check_7),
    (8, "c_113223(t), c_311211(t) and the K_356241 coefficient", check_8),
    (9, "K/N transitions and the K-basis series", check_9),
    (10, "Moebius algebra idempotents and the image of phi_n", check_10),
    (11, "several-scalar displays (Sym and WQSym)", check_11),
    (12, "equivariance, n <= 4, and the worked instance", check_12),
    (13, "mixed cumulants vanish on an independent moment table", check_13),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, check):
    report(number, title, check)


if __name__ == "__main__":
    for number, title, check in CRITERIA:
        try:
            report(number, title, check)
        except AssertionError:
            pass
