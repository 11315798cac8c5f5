from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from wqeuler.algebra_core import binomial_poly
from wqeuler.words import (
    a0,
    all_partitions,
    bell,
    biletter_pack,
    block_restrictions,
    blocks_J,
    check_packed,
    compositions,
    descent_set,
    enumerate_packed,
    ev,
    from_set_composition,
    interval_U,
    inverse_permutation,
    is_coarser,
    is_coarser_partition,
    is_finer,
    is_packed,
    is_weakly_finer,
    join,
    join_fiber,
    lambda_of,
    max_letter,
    meet,
    ordered_bell,
    pack,
    parse_word,
    permutations_of,
    refinement_word,
    refinements,
    refinements_of,
    restrict_subword,
    right_action,
    runs_I,
    stirling2,
    to_set_composition,
    u0,
    underlying_partition,
    weak_refinements,
    word_factorial,
    word_str,
    words_with_ev,
)

W = parse_word
words = st.lists(st.integers(1, 6), max_size=8)


# ---------------------------------------------------------------- packing

@pytest.mark.parametrize("w,expected", [("14143", "13132"), ("13132", "13132"), ("353241", "353241")])
def test_pack_examples(w, expected):
    assert pack(W(w)) == W(expected)


@given(words)
def test_pack_idempotent(w):
    p = pack(w)
    assert pack(p) == p
    assert is_packed(p)


def test_check_packed_rejects_gaps():
    with pytest.raises(ValueError):
        check_packed((1, 3))
    assert check_packed(()) == ()


def test_parse_and_format():
    assert W("21312") == (2, 1, 3, 1, 2)
    assert W("1,10,2") == (1, 10, 2)
    assert word_str((1, 10, 2)) == "1,10,2"
    assert word_str((2, 1)) == "21"


@pytest.mark.parametrize(
    "u,v,expected",
    [("121131", "221311", "241351"), ("1111", "2131", "2131"), ("2131", "1111", "2131")],
)
def test_biletter_pack_examples(u, v, expected):
    assert biletter_pack(W(u), W(v)) == W(expected)


def test_biletter_pack_length_mismatch():
    with pytest.raises(ValueError):
        biletter_pack((1, 1), (1,))


def test_biletter_pack_refines_both():
    for n in range(1, 5):
        for u in enumerate_packed(n):
            for v in enumerate_packed(n):
                w = biletter_pack(u, v)
                assert is_finer(w, u)
                assert is_weakly_finer(w, v)


def test_biletter_pack_equivariance():
    for n in range(1, 5):
        for tau in permutations_of(n):
            inv = inverse_permutation(tau)
            for u in enumerate_packed(n):
                for v in enumerate_packed(n):
                    lhs = biletter_pack(right_action(u, tau), v)
                    rhs = right_action(biletter_pack(u, right_action(v, inv)), tau)
                    assert lhs == rhs


# ---------------------------------------------------------------- statistics

def test_ev_max_factorial():
    assert ev(W("13132")) == (2, 1, 2)
    assert max_letter(W("241351")) == 5
    # u! runs over letter multiplicities; the 2!1!2!1! of the Goldberg display is over J(u)
    assert word_factorial(W("113223")) == 8
    assert prod(factorial(j) for j in blocks_J(W("113223"))) == 4
    assert max_letter(()) == 0


def test_set_composition_example():
    assert to_set_composition(W("313144132")) == ((2, 4, 7), (9,), (1, 3, 8), (5, 6))
    assert to_set_composition((1, 1, 1)) == ((1, 2, 3),)


def test_set_composition_roundtrip():
    for n in range(6):
        for u in enumerate_packed(n):
            assert from_set_composition(to_set_composition(u)) == u


def test_from_set_composition_rejects_non_partitions():
    with pytest.raises(ValueError):
        from_set_composition([(1,), (1, 2)])


# ---------------------------------------------------------------- enumeration

def test_enumerate_small():
    assert enumerate_packed(0) == ((),)
    assert enumerate_packed(1) == ((1,),)
    assert enumerate_packed(2) == ((1, 1), (1, 2), (2, 1))
    assert len(enumerate_packed(4)) == 75


def test_enumerate_counts_and_order():
    for n in range(7):
        ws = enumerate_packed(n)
        assert len(ws) == ordered_bell(n) == sum(factorial(k) * stirling2(n, k) for k in range(n + 1))
        assert list(ws) == sorted(ws)
        assert len(set(ws)) == len(ws)


def test_enumerate_matches_brute_force():
    for n in range(5):
        brute = sorted(w for w in product(range(1, n + 1), repeat=n) if is_packed(w))
        assert list(enumerate_packed(n)) == brute


def test_words_with_ev():
    assert set(words_with_ev((2, 1))) == {(1, 1, 2), (1, 2, 1), (2, 1, 1)}
    for n in range(1, 5):
        for I in compositions(n):
            assert set(words_with_ev(I)) == {u for u in enumerate_packed(n) if ev(u) == I}


# ---------------------------------------------------------------- refinement orders

def test_raff_example():
    assert set(refinements(W("122"))) == {W("122"), W("123"), W("132")}
    # the two pieces of a split block may come in either order, as 132 above shows
    assert set(refinements((1, 1))) == {(1, 1), (1, 2), (2, 1)}


def test_raffbis_example():
    expected = {W(x) for x in ["122", "211", "123", "132", "213", "231", "312", "321"]}
    assert set(weak_refinements(W("122"))) == expected


def test_orders_match_predicates():
    for n in range(1, 5):
        for u in enumerate_packed(n):
            raff = set(refinements(u))
            raffbis = set(weak_refinements(u))
            for v in enumerate_packed(n):
                assert (v in raff) == is_finer(v, u)
                assert (v in raffbis) == is_weakly_finer(v, u)
            assert raff <= raffbis


def test_refinement_definition_from_letters():
    # v finer than u iff (v_i > v_j implies u_i >= u_j) and (u_i > u_j implies v_i > v_j)
    for n in range(1, 5):
        for u, v in product(enumerate_packed(n), repeat=2):
            idx = range(n)
            ok = all(
                (not v[i] > v[j] or u[i] >= u[j]) and (not u[i] > u[j] or v[i] > v[j])
                for i in idx
                for j in idx
            )
            assert ok == is_finer(v, u)


def test_right_action_examples():
    tau = W("451623")
    assert right_action(W("111122"), tau) == W("121211")
    assert right_action(W("212211"), inverse_permutation(tau)) == W("211212")
    assert right_action(W("2131"), (1, 2, 3, 4)) == W("2131")


# ---------------------------------------------------------------- U(v, w)

@pytest.mark.parametrize(
    "v,w,u_zero,a_zero,interval",
    [
        ("13211", "15342", "13232", 3, ["13232", "14232", "14342", "15342"]),
        ("13211", "24315", "22213", 3, ["22213", "23214", "23314", "24315"]),
        ("13211", "13214", "11112", 2, ["11112", "12113", "12213", "13214"]),
    ],
)
def test_u0_and_interval_examples(v, w, u_zero, a_zero, interval):
    assert u0(W(v), W(w)) == W(u_zero)
    assert a0(W(v), W(w)) == a_zero
    assert interval_U(W(v), W(w)) == sorted(W(x) for x in interval)


def test_u0_precondition():
    with pytest.raises(ValueError):
        u0((1, 2), (1, 1))


def test_interval_U_is_fibre_of_biletter_pack():
    for n in range(1, 6):
        words_n = enumerate_packed(n)
        for v in words_n:
            fibres: dict = {}
            for u in words_n:
                fibres.setdefault(biletter_pack(u, v), []).append(u)
            assert set(fibres) == set(weak_refinements(v))
            for w, us in fibres.items():
                assert interval_U(v, w) == sorted(us)


@pytest.mark.parametrize("u,v,m", [("12113", "41223", "2131"), ("111123", "353241", "31121")])
def test_refinement_word_examples(u, v, m):
    assert refinement_word(W(u), W(v)) == W(m)


def test_refinement_word_of_self():
    for u in enumerate_packed(4):
        assert refinement_word(u, u) == tuple(range(1, max_letter(u) + 1))


def test_a0_statistic_identity():
    for n in range(1, 6):
        for v in enumerate_packed(n):
            for w in weak_refinements(v):
                m = refinement_word(v, w)
                assert max_letter(w) - a0(v, w) == len(blocks_J(m)) - len(runs_I(m))


def test_lattice_sum_gives_closed_binomial():
    # sum over U(v, w) of C(t, max u) collapses to C(t + a - a0, a)
    from wqeuler.algebra_core import PolyT

    for v in enumerate_packed(4):
        for w in weak_refinements(v):
            total = PolyT()
            for u in interval_U(v, w):
                total = total + binomial_poly(0, max_letter(u))
            a = max_letter(w)
            assert total == binomial_poly(a - a0(v, w), a)


@pytest.mark.parametrize("u,I,J", [("31121", (1, 3, 1), (1, 2, 1, 1)), ("113223", (3, 3), (2, 1, 2, 1)), ("1111", (4,), (4,))])
def test_runs_and_blocks(u, I, J):
    assert runs_I(W(u)) == I
    assert blocks_J(W(u)) == J


def test_blocks_refine_runs():
    for n in range(1, 6):
        for u in enumerate_packed(n):
            assert is_coarser(runs_I(u), blocks_J(u))


def test_restrictions():
    assert restrict_subword(W("2133"), [1, 2]) == W("21")
    assert restrict_subword(W("2133"), [3, 4]) == W("11")
    assert block_restrictions(W("1122"), W("2133")) == [W("21"), W("11")]
    assert restrict_subword(W("2133"), [1, 2, 3, 4]) == W("2133")


# ---------------------------------------------------------------- compositions

def test_compositions_count():
    for n in range(1, 8):
        assert len(compositions(n)) == 2 ** (n - 1)


def test_join_example():
    assert join((3, 3), (2, 1, 2, 1)) == (2, 1, 2, 1)
    assert descent_set((2, 1, 2, 1)) == {2, 3, 5}
    assert set(refinements_of((2,))) == {(2,), (1, 1)}


def test_join_fiber_brute_force():
    for n in range(1, 7):
        comps = compositions(n)
        for I in comps:
            for J in comps:
                for H in comps:
                    brute = sorted(K for K in comps if is_coarser(I, K) and join(K, J) == H)
                    assert join_fiber(I, J, H) == brute


# ---------------------------------------------------------------- set partitions

def test_underlying_partition_example():
    assert underlying_partition(W("121")) == underlying_partition(W("212")) == ((1, 3), (2,))


def test_meet_examples():
    assert meet(((1, 2, 3),), ((1, 2), (3,))) == ((1, 2), (3,))
    assert meet(((1, 2), (3,)), ((1,), (2, 3))) == ((1,), (2,), (3,))


def test_bell_numbers():
    assert len(all_partitions(4)) == 15
    for n in range(7):
        assert len(all_partitions(n)) == bell(n)


def test_meet_lattice_laws():
    for n in range(1, 6):
        parts = all_partitions(n)
        for p in parts:
            assert meet(p, p) == p
            for q in parts:
                m = meet(p, q)
                assert m == meet(q, p)
                assert is_coarser_partition(p, m) and is_coarser_partition(q, m)
        if n <= 4:
            for p, q, r in product(parts, repeat=3):
                assert meet(meet(p, q), r) == meet(p, meet(q, r))


def test_lambda_of():
    assert lambda_of(((1, 3), (2,), (4, 5, 6))) == (3, 2, 1)


def test_stirling_and_ordered_bell():
    assert stirling2(4, 2) == 7
    assert ordered_bell(3) == 13
    assert Fraction(ordered_bell(5)) == 541
