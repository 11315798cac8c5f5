"""Packed words, compositions and set partitions.

Everything here is a plain tuple:

* a packed word ``u`` is a tuple of positive ints whose letter set is
  ``{1, ..., max(u)}``; letter ``i`` at position ``j`` puts ``j`` in block ``i``
  of the associated ordered set partition;
* a composition is a tuple of positive ints;
* a set partition of ``[n]`` is a tuple of sorted tuples, blocks ordered by
  their minimum.

Orders.  ``is_finer(v, u)`` means ``v`` is in ``raff(u)``: every block of ``u``
is a union of *consecutive* blocks of ``v``.  ``is_weakly_finer(v, u)`` drops
the consecutiveness.  Compositions are compared through descent sets.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial, prod
from typing import Iterable, Sequence

PackedWord = tuple
Composition = tuple
SetPartition = tuple


# ---------------------------------------------------------------- packing

def pack(word: Iterable[int]) -> PackedWord:
    """Relabel the distinct letters of ``word`` order-preservingly onto 1..r."""
    word = tuple(word)
    rank = {b: i for i, b in enumerate(sorted(set(word)), 1)}
    return tuple(rank[a] for a in word)


def is_packed(word: Sequence[int]) -> bool:
    return set(word) == set(range(1, len(set(word)) + 1)) and all(a >= 1 for a in word)


def check_packed(word: Sequence[int]) -> PackedWord:
    word = tuple(word)
    if not is_packed(word):
        raise ValueError(f"{word_str(word)} is not a packed word")
    return word


def biletter_pack(u: PackedWord, v: PackedWord) -> PackedWord:
    """``pack`` of the biletter word with top row ``u``, bottom row ``v``.

    Biletters are ordered lexicographically, top letter first.
    """
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {word_str(u)} vs {word_str(v)}")
    pairs = list(zip(u, v))
    rank = {p: i for i, p in enumerate(sorted(set(pairs)), 1)}
    return tuple(rank[p] for p in pairs)


def word_str(u: Sequence[int]) -> str:
    if any(a > 9 for a in u):
        return ",".join(map(str, u))
    return "".join(map(str, u))


def parse_word(text: str) -> PackedWord:
    """Digit string (``"21312"``) or comma separated integers."""
    text = text.strip()
    if text in ("", "()", "e"):
        return ()
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    return tuple(int(c) for c in text)


# ---------------------------------------------------------------- statistics

def max_letter(u: PackedWord) -> int:
    return max(u, default=0)


def ev(u: PackedWord) -> Composition:
    """Evaluation: number of occurrences of each letter 1..max(u)."""
    counts = [0] * max_letter(u)
    for a in u:
        counts[a - 1] += 1
    return tuple(counts)


def word_factorial(u: PackedWord) -> Fraction:
    """``u! = prod_i |u|_i!`` as a Fraction (an integer, really)."""
    return Fraction(prod(factorial(c) for c in ev(u)))


def to_set_composition(u: PackedWord) -> tuple:
    """Ordered blocks of positions (1-based)."""
    blocks = [[] for _ in range(max_letter(u))]
    for j, a in enumerate(u, 1):
        blocks[a - 1].append(j)
    return tuple(tuple(b) for b in blocks)


def from_set_composition(blocks: Sequence[Iterable[int]]) -> PackedWord:
    blocks = [tuple(b) for b in blocks]
    n = sum(len(b) for b in blocks)
    word = [0] * n
    for i, b in enumerate(blocks, 1):
        if not b:
            raise ValueError("empty block")
        for j in b:
            if not 1 <= j <= n or word[j - 1]:
                raise ValueError(f"blocks {blocks} do not partition [1..{n}]")
            word[j - 1] = i
    return tuple(word)


# ---------------------------------------------------------------- enumeration

@lru_cache(maxsize=None)
def enumerate_packed(n: int) -> tuple:
    """All packed words of length ``n`` in lexicographic order."""
    out = []
    prefix: list = []

    def extend(seen: frozenset, top: int):
        remaining = n - len(prefix)
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for a in range(1, n + 1):
            new_seen = seen | {a}
            new_top = max(top, a)
            # letters below the maximum that are still missing must fit in what is left
            if new_top - len(new_seen) <= remaining - 1:
                prefix.append(a)
                extend(new_seen, new_top)
                prefix.pop()

    extend(frozenset(), 0)
    return tuple(out)


@lru_cache(maxsize=None)
def words_with_ev(I: Composition) -> tuple:
    """Packed words of evaluation ``I`` (distinct rearrangements of ``1^i1 2^i2 ...``), sorted."""
    counts = list(I)
    n = sum(counts)
    out = []
    prefix: list = []

    def extend():
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for a, c in enumerate(counts, 1):
            if c:
                counts[a - 1] -= 1
                prefix.append(a)
                extend()
                prefix.pop()
                counts[a - 1] += 1

    extend()
    return tuple(out)


def ordered_bell(n: int) -> int:
    return sum(factorial(k) * stirling2(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def permutations_of(n: int) -> list:
    return [tuple(p) for p in permutations(range(1, n + 1))]


def inverse_permutation(sigma: Sequence[int]) -> tuple:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, 1):
        inv[s - 1] = i
    return tuple(inv)


def right_action(u: Sequence[int], sigma: Sequence[int]) -> tuple:
    """``(u.sigma)_i = u_{sigma(i)}``."""
    if len(u) != len(sigma):
        raise ValueError("length mismatch")
    return tuple(u[s - 1] for s in sigma)


# ---------------------------------------------------------------- orders on packed words

def is_weakly_finer(v: PackedWord, u: PackedWord) -> bool:
    """Every block of ``u`` is a union of blocks of ``v``."""
    if len(u) != len(v):
        return False
    image = {}
    for a, b in zip(v, u):
        if image.setdefault(a, b) != b:
            return False
    return True


def is_finer(v: PackedWord, u: PackedWord) -> bool:
    """``v`` in ``raff(u)``: blocks of ``u`` are unions of consecutive blocks of ``v``."""
    if not is_weakly_finer(v, u):
        return False
    image = dict(zip(v, u))
    letters = sorted(image)
    return all(image[a] <= image[b] for a, b in zip(letters, letters[1:]))


def _combine_block_words(blocks, sub_words):
    """Assemble a word from per-block packed words placed consecutively."""
    n = sum(len(b) for b in blocks)
    word = [0] * n
    offset = 0
    for b, w in zip(blocks, sub_words):
        for pos, a in zip(b, w):
            word[pos - 1] = a + offset
        offset += max(w)
    return tuple(word)


def refinements(u: PackedWord) -> list:
    """``raff(u)``: split each block of ``u`` into an ordered set partition."""
    blocks = to_set_composition(u)
    choices = [enumerate_packed(len(b)) for b in blocks]
    return sorted(_combine_block_words(blocks, ws) for ws in product(*choices))


def _set_partitions_of(items: tuple) -> list:
    if not items:
        return [()]
    first, rest = items[0], items[1:]
    out = []
    for part in _set_partitions_of(rest):
        out.append(((first,),) + part)
        for i in range(len(part)):
            out.append(part[:i] + ((first,) + part[i],) + part[i + 1:])
    return out


def weak_refinements(u: PackedWord) -> list:
    """``raffbis(u)``: split blocks arbitrarily and order all pieces freely."""
    blocks = to_set_composition(u)
    out = set()
    for parts in product(*(_set_partitions_of(b) for b in blocks)):
        pieces = [p for part in parts for p in part]
        for order in permutations(pieces):
            out.add(from_set_composition(order))
    return sorted(out)


# ---------------------------------------------------------------- U(v, w) machinery

def refinement_word(u: PackedWord, v: PackedWord) -> PackedWord:
    """``m(u, v)`` for ``v`` weakly finer than ``u``: ``m_i = u_j`` whenever ``v_j = i``."""
    if not is_weakly_finer(v, u):
        raise ValueError(f"{word_str(v)} is not weakly finer than {word_str(u)}")
    m = [0] * max_letter(v)
    for a, b in zip(v, u):
        m[a - 1] = b
    return tuple(m)


def _strict_runs(seq: Sequence[int]) -> list:
    """Split ``seq`` into maximal strictly increasing runs; returns index runs."""
    runs = []
    for i, x in enumerate(seq):
        if runs and seq[runs[-1][-1]] < x:
            runs[-1].append(i)
        else:
            runs.append([i])
    return runs


def u0(v: PackedWord, w: PackedWord) -> PackedWord:
    """Coarsest word of ``U(v, w)``.

    Consecutive blocks of ``w`` are merged while the ``v``-blocks containing
    them increase strictly, i.e. along strictly increasing runs of ``m(v, w)``.
    """
    m = refinement_word(v, w)
    merged = {}
    for new, run in enumerate(_strict_runs(m), 1):
        for i in run:
            merged[i + 1] = new
    return tuple(merged[a] for a in w)


def a0(v: PackedWord, w: PackedWord) -> int:
    return max_letter(u0(v, w))


def interval_U(v: PackedWord, w: PackedWord) -> list:
    """``U(v, w) = [u0(v, w), w]``: coarsenings of ``w`` lying above ``u0``."""
    m = refinement_word(v, w)
    a = len(m)
    # cut i sits between blocks i and i+1 of w; merging is allowed iff m rises there
    free = [i for i in range(1, a) if m[i - 1] < m[i]]
    out = []
    for r in range(len(free) + 1):
        for merge in combinations(free, r):
            merge = set(merge)
            label, relabel = 0, {}
            for b in range(1, a + 1):
                if b == 1 or (b - 1) not in merge:
                    label += 1
                relabel[b] = label
            out.append(tuple(relabel[x] for x in w))
    return sorted(out)


def restrict_subword(w: Sequence[int], positions: Iterable[int]) -> PackedWord:
    """``pack`` of the subword of ``w`` at the given 1-based positions."""
    return pack(w[j - 1] for j in positions)


def positions_of(u: Sequence[int], letter: int) -> list:
    return [j for j, a in enumerate(u, 1) if a == letter]


def block_restrictions(u: PackedWord, w: Sequence[int]) -> list:
    """``[w^(1), ..., w^(max u)]``: ``w`` restricted to each block of ``u``, packed."""
    return [restrict_subword(w, positions_of(u, i)) for i in range(1, max_letter(u) + 1)]


# ---------------------------------------------------------------- run statistics

def runs_I(u: Sequence[int]) -> Composition:
    """Lengths of the maximal weakly increasing factors."""
    if not u:
        return ()
    parts = [1]
    for x, y in zip(u, u[1:]):
        if x <= y:
            parts[-1] += 1
        else:
            parts.append(1)
    return tuple(parts)


def blocks_J(u: Sequence[int]) -> Composition:
    """Lengths of the maximal factors of identical letters."""
    if not u:
        return ()
    parts = [1]
    for x, y in zip(u, u[1:]):
        if x == y:
            parts[-1] += 1
        else:
            parts.append(1)
    return tuple(parts)


def count_descents(u: Sequence[int]) -> int:
    return sum(1 for x, y in zip(u, u[1:]) if x > y)


def count_rises(u: Sequence[int]) -> int:
    return sum(1 for x, y in zip(u, u[1:]) if x < y)


# ---------------------------------------------------------------- compositions

def check_composition(parts: Sequence[int]) -> Composition:
    parts = tuple(parts)
    if any((not isinstance(p, int)) or p < 1 for p in parts):
        raise ValueError(f"{parts} is not a composition")
    return parts


def descent_set(I: Composition) -> frozenset:
    out, s = set(), 0
    for p in I[:-1]:
        s += p
        out.add(s)
    return frozenset(out)


def from_descent_set(n: int, des: Iterable[int]) -> Composition:
    cuts = sorted(des)
    points = [0] + cuts + [n]
    return tuple(b - a for a, b in zip(points, points[1:]))


def is_coarser(J: Composition, I: Composition) -> bool:
    """``J`` coarser than (or equal to) ``I``: ``Des(J)`` contained in ``Des(I)``."""
    return sum(J) == sum(I) and descent_set(J) <= descent_set(I)


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple:
    """All compositions of ``n``, lexicographic."""
    if n == 0:
        return ((),)
    out = []
    for mask in range(2 ** (n - 1)):
        des = [i for i in range(1, n) if mask >> (i - 1) & 1]
        out.append(from_descent_set(n, des))
    return tuple(sorted(out))


def refinements_of(I: Composition) -> list:
    """All ``J`` finer than or equal to ``I``."""
    n = sum(I)
    base = descent_set(I)
    extra = sorted(set(range(1, n)) - base)
    out = []
    for r in range(len(extra) + 1):
        for more in combinations(extra, r):
            out.append(from_descent_set(n, base | set(more)))
    return sorted(out)


def coarsenings_of(I: Composition) -> list:
    """All ``J`` coarser than or equal to ``I``."""
    n = sum(I)
    base = sorted(descent_set(I))
    out = []
    for r in range(len(base) + 1):
        for keep in combinations(base, r):
            out.append(from_descent_set(n, keep))
    return sorted(out)


def join(I: Composition, J: Composition) -> Composition:
    """Join for the refinement order (finer is larger): union of descent sets."""
    if sum(I) != sum(J):
        raise ValueError("weights differ")
    return from_descent_set(sum(I), descent_set(I) | descent_set(J))


def interval_compositions(lower: Composition, upper: Composition) -> list:
    """Compositions ``K`` with ``lower <= K <= upper`` (``lower`` coarsest)."""
    if not is_coarser(lower, upper):
        return []
    n = sum(lower)
    lo, hi = descent_set(lower), descent_set(upper)
    extra = sorted(hi - lo)
    return sorted(
        from_descent_set(n, lo | set(more))
        for r in range(len(extra) + 1)
        for more in combinations(extra, r)
    )


def join_fiber(I: Composition, J: Composition, H: Composition) -> list:
    """``{K finer than I : K v J = H}``, as the boolean interval ``[I v L, H]``.

    ``L`` is the composition with ``Des(L) = Des(H) - Des(J)``; empty when ``H``
    is not above both ``I`` and ``J``.
    """
    n = sum(H)
    if not (is_coarser(J, H) and is_coarser(I, H)):
        return []
    L = from_descent_set(n, descent_set(H) - descent_set(J))
    return interval_compositions(join(I, L), H)


def split_by(J: Composition, I: Composition) -> list:
    """Cut ``J`` (finer than ``I``) into consecutive pieces of weights ``I``."""
    pieces, k = [], 0
    for target in I:
        piece, s = [], 0
        while s < target:
            piece.append(J[k])
            s += J[k]
            k += 1
        if s != target:
            raise ValueError(f"{J} does not refine {I}")
        pieces.append(tuple(piece))
    return pieces


# ---------------------------------------------------------------- set partitions

def canonical_partition(blocks: Iterable[Iterable[int]]) -> SetPartition:
    blocks = [tuple(sorted(b)) for b in blocks if b]
    return tuple(sorted(blocks, key=lambda b: b[0]))


def underlying_partition(u: PackedWord) -> SetPartition:
    return canonical_partition(to_set_composition(u))


def meet(pi: SetPartition, tau: SetPartition) -> SetPartition:
    """Coarsest partition finer than both."""
    return canonical_partition(
        set(a) & set(b) for a in pi for b in tau if set(a) & set(b)
    )


def is_coarser_partition(pi: SetPartition, tau: SetPartition) -> bool:
    """Every block of ``pi`` is a union of blocks of ``tau``."""
    return all(any(set(b) <= set(a) for a in pi) for b in tau)


@lru_cache(maxsize=None)
def all_partitions(n: int) -> tuple:
    """All set partitions of ``[n]``, canonical, sorted."""
    return tuple(sorted(canonical_partition(p) for p in _set_partitions_of(tuple(range(1, n + 1)))))


def lambda_of(pi: SetPartition) -> tuple:
    """Integer partition of block sizes, weakly decreasing."""
    return tuple(sorted((len(b) for b in pi), reverse=True))


def bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]
