"""The Moebius algebra WSym*_n of the partition lattice.

Basis ``N_pi`` indexed by set partitions of ``[n]``, product
``N_pi * N_tau = N_{pi meet tau}``.  The orthogonal idempotents ``phi_pi`` are
obtained by inverting ``N_pi' = sum_{pi finer than or equal to pi'} phi_pi``
over the whole lattice.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra_core import LinComb, bilinear, linear_extension
from .words import (
    all_partitions,
    canonical_partition,
    is_coarser_partition,
    meet,
    underlying_partition,
)

DEFAULT_MAX_DEGREE = 6
LARGE_MAX_DEGREE = 7


class WSElement(LinComb):
    """Element of WSym*; keys are canonical set partitions."""

    __slots__ = ()

    def __init__(self, terms=(), basis: str = "N"):
        super().__init__(terms, basis=basis)

    @property
    def degree(self):
        degrees = {sum(len(b) for b in p) for p in self}
        if len(degrees) > 1:
            raise ValueError("element is not homogeneous")
        return degrees.pop() if degrees else None


def NP(*blocks, coeff=1) -> WSElement:
    """``N_pi`` from its blocks: ``NP((1, 3), (2,))``."""
    return WSElement({canonical_partition(blocks): coeff})


def top(n: int) -> tuple:
    """The one-block partition (the *-unit)."""
    return (tuple(range(1, n + 1)),)


def singletons(n: int) -> tuple:
    return tuple((i,) for i in range(1, n + 1))


def project(F) -> WSElement:
    """``N_u -> N_pi`` with ``pi`` the partition underlying ``u``."""
    if F and F.basis != "N":
        raise ValueError("project expects the N basis")
    acc: dict = {}
    for u, c in F.items():
        pi = underlying_partition(u)
        acc[pi] = acc[pi] + c if pi in acc else c
    return WSElement(acc)


def meet_product(f: WSElement, g: WSElement) -> WSElement:
    return bilinear(f, g, meet, basis="N")


def _check_cap(n: int, allow_large: bool):
    cap = LARGE_MAX_DEGREE if allow_large else DEFAULT_MAX_DEGREE
    if n > cap:
        raise ValueError(f"partition lattice of [{n}] is above the cap {cap}")


@lru_cache(maxsize=None)
def _idempotents(n: int) -> dict:
    """``{pi: {pi': coefficient of N_pi' in phi_pi}}`` for the whole lattice.

    The zeta matrix is unitriangular once partitions are sorted from finest
    to coarsest, so it is inverted by forward substitution:
    ``phi_pi = N_pi - sum_{pi'' strictly finer} phi_pi''``.
    """
    lattice = sorted(all_partitions(n), key=len, reverse=True)
    phi: dict = {}
    for pi in lattice:
        row = {pi: Fraction(1)}
        for other in lattice:
            if len(other) <= len(pi):
                break
            if is_coarser_partition(pi, other):
                for key, c in phi[other].items():
                    row[key] = row.get(key, 0) - c
        phi[pi] = {k: c for k, c in row.items() if c}
    return phi


def phi_idempotent(pi, *, allow_large: bool = False) -> WSElement:
    pi = canonical_partition(pi)
    n = sum(len(b) for b in pi)
    _check_cap(n, allow_large)
    return WSElement(_idempotents(n)[pi])


def mobius_top(pi) -> Fraction:
    """``mu(pi, 1^) = (-1)^(l-1) (l-1)!`` with ``l`` the number of blocks."""
    l = len(canonical_partition(pi))
    return Fraction((-1) ** (l - 1) * factorial(l - 1))


def mobius_top_by_inversion(pi) -> Fraction:
    """Same value read off the inverted zeta matrix."""
    pi = canonical_partition(pi)
    n = sum(len(b) for b in pi)
    return phi_idempotent(top(n))[pi]


def check_phi_image(n: int) -> bool:
    """Whether Solomon's idempotent phi_n maps onto ``phi_{1^}`` in WSym*."""
    from .ncsf import phi_n
    from .wqsym import embed_sym

    return project(embed_sym(phi_n(n, max_degree=n))) == phi_idempotent(top(n))


def n_to_phi(pi) -> WSElement:
    """``N_pi' = sum_{pi finer than or equal to pi'} phi_pi`` in the phi basis."""
    pi = canonical_partition(pi)
    n = sum(len(b) for b in pi)
    return WSElement({p: 1 for p in all_partitions(n) if is_coarser_partition(pi, p)}, basis="phi")


def phi_to_n(F: WSElement) -> WSElement:
    if F and F.basis != "phi":
        raise ValueError("expected the phi basis")
    return linear_extension(F, phi_idempotent, basis="N")


def evaluate_functional(element: WSElement, moments) -> Fraction:
    """Linear extension of ``N_pi -> moments[pi]``."""
    total = Fraction(0)
    for pi, c in element.items():
        if pi not in moments:
            raise KeyError(f"no moment given for the partition {pi}")
        total += c * moments[pi]
    return total
