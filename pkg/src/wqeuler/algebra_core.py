"""Exact coefficient arithmetic.

Scalars are :class:`fractions.Fraction` (always reduced, denominator > 0).
On top of that this module provides

* :class:`PolyT`      -- dense univariate polynomials in ``t``,
* :class:`MultiPolyT` -- sparse polynomials in ``t_1, ..., t_r``,
* :class:`LinComb`    -- sparse linear combinations ``key -> coefficient``.

All three are immutable once built.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable, Iterator, Mapping

Rational = Fraction


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot make a rational out of {x!r}")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class PolyT:
    """Polynomial in ``t`` with rational coefficients, ascending storage."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(as_rational(c) for c in coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list) -> "PolyT":
        """Trusted constructor: ``coeffs`` is a list of Fractions."""
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        out = object.__new__(cls)
        out.coeffs = tuple(coeffs)
        out._hash = None
        return out

    # constructors
    @classmethod
    def constant(cls, c) -> "PolyT":
        return cls((c,))

    @classmethod
    def t(cls) -> "PolyT":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> "PolyT":
        return cls([0] * k + [c])

    # basic queries
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PolyT):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((Fraction(other),))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("PolyT", self.coeffs))
        return self._hash

    # ring operations
    @staticmethod
    def _lift(other):
        if isinstance(other, PolyT):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return PolyT((other,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyT._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyT._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 1:
                return self
            if other == 0:
                return PolyT()
            return PolyT._raw([c * other for c in self.coeffs])
        if not isinstance(other, PolyT):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return PolyT()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyT._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / as_rational(other))

    def __pow__(self, k: int):
        out = PolyT((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        return eval_poly(self, x)

    def __repr__(self):
        return f"PolyT({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = format_rational(a)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if a == 1 else f"{format_rational(a)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


class MultiPolyT:
    """Sparse polynomial in ``r`` commuting variables ``t_1..t_r``.

    ``terms`` maps exponent tuples (length ``nvars``) to nonzero Fractions.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, Fraction] = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have length {nvars}")
            acc[exp] = acc.get(exp, Fraction(0)) + as_rational(c)
        self.terms = {e: c for e, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def constant(cls, nvars: int, c=1) -> "MultiPolyT":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def from_poly(cls, p: PolyT, var: int, nvars: int) -> "MultiPolyT":
        """Embed a univariate polynomial as a polynomial in ``t_{var+1}`` (0-based ``var``)."""
        terms = {}
        for k, c in enumerate(p.coeffs):
            exp = [0] * nvars
            exp[var] = k
            terms[tuple(exp)] = c
        return cls(nvars, terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPolyT):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPolyT.constant(self.nvars, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def _lift(self, other):
        if isinstance(other, MultiPolyT):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPolyT.constant(self.nvars, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return MultiPolyT(self.nvars, list(self.terms.items()) + list(o.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return MultiPolyT(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPolyT(self.nvars, {e: c * other for e, c in self.terms.items()})
        o = self._lift(other)
        if o is None:
            return NotImplemented
        acc: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return MultiPolyT(self.nvars, acc)

    __rmul__ = __mul__

    def derivative(self, var: int) -> "MultiPolyT":
        """Formal partial derivative in the 0-based variable ``var``."""
        out = {}
        for e, c in self.terms.items():
            if e[var]:
                f = list(e)
                f[var] -= 1
                out[tuple(f)] = c * e[var]
        return MultiPolyT(self.nvars, out)

    def substitute_zero(self, var: int) -> "MultiPolyT":
        return MultiPolyT(self.nvars, {e: c for e, c in self.terms.items() if e[var] == 0})

    def rename(self, mapping: Mapping[int, int], nvars: int) -> "MultiPolyT":
        """Move variable ``i`` to ``mapping[i]`` in a ring with ``nvars`` variables.

        Variables absent from ``mapping`` must not occur.
        """
        out = []
        for e, c in self.terms.items():
            f = [0] * nvars
            for i, k in enumerate(e):
                if k:
                    if i not in mapping:
                        raise ValueError(f"variable t{i + 1} occurs but is not mapped")
                    f[mapping[i]] += k
            out.append((tuple(f), c))
        return MultiPolyT(nvars, out)

    def __repr__(self):
        return f"MultiPolyT({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"t{i + 1}" if k == 1 else f"t{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                chunks.append(format_rational(c))
            elif c == 1:
                chunks.append(mono)
            elif c == -1:
                chunks.append("-" + mono)
            else:
                chunks.append(f"{format_rational(c)}*{mono}")
        return " + ".join(chunks).replace("+ -", "- ")


@lru_cache(maxsize=None)
def binomial_poly(s: int, k: int) -> PolyT:
    """``C(t+s, k) = (t+s)(t+s-1)...(t+s-k+1)/k!`` as a polynomial in ``t``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = PolyT((1,))
    for i in range(k):
        p = p * PolyT((s - i, 1))
    return p * Fraction(1, factorial(k))


def apply_F(s: int, p: PolyT) -> PolyT:
    """Linear substitution ``t^k -> C(t+s, k)``."""
    out = PolyT()
    for k, c in enumerate(p.coeffs):
        if c:
            out = out + binomial_poly(s, k) * c
    return out


def coeff_of_t(p: PolyT) -> Fraction:
    return p.coeff(1)


def eval_poly(p: PolyT, x) -> Fraction:
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def eval_multi(p: MultiPolyT, xs) -> Fraction:
    xs = [as_rational(x) for x in xs]
    if len(xs) != p.nvars:
        raise ValueError(f"expected {p.nvars} values, got {len(xs)}")
    total = Fraction(0)
    for e, c in p.terms.items():
        term = c
        for x, k in zip(xs, e):
            term *= x**k
        total += term
    return total


def integer_binomial(n: int, k: int) -> int:
    """Binomial coefficient extended to negative top (``C(-1, 2) = 1``)."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    return (-1) ** k * comb(k - n - 1, k)


def _is_zero(c) -> bool:
    return not c


class LinComb:
    """Sparse linear combination ``key -> coefficient`` with zeros pruned.

    Coefficients can be anything supporting ``+`` and ``*`` with a falsy zero
    (Fraction, PolyT, MultiPolyT). Subclasses carry a ``basis`` tag and get
    it propagated through the arithmetic.
    """

    __slots__ = ("_terms", "basis")

    def __init__(self, terms: Mapping | Iterable = (), basis: str | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for k, c in items:
            if isinstance(c, int) and not isinstance(c, bool):
                c = Fraction(c)
            if k in acc:
                acc[k] = acc[k] + c
            else:
                acc[k] = c
        self._terms = {k: c for k, c in acc.items() if not _is_zero(c)}
        self.basis = basis

    def _new(self, terms):
        out = object.__new__(type(self))
        out._terms = {k: c for k, c in terms.items() if not _is_zero(c)}
        out.basis = self.basis
        return out

    @classmethod
    def _from_clean(cls, terms: dict, basis):
        out = object.__new__(cls)
        out._terms = terms
        out.basis = basis
        return out

    # mapping-ish interface
    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __contains__(self, key):
        return key in self._terms

    def __getitem__(self, key):
        return self._terms.get(key, Fraction(0))

    def coefficient(self, key):
        return self[key]

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def support(self) -> set:
        return set(self._terms)

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other):
        if not isinstance(other, LinComb):
            return False
        if self.basis != other.basis and self and other:
            raise ValueError(f"cannot combine {self.basis} and {other.basis} bases")
        return True

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        if self.basis != other.basis and self and other:
            return False
        if self._terms.keys() != other._terms.keys():
            return False
        return all(self._terms[k] == other._terms[k] for k in self._terms)

    __hash__ = None

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc[k] + c if k in acc else c
        out = self._new(acc)
        if not self:
            out.basis = other.basis
        return out

    def __neg__(self):
        return self._new({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        """Multiply every coefficient by the scalar ``c`` (on the right)."""
        if isinstance(c, int) and not isinstance(c, bool):
            c = Fraction(c)
        return self._new({k: v * c for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, LinComb):
            return NotImplemented
        return self.scale(c)

    def map_coefficients(self, f: Callable):
        return self._new({k: f(v) for k, v in self._terms.items()})

    def map_keys(self, f: Callable):
        acc: dict = {}
        for k, c in self._terms.items():
            nk = f(k)
            acc[nk] = acc[nk] + c if nk in acc else c
        return self._new(acc)

    def __repr__(self):
        body = " + ".join(f"({c})*{k}" for k, c in self.sorted_items()) or "0"
        return f"{type(self).__name__}[{self.basis}]({body})"


def linear_extension(element: LinComb, image_of: Callable[[object], LinComb], basis=None):
    """Apply the linear map determined by ``key -> image_of(key)``."""
    acc: dict = {}
    target_basis = basis
    for k, c in element.items():
        img = image_of(k)
        if target_basis is None:
            target_basis = img.basis
        for k2, c2 in img.items():
            term = c2 * c
            acc[k2] = acc[k2] + term if k2 in acc else term
    out = type(element)(acc.items(), basis=target_basis if target_basis else element.basis)
    return out


def bilinear(f: LinComb, g: LinComb, key_product: Callable, result_type=None, basis=None):
    """Bilinear extension of a product on basis keys.

    ``key_product(k1, k2)`` returns either a single key or an iterable of
    ``(key, multiplicity)`` pairs (``key_product.multi = True``).
    """
    multi = getattr(key_product, "multi", False)
    acc: dict = {}
    for k1, c1 in f.items():
        for k2, c2 in g.items():
            c = c1 * c2
            if multi:
                for k, m in key_product(k1, k2):
                    term = c * m if m != 1 else c
                    acc[k] = acc[k] + term if k in acc else term
            else:
                k = key_product(k1, k2)
                acc[k] = acc[k] + c if k in acc else c
    cls = result_type or type(f)
    return cls(acc.items(), basis=basis if basis is not None else f.basis)
