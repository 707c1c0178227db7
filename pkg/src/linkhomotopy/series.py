"""The reduced ring R on variables x_1..x_n.

Elements are non-commutative polynomials whose monomials never repeat a
variable; any product that would repeat one is zero. Because every monomial
has at most n letters the ring is finite-dimensional, so inverses of
elements with constant term 1 are finite sums.

Monomials are tuples of variable indices, ``()`` being the unit monomial.
Coefficients are ``int`` or :class:`~linkhomotopy.polynomial.IntPolynomial`.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .polynomial import IntPolynomial, coefficient_sum, normalize

Monomial = tuple


class SeriesError(ValueError):
    pass


@lru_cache(maxsize=None)
def _mask(m: Monomial) -> int:
    k = 0
    for i in m:
        k |= 1 << i
    return k


def is_valid_monomial(m: Monomial, n: int) -> bool:
    return all(isinstance(i, int) and 1 <= i <= n for i in m) and len(set(m)) == len(m)


def monomial_order(m: Monomial):
    """Graded lexicographic: degree first, then index sequence."""
    return (len(m), m)


def format_monomial(m: Monomial) -> str:
    return ".".join(f"x{i}" for i in m) if m else "1"


def enumerate_monomials(variables: Iterable[int]) -> list:
    """All square-free monomials on the given variables, in canonical order."""
    vs = sorted(set(variables))
    out = []
    for k in range(len(vs) + 1):
        out.extend(itertools.permutations(vs, k))
    return sorted(out, key=monomial_order)


def count_monomials(n: int) -> int:
    """Closed form for the dimension of R on n variables: sum_k n!/(n-k)!."""
    return sum(math.perm(n, k) for k in range(n + 1))


class Series:
    """Element of R with ambient variable count ``n``. Immutable."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, object] | None = None):
        if n < 0:
            raise SeriesError(f"variable count must be >= 0, got {n}")
        clean = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if not is_valid_monomial(m, n):
                    raise SeriesError(f"invalid monomial {m} for n={n}")
                c = normalize(c)
                if c:
                    clean[m] = clean.get(m, 0) + c
            clean = {m: normalize(c) for m, c in clean.items() if c}
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def _raw(cls, n: int, terms: dict) -> Series:
        s = object.__new__(cls)
        object.__setattr__(s, "n", n)
        object.__setattr__(s, "terms", terms)
        return s

    @classmethod
    def one(cls, n: int) -> Series:
        return cls._raw(n, {(): 1})

    @classmethod
    def zero(cls, n: int) -> Series:
        return cls._raw(n, {})

    @classmethod
    def var(cls, i: int, n: int) -> Series:
        return cls(n, {(i,): 1})

    @classmethod
    def monomial(cls, m: Monomial, n: int, c=1) -> Series:
        return cls(n, {tuple(m): c})

    @classmethod
    def meridian(cls, i: int, n: int) -> Series:
        """The image ``1 + x_i`` of a numbered meridian."""
        return cls(n, {(): 1, (i,): 1})

    # -- queries --------------------------------------------------------------

    def coefficient(self, m: Monomial):
        m = tuple(m)
        if not is_valid_monomial(m, self.n):
            raise SeriesError(f"invalid monomial {m} for n={self.n}")
        return self.terms.get(m, 0)

    def constant_term(self):
        return self.terms.get((), 0)

    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def monomials(self) -> list:
        return sorted(self.terms, key=monomial_order)

    def degree_histogram(self) -> dict:
        return dict(sorted(Counter(len(m) for m in self.terms).items()))

    def homogeneous_part(self, degree: int) -> Series:
        return Series._raw(self.n, {m: c for m, c in self.terms.items() if len(m) == degree})

    def lowest_degree_part(self) -> Series:
        """Sum of the terms of minimal positive degree."""
        degrees = [len(m) for m in self.terms if m]
        if not degrees:
            raise SeriesError("series is constant; it has no positive-degree part")
        return self.homogeneous_part(min(degrees))

    def variables(self) -> set:
        return {i for m in self.terms for i in m}

    # -- ring operations ------------------------------------------------------

    def _check(self, other: Series) -> None:
        if self.n != other.n:
            raise SeriesError(f"ambient variable counts differ: {self.n} != {other.n}")

    def _coerce(self, other) -> Series | None:
        if isinstance(other, Series):
            self._check(other)
            return other
        if isinstance(other, (int, IntPolynomial)):
            return Series(self.n, {(): other})
        return None

    def __add__(self, other) -> Series:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms.items():
            if m in acc:
                s = normalize(acc[m] + c)
                if s:
                    acc[m] = s
                else:
                    del acc[m]
            else:
                acc[m] = c
        return Series._raw(self.n, acc)

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Series:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Series:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> Series:
        if isinstance(other, (int, IntPolynomial)):
            return Series(self.n, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Series):
            return NotImplemented
        self._check(other)
        # Group the right factor by variable set so only disjoint pairs are visited.
        groups: dict = {}
        for m, c in other.terms.items():
            groups.setdefault(_mask(m), []).append((m, c))
        compatible: dict = {}
        acc: dict = {}
        for m1, c1 in self.terms.items():
            k1 = _mask(m1)
            right = compatible.get(k1)
            if right is None:
                right = compatible[k1] = [
                    t for k2, ts in groups.items() if not k1 & k2 for t in ts
                ]
            for m2, c2 in right:
                m = m1 + m2
                bucket = acc.get(m)
                if bucket is None:
                    acc[m] = [c1 * c2]
                else:
                    bucket.append(c1 * c2)
        out = {}
        for m, cs in acc.items():
            c = normalize(coefficient_sum(cs))
            if c:
                out[m] = c
        return Series._raw(self.n, out)

    def __rmul__(self, other) -> Series:
        if isinstance(other, (int, IntPolynomial)):
            return Series(self.n, {m: other * c for m, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, k: int) -> Series:
        if k < 0:
            return self.inverse() ** (-k)
        out = Series.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> Series:
        """Two-sided inverse, as the finite geometric sum of ``1 - s``."""
        if self.constant_term() != 1:
            raise SeriesError(
                f"only series with constant term 1 are inverted here, got {self.constant_term()}"
            )
        nil = Series.one(self.n) - self
        out = Series.one(self.n)
        power = Series.one(self.n)
        for _ in range(self.n):
            power = power * nil
            if not power:
                break
            out = out + power
        return out

    def map_coefficients(self, f: Callable) -> Series:
        return Series(self.n, {m: f(c) for m, c in self.terms.items()})

    def delete_variables(self, indices) -> Series:
        """Set the given variables to zero."""
        drop = set(indices)
        return Series._raw(
            self.n, {m: c for m, c in self.terms.items() if not drop.intersection(m)}
        )

    # -- comparison and printing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Series):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, IntPolynomial)):
            if not other:
                return not self.terms
            return self.terms == {(): normalize(other)}
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, m in enumerate(self.monomials()):
            sign, body = _format_term(self.terms[m], m)
            if i == 0:
                parts.append(("-" if sign < 0 else "") + body)
            else:
                parts.append(("- " if sign < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Series(n={self.n}, {str(self)!r})"


def _format_term(c, m: Monomial):
    mono = format_monomial(m)
    if isinstance(c, int):
        sign, mag = (-1 if c < 0 else 1), abs(c)
        if not m:
            return sign, str(mag)
        return sign, mono if mag == 1 else f"{mag}*{mono}"
    text = f"({c})"
    return 1, text if not m else f"{text}*{mono}"
