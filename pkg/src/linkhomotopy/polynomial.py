"""Sparse multivariate integer polynomials in named unknowns.

Used as the coefficient ring when Magnus expansions carry undetermined
coefficients. Plain ``int`` is the other coefficient ring; the two mix freely.
"""

from __future__ import annotations

from typing import Iterable, Mapping

# A term key is a tuple of (unknown name, exponent) pairs sorted by name.
TermKey = tuple


def _mul_keys(k1: TermKey, k2: TermKey) -> TermKey:
    if not k1:
        return k2
    if not k2:
        return k1
    exps = dict(k1)
    for name, e in k2:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


def _key_order(key: TermKey):
    return (sum(e for _, e in key), key)


class IntPolynomial:
    """Immutable polynomial with integer coefficients; zero terms are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[TermKey, int] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[tuple(k)] = int(c)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def _raw(cls, terms: dict) -> IntPolynomial:
        p = object.__new__(cls)
        object.__setattr__(p, "terms", terms)
        return p

    @classmethod
    def unknown(cls, name: str) -> IntPolynomial:
        return cls._raw({((name, 1),): 1})

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls._raw({(): int(c)} if c else {})

    @classmethod
    def sum(cls, items: Iterable) -> IntPolynomial:
        """Sum many polynomials/ints with a single accumulator."""
        acc: dict = {}
        for p in items:
            if isinstance(p, IntPolynomial):
                for k, c in p.terms.items():
                    acc[k] = acc.get(k, 0) + c
            elif p:
                acc[()] = acc.get((), 0) + p
        return cls._raw({k: c for k, c in acc.items() if c})

    # -- queries --------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def unknowns(self) -> set:
        return {name for k in self.terms for name, _ in k}

    def degree(self) -> int:
        return max((sum(e for _, e in k) for k in self.terms), default=-1)

    def __len__(self) -> int:
        return len(self.terms)

    def evaluate(self, values: Mapping[str, int], default: int | None = None) -> int:
        """Substitute integers for every unknown.

        Unknowns missing from ``values`` take ``default``; with ``default=None``
        a missing unknown raises ``KeyError``.
        """
        total = 0
        for k, c in self.terms.items():
            for name, e in k:
                v = values[name] if default is None or name in values else default
                c *= v**e
                if not c:
                    break
            total += c
        return total

    def substitute(self, values: Mapping[str, int]) -> IntPolynomial:
        """Partially evaluate; unknowns not in ``values`` are kept."""
        acc: dict = {}
        for k, c in self.terms.items():
            rest = []
            for name, e in k:
                if name in values:
                    c *= values[name] ** e
                else:
                    rest.append((name, e))
            if c:
                rk = tuple(rest)
                acc[rk] = acc.get(rk, 0) + c
        return IntPolynomial._raw({k: c for k, c in acc.items() if c})

    # -- ring operations ------------------------------------------------------

    def __add__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            if not other:
                return self
            other = IntPolynomial.constant(other)
        elif not isinstance(other, IntPolynomial):
            return NotImplemented
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        acc = dict(big)
        for k, c in small.items():
            s = acc.get(k, 0) + c
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        return IntPolynomial._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial._raw({k: -c for k, c in self.terms.items()})

    def __pos__(self) -> IntPolynomial:
        return self

    def __sub__(self, other) -> IntPolynomial:
        if isinstance(other, (int, IntPolynomial)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            if not other:
                return IntPolynomial._raw({})
            return IntPolynomial._raw({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        acc: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = _mul_keys(k1, k2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return IntPolynomial._raw({k: c for k, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = IntPolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    # -- comparison and printing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.terms == other.terms
        if isinstance(other, int):
            if not other:
                return not self.terms
            return self.terms == {(): other}
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_term())
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list:
        """Terms graded by total degree, then lexicographic in unknown names."""
        return sorted(self.terms.items(), key=lambda kc: _key_order(kc[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (k, c) in enumerate(self.sorted_terms()):
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({str(self)!r})"


def coefficient_sum(values: list):
    """Sum coefficients of either ring without quadratic re-copying."""
    if len(values) == 1:
        return values[0]
    if any(isinstance(v, IntPolynomial) for v in values):
        p = IntPolynomial.sum(values)
        return p.constant_term() if p.is_constant() else p
    return sum(values)


def normalize(c):
    """Collapse constant polynomials to plain ints."""
    if isinstance(c, IntPolynomial) and c.is_constant():
        return c.constant_term()
    return c
