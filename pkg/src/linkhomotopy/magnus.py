"""Magnus expansion of words into the reduced ring, and Milnor-group equality.

The expansion sends ``m_i`` to ``1 + x_i``. It kills every Milnor relator
``[m_i^x, m_i^y]`` and is injective on the free Milnor group, so two words are
equal there exactly when their expansions agree.
"""

from __future__ import annotations

import itertools
import random
from typing import Mapping

from .series import Series, SeriesError
from .words import Generator, Word, generator_name, left_normed_commutator


class UnassignedGeneratorError(KeyError):
    def __init__(self, generator: Generator):
        super().__init__(generator)
        self.generator = generator

    def __str__(self) -> str:
        return f"generator {generator_name(self.generator)} has no assigned expansion"


class ExpansionContext:
    """Where each generator is sent. Immutable after construction.

    Numbered meridians ``1..n`` default to ``1 + x_i``; those listed in
    ``deleted`` go to ``1`` instead. Symbolic generators must be assigned
    explicitly.
    """

    def __init__(self, n: int, assignment: Mapping[Generator, Series] | None = None,
                 deleted=()):
        self.n = n
        self.deleted = frozenset(deleted)
        images: dict = {}
        for i in range(1, n + 1):
            images[i] = Series.one(n) if i in self.deleted else Series.meridian(i, n)
        for g, s in (assignment or {}).items():
            if s.n != n:
                raise SeriesError(f"image of {generator_name(g)} lives in n={s.n}, expected {n}")
            if s.constant_term() != 1:
                raise SeriesError(f"image of {generator_name(g)} must have constant term 1")
            images[g] = s
        self._images = images
        self._inverses: dict = {}

    def image(self, g: Generator, sign: int = 1) -> Series:
        try:
            s = self._images[g]
        except KeyError:
            raise UnassignedGeneratorError(g) from None
        if sign == 1:
            return s
        inv = self._inverses.get(g)
        if inv is None:
            inv = self._inverses[g] = s.inverse()
        return inv

    def with_assignment(self, assignment: Mapping[Generator, Series]) -> ExpansionContext:
        merged = {g: s for g, s in self._images.items() if not isinstance(g, int)}
        merged.update(assignment)
        return ExpansionContext(self.n, merged, self.deleted)

    def __contains__(self, g) -> bool:
        return g in self._images


def expand(w: Word, ctx: ExpansionContext | int) -> Series:
    """Magnus expansion of ``w``; ``ctx`` may be an int ``n`` for the default context."""
    if isinstance(ctx, int):
        ctx = ExpansionContext(ctx)
    # Resolve every image first so an unassigned generator fails before any work.
    factors = [ctx.image(g, e) for g, e in w]
    out = Series.one(ctx.n)
    for f in factors:
        out = out * f
    return out


def mf_equal(u: Word, v: Word, n: int) -> bool:
    return expand(u, n) == expand(v, n)


def is_trivial_mf(w: Word, n: int) -> bool:
    return expand(w, n).is_one()


def nilpotency_class_check(n: int, samples: int | None = None, seed: int = 0) -> bool:
    """Check that (n+1)-fold left-normed commutators of meridians expand to 1.

    All ``n**(n+1)`` meridian tuples are tried when ``samples`` is None,
    otherwise a seeded random sample of that size.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ctx = ExpansionContext(n)
    gens = range(1, n + 1)
    if samples is None:
        tuples = itertools.product(gens, repeat=n + 1)
    else:
        rng = random.Random(seed)
        tuples = (tuple(rng.choice(gens) for _ in range(n + 1)) for _ in range(samples))
    return all(expand(left_normed_commutator(*t), ctx).is_one() for t in tuples)
