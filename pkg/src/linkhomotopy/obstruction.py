"""Relative-slice obstruction for the A-B doubled Borromean configuration.

The first component is the commutator

    l1 = [m_a m2, [[m3, m_b m4], [m5, m6 m_c]]]

in the free Milnor group on m2..m6. The handle meridians m_a, m_b, m_c are
unknown group elements, so their expansions are taken fully generic: constant
term 1 and one integer unknown per square-free monomial on x2..x6. Under the
standard-embedding constraint the linear coefficient of x2 in m_a, x4 in m_b
and x6 in m_c vanishes. If the coefficient of x2.x3.x4.x6.x5 in the expansion
of l1 is then a nonzero constant, no choice of m_a, m_b, m_c makes l1 trivial.

Genericity over-approximates the genuine Magnus images (which also satisfy
shuffle relations), so a nonzero-constant verdict covers all of them.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .magnus import ExpansionContext, expand
from .polynomial import IntPolynomial
from .series import Monomial, Series, enumerate_monomials, format_monomial
from .words import Word, commutator, parse_word

VARIABLES = (2, 3, 4, 5, 6)
N = 6
LABELS = ("a", "b", "c")
L1_EXPR = "[m_a m2, [[m3, m_b m4], [m5, m6 m_c]]]"
ALPHABET = frozenset(VARIABLES) | frozenset(LABELS)
TARGET: Monomial = (2, 3, 4, 6, 5)

# Linear terms excluded by the standard-embedding constraint.
STANDARD_FORBIDDEN = {"a": frozenset({2}), "b": frozenset({4}), "c": frozenset({6})}

# Handle meridian -> the numbered meridian it stands beside in l1.
PARTNER = {"a": 2, "b": 4, "c": 6}


@dataclass(frozen=True)
class ConstraintSpec:
    standard: bool = True

    def forbidden_linear(self, label: str) -> frozenset:
        return STANDARD_FORBIDDEN[label] if self.standard else frozenset()


def unknown_name(label: str, m: Monomial) -> str:
    sep = "" if all(i < 10 for i in m) else "_"
    return f"{label}." + sep.join(str(i) for i in m)


@dataclass(frozen=True)
class ParametricMeridian:
    label: str
    forbidden_linear: frozenset
    series: Series

    @classmethod
    def generic(cls, label: str, forbidden_linear=frozenset()) -> ParametricMeridian:
        terms = {(): 1}
        for m in enumerate_monomials(VARIABLES):
            if not m or (len(m) == 1 and m[0] in forbidden_linear):
                continue
            terms[m] = IntPolynomial.unknown(unknown_name(label, m))
        return cls(label, frozenset(forbidden_linear), Series(N, terms))

    def unknowns(self) -> list:
        return sorted(n for c in self.series.terms.values()
                      if isinstance(c, IntPolynomial) for n in c.unknowns())


def parametric_meridians(spec: ConstraintSpec) -> dict:
    return {lab: ParametricMeridian.generic(lab, spec.forbidden_linear(lab)) for lab in LABELS}


def parametric_context(spec: ConstraintSpec) -> ExpansionContext:
    return ExpansionContext(N, {lab: pm.series for lab, pm in parametric_meridians(spec).items()})


def specialize(series: Series, values: dict, default: int = 0) -> Series:
    """Evaluate every polynomial coefficient at integers."""
    return series.map_coefficients(
        lambda c: c.evaluate(values, default) if isinstance(c, IntPolynomial) else c
    )


def build_l1() -> Word:
    return parse_word(L1_EXPR, ALPHABET)


@dataclass
class ObstructionReport:
    standard: bool
    expression: str
    target_monomial: Monomial
    target_coefficient: IntPolynomial
    verdict: str
    witness: dict | None
    monomial_count: int
    degree_histogram: dict
    constant_monomials: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "expression": self.expression,
            "standard": self.standard,
            "target_monomial": format_monomial(self.target_monomial),
            "coefficient": str(self.target_coefficient),
            "verdict": self.verdict,
            "witness": self.witness,
            "monomial_count": self.monomial_count,
            "degree_histogram": {str(k): v for k, v in self.degree_histogram.items()},
            "constant_monomials": {
                format_monomial(m): c for m, c in sorted(self.constant_monomials.items())
            },
        }

    def to_text(self) -> str:
        lines = [
            f"expression:         l1 = {self.expression}",
            f"constraint:         {'standard' if self.standard else 'relaxed'}",
            f"target monomial:    {format_monomial(self.target_monomial)}",
            f"coefficient:        {self.target_coefficient}",
            f"verdict:            {self.verdict}",
            f"monomial count:     {self.monomial_count}",
            "degree histogram:   "
            + (", ".join(f"{d}: {k}" for d, k in self.degree_histogram.items()) or "-"),
            f"constant monomials: {len(self.constant_monomials)}",
        ]
        if self.witness is not None:
            shown = ", ".join(f"{k} = {v}" for k, v in sorted(self.witness.items()))
            lines.append(f"witness:            {shown} (all other unknowns 0)")
            lines.append("                    i.e. m_a = m2^-1, so M(m_a m2) = 1 and M(l1) = 1")
        if self.verdict == "nonzero-constant":
            lines.append("conclusion:         l1 is nontrivial in the Milnor group for every "
                         "choice of m_a, m_b, m_c")
        lines.append("caveat:             word-level computation only; realizability of the "
                     "presentation is not checked")
        return "\n".join(lines)


def relaxed_witness() -> dict:
    """Unknown values giving m_a = 1 - x2, the expansion of m2^-1."""
    return {unknown_name("a", (2,)): -1}


def witness_is_admissible(spec: ConstraintSpec, witness: dict) -> bool:
    forbidden = {unknown_name(lab, (i,)) for lab in LABELS for i in spec.forbidden_linear(lab)}
    return not forbidden.intersection(k for k, v in witness.items() if v)


def verify(spec: ConstraintSpec, l1: Word | None = None) -> ObstructionReport:
    start = time.perf_counter()
    word = build_l1() if l1 is None else l1
    expansion = expand(word, parametric_context(spec))
    coeff = expansion.coefficient(TARGET)
    target = coeff if isinstance(coeff, IntPolynomial) else IntPolynomial.constant(coeff)

    if target.is_constant():
        verdict = "nonzero-constant" if target else "vanishing"
    else:
        verdict = "parametric"

    witness = None
    if verdict != "nonzero-constant":
        candidate = relaxed_witness()
        if witness_is_admissible(spec, candidate) and specialize(expansion, candidate).is_one():
            witness = candidate

    constants = {m: c for m, c in expansion.terms.items() if m and isinstance(c, int)}
    return ObstructionReport(
        standard=spec.standard,
        expression=L1_EXPR if l1 is None else str(word),
        target_monomial=TARGET,
        target_coefficient=target,
        verdict=verdict,
        witness=witness,
        monomial_count=sum(1 for m in expansion.terms if m),
        degree_histogram={d: k for d, k in expansion.degree_histogram().items() if d},
        constant_monomials=constants,
        seconds=time.perf_counter() - start,
    )


def decomposition_oracle(images: dict | None = None) -> Series:
    """Product of the eight commutators [u2, [[m3, u4], [m5, u6]]].

    Each slot u2, u4, u6 holds either its numbered meridian or the handle
    meridian beside it in l1. ``images`` maps the labels a, b, c to series;
    the default is the generic parametric meridians without constraints.
    """
    if images is None:
        images = {lab: pm.series for lab, pm in parametric_meridians(ConstraintSpec(False)).items()}
    ctx = ExpansionContext(N, images)
    out = Series.one(N)
    for u2, u4, u6 in itertools.product(*[(PARTNER[lab], lab) for lab in LABELS]):
        term = commutator(u2, commutator(commutator(3, u4), commutator(5, u6)))
        out = out * expand(term, ctx)
    return out


def all_variables_check(spec: ConstraintSpec | None = None, images: dict | None = None) -> bool:
    """Every nonunit monomial of M(l1) has degree 5 and uses each of x2..x6."""
    if images is None:
        ctx = parametric_context(spec or ConstraintSpec(True))
    else:
        ctx = ExpansionContext(N, images)
    expansion = expand(build_l1(), ctx)
    full = set(VARIABLES)
    return all(len(m) == len(full) and set(m) == full for m in expansion.terms if m)


def random_images(rng: random.Random, spec: ConstraintSpec, bound: int = 5) -> dict:
    """Integer specializations of the three handle meridians."""
    out = {}
    for lab, pm in parametric_meridians(spec).items():
        values = {name: rng.randint(-bound, bound) for name in pm.unknowns()}
        out[lab] = specialize(pm.series, values)
    return out
