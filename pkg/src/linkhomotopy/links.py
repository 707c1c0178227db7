"""Link presentations by longitude words, mu-invariants and homotopy triviality.

A presentation gives, for each component j, its longitude as a word in the
meridians m_1..m_n. The invariant mu(i1..ik; j) is the coefficient of
x_i1...x_ik in the expansion of longitude j. Distinct indices only, so the
values are honest integers.

Link file format::

    # comment
    components: 3
    longitude 1: [m2, m3]
    longitude 2: [m3, m1]
    longitude 3: [m1, m2]
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .magnus import ExpansionContext, expand
from .series import enumerate_monomials
from .words import Word, WordError, commutator, conjugate, numbered_alphabet, parse_word


class LinkFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class IndexViolation(ValueError):
    pass


@dataclass(frozen=True)
class LinkPresentation:
    n: int
    longitudes: tuple
    name: str | None = None

    def __post_init__(self):
        if self.n < 1:
            raise LinkFormatError(f"need at least one component, got {self.n}")
        object.__setattr__(self, "longitudes", tuple(self.longitudes))
        if len(self.longitudes) != self.n:
            raise LinkFormatError(f"expected {self.n} longitudes, got {len(self.longitudes)}")
        for j, w in enumerate(self.longitudes, 1):
            bad = [g for g in w.generators() if not (isinstance(g, int) and g <= self.n)]
            if bad:
                raise LinkFormatError(f"longitude {j} uses generators outside m1..m{self.n}")

    def longitude(self, j: int) -> Word:
        return self.longitudes[j - 1]


@dataclass(frozen=True)
class MuInvariant:
    index_sequence: tuple
    target: int
    value: int

    def __str__(self) -> str:
        return f"mu[{','.join(map(str, self.index_sequence))};{self.target}] = {self.value}"


def _check_indices(pres: LinkPresentation, seq, target: int) -> None:
    if not 1 <= target <= pres.n:
        raise IndexViolation(f"target {target} out of range 1..{pres.n}")
    for i in seq:
        if not 1 <= i <= pres.n:
            raise IndexViolation(f"index {i} out of range 1..{pres.n}")
    if len(set(seq)) != len(seq):
        raise IndexViolation(f"indices must be distinct: {list(seq)}")
    if target in seq:
        raise IndexViolation(f"target {target} may not occur in the index sequence")


def mu(pres: LinkPresentation, seq, target: int) -> int:
    seq = tuple(seq)
    _check_indices(pres, seq, target)
    return expand(pres.longitude(target), pres.n).coefficient(seq)


def reduced_longitude_expansion(pres: LinkPresentation, j: int):
    """Expansion of longitude j in the ring with x_j deleted."""
    return expand(pres.longitude(j), ExpansionContext(pres.n, deleted={j}))


def first_nonvanishing_mu(pres: LinkPresentation) -> MuInvariant | None:
    """Nonzero invariant of least degree, ties broken by index sequence then target."""
    found = []
    for j in range(1, pres.n + 1):
        s = reduced_longitude_expansion(pres, j)
        found.extend(MuInvariant(m, j, c) for m, c in s.terms.items() if m)
    if not found:
        return None
    return min(found, key=lambda v: (len(v.index_sequence), v.index_sequence, v.target))


def is_homotopically_trivial(pres: LinkPresentation) -> bool:
    return all(reduced_longitude_expansion(pres, j).is_one() for j in range(1, pres.n + 1))


def all_mu_vanish(pres: LinkPresentation) -> bool:
    """Triviality by enumerating every distinct-index invariant."""
    for j in range(1, pres.n + 1):
        s = expand(pres.longitude(j), pres.n)
        others = [i for i in range(1, pres.n + 1) if i != j]
        if any(s.coefficient(m) for m in enumerate_monomials(others) if m):
            return False
    return True


# -- builtins ----------------------------------------------------------------


def unlink(n: int) -> LinkPresentation:
    return LinkPresentation(n, [Word()] * n, f"unlink({n})")


def hopf() -> LinkPresentation:
    return LinkPresentation(2, [Word.gen(2), Word.gen(1)], "hopf")


def borromean() -> LinkPresentation:
    return LinkPresentation(
        3, [commutator(2, 3), commutator(3, 1), commutator(1, 2)], "borromean"
    )


def whitehead() -> LinkPresentation:
    # Symmetric model: each longitude is [m_k, m_k^{m_j}] in the other meridian.
    return LinkPresentation(
        2, [commutator(2, conjugate(2, 1)), commutator(1, conjugate(1, 2))], "whitehead"
    )


_UNLINK = re.compile(r"unlink\((\d+)\)$")
BUILTINS = ("unlink(n)", "hopf", "borromean", "whitehead")


def builtin(name: str) -> LinkPresentation:
    key = name.strip().lower()
    m = _UNLINK.match(key)
    if m:
        return unlink(int(m.group(1)))
    table = {"hopf": hopf, "borromean": borromean, "whitehead": whitehead}
    if key not in table:
        raise KeyError(f"unknown builtin link {name!r}; choose from {', '.join(BUILTINS)}")
    return table[key]()


# -- file format -------------------------------------------------------------

_COMPONENTS = re.compile(r"components\s*:\s*(\d+)\s*$")
_LONGITUDE = re.compile(r"longitude\s+(\d+)\s*:(.*)$")


def parse_link(text: str, name: str | None = None) -> LinkPresentation:
    n = None
    words: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = _COMPONENTS.match(line)
            if not m:
                raise LinkFormatError("expected 'components: <n>'", lineno)
            n = int(m.group(1))
            if n < 1:
                raise LinkFormatError("component count must be positive", lineno)
            continue
        m = _LONGITUDE.match(line)
        if not m:
            raise LinkFormatError("expected 'longitude <j>: <word>'", lineno)
        j = int(m.group(1))
        if not 1 <= j <= n:
            raise LinkFormatError(f"longitude index {j} out of range 1..{n}", lineno)
        if j in words:
            raise LinkFormatError(f"duplicate longitude {j}", lineno)
        try:
            words[j] = parse_word(m.group(2), numbered_alphabet(n))
        except WordError as e:
            raise LinkFormatError(f"longitude {j}: {e}", lineno) from e
    if n is None:
        raise LinkFormatError("missing 'components: <n>' header")
    missing = [j for j in range(1, n + 1) if j not in words]
    if missing:
        raise LinkFormatError(f"missing longitudes {missing}")
    return LinkPresentation(n, [words[j] for j in range(1, n + 1)], name)


def format_link(pres: LinkPresentation) -> str:
    lines = []
    if pres.name:
        lines.append(f"# {pres.name}")
    lines.append(f"components: {pres.n}")
    lines.extend(f"longitude {j}: {w}" for j, w in enumerate(pres.longitudes, 1))
    return "\n".join(lines) + "\n"
