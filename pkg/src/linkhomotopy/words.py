"""Free-group words over meridian generators.

Generators are either positive integers (the numbered meridians ``m1, m2, ...``)
or strings naming a symbolic meridian (``m_a`` is the generator ``"a"``).
A :class:`Word` is always stored freely reduced.

Conventions::

    [u, v] = u^-1 v^-1 u v
    u^g    = g^-1 u g

With this pairing ``[fg, h] = [f, h]^g [g, h]`` holds letter for letter.
"""

from __future__ import annotations

from typing import Iterable, Union

Generator = Union[int, str]
Letter = tuple  # (Generator, +1 | -1)


class WordError(ValueError):
    pass


class WordSyntaxError(WordError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class UnknownGeneratorError(WordError):
    def __init__(self, identifier: str, position: int | None = None):
        where = "" if position is None else f" at position {position}"
        super().__init__(f"unknown generator {identifier!r}{where}")
        self.identifier = identifier
        self.position = position


def _check_generator(g) -> None:
    if isinstance(g, bool):
        raise WordError(f"invalid generator {g!r}")
    if isinstance(g, int):
        if g < 1:
            raise WordError(f"numbered generators must be >= 1, got {g}")
    elif isinstance(g, str):
        if not g or not g[0].isalpha() or not g.isalnum():
            raise WordError(f"invalid symbolic generator name {g!r}")
    else:
        raise WordError(f"invalid generator {g!r}")


def generator_name(g: Generator) -> str:
    return f"m{g}" if isinstance(g, int) else f"m_{g}"


def reduce(raw: Iterable[Letter]) -> tuple:
    """Freely reduce a sequence of ``(generator, sign)`` pairs."""
    out: list = []
    for g, e in raw:
        if e not in (1, -1):
            raise WordError(f"letter exponent must be +1 or -1, got {e!r}")
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


class Word:
    """A freely reduced word. Immutable and hashable."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        letters = tuple(letters)
        for g, _ in letters:
            _check_generator(g)
        object.__setattr__(self, "letters", reduce(letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def identity(cls) -> Word:
        return cls()

    @classmethod
    def gen(cls, g: Generator, sign: int = 1) -> Word:
        return cls([(g, sign)])

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def inverse(self) -> Word:
        return Word((g, -e) for g, e in reversed(self.letters))

    def __invert__(self) -> Word:
        return self.inverse()

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.letters * k)

    def generators(self) -> set:
        return {g for g, _ in self.letters}

    def substitute(self, images: dict) -> Word:
        """Replace each generator ``g`` by ``images[g]`` (a Word); others stay."""
        out: list = []
        for g, e in self.letters:
            if g in images:
                img = images[g]
                out.extend(img.letters if e == 1 else img.inverse().letters)
            else:
                out.append((g, e))
        return Word(out)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(
            generator_name(g) + ("" if e == 1 else "^-1") for g, e in self.letters
        )

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def as_word(w) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, (int, str)):
        return Word.gen(w)
    raise TypeError(f"cannot interpret {w!r} as a word")


def commutator(u, v) -> Word:
    u, v = as_word(u), as_word(v)
    return u.inverse() * v.inverse() * u * v


def conjugate(u, g) -> Word:
    u, g = as_word(u), as_word(g)
    return g.inverse() * u * g


def left_normed_commutator(*ws) -> Word:
    """``[[[w1, w2], w3], ...]``; a single argument is returned unchanged."""
    if not ws:
        raise ValueError("need at least one word")
    out = as_word(ws[0])
    for w in ws[1:]:
        out = commutator(out, w)
    return out


def milnor_relator(i: Generator, x, y) -> Word:
    """The Milnor relator ``[m_i^x, m_i^y]``."""
    return commutator(conjugate(i, x), conjugate(i, y))


# ---------------------------------------------------------------------------
# parser
#
#   word  := term { ("*" | whitespace) term }
#   term  := atom { "^" ( "-1" | atom ) | "'" }
#   atom  := identifier | "1" | "(" word ")" | "[" word "," word "]"
#   identifier := "m" digits | "m_" name
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, alphabet):
        self.text = text
        self.pos = 0
        self.alphabet = alphabet

    def error(self, message: str, pos: int | None = None):
        raise WordSyntaxError(message, self.pos if pos is None else pos, self.text)

    def skip(self) -> None:
        t = self.text
        while self.pos < len(t):
            c = t[self.pos]
            if c.isspace():
                self.pos += 1
            elif c == "#":
                nl = t.find("\n", self.pos)
                self.pos = len(t) if nl < 0 else nl + 1
            else:
                break

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, c: str) -> None:
        if self.peek() != c:
            found = self.peek() or "end of input"
            self.error(f"expected {c!r}, found {found!r}")
        self.pos += 1

    def parse(self) -> Word:
        if not self.peek():
            self.error("empty expression")
        w = self.word()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return w

    def word(self) -> Word:
        w = self.term()
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                w = w * self.term()
            elif c and (c in "m([1"):
                w = w * self.term()
            else:
                return w

    def term(self) -> Word:
        w = self.atom()
        while True:
            c = self.peek()
            if c == "'":
                self.pos += 1
                w = w.inverse()
            elif c == "^":
                self.pos += 1
                if self.peek() == "-":
                    start = self.pos
                    if self.text.startswith("-1", self.pos) and not self.text[
                        self.pos + 2 : self.pos + 3
                    ].isdigit():
                        self.pos += 2
                        w = w.inverse()
                    else:
                        self.error("only the exponent -1 is supported", start)
                else:
                    w = conjugate(w, self.atom())
            else:
                return w

    def atom(self) -> Word:
        c = self.peek()
        start = self.pos
        if c == "(":
            self.pos += 1
            w = self.word()
            self.expect(")")
            return w
        if c == "[":
            self.pos += 1
            u = self.word()
            self.expect(",")
            v = self.word()
            self.expect("]")
            return commutator(u, v)
        if c == "1":
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos].isalnum():
                self.error("unexpected character after '1'")
            return Word()
        if c == "m":
            return Word.gen(self.identifier(start))
        if not c:
            self.error("unexpected end of input")
        self.error(f"unexpected {c!r}")

    def identifier(self, start: int) -> Generator:
        t = self.text
        self.pos += 1  # "m"
        underscore = self.pos < len(t) and t[self.pos] == "_"
        if underscore:
            self.pos += 1
        end = self.pos
        # "m" takes digits only, so "m1m2" reads as two generators
        allowed = str.isalnum if underscore else str.isdigit
        while end < len(t) and allowed(t[end]):
            end += 1
        name = t[self.pos : end]
        self.pos = end
        if not name:
            self.error("expected generator name after 'm'", start)
        if name.isdigit():
            g: Generator = int(name)
            if g < 1:
                self.error(f"generator index must be >= 1 in {t[start:end]!r}", start)
        elif name[0].isalpha():
            g = name
        else:
            self.error(f"malformed identifier {t[start:end]!r}", start)
        if self.alphabet is not None and g not in self.alphabet:
            raise UnknownGeneratorError(t[start:end], start)
        return g


def parse_word(text: str, alphabet=None) -> Word:
    """Parse a word expression such as ``"[m_a m2, [[m3, m_b m4], [m5, m6 m_c]]]"``.

    ``alphabet`` restricts the admissible generators; ``None`` accepts any.
    Raises :class:`WordSyntaxError` (with ``.position``) or
    :class:`UnknownGeneratorError` (with ``.identifier``).
    """
    if alphabet is not None:
        alphabet = frozenset(alphabet)
    return _Parser(text, alphabet).parse()


def numbered_alphabet(n: int) -> frozenset:
    return frozenset(range(1, n + 1))
