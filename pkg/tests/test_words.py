import pytest
from hypothesis import given, strategies as st

from conftest import letters, words
from linkhomotopy.words import (
    UnknownGeneratorError,
    Word,
    WordSyntaxError,
    commutator,
    conjugate,
    left_normed_commutator,
    milnor_relator,
    parse_word,
    reduce,
)


def W(*spec):
    """W(5, -6) -> m5 m6^-1; strings are symbolic generators."""
    return Word((abs(g), 1 if g > 0 else -1) if isinstance(g, int) else (g, 1) for g in spec)


class TestReduce:
    def test_cancel_pair(self):
        assert reduce([("a", 1), ("a", -1), ("b", 1)]) == (("b", 1),)

    def test_empty(self):
        assert reduce([]) == ()

    def test_inner_cancellation(self):
        assert reduce([("a", 1), ("b", 1), ("b", -1), ("a", 1)]) == (("a", 1), ("a", 1))

    def test_cascade(self):
        assert reduce([(1, 1), (2, 1), (2, -1), (1, -1)]) == ()

    def test_bad_exponent(self):
        with pytest.raises(ValueError):
            reduce([(1, 2)])

    @given(letters(4, 20))
    def test_idempotent(self, raw):
        once = reduce(raw)
        assert reduce(once) == once

    @given(letters(3, 20))
    def test_result_is_reduced(self, raw):
        r = reduce(raw)
        assert all(not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(r, r[1:]))


class TestConstructors:
    def test_commutator_with_identity(self):
        assert commutator(W(1, 2), Word()) == Word()

    def test_commutator_definition(self):
        assert commutator(5, 6) == W(-5, -6, 5, 6)

    def test_commutator_self(self):
        u = W(1, -2, 3)
        assert commutator(u, u) == Word()

    def test_conjugate_identity(self):
        u = W(1, 2)
        assert conjugate(u, Word()) == u
        assert conjugate(Word(), u) == Word()

    def test_conjugate_definition(self):
        assert conjugate(1, 2) == W(-2, 1, 2)

    def test_milnor_relator_trivial(self):
        assert milnor_relator(1, Word(), Word()) == Word()

    def test_milnor_relator_definition(self):
        assert milnor_relator(1, Word(), 2) == commutator(1, W(-2, 1, 2))

    def test_milnor_relator_length(self):
        r = milnor_relator(2, 3, W(4, 5))
        # [m3^-1 m2 m3, m5^-1 m4^-1 m2 m4 m5] freely reduced
        assert r == W(-3, -2, 3, -5, -4, -2, 4, 5, -3, 2, 3, -5, -4, 2, 4, 5)
        assert 8 <= len(r) <= 16

    def test_left_normed(self):
        assert left_normed_commutator(1, 2, 3) == commutator(commutator(1, 2), 3)


class TestGroupLaws:
    @given(words(), words(), words())
    def test_associative(self, u, v, w):
        assert (u * v) * w == u * (v * w)

    @given(words())
    def test_inverse(self, u):
        assert u * u.inverse() == Word()
        assert u.inverse() * u == Word()

    @given(words(4, 8), words(4, 8), words(4, 8))
    def test_commutator_identity(self, f, g, h):
        # [fg, h] = [f, h]^g [g, h] as reduced words
        assert commutator(f * g, h) == conjugate(commutator(f, h), g) * commutator(g, h)


class TestParser:
    def test_inverse_pair(self):
        assert parse_word("m1 m1^-1") == Word()

    def test_commutator(self):
        assert parse_word("[m5,m6]") == W(-5, -6, 5, 6)

    def test_l1(self):
        expected = commutator(
            W("a", 2), commutator(commutator(3, W("b", 4)), commutator(5, W(6, "c")))
        )
        assert parse_word("[m_a m2,[[m3,m_b m4],[m5,m6 m_c]]]") == expected

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("m1'", W(-1)),
            ("m1^m2", W(-2, 1, 2)),
            ("(m1 m2)^-1", W(-2, -1)),
            ("m1*m2", W(1, 2)),
            ("m1m2", W(1, 2)),
            ("m_12", W(12)),
            ("1", Word()),
            ("m1 1 m2", W(1, 2)),
            ("m1 # trailing comment\n m2", W(1, 2)),
            ("m1^m2 m3", W(-2, 1, 2, 3)),
            ("m1^(m2 m3)", W(-3, -2, 1, 2, 3)),
            ("m1^-1^m2", W(-2, -1, 2)),
            ("m_foo", W("foo")),
        ],
    )
    def test_forms(self, text, expected):
        assert parse_word(text) == expected

    @pytest.mark.parametrize(
        "text, pos",
        [("[m1,", 4), ("m1)", 2), ("", 0), ("m1^-2", 3), ("m0", 0), ("x1", 0), ("[m1 m2]", 6)],
    )
    def test_syntax_errors(self, text, pos):
        with pytest.raises(WordSyntaxError) as exc:
            parse_word(text)
        assert exc.value.position == pos

    def test_unknown_generator(self):
        with pytest.raises(UnknownGeneratorError) as exc:
            parse_word("m1 m_z", alphabet={1, 2})
        assert exc.value.identifier == "m_z"

    @given(words(6, 12))
    def test_round_trip(self, w):
        assert parse_word(str(w)) == w

    @given(st.lists(st.tuples(st.sampled_from([2, 3, "a", "b"]), st.sampled_from([1, -1])),
                    max_size=10))
    def test_round_trip_symbolic(self, raw):
        w = Word(raw)
        assert parse_word(str(w)) == w
