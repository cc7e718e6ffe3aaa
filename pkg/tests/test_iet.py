import random
from math import gcd

import pytest

from christoffel import (
    Composition,
    SlopeRatio,
    Word,
    build_sigma,
    conjugates,
    cycle_encodings,
    cyclic_restriction,
    enumerate_pc_words,
    is_circular,
    is_lyndon,
    is_perfectly_clustering,
    lower_christoffel,
    pak_redlich_circular,
    restriction_word_chain,
    standard_encoding,
    two_interval_circular,
)
from christoffel.errors import (
    AlphabetSizeMismatchError,
    EmptyCompositionError,
    NotCircularError,
    NotCoprimeError,
    RestrictionOutOfRangeError,
    SizeLimitError,
)

W = Word.parse


def compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


class TestBuildSigma:
    def test_example_2_2_5(self):
        assert build_sigma(Composition((2, 2, 5))).sigma.images == (7, 8, 5, 6, 0, 1, 2, 3, 4)

    def test_zero_middle_part_is_translation(self):
        assert build_sigma(Composition((2, 0, 3))).sigma.images == (3, 4, 0, 1, 2)

    def test_swap(self):
        assert build_sigma(Composition((1, 1))).sigma.images == (1, 0)

    def test_three_part_local_translations(self):
        """For three intervals the map is piecewise translation."""
        for c1, c2, c3 in compositions(11, 3):
            if c1 + c2 + c3 == 0:
                continue
            sigma = build_sigma(Composition((c1, c2, c3))).sigma
            for x in range(c1 + c2 + c3):
                if x < c1:
                    assert sigma(x) == x + c2 + c3
                elif x < c1 + c2:
                    assert sigma(x) == x + c3 - c1
                else:
                    assert sigma(x) == x - c1 - c2

    def test_empty_composition(self):
        with pytest.raises(EmptyCompositionError):
            Composition(())
        with pytest.raises(EmptyCompositionError):
            Composition((0, 0))


class TestCircularity:
    def test_examples(self):
        assert is_circular(build_sigma(Composition((2, 2, 5))))
        assert not is_circular(build_sigma(Composition((2, 2, 2))))
        assert is_circular(build_sigma(Composition((1, 1))))

    def test_gcd_criteria_examples(self):
        assert pak_redlich_circular(2, 2, 5)
        assert not pak_redlich_circular(2, 2, 2)
        assert two_interval_circular(1, 1)

    def test_pak_redlich_small_sweep(self):
        for parts in compositions(16, 3):
            assert pak_redlich_circular(*parts) == is_circular(build_sigma(Composition(parts)))

    def test_two_interval_sweep(self):
        for total in range(1, 61):
            for c1 in range(total + 1):
                parts = (c1, total - c1)
                assert two_interval_circular(*parts) == is_circular(build_sigma(Composition(parts)))


class TestStandardEncoding:
    def test_section_example(self):
        word = standard_encoding(build_sigma(Composition((2, 2, 5))), ("a", "b", "c"))
        assert "".join(word.letters) == "acbcbcacc"

    def test_zero_part_gives_christoffel(self):
        word = standard_encoding(build_sigma(Composition((2, 0, 3))), (0, 1, 2))
        assert word == lower_christoffel(SlopeRatio(3, 2), (0, 2))

    def test_three_letters(self):
        word = standard_encoding(build_sigma(Composition((1, 1, 2))), (-1, 0, 1))
        assert word.letters == (-1, 1, 0, 1)

    def test_not_circular(self):
        with pytest.raises(NotCircularError):
            standard_encoding(build_sigma(Composition((2, 2, 2))), (0, 1, 2))

    def test_alphabet_size(self):
        with pytest.raises(AlphabetSizeMismatchError):
            standard_encoding(build_sigma(Composition((1, 1))), (0, 1, 2))

    def test_letter_multiplicities(self):
        rng = random.Random(8)
        found = 0
        while found < 40:
            parts = tuple(rng.randint(0, 6) for _ in range(3))
            if sum(parts) == 0:
                continue
            exchange = build_sigma(Composition(parts))
            if not is_circular(exchange):
                continue
            word = standard_encoding(exchange, (0, 1, 2))
            assert tuple(word.count(j) for j in range(3)) == parts
            found += 1

    def test_encodings_form_conjugacy_class(self):
        exchange = build_sigma(Composition((2, 2, 5)))
        all_words = cycle_encodings(exchange, (0, 1, 2))
        standard = standard_encoding(exchange, (0, 1, 2))
        assert sorted(all_words) == sorted(conjugates(standard))

    def test_encoding_is_pc_lyndon(self):
        for total in range(2, 17):
            for parts in compositions(total, 3):
                exchange = build_sigma(Composition(parts))
                if not is_circular(exchange):
                    continue
                word = standard_encoding(exchange, (0, 1, 2))
                assert is_lyndon(word)
                assert is_perfectly_clustering(word)


class TestCyclicRestriction:
    def test_identity_restriction(self):
        base = build_sigma(Composition((4, 7)))
        restricted = cyclic_restriction(base, 11)
        assert restricted.sigma == base.sigma
        assert restricted.composition.parts == (4, 0, 7)

    def test_known_restrictions(self):
        base = build_sigma(Composition((4, 7)))
        assert cyclic_restriction(base, 9).sigma == build_sigma(Composition((2, 2, 5))).sigma
        assert cyclic_restriction(base, 10).sigma == build_sigma(Composition((3, 1, 6))).sigma

    def test_out_of_range(self):
        base = build_sigma(Composition((4, 7)))
        with pytest.raises(RestrictionOutOfRangeError):
            cyclic_restriction(base, 6)  # i = 5 exceeds min(4, 7)
        with pytest.raises(RestrictionOutOfRangeError):
            cyclic_restriction(base, 12)

    def test_requires_coprime(self):
        with pytest.raises(NotCoprimeError):
            cyclic_restriction(build_sigma(Composition((2, 4))), 5)

    def test_random_two_interval_cases(self):
        rng = random.Random(12)
        checked = 0
        while checked < 60:
            gamma, rho = rng.randint(1, 12), rng.randint(1, 12)
            if gcd(gamma, rho) != 1:
                continue
            base = build_sigma(Composition((gamma, rho)))
            i = rng.randint(0, min(gamma, rho))
            restricted = cyclic_restriction(base, gamma + rho - i)
            assert restricted.composition.parts == (gamma - i, i, rho - i)
            checked += 1


class TestRestrictionWordChain:
    def test_example_4_7(self):
        chain = restriction_word_chain(4, 7, ("a", "b", "c"))
        assert [("".join(w.letters), pos) for w, pos in chain] == [
            ("acaccaccacc", None),
            ("acbcaccacc", 3),
            ("acbcbcacc", 5),
            ("acbcbcbc", 7),
            ("bbcbcbc", 1),
        ]

    def test_smallest_cases(self):
        assert [(str(w), pos) for w, pos in restriction_word_chain(1, 2)] == [
            ("022", None), ("12", 1)]
        # (1, 1): the single merge replaces the whole word "ac" by "b"
        assert [(str(w), pos) for w, pos in restriction_word_chain(1, 1)] == [
            ("02", None), ("1", 1)]

    def test_parameter_validation(self):
        with pytest.raises(NotCoprimeError):
            restriction_word_chain(2, 4)
        with pytest.raises(RestrictionOutOfRangeError):
            restriction_word_chain(3, 2)

    def test_merges_replace_ac_and_do_not_overlap(self):
        rng = random.Random(13)
        checked = 0
        while checked < 25:
            gamma = rng.randint(1, 8)
            rho = rng.randint(gamma + 1, 17)
            if gcd(gamma, rho) != 1:
                continue
            n = gamma + rho
            gamma_inv = pow(gamma, -1, n)
            chain = restriction_word_chain(gamma, rho, (0, 1, 2))
            start = chain[0][0]
            blocks = []
            for j in range(1, gamma + 1):
                pos = (j * gamma_inv) % n
                assert start[pos - 1] == 0 and start[pos] == 2
                blocks.append((pos - 1, pos))
            flattened = [x for b in blocks for x in b]
            assert len(set(flattened)) == len(flattened)
            # consecutive words differ by one "ac" -> "b" substitution
            for (prev, _), (cur, pos) in zip(chain, chain[1:]):
                t = prev.letters
                assert t[pos - 1] == 0 and t[pos] == 2
                assert t[:pos - 1] + (1,) + t[pos + 1:] == cur.letters
            checked += 1


class TestEnumeration:
    def test_length_two(self):
        assert enumerate_pc_words(2, 2) == [Word((0, 1))]

    def test_contains_section_example(self):
        words = enumerate_pc_words(9, 3)
        assert Word((0, 2, 1, 2, 1, 2, 0, 2, 2)) in words  # acbcbcacc

    def test_length_seven_binary(self):
        words = enumerate_pc_words(7, 2)
        by_slopes = sorted(
            lower_christoffel(SlopeRatio(r, 7 - r)) for r in range(8)
            if gcd(r, 7 - r) == 1)
        assert words == by_slopes

    def test_binary_words_are_christoffel_conjugates(self):
        from christoffel import is_christoffel
        for n in range(2, 13):
            for w in enumerate_pc_words(n, 2):
                if len(w.alphabet()) == 2:
                    assert is_christoffel(w) == "lower"

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            enumerate_pc_words(25, 2)
        with pytest.raises(SizeLimitError):
            enumerate_pc_words(4, 4)

    def test_unique_palindromic_split_of_pc_lyndon_words(self):
        """Exactly one proper palindromic split, exhaustively.

        The Lyndon restriction matters: 010 is perfectly clustering (the
        table is shared by the whole conjugacy class) yet admits no
        proper palindromic split at all.
        """
        from christoffel import palindromic_factorization
        for n in range(2, 17):
            for ell in (2, 3):
                if ell == 3 and n > 14:
                    continue
                for w in enumerate_pc_words(n, ell):
                    first, second = palindromic_factorization(w)
                    assert first + second == w

    def test_pc_is_a_class_property(self):
        """All rotations share one table, so they are PC together."""
        for w in enumerate_pc_words(9, 3):
            assert all(is_perfectly_clustering(c) for c in conjugates(w))
