"""ab-diagram statistics and classification against brute-force oracles."""

import pytest

from symorbit.abdiagrams import (
    Indecomposable,
    a_count,
    a_partition,
    aug,
    aug_any,
    b_count,
    b_partition,
    canonical,
    decompose,
    delta_stat,
    diagram_key,
    enumerate_all_diagrams,
    enumerate_ortho,
    format_diagram,
    has_property_P,
    is_ortho_symmetric,
    o_stat,
    parse_diagram,
    recompose,
    row_word,
    substring_count,
)

PICTURE = parse_diagram("ababa/ba/b/a")


def diagrams_upto(letters):
    for total in range(letters + 1):
        for na in range(total + 1):
            yield from enumerate_all_diagrams(na, total - na)


def substring_count_oracle(diagram, h, leading):
    """Scan the literal row words for the pattern."""
    pattern = (leading + ("b" if leading == "a" else "a")) * h
    total = 0
    for row in diagram:
        word = row_word(row)
        total += sum(
            1 for i in range(len(word)) if word[i:].startswith(pattern)
        )
    return total


def property_p_oracle(diagram):
    if not diagram:
        return True
    top = max(length for _, length in diagram)
    return all(
        substring_count_oracle(diagram, h, "a") == substring_count_oracle(diagram, h, "b")
        for h in range(1, top + 1)
    )


def contains_row(big, small):
    """small appears as a contiguous alternating subword of big."""
    big_first, big_len = big
    small_first, small_len = small
    if small_len > big_len:
        return False
    if small_len == big_len:
        return small_first == big_first
    return True  # windows of both parities exist once big is strictly longer


def embeds(base, target):
    """Some injection matches every base row into a containing target row."""
    if not base:
        return True
    first, rest = base[0], base[1:]
    for idx, row in enumerate(target):
        if contains_row(row, first) and embeds(rest, target[:idx] + target[idx + 1:]):
            return True
    return False


def aug_oracle(base, da, db):
    """Definition-level augmentation: count, embedding and balance filter."""
    na, nb = a_count(base) + da, b_count(base) + db
    return sorted(
        (
            d
            for d in enumerate_all_diagrams(na, nb)
            if property_p_oracle(d) and embeds(base, d)
        ),
        key=diagram_key,
    )


class TestRowsAndParsing:
    def test_row_words(self):
        assert row_word(("a", 5)) == "ababa"
        assert row_word(("b", 4)) == "baba"
        assert row_word(("b", 1)) == "b"

    def test_parse_canonicalizes(self):
        assert parse_diagram("a/ba/b/ababa") == PICTURE
        assert parse_diagram("") == ()

    def test_format_round_trip(self):
        for diagram in diagrams_upto(7):
            assert parse_diagram(format_diagram(diagram)) == diagram

    @pytest.mark.parametrize("text", ["abba", "aab", "abc", "ab//a", "/", "a b"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_diagram(text)


class TestProjections:
    def test_a_partition_examples(self):
        assert a_partition(parse_diagram("ababa/a")) == (3, 1)
        assert a_partition(parse_diagram("b")) == ()
        assert a_partition(PICTURE) == (3, 1, 1)

    def test_b_partition_examples(self):
        assert b_partition(parse_diagram("ababa/a")) == (2,)
        assert b_partition(parse_diagram("a")) == ()
        assert b_partition(PICTURE) == (2, 1, 1)

    def test_sizes_match_letter_counts(self):
        for diagram in diagrams_upto(8):
            assert sum(a_partition(diagram)) == a_count(diagram)
            assert sum(b_partition(diagram)) == b_count(diagram)


class TestSubstringCounts:
    def test_picture_examples(self):
        assert substring_count(PICTURE, 1, "a") == 2
        assert substring_count(PICTURE, 1, "b") == 3
        assert substring_count(parse_diagram("a"), 1, "a") == 0
        assert substring_count(parse_diagram("a"), 3, "b") == 0

    def test_against_scanning_oracle(self):
        for diagram in diagrams_upto(8):
            for h in (1, 2, 3, 4):
                for leading in "ab":
                    assert substring_count(diagram, h, leading) == substring_count_oracle(
                        diagram, h, leading
                    )

    def test_odd_single_rows_count_down(self):
        # one occurrence fewer for each extra pair of letters consumed
        for k in range(6):
            alpha = (("a", 2 * k + 1),)
            for h in range(1, k + 1):
                assert substring_count(alpha, h, "a") == k - h + 1
                assert substring_count(alpha, h, "b") == k - h + 1

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            substring_count(PICTURE, 0, "a")
        with pytest.raises(ValueError):
            substring_count(PICTURE, 1, "c")


class TestPropertyP:
    def test_examples(self):
        assert has_property_P(parse_diagram("ababa"))
        assert not has_property_P(PICTURE)
        assert has_property_P(())

    def test_matches_oracle(self):
        for diagram in diagrams_upto(9):
            assert has_property_P(diagram) == property_p_oracle(diagram)


class TestIndecomposables:
    def test_letter_counts_table(self):
        for k in range(7):
            assert Indecomposable("alpha", k).letter_counts() == (k + 1, k)
            assert Indecomposable("beta", k).letter_counts() == (k, k + 1)
            if k >= 1:
                assert Indecomposable("epsilon", k).letter_counts() == (2 * k, 2 * k)

    def test_rows_have_property_p(self):
        for k in range(6):
            assert has_property_P(canonical(Indecomposable("alpha", k).rows()))
            assert has_property_P(canonical(Indecomposable("beta", k).rows()))
            if k >= 1:
                assert has_property_P(canonical(Indecomposable("epsilon", k).rows()))


class TestDecompose:
    def test_examples(self):
        assert decompose(parse_diagram("aba/a")) == (
            Indecomposable("alpha", 0),
            Indecomposable("alpha", 1),
        )
        assert decompose(parse_diagram("abab/baba")) == (Indecomposable("epsilon", 2),)
        assert decompose(parse_diagram("abab")) is None
        assert decompose(parse_diagram("b")) == (Indecomposable("beta", 0),)

    def test_reassembles(self):
        for diagram in diagrams_upto(9):
            pieces = decompose(diagram)
            if pieces is not None:
                assert recompose(pieces) == diagram

    def test_classification_equivalence(self):
        for diagram in diagrams_upto(10):
            assert is_ortho_symmetric(diagram) == property_p_oracle(diagram)


class TestStatistics:
    def test_o_stat(self):
        assert o_stat(parse_diagram("b/a/a/a")) == 4
        assert o_stat(parse_diagram("abab/baba")) == 0
        assert o_stat(parse_diagram("ababa/a")) == 2

    def test_delta_stat(self):
        assert delta_stat(parse_diagram("b/a/a/a")) == 3
        assert delta_stat(parse_diagram("aba/bab")) == 1
        assert delta_stat(parse_diagram("ababa/a")) == 0


class TestEnumerateOrtho:
    def test_examples(self):
        assert {format_diagram(d) for d in enumerate_ortho(3, 1)} == {"aba/a", "a/a/a/b"}
        assert [format_diagram(d) for d in enumerate_ortho(1, 0)] == ["a"]
        assert {format_diagram(d) for d in enumerate_ortho(2, 2)} == {
            "ab/ba",
            "aba/b",
            "bab/a",
            "a/a/b/b",
        }

    def test_against_filter_oracle(self):
        for na in range(6):
            for nb in range(6):
                expected = {
                    d
                    for d in enumerate_all_diagrams(na, nb)
                    if property_p_oracle(d)
                }
                got = enumerate_ortho(na, nb)
                assert set(got) == expected
                assert len(got) == len(expected)

    def test_all_results_valid(self):
        for d in enumerate_ortho(5, 4):
            assert a_count(d) == 5 and b_count(d) == 4
            assert is_ortho_symmetric(d)

    def test_letter_bound(self):
        with pytest.raises(ValueError):
            enumerate_ortho(40, 40)


class TestAug:
    def test_worked_example(self):
        base = parse_diagram("aba/aba/b")
        got = {format_diagram(d) for d in aug_any(base, 1, 1)}
        assert got == {"ababa/aba/b", "aba/aba/bab", "aba/aba/a/b/b"}
        with pytest.raises(ValueError):
            aug(base, 1, 1)  # a row starts with b, so the checked form refuses

    def test_nothing_added(self):
        base = parse_diagram("aba/a")
        assert aug(base, 0, 0) == [base]

    def test_lone_b_opens_new_row(self):
        base = parse_diagram("a/a/a")
        assert [format_diagram(d) for d in aug(base, 0, 1)] == ["a/a/a/b"]

    def test_precondition(self):
        with pytest.raises(ValueError):
            aug(parse_diagram("ab"), 1, 0)
        with pytest.raises(ValueError):
            aug(parse_diagram("bab"), 1, 0)
        assert aug((), 1, 0) == [(("a", 1),)]

    @pytest.mark.parametrize(
        "base_text",
        ["", "a", "aba", "aba/aba/b", "a/a", "ab/ba", "b"],
    )
    def test_against_embedding_oracle(self, base_text):
        base = parse_diagram(base_text)
        for da in range(3):
            for db in range(3):
                assert aug_any(base, da, db) == aug_oracle(base, da, db)

    def test_growth_bound_small(self):
        # added odd rows can raise the odd-row surplus by at most max(da, db)
        for base_text in ("", "a", "a/a", "aba", "aba/a", "ababa/a/a"):
            base = parse_diagram(base_text)
            for da in range(4):
                for db in range(4 - da):
                    for grown in aug(base, da, db):
                        value = o_stat(grown) - 2 * delta_stat(grown) - o_stat(base)
                        assert value <= max(da, db)

    def test_single_b_equality_small(self):
        for base_text in ("", "a", "a/a", "aba", "aba/a", "aba/aba", "ababa/a/a"):
            base = parse_diagram(base_text)
            ones = sum(1 for _, length in base if length == 1)
            results = aug(base, 0, 1)
            assert results
            for grown in results:
                value = o_stat(grown) - 2 * delta_stat(grown) - o_stat(base)
                assert value == 1 - 2 * ones
