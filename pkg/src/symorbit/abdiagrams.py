"""Alternating ab-strings and ab-diagrams.

A row is a pair (first letter, length); alternation makes the rest of the
word implicit.  A diagram is the tuple of its rows sorted canonically
(length descending, 'a'-leading before 'b'-leading), so two diagrams are
equal exactly when they are the same multiset of rows.

The ortho-symmetric diagrams are the ones that split into the three
standard pieces:

    alpha(k)   single odd row  (ab)^k a      k+1 a's, k b's,  k >= 0
    beta(k)    single odd row  (ba)^k b      k a's, k+1 b's,  k >= 0
    epsilon(k) even rows (ab)^k and (ba)^k   2k a's, 2k b's,  k >= 1

Equivalently, the counts of the subwords (ab)^h and (ba)^h agree for every
h; both characterizations are implemented and checked against each other.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import cycle
from typing import Iterable, NamedTuple

from .partitions import Partition

Row = tuple[str, int]
Diagram = tuple[Row, ...]

LETTERS = ("a", "b")
LETTER_BOUND = 64


def other(letter: str) -> str:
    return "b" if letter == "a" else "a"


def make_row(first: str, length: int) -> Row:
    if first not in LETTERS:
        raise ValueError(f"row must start with 'a' or 'b', got {first!r}")
    if length < 1:
        raise ValueError(f"row length must be positive, got {length}")
    return (first, length)


def row_word(row: Row) -> str:
    first, length = row
    return (first + other(first)) * (length // 2) + first * (length % 2)


def row_letter_counts(row: Row) -> tuple[int, int]:
    """(#a, #b) of the row; the leading letter takes the extra odd slot."""
    first, length = row
    lead, trail = (length + 1) // 2, length // 2
    return (lead, trail) if first == "a" else (trail, lead)


def canonical(rows: Iterable[Row]) -> Diagram:
    return tuple(sorted(rows, key=lambda r: (-r[1], r[0])))


def diagram_key(diagram: Diagram):
    """Sort key giving a fixed total order on diagrams."""
    return tuple((-length, first) for first, length in diagram)


def parse_diagram(text: str) -> Diagram:
    """Parse rows separated by '/', e.g. 'ababa/ba/b/a'; '' is the empty diagram."""
    s = text.strip()
    if not s:
        return ()
    rows = []
    for chunk in s.split("/"):
        word = chunk.strip()
        if not word:
            raise ValueError(f"empty row in diagram literal {text!r}")
        if any(ch not in LETTERS for ch in word):
            raise ValueError(f"row {word!r} contains letters outside a/b")
        for ch, expected in zip(word, cycle(word[0] + other(word[0]))):
            if ch != expected:
                raise ValueError(f"row {word!r} does not alternate")
        rows.append((word[0], len(word)))
    return canonical(rows)


def format_diagram(diagram: Diagram) -> str:
    return "/".join(row_word(row) for row in diagram)


def a_count(diagram: Diagram) -> int:
    return sum(row_letter_counts(row)[0] for row in diagram)


def b_count(diagram: Diagram) -> int:
    return sum(row_letter_counts(row)[1] for row in diagram)


@lru_cache(maxsize=None)
def a_partition(diagram: Diagram) -> Partition:
    """Per-row a-counts as a partition (zero rows dropped)."""
    counts = sorted((row_letter_counts(row)[0] for row in diagram), reverse=True)
    return tuple(c for c in counts if c > 0)


@lru_cache(maxsize=None)
def b_partition(diagram: Diagram) -> Partition:
    """Per-row b-counts as a partition (zero rows dropped)."""
    counts = sorted((row_letter_counts(row)[1] for row in diagram), reverse=True)
    return tuple(c for c in counts if c > 0)


def substring_count(diagram: Diagram, h: int, leading: str) -> int:
    """Occurrences of (ab)^h (leading='a') or (ba)^h (leading='b') in the rows.

    A start position works iff it carries the leading letter and leaves 2h
    letters, so counting odd/even positions gives a closed form per row.
    """
    if h < 1:
        raise ValueError("h must be a positive integer")
    if leading not in LETTERS:
        raise ValueError(f"leading letter must be 'a' or 'b', got {leading!r}")
    total = 0
    for first, length in diagram:
        starts = length - 2 * h + 1
        if starts <= 0:
            continue
        total += (starts + 1) // 2 if leading == first else starts // 2
    return total


def has_property_P(diagram: Diagram) -> bool:
    """Counts of (ab)^h and (ba)^h agree for every h."""
    if not diagram:
        return True
    top = (diagram[0][1] + 1) // 2  # rows are sorted longest first
    return all(
        substring_count(diagram, h, "a") == substring_count(diagram, h, "b")
        for h in range(1, top + 1)
    )


class Indecomposable(NamedTuple):
    kind: str  # "alpha" | "beta" | "epsilon"
    k: int

    def rows(self) -> Diagram:
        if self.kind == "alpha":
            return (("a", 2 * self.k + 1),)
        if self.kind == "beta":
            return (("b", 2 * self.k + 1),)
        return (("a", 2 * self.k), ("b", 2 * self.k))

    def letter_counts(self) -> tuple[int, int]:
        if self.kind == "alpha":
            return (self.k + 1, self.k)
        if self.kind == "beta":
            return (self.k, self.k + 1)
        return (2 * self.k, 2 * self.k)


@lru_cache(maxsize=None)
def decompose(diagram: Diagram) -> tuple[Indecomposable, ...] | None:
    """Split into alpha/beta/epsilon pieces, or None when impossible.

    Odd rows convert directly; even rows must pair one 'a'-leading with one
    'b'-leading row of equal length, and any leftover even row is fatal.
    """
    pieces = []
    evens: Counter[Row] = Counter()
    for first, length in diagram:
        if length % 2 == 1:
            kind = "alpha" if first == "a" else "beta"
            pieces.append(Indecomposable(kind, (length - 1) // 2))
        else:
            evens[(first, length)] += 1
    for length in {length for _, length in evens}:
        pairs = evens[("a", length)]
        if pairs != evens[("b", length)]:
            return None
        pieces.extend([Indecomposable("epsilon", length // 2)] * pairs)
    return tuple(sorted(pieces))


def recompose(pieces: Iterable[Indecomposable]) -> Diagram:
    rows: list[Row] = []
    for piece in pieces:
        rows.extend(piece.rows())
    return canonical(rows)


def is_ortho_symmetric(diagram: Diagram) -> bool:
    return decompose(diagram) is not None


def o_stat(diagram: Diagram) -> int:
    """Number of odd-length rows."""
    return sum(1 for _, length in diagram if length % 2 == 1)


def delta_stat(diagram: Diagram) -> int:
    """Sum over odd lengths of (#a-leading rows) * (#b-leading rows)."""
    odd: Counter[Row] = Counter()
    for first, length in diagram:
        if length % 2 == 1:
            odd[(first, length)] += 1
    lengths = {length for _, length in odd}
    return sum(odd[("a", length)] * odd[("b", length)] for length in lengths)


@lru_cache(maxsize=None)
def enumerate_all_diagrams(na: int, nb: int) -> tuple[Diagram, ...]:
    """Every diagram (ortho-symmetric or not) with exactly na a's and nb b's."""
    if na < 0 or nb < 0:
        raise ValueError("letter counts must be nonnegative")
    types = [(first, length) for length in range(na + nb, 0, -1) for first in LETTERS]
    out: list[Diagram] = []
    acc: list[Row] = []

    def rec(start: int, ra: int, rb: int) -> None:
        if ra == 0 and rb == 0:
            out.append(tuple(acc))
            return
        for idx in range(start, len(types)):
            ca, cb = row_letter_counts(types[idx])
            if ca <= ra and cb <= rb:
                acc.append(types[idx])
                rec(idx, ra - ca, rb - cb)
                acc.pop()

    rec(0, na, nb)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_ortho(na: int, nb: int) -> tuple[Diagram, ...]:
    """All ortho-symmetric diagrams with exactly na a's and nb b's.

    Generated as multisets of indecomposable pieces fitting the letter
    budget, which is exponentially smaller than filtering all diagrams.
    Distinct multisets always assemble to distinct diagrams, but the
    result is deduplicated anyway and sorted into a fixed order.
    """
    if na < 0 or nb < 0:
        raise ValueError("letter counts must be nonnegative")
    if na + nb > LETTER_BOUND:
        raise ValueError(f"{na + nb} letters exceed the bound {LETTER_BOUND}")
    items: list[Indecomposable] = []
    for k in range(min(na - 1, nb), -1, -1):
        items.append(Indecomposable("alpha", k))
    for k in range(min(na, nb - 1), -1, -1):
        items.append(Indecomposable("beta", k))
    for k in range(min(na, nb) // 2, 0, -1):
        items.append(Indecomposable("epsilon", k))
    found: set[Diagram] = set()
    acc: list[Indecomposable] = []

    def rec(start: int, ra: int, rb: int) -> None:
        if ra == 0 and rb == 0:
            found.add(recompose(acc))
            return
        for idx in range(start, len(items)):
            ca, cb = items[idx].letter_counts()
            if ca <= ra and cb <= rb:
                acc.append(items[idx])
                rec(idx, ra - ca, rb - cb)
                acc.pop()

    rec(0, na, nb)
    return tuple(sorted(found, key=diagram_key))


def aug(base: Diagram, da: int, db: int) -> list[Diagram]:
    """Ortho-symmetric diagrams reachable from base by adding da a's and db b's.

    Requires every row of base to be odd and to start and end with 'a'
    (base may also be empty).  Use aug_any for arbitrary base diagrams.
    """
    for first, length in base:
        if first != "a" or length % 2 == 0:
            raise ValueError(
                "aug needs rows starting and ending with 'a'; use aug_any instead"
            )
    return aug_any(base, da, db)


def aug_any(base: Diagram, da: int, db: int) -> list[Diagram]:
    """aug without the precondition on the rows of base.

    Every row of base may grow at either end (alternation rules out
    interior insertion) and leftover letters open new rows; results are
    filtered for ortho-symmetry and deduplicated.  Exhaustive rather than
    clever: the call sites are all small.
    """
    if da < 0 or db < 0:
        raise ValueError("letter counts must be nonnegative")
    results: set[Diagram] = set()
    rows = list(base)
    acc: list[Row] = []

    def extend(idx: int, ra: int, rb: int) -> None:
        if idx == len(rows):
            for extra in enumerate_all_diagrams(ra, rb):
                candidate = canonical(acc + list(extra))
                if is_ortho_symmetric(candidate):
                    results.add(candidate)
            return
        first, length = rows[idx]
        base_a, base_b = row_letter_counts((first, length))
        budget = ra + rb
        for left in range(budget + 1):
            for right in range(budget - left + 1):
                grown = (first if left % 2 == 0 else other(first), length + left + right)
                ca, cb = row_letter_counts(grown)
                need_a, need_b = ca - base_a, cb - base_b
                if need_a <= ra and need_b <= rb:
                    acc.append(grown)
                    extend(idx + 1, ra - need_a, rb - need_b)
                    acc.pop()

    extend(0, da, db)
    return sorted(results, key=diagram_key)
