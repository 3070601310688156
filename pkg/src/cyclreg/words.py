"""Words over a finite alphabet and their cycle structure.

A word is a non-empty sequence of letters.  Letters are small integers
interned from the lowercase ASCII names ``a``..``z``.  Everything here is a
pure function of immutable values.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby, product
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Letter", "Word", "Identity", "Component", "CanonicalDecomposition",
    "ParseError", "letter", "letter_name",
    "parse_word", "parse_identity", "power",
    "cycle_intervals", "canonical_decomposition", "cyclic_characteristic",
    "is_covered_by_cycles", "blocking_letters", "is_regular_word",
    "cyclic_number", "e_u_related", "leq_u", "is_homogeneous", "is_similar",
    "similarity_signature", "apply_letter_map", "words",
]

Letter = int

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


class ParseError(ValueError):
    """Malformed word, identity or file line; ``column`` is 1-based."""

    def __init__(self, message: str, column: int | None = None, line: int | None = None):
        self.message = message
        self.column = column
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


def letter(name: str) -> Letter:
    if len(name) != 1 or name not in _ALPHABET:
        raise ValueError(f"letter names are single characters a-z, got {name!r}")
    return ord(name) - ord("a")


def letter_name(x: Letter) -> str:
    return _ALPHABET[x]


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("words are non-empty")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))

    @classmethod
    def of(cls, text: str) -> "Word":
        return parse_word(text)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __mul__(self, k: int) -> "Word":
        return Word(self.letters * k)

    @property
    def content(self) -> frozenset[Letter]:
        return frozenset(self.letters)

    def __str__(self) -> str:
        return "".join(letter_name(x) for x in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def pretty(self) -> str:
        """Render with runs compressed, e.g. ``x^2yxy^3``."""
        out = []
        for x, run in groupby(self.letters):
            k = len(list(run))
            out.append(letter_name(x) if k == 1 else f"{letter_name(x)}^{k}")
        return "".join(out)


def power(x: Letter | str, k: int) -> Word:
    if isinstance(x, str):
        x = letter(x)
    return Word((x,) * k)


@dataclass(frozen=True)
class Identity:
    lhs: Word
    rhs: Word

    @classmethod
    def of(cls, text: str) -> "Identity":
        return parse_identity(text)

    @property
    def letters(self) -> list[Letter]:
        """Distinct letters of both sides, sorted by id."""
        return sorted(self.lhs.content | self.rhs.content)

    def swapped(self) -> "Identity":
        return Identity(self.rhs, self.lhs)

    def __str__(self) -> str:
        return f"{self.lhs.pretty()} = {self.rhs.pretty()}"


# -- parsing ---------------------------------------------------------------

class _Parser:
    # word   := factor+
    # factor := (LETTER | '(' word ')') ('^' INT)?
    def __init__(self, text: str, offset: int = 0):
        self.text = text
        self.pos = 0
        self.offset = offset

    def error(self, msg: str, pos: int | None = None):
        p = self.pos if pos is None else pos
        raise ParseError(msg, column=self.offset + p + 1)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def word(self) -> list[Letter]:
        out: list[Letter] = []
        while True:
            c = self.peek()
            if c == "" or c == ")":
                break
            out.extend(self.factor())
        return out

    def factor(self) -> list[Letter]:
        c = self.peek()
        start = self.pos
        if c == "(":
            self.pos += 1
            body = self.word()
            if self.peek() != ")":
                self.error("expected ')'")
            if not body:
                self.error("empty parenthesized word", start)
            self.pos += 1
        elif c and c in _ALPHABET:
            self.pos += 1
            body = [letter(c)]
        else:
            self.error(f"unexpected character {c!r}")
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            m = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if m == self.pos:
                self.error("expected exponent after '^'")
            k = int(self.text[m:self.pos])
            if k < 1:
                self.error("exponent must be >= 1", m)
            body = body * k
        return body


def _parse_word_at(text: str, offset: int) -> Word:
    p = _Parser(text, offset)
    letters = p.word()
    if p.peek() == ")":
        p.error("unbalanced ')'")
    if not letters:
        p.error("empty word")
    return Word(tuple(letters))


def parse_word(text: str) -> Word:
    """Parse ``x^2y(xy)^3``-style syntax into a flat word."""
    return _parse_word_at(text, 0)


def parse_identity(text: str) -> Identity:
    i = text.find("=")
    if i < 0:
        raise ParseError("an identity has the form '<word> = <word>'")
    j = text.find("=", i + 1)
    if j >= 0:
        raise ParseError("more than one '=' in identity", column=j + 1)
    return Identity(_parse_word_at(text[:i], 0), _parse_word_at(text[i + 1:], i + 1))


# -- cycle structure ---------------------------------------------------------

@dataclass(frozen=True)
class Component:
    start: int  # 1-based, inclusive
    end: int
    letters: frozenset[Letter]

    def __len__(self) -> int:
        return self.end - self.start + 1


@dataclass(frozen=True)
class CanonicalDecomposition:
    word: Word
    components: tuple[Component, ...]

    @property
    def m_c(self) -> int:
        return len(self.components)

    def subword(self, i: int) -> Word:
        """The i-th component (1-based) as a word."""
        c = self.components[i - 1]
        return Word(self.word.letters[c.start - 1:c.end])

    def __str__(self) -> str:
        return "".join(f"[{self.subword(i)}]" for i in range(1, self.m_c + 1))


def cycle_intervals(w: Word) -> list[tuple[int, int]]:
    """[first, last] occurrence (1-based) of every repeated letter, by start."""
    first: dict[Letter, int] = {}
    last: dict[Letter, int] = {}
    for pos, x in enumerate(w.letters, 1):
        first.setdefault(x, pos)
        last[x] = pos
    return [(first[x], last[x]) for x in first if last[x] > first[x]]


@lru_cache(maxsize=65536)
def canonical_decomposition(w: Word) -> CanonicalDecomposition:
    merged: list[list[int]] = []
    for a, b in cycle_intervals(w):
        # intervals arrive sorted by start; merge only on a shared position
        if merged and a <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], b)
        else:
            merged.append([a, b])
    comps = []
    pos = 1
    for a, b in merged + [[len(w) + 1, len(w) + 1]]:
        for p in range(pos, a):
            comps.append(Component(p, p, frozenset((w.letters[p - 1],))))
        if a <= len(w):
            comps.append(Component(a, b, frozenset(w.letters[a - 1:b])))
        pos = b + 1
    return CanonicalDecomposition(w, tuple(comps))


def cyclic_characteristic(w: Word) -> int:
    return canonical_decomposition(w).m_c


def is_covered_by_cycles(w: Word) -> bool:
    return all(len(c) >= 2 for c in canonical_decomposition(w).components)


def blocking_letters(w: Word) -> frozenset[Letter]:
    return frozenset(x for c in canonical_decomposition(w).components
                     if len(c) == 1 for x in c.letters)


def is_regular_word(w: Word) -> bool:
    return len(w) > 1 and cyclic_characteristic(w) == 1


def _numbers(w: Word) -> dict[Letter, int]:
    return {x: i for i, c in enumerate(canonical_decomposition(w).components, 1)
            for x in c.letters}


def cyclic_number(w: Word, x: Letter) -> int:
    """Index (1-based) of the component holding every occurrence of ``x``."""
    n = _numbers(w)
    if x not in n:
        raise ValueError(f"letter {letter_name(x)!r} does not occur in {w}")
    return n[x]


def e_u_related(w: Word, x: Letter, y: Letter) -> bool:
    return cyclic_number(w, x) == cyclic_number(w, y)


def leq_u(w: Word, x: Letter, y: Letter) -> bool:
    return cyclic_number(w, x) <= cyclic_number(w, y)


def is_homogeneous(u: Word, v: Word) -> bool:
    return u.content == v.content


@lru_cache(maxsize=65536)
def similarity_signature(w: Word) -> tuple[tuple[frozenset[Letter], bool], ...]:
    """Per component: its letter set and whether it is a single letter.

    Two words are similar exactly when their signatures are equal.
    """
    return tuple((c.letters, len(c) == 1) for c in canonical_decomposition(w).components)


def is_similar(u: Word, v: Word) -> bool:
    return similarity_signature(u) == similarity_signature(v)


def apply_letter_map(w: Word, f: Mapping[Letter, Word]) -> Word:
    out: list[Letter] = []
    for x in w.letters:
        try:
            out.extend(f[x].letters)
        except KeyError:
            raise ValueError(f"letter map has no image for {letter_name(x)!r}") from None
    return Word(tuple(out))


def words(alphabet: Iterable[Letter], max_len: int, min_len: int = 1) -> Iterator[Word]:
    """All words over ``alphabet`` with length in [min_len, max_len], shortlex order."""
    alphabet = tuple(alphabet)
    for n in range(min_len, max_len + 1):
        for t in product(alphabet, repeat=n):
            yield Word(t)
