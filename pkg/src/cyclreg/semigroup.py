"""Finite semigroups as Cayley tables.

Tables are built either directly or from a finite presentation by
shortlex rewriting.  The regularity notions (regular elements, cyclic
regularity, regular closedness) and brute-force identity checking live
here too.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from .words import Identity, Letter, ParseError, Word, _parse_word_at, letter, letter_name, power

__all__ = [
    "CayleyTable", "Presentation", "ClosureError", "ZERO", "BUILTIN_NAMES",
    "close_presentation", "builtin", "presentation_of",
    "evaluate_word", "regular_elements", "idempotents",
    "cyclic_regularity_witness", "is_cyclically_regular",
    "regular_closure_witness", "is_regularly_closed",
    "counterexample", "satisfies_identity", "identities_1_2", "check_identities_1_2",
    "principal_ideal", "format_assignment",
]

# assignments evaluated per numpy batch in counterexample search
_CHUNK = 1 << 16


class CayleyTable:
    """A finite semigroup given by its multiplication table.

    Elements are the indices ``0..order-1``.  The table is validated on
    construction (shape, range, associativity, generation, zero) and is
    read-only afterwards.
    """

    def __init__(self, table, names: Optional[Sequence[str]] = None,
                 generators: Optional[Mapping[str, int]] = None,
                 zero: Optional[int] = None, check: bool = True):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError("a Cayley table is a non-empty square array")
        k = arr.shape[0]
        if arr.min() < 0 or arr.max() >= k:
            raise ValueError("table entries must be element indices 0..order-1")
        arr.setflags(write=False)
        self._arr = arr
        self.table = tuple(tuple(int(v) for v in row) for row in arr)
        self.names = tuple(names) if names is not None else tuple(f"s{i}" for i in range(k))
        if len(self.names) != k or len(set(self.names)) != k:
            raise ValueError("element names must be distinct, one per element")
        if generators is None:
            generators = {nm: i for i, nm in enumerate(self.names)}
        self.generators = dict(generators)
        self.zero = zero
        if check:
            self._validate()

    def _validate(self):
        t = self._arr
        bad = np.argwhere(t[t] != t[:, t])
        if len(bad):
            a, b, c = (int(v) for v in bad[0])
            raise ValueError(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})")
        for g in self.generators.values():
            if not 0 <= g < self.order:
                raise ValueError(f"generator index {g} out of range")
        reached = set(self.generators.values())
        frontier = list(reached)
        while frontier:
            new = []
            for e in frontier:
                for g in self.generators.values():
                    for p in (self.table[e][g], self.table[g][e]):
                        if p not in reached:
                            reached.add(p)
                            new.append(p)
            frontier = new
        if len(reached) != self.order:
            raise ValueError("generators do not generate the whole table")
        if self.zero is not None:
            z = self.zero
            if not (np.all(t[z, :] == z) and np.all(t[:, z] == z)):
                raise ValueError(f"element {z} is not a zero")

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def array(self) -> np.ndarray:
        return self._arr

    def __len__(self) -> int:
        return self.order

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None

    def __eq__(self, other):
        return isinstance(other, CayleyTable) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"CayleyTable(order={self.order}, names={list(self.names)})"

    def __str__(self) -> str:
        w = max(len(n) for n in self.names)
        head = " " * w + " | " + " ".join(n.rjust(w) for n in self.names)
        lines = [head, "-" * len(head)]
        for i, row in enumerate(self.table):
            lines.append(self.names[i].rjust(w) + " | " +
                         " ".join(self.names[v].rjust(w) for v in row))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"order": self.order, "names": list(self.names),
                "table": [list(r) for r in self.table],
                "generators": dict(self.generators), "zero": self.zero}

    @classmethod
    def from_dict(cls, d: dict) -> "CayleyTable":
        return cls(d["table"], names=d["names"], generators=d["generators"], zero=d.get("zero"))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# -- presentations -------------------------------------------------------------

ZERO = None  # stands for the absorbing element on a relation side


class ClosureError(RuntimeError):
    """A presentation could not be turned into a finite table."""


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[Optional[Word], Optional[Word]], ...]

    def __post_init__(self):
        gens = set(self.generators)
        if len(gens) != len(self.generators) or not gens:
            raise ValueError("generators must be distinct and non-empty")
        for lhs, rhs in self.relations:
            if lhs is ZERO and rhs is ZERO:
                raise ValueError("relation 0 = 0 is meaningless")
            for side in (lhs, rhs):
                if side is not ZERO and not {letter_name(x) for x in side} <= gens:
                    raise ValueError(f"relation side {side} uses an undeclared generator")

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        """Read the ``gens: x y`` / ``word = word`` / ``word = 0`` format."""
        gens = None
        rels = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0]
            if not line.strip():
                continue
            if line.strip().startswith("gens:"):
                if gens is not None:
                    raise ParseError("duplicate 'gens:' line", line=lineno)
                gens = tuple(line.strip()[5:].split())
                for g in gens:
                    if len(g) != 1 or not g.islower() or not g.isascii():
                        raise ParseError(f"bad generator name {g!r}", line=lineno)
                continue
            if gens is None:
                raise ParseError("'gens:' must come before relations", line=lineno)
            if line.count("=") != 1:
                raise ParseError("expected '<word> = <word>' or '<word> = 0'", line=lineno)
            i = line.index("=")
            sides = []
            for part, offset in ((line[:i], 0), (line[i + 1:], i + 1)):
                if part.strip() == "0":
                    sides.append(ZERO)
                    continue
                try:
                    sides.append(_parse_word_at(part, offset))
                except ParseError as e:
                    raise ParseError(e.message, column=e.column, line=lineno) from None
            rels.append(tuple(sides))
        if gens is None:
            raise ParseError("missing 'gens:' line")
        try:
            return cls(gens, tuple(rels))
        except ValueError as e:
            raise ParseError(str(e)) from None

    def __str__(self) -> str:
        lines = ["gens: " + " ".join(self.generators)]
        for lhs, rhs in self.relations:
            lines.append(" = ".join("0" if s is ZERO else s.pretty() for s in (lhs, rhs)))
        return "\n".join(lines)


def _orient(p: Presentation):
    rank = {letter(g): i for i, g in enumerate(p.generators)}

    def key(w):
        return (len(w), [rank[x] for x in w])

    rules = []
    for lhs, rhs in p.relations:
        if rhs is ZERO:
            rules.append((lhs.letters, ZERO))
        elif lhs is ZERO:
            rules.append((rhs.letters, ZERO))
        elif lhs != rhs:
            big, small = (lhs, rhs) if key(lhs.letters) > key(rhs.letters) else (rhs, lhs)
            rules.append((big.letters, small.letters))
    return rules


def _find(word: tuple, pat: tuple) -> int:
    n = len(pat)
    for i in range(len(word) - n + 1):
        if word[i:i + n] == pat:
            return i
    return -1


def _reducer(rules):
    cache: dict = {}

    def reduce(word: tuple):
        if word in cache:
            return cache[word]
        w = word
        while True:
            best = None
            for lhs, rhs in rules:
                i = _find(w, lhs)
                if i >= 0 and (best is None or i < best[0]):
                    best = (i, lhs, rhs)
            if best is None:
                break
            i, lhs, rhs = best
            if rhs is ZERO:
                w = ZERO
                break
            w = w[:i] + rhs + w[i + len(lhs):]
        cache[word] = w
        return w

    return reduce


def close_presentation(p: Presentation, cap: int = 16) -> CayleyTable:
    """Enumerate the semigroup presented by ``p`` as a Cayley table.

    Relations are oriented shortlex-decreasing (longer side to shorter,
    ties towards the lexicographically smaller side in generator order)
    and every product is rewritten to a normal form.  Raises
    ClosureError when more than ``cap`` elements appear or when the
    finished table violates associativity or a defining relation, which
    both mean the rewriting system is not confluent.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    reduce = _reducer(_orient(p))
    gens = [letter(g) for g in p.generators]
    elements: list[tuple] = []
    index: dict[tuple, int] = {}
    has_zero = False

    def admit(nf, why):
        nonlocal has_zero
        if nf is ZERO:
            has_zero = True
        elif nf not in index:
            index[nf] = len(elements)
            elements.append(nf)
        if len(elements) + has_zero > cap:
            raise ClosureError(f"more than {cap} elements; {why} did not stabilize "
                               f"(presentation infinite or cap too small)")

    for g in gens:
        admit(reduce((g,)), f"generator {letter_name(g)}")
    i = 0
    while i < len(elements):
        e = elements[i]
        for g in gens:
            admit(reduce(e + (g,)), f"product {Word(e).pretty()}*{letter_name(g)}")
        i += 1

    k = len(elements) + has_zero
    zero = len(elements) if has_zero else None

    def idx(nf):
        return zero if nf is ZERO else index[nf]

    table = [[idx(reduce(a + b)) for b in elements] + ([zero] if has_zero else [])
             for a in elements]
    if has_zero:
        table.append([zero] * k)
    names = [Word(e).pretty() for e in elements] + (["0"] if has_zero else [])
    generators = {letter_name(g): idx(reduce((g,))) for g in gens}
    try:
        S = CayleyTable(table, names=names, generators=generators, zero=zero)
    except ValueError as e:
        raise ClosureError(f"rewriting is not confluent: {e}") from None
    for lhs, rhs in p.relations:
        vals = [zero if s is ZERO else _eval_gens(S, s) for s in (lhs, rhs)]
        if vals[0] != vals[1] or vals[0] is None:
            sides = " = ".join("0" if s is ZERO else s.pretty() for s in (lhs, rhs))
            raise ClosureError(f"relation {sides} fails in the constructed table")
    return S


def _eval_gens(S: CayleyTable, w: Word) -> int:
    v = S.generators[letter_name(w[0])]
    for x in w.letters[1:]:
        v = S.table[v][S.generators[letter_name(x)]]
    return v


# -- named semigroups ----------------------------------------------------------

_PRESENTATIONS = {
    "A0": "gens: a b\na^2 = a\nb^2 = b\nba = 0",
    "A": "gens: x y\nx = x^2\ny^2 = 0\nxy = yx",
    "B": "gens: x y\nx^2 = 0\ny^2 = 0\nxyx = yxy",
    "Cl": "gens: x y\nx^2 = x^3\nxy = y\nyx^2 = 0\ny^2 = 0",
    "Cr": "gens: x y\nx^2 = x^3\nyx = y\nx^2y = 0\ny^2 = 0",
    "N3": "gens: x\nx^3 = 0",
    "D": "gens: x y\nx^2 = 0\ny = y^2\nyxy = 0",
}

BUILTIN_NAMES = ("A0", "A", "B", "Cl", "Cr", "N3", "D", "K")


def presentation_of(name: str, n: Optional[int] = None) -> Presentation:
    if name == "K":
        if n is None or n < 1:
            raise ValueError("K needs a parameter n >= 1")
        lines = ["gens: x y", "x^2 = 0", f"y^2 = y^{n + 2}", "yxy = 0"]
        lines += [f"xy^{q}x = 0" for q in range(2, n + 1)]
        lines.append(f"xyx = xy^{n + 1}x")
        return Presentation.parse("\n".join(lines))
    if name not in _PRESENTATIONS:
        raise ValueError(f"unknown semigroup {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
    return Presentation.parse(_PRESENTATIONS[name])


_builtin_cache: dict = {}


def builtin(name: str, n: Optional[int] = None) -> CayleyTable:
    """A0, one of the forbidden semigroups A, B, Cl, Cr, N3, D, or K_n."""
    key = (name, n if name == "K" else None)
    if key not in _builtin_cache:
        p = presentation_of(name, n)
        cap = 8 * n + 16 if name == "K" else 16
        _builtin_cache[key] = close_presentation(p, cap)
    return _builtin_cache[key]


# -- element-level notions -----------------------------------------------------

def _letter_key(x) -> Letter:
    return letter(x) if isinstance(x, str) else x


def evaluate_word(S: CayleyTable, w: Word, assignment: Mapping) -> int:
    sigma = {_letter_key(k): v for k, v in assignment.items()}
    try:
        v = sigma[w[0]]
        for x in w.letters[1:]:
            v = S.table[v][sigma[x]]
    except KeyError as e:
        raise ValueError(f"letter {letter_name(e.args[0])!r} is unassigned") from None
    return v


def regular_elements(S: CayleyTable) -> frozenset[int]:
    t = S.array
    return frozenset(b for b in range(S.order) if np.any(t[t[b, :], b] == b))


def idempotents(S: CayleyTable) -> frozenset[int]:
    return frozenset(e for e in range(S.order) if S.table[e][e] == e)


def cyclic_regularity_witness(S: CayleyTable) -> Optional[tuple[int, Optional[int]]]:
    """First (a, x) with a*x*a not regular; x None means a*a."""
    reg = regular_elements(S)
    t = S.table
    for a in range(S.order):
        if t[a][a] not in reg:
            return (a, None)
        for x in range(S.order):
            if t[t[a][x]][a] not in reg:
                return (a, x)
    return None


def is_cyclically_regular(S: CayleyTable) -> bool:
    return cyclic_regularity_witness(S) is None


def regular_closure_witness(S: CayleyTable) -> Optional[tuple[int, int]]:
    reg = regular_elements(S)
    for a in sorted(reg):
        for b in sorted(reg):
            if S.table[a][b] not in reg:
                return (a, b)
    return None


def is_regularly_closed(S: CayleyTable) -> bool:
    return regular_closure_witness(S) is None


def principal_ideal(S: CayleyTable, a: int) -> frozenset[int]:
    t = S.array
    left, right = t[:, a], t[a, :]
    return frozenset({a, *left.tolist(), *right.tolist(), *t[left, :].ravel().tolist()})


# -- identities ----------------------------------------------------------------

def _evaluate_batch(t: np.ndarray, w: Word, cols: dict) -> np.ndarray:
    v = cols[w[0]]
    for x in w.letters[1:]:
        v = t[v, cols[x]]
    return v


def counterexample(S: CayleyTable, identity: Identity) -> Optional[dict[Letter, int]]:
    """Lexicographically first violating assignment, or None if the identity holds.

    Letters are ordered by id and elements by index, first letter most
    significant.
    """
    letters = identity.letters
    k, m = S.order, len(letters)
    total = k ** m
    t = S.array
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK))
        digits = np.unravel_index(idx, (k,) * m)
        cols = dict(zip(letters, digits))
        diff = _evaluate_batch(t, identity.lhs, cols) != _evaluate_batch(t, identity.rhs, cols)
        if diff.any():
            j = int(np.argmax(diff))
            return {x: int(cols[x][j]) for x in letters}
    return None


def satisfies_identity(S: CayleyTable, identity: Identity) -> bool:
    return counterexample(S, identity) is None


def identities_1_2(n: int) -> tuple[Identity, Identity]:
    """x^2 = x^(n+2) and xyx = (xy)^(n+1)x."""
    if n < 1:
        raise ValueError("n must be positive")
    x, y = letter("x"), letter("y")
    xy = Word((x, y))
    return (Identity(power(x, 2), power(x, n + 2)),
            Identity(Word((x, y, x)), xy * (n + 1) + Word((x,))))


def check_identities_1_2(S: CayleyTable, n: int) -> bool:
    return all(satisfies_identity(S, i) for i in identities_1_2(n))


def format_assignment(S: CayleyTable, sigma: Mapping[Letter, int]) -> str:
    return ", ".join(f"{letter_name(x)}->{S.names[v]}" for x, v in sorted(sigma.items()))
