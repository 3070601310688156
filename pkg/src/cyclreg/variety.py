"""Decisions about the variety defined by a finite identity basis.

Two questions are answered:

* cyclic regularity of every member, by testing the basis against the
  forbidden semigroups A, B, Cl, Cr, N3, D and K_n (n up to a bound);
* regular closedness of every member, by looking for a basis identity
  whose sides are not similar.  The second answer comes with a derived
  consequence of the form ``x^k y^l = ...yx...``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional, Union

from .semigroup import builtin, satisfies_identity
from .words import (Identity, Letter, ParseError, Word, canonical_decomposition,
                    is_similar, letter, letter_name, parse_identity, power)

__all__ = [
    "Basis", "Case", "NonSimilarityCase", "ForbiddenWitness", "NonSimilarWitness", "Verdict",
    "FORBIDDEN", "parse_basis", "a0_holds", "classify_nonsimilarity", "derive_yx_identity",
    "is_yx_shaped", "decide_regular_closedness", "decide_cyclic_regularity",
    "cross_check_regular_closedness", "forbidden_semigroups",
]

FORBIDDEN = ("A", "B", "Cl", "Cr", "N3", "D")


@dataclass(frozen=True)
class Basis:
    identities: tuple[Identity, ...]

    def __post_init__(self):
        object.__setattr__(self, "identities", tuple(self.identities))
        if not self.identities:
            raise ValueError("a basis needs at least one identity")

    @classmethod
    def of(cls, *texts: str) -> "Basis":
        return cls(tuple(parse_identity(t) for t in texts))

    def __iter__(self):
        return iter(self.identities)

    def __len__(self):
        return len(self.identities)

    def __str__(self):
        return "\n".join(str(i) for i in self.identities)


def parse_basis(text: str) -> Basis:
    """One identity per line; ``#`` starts a comment."""
    ids = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        try:
            ids.append(parse_identity(line))
        except ParseError as e:
            raise ParseError(e.message, column=e.column, line=lineno) from None
    if not ids:
        raise ParseError("basis file contains no identities")
    return Basis(tuple(ids))


# -- similarity and the four non-similarity patterns ----------------------------

class Case(str, Enum):
    NOT_HOMOGENEOUS = "NOT_HOMOGENEOUS"
    E_DIFFERS = "E_DIFFERS"
    ORDER_DIFFERS = "ORDER_DIFFERS"
    SINGLETON_POWER = "SINGLETON_POWER"


@dataclass(frozen=True)
class NonSimilarityCase:
    """Why two words are not similar.

    ``side`` names the side that becomes the ``x^k y^l`` power side of the
    derived identity.  ``letters`` holds the exhibiting letters: the letter
    missing from ``side`` (NOT_HOMOGENEOUS), the pair (x, y) with x before y
    on ``side`` (E_DIFFERS, ORDER_DIFFERS), or the singleton letter
    (SINGLETON_POWER, together with its 1-based ``component``).
    """
    tag: Case
    side: str
    letters: tuple[Letter, ...]
    component: Optional[int] = None

    def to_dict(self) -> dict:
        return {"tag": self.tag.value, "side": self.side,
                "letters": [letter_name(x) for x in self.letters], "component": self.component}

    @classmethod
    def from_dict(cls, d: dict) -> "NonSimilarityCase":
        return cls(Case(d["tag"]), d["side"], tuple(letter(x) for x in d["letters"]),
                   d.get("component"))


def a0_holds(identity: Identity) -> bool:
    """Whether the identity holds in A0, decided from the words alone."""
    return is_similar(identity.lhs, identity.rhs)


def _numbers(w: Word) -> dict[Letter, int]:
    return {x: i for i, c in enumerate(canonical_decomposition(w).components, 1)
            for x in c.letters}


def _first_occurrence_order(*ws: Word) -> list[Letter]:
    seen: dict[Letter, None] = {}
    for w in ws:
        for x in w:
            seen.setdefault(x, None)
    return list(seen)


def classify_nonsimilarity(u: Word, v: Word) -> NonSimilarityCase:
    if is_similar(u, v):
        raise ValueError(f"{u.pretty()} and {v.pretty()} are similar")

    only_u = [x for x in _first_occurrence_order(u) if x not in v.content]
    only_v = [x for x in _first_occurrence_order(v) if x not in u.content]
    if only_u or only_v:
        # the power side is the one lacking the letter; prefer a letter that
        # is not only the last letter of its word (see derive_yx_identity)
        cands = [(x, "rhs", u) for x in only_u] + [(x, "lhs", v) for x in only_v]
        for x, side, w in cands:
            if any(y == x for y in w.letters[:-1]):
                return NonSimilarityCase(Case.NOT_HOMOGENEOUS, side, (x,))
        x, side, _ = cands[0]
        return NonSimilarityCase(Case.NOT_HOMOGENEOUS, side, (x,))

    nu, nv = _numbers(u), _numbers(v)
    order = _first_occurrence_order(u)
    for p, q in combinations(order, 2):
        eu, ev = nu[p] == nu[q], nv[p] == nv[q]
        if eu != ev:
            side, n = ("lhs", nu) if ev else ("rhs", nv)
            x, y = (p, q) if n[p] < n[q] else (q, p)
            return NonSimilarityCase(Case.E_DIFFERS, side, (x, y))
    for p, q in combinations(order, 2):
        if (nu[p] < nu[q]) != (nv[p] < nv[q]) and nu[p] != nu[q]:
            x, y = (p, q) if nu[p] < nu[q] else (q, p)
            return NonSimilarityCase(Case.ORDER_DIFFERS, "lhs", (x, y))

    # same letters, same components in the same order: some component is a
    # single letter z on one side and z^k (k > 1) on the other
    du, dv = canonical_decomposition(u), canonical_decomposition(v)
    for i, (cu, cv) in enumerate(zip(du.components, dv.components), 1):
        if (len(cu) == 1) != (len(cv) == 1):
            side = "lhs" if len(cu) == 1 else "rhs"
            (z,) = cu.letters
            return NonSimilarityCase(Case.SINGLETON_POWER, side, (z,), component=i)
    raise AssertionError(f"unclassified non-similar pair {u} / {v}")


# -- derived identities ---------------------------------------------------------

_X, _Y = letter("x"), letter("y")
_WX, _WY = Word((_X,)), Word((_Y,))


def _image(w: Word, f) -> Word:
    out: list[Letter] = []
    for t in w.letters:
        out.extend(f(t).letters)
    return Word(tuple(out))


def is_yx_shaped(identity: Identity) -> bool:
    """Left side x^k y^l (k, l >= 1) and right side containing ``yx``."""
    lhs = identity.lhs.letters
    k = next((i for i, t in enumerate(lhs) if t != _X), len(lhs))
    power_shape = 0 < k < len(lhs) and all(t == _Y for t in lhs[k:])
    rhs = identity.rhs.letters
    return power_shape and any(rhs[i] == _Y and rhs[i + 1] == _X for i in range(len(rhs) - 1))


def derive_yx_identity(identity: Identity) -> Identity:
    """A consequence ``x^k y^l = u' yx v'`` of an identity with non-similar sides.

    The letter map depends on the non-similarity case; see
    ``classify_nonsimilarity``.
    """
    u, v = identity.lhs, identity.rhs
    case = classify_nonsimilarity(u, v)
    power_side, other = (u, v) if case.side == "lhs" else (v, u)

    if case.tag is Case.NOT_HOMOGENEOUS:
        (t,) = case.letters
        m = max(2, len(power_side))
        # t -> xy, then a following letter's image starts with x; when t only
        # closes its word, t -> yx supplies the factor directly
        image_t = Word((_X, _Y)) if t in other.letters[:-1] else Word((_Y, _X))
        rhs = _image(other, lambda s: image_t if s == t else _WX) + power(_Y, m)
        derived = Identity(power(_X, len(power_side)) + power(_Y, m), rhs)
    elif case.tag in (Case.E_DIFFERS, Case.ORDER_DIFFERS):
        x, _ = case.letters
        n = _numbers(power_side)
        f = lambda s: _WX if n[s] <= n[x] else _WY  # noqa: E731
        derived = Identity(_image(power_side, f), _image(other, f))
    else:
        (z,), i = case.letters, case.component
        n = _numbers(power_side)
        xy = Word((_X, _Y))
        f = lambda s: xy if s == z else (_WX if n[s] <= i else _WY)  # noqa: E731
        derived = Identity(_image(power_side, f), _image(other, f))

    if not is_yx_shaped(derived):
        raise AssertionError(f"derivation from {identity} gave {derived}")
    return derived


# -- verdicts -------------------------------------------------------------------

@dataclass(frozen=True)
class ForbiddenWitness:
    semigroup: str
    n: Optional[int] = None

    @property
    def label(self) -> str:
        return f"K_{self.n}" if self.semigroup == "K" else self.semigroup

    def to_dict(self) -> dict:
        return {"kind": "forbidden", "semigroup": self.semigroup, "n": self.n}


@dataclass(frozen=True)
class NonSimilarWitness:
    index: int
    identity: Identity
    case: NonSimilarityCase
    derived: Identity

    def to_dict(self) -> dict:
        return {"kind": "non_similar", "index": self.index, "identity": str(self.identity),
                "case": self.case.to_dict(), "derived": str(self.derived)}


Witness = Union[ForbiddenWitness, NonSimilarWitness]


def _witness_from_dict(d: dict) -> Witness:
    if d["kind"] == "forbidden":
        return ForbiddenWitness(d["semigroup"], d.get("n"))
    if d["kind"] == "non_similar":
        return NonSimilarWitness(d["index"], parse_identity(d["identity"]),
                                 NonSimilarityCase.from_dict(d["case"]),
                                 parse_identity(d["derived"]))
    raise ValueError(f"unknown witness kind {d['kind']!r}")


@dataclass(frozen=True)
class Verdict:
    question: str
    answer: bool
    witnesses: tuple[Witness, ...] = ()
    parameters: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"question": self.question, "answer": self.answer,
                "witnesses": [w.to_dict() for w in self.witnesses],
                "parameters": dict(self.parameters)}

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        return cls(d["question"], d["answer"],
                   tuple(_witness_from_dict(w) for w in d["witnesses"]), dict(d["parameters"]))

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)


def decide_regular_closedness(basis: Basis) -> Verdict:
    """Are all semigroups of the variety regularly closed?

    Yes exactly when some basis identity has non-similar sides.  Every such
    identity is reported with its case and derived ``x^k y^l`` consequence.
    """
    witnesses = []
    for i, ident in enumerate(basis):
        if not is_similar(ident.lhs, ident.rhs):
            case = classify_nonsimilarity(ident.lhs, ident.rhs)
            witnesses.append(NonSimilarWitness(i, ident, case, derive_yx_identity(ident)))
    return Verdict("regular-closed", bool(witnesses), tuple(witnesses))


def cross_check_regular_closedness(basis: Basis) -> bool:
    """Same question as above, answered by brute force in the table of A0."""
    A0 = builtin("A0")
    return any(not satisfies_identity(A0, ident) for ident in basis)


def default_n_max(basis: Basis) -> int:
    return max(len(i.lhs) + len(i.rhs) for i in basis)


def forbidden_semigroups(n_max: int) -> list[tuple[str, Optional[int]]]:
    """(name, n) pairs in witness order: by name, then n."""
    items = [(name, None) for name in FORBIDDEN] + [("K", n) for n in range(1, n_max + 1)]
    return sorted(items, key=lambda p: (p[0], p[1] or 0))


def decide_cyclic_regularity(basis: Basis, n_max: Optional[int] = None) -> Verdict:
    """Are all semigroups of the variety cyclically regular?

    Yes when none of the forbidden semigroups (K_n for n <= n_max) satisfies
    the whole basis.  ``n_max`` defaults to the largest total length of a
    basis identity.
    """
    if n_max is None:
        n_max = default_n_max(basis)
    if n_max < 1:
        raise ValueError("n_max must be positive")
    witnesses = []
    for name, n in forbidden_semigroups(n_max):
        S = builtin(name, n)
        if all(satisfies_identity(S, ident) for ident in basis):
            witnesses.append(ForbiddenWitness(name, n))
    return Verdict("cyclic-regular", not witnesses, tuple(witnesses), {"n_max": n_max})
