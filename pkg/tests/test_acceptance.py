"""Acceptance criteria, one check per criterion.

Run under pytest (``pytest tests/test_acceptance.py -s`` shows the
PASS/FAIL lines) or directly with ``python tests/test_acceptance.py``.
"""
import random
import sys
import time
from itertools import product
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cyclreg.enumeration import enumerate_semigroups  # noqa: E402
from cyclreg.semigroup import (builtin, check_identities_1_2, cyclic_regularity_witness,  # noqa: E402
                               evaluate_word, is_cyclically_regular, is_regularly_closed,
                               presentation_of, principal_ideal, regular_elements,
                               satisfies_identity)
from cyclreg.variety import (Basis, cross_check_regular_closedness,  # noqa: E402
                             decide_regular_closedness, derive_yx_identity, is_yx_shaped)
from cyclreg.words import (Identity, Word, apply_letter_map, is_regular_word,  # noqa: E402
                           is_similar, letter, similarity_signature, words)

from oracles import regular_brute  # noqa: E402

X, Y, Z = letter("x"), letter("y"), letter("z")


def _table_words(S, ws, letters):
    """Value of every word under every assignment of ``letters`` (first letter most significant)."""
    k = S.order
    digits = np.unravel_index(np.arange(k ** len(letters)), (k,) * len(letters))
    cols = dict(zip(letters, digits))
    t = S.array
    out = []
    for w in ws:
        v = cols[w[0]]
        for c in w.letters[1:]:
            v = t[v, cols[c]]
        out.append(v)
    return np.array(out)


def criterion_1():
    A0 = builtin("A0")
    a, b, z, o = (A0.index(n) for n in ("a", "b", "ab", "0"))
    listed = {(a, a): a, (b, b): b, (a, b): z, (a, z): z, (z, b): z}
    table_ok = all(A0.mul(s, t) == listed.get((s, t), o) for s, t in product(range(4), repeat=2))
    ok = (A0.order == 4 and table_ok and is_cyclically_regular(A0)
          and regular_elements(A0) == {a, b, o} and not is_regularly_closed(A0))
    return ok, f"order {A0.order}, relations {'exact' if table_ok else 'WRONG'}"


def criterion_2():
    A0 = builtin("A0")
    ws = list(words([X, Y, Z], 6))
    # exhaustive substitution: every word evaluated under all 4^3 assignments
    vals = _table_words(A0, ws, [X, Y, Z])
    _, cls = np.unique(vals, axis=0, return_inverse=True)
    cls = cls.ravel()
    mismatches = 0
    for i, u in enumerate(ws):
        ci = cls[i]
        for j, v in enumerate(ws):
            if is_similar(u, v) != (ci == cls[j]):
                mismatches += 1
    # tie the precomputed vectors back to the public identity check
    rng = random.Random(2)
    for _ in range(500):
        u, v = rng.choice(ws), rng.choice(ws)
        if satisfies_identity(A0, Identity(u, v)) != is_similar(u, v):
            mismatches += 1
    return mismatches == 0, f"{len(ws) ** 2} identities, {mismatches} mismatches"


def criterion_3():
    failures = []
    for name, n in [("A", None), ("B", None), ("Cl", None), ("Cr", None), ("N3", None),
                    ("D", None), ("K", 1), ("K", 2), ("K", 3)]:
        S = builtin(name, n)
        w = cyclic_regularity_witness(S)
        label = name if n is None else f"K_{n}"
        if w is None or is_cyclically_regular(S):
            failures.append(label)
            continue
        a, x = w
        t = S.table
        axa = t[a][a] if x is None else t[t[a][x]][a]
        if axa in regular_brute(t):
            failures.append(label)
    return not failures, "all nine carry a non-regular a*x*a" if not failures else str(failures)


def criterion_4():
    A0 = builtin("A0")
    violations = 0
    premise = 0
    for k in (1, 2, 3, 4):
        for S in enumerate_semigroups(k):
            if any(check_identities_1_2(S, n) for n in (1, 2, 3)):
                premise += 1
                if not is_cyclically_regular(S):
                    violations += 1
    ok = check_identities_1_2(A0, 1) and violations == 0
    return ok, f"{premise} tables satisfy (1),(2) for some n <= 3; {violations} violations"


def _corpus():
    hand = [
        ["x = x^2"], ["xy = yx"], ["xyx = yxy"], ["x^2 = x^3"], ["x^2 = x^3", "xyx = (xy)^2x"],
        ["xyx = xyxyx"], ["x^2y^2 = y^2x^2"], ["xy = x"], ["xy = y"], ["x^2 = xyx"],
        ["x^2y^2 = xyyx"], ["x^2zy^2 = x^2z^2y^2"], ["xyz = xzy"], ["x = x^3"],
        ["xyx = x", "x^2 = x"], ["xzx = xzxzx", "xy = yx"], ["xyzx = xzyx"],
    ]
    bases = [Basis.of(*b) for b in hand]
    rng = random.Random(1234)
    ws = list(words([X, Y, Z], 5))
    by_sig = {}
    for w in ws:
        by_sig.setdefault(similarity_signature(w), []).append(w)
    multi = [g for g in by_sig.values() if len(g) > 1]
    while len(bases) < 80:
        ids = []
        for _ in range(rng.randint(1, 3)):
            if rng.random() < 0.5:
                u, v = rng.sample(rng.choice(multi), 2)
            else:
                u, v = rng.choice(ws), rng.choice(ws)
            ids.append(Identity(u, v))
        bases.append(Basis(tuple(ids)))
    return bases


def criterion_5():
    bases = _corpus()
    disagreements = sum(decide_regular_closedness(b).answer != cross_check_regular_closedness(b)
                        for b in bases)
    yes = sum(decide_regular_closedness(b).answer for b in bases)
    return disagreements == 0 and len(bases) >= 50, \
        f"{len(bases)} bases ({yes} regularly closed), {disagreements} disagreements"


def criterion_6():
    A0 = builtin("A0")
    a, b = A0.index("a"), A0.index("b")
    ids = [i for basis in _corpus() for i in basis]
    ids += [Identity(u, v) for u, v in product(words([X, Y, Z], 4), repeat=2)]
    bad = 0
    checked = 0
    for ident in ids:
        if is_similar(ident.lhs, ident.rhs):
            continue
        checked += 1
        d = derive_yx_identity(ident)
        lhs = A0.names[evaluate_word(A0, d.lhs, {X: a, Y: b})]
        rhs = A0.names[evaluate_word(A0, d.rhs, {X: a, Y: b})]
        if not (is_yx_shaped(d) and lhs == "ab" and rhs == "0"):
            bad += 1
    return bad == 0, f"{checked} non-similar identities, {bad} bad derivations"


def criterion_7():
    regular_words = [w for w in words([X, Y, Z], 5) if is_regular_word(w)]
    bad_ideal = bad_words = converse = 0
    n_cr = n_other = 0
    for k in (1, 2, 3, 4):
        for S in enumerate_semigroups(k):
            reg = regular_elements(S)
            vals = _table_words(S, regular_words, [X, Y, Z])
            all_regular = bool(np.isin(vals, list(reg)).all())
            if not is_cyclically_regular(S):
                n_other += 1
                converse += all_regular
                continue
            n_cr += 1
            bad_words += not all_regular
            t = S.table
            for a in range(S.order):
                Ia = principal_ideal(S, a)
                reg_in = {e for e in Ia if any(t[t[e][s]][e] == e for s in Ia)}
                for p, q in product(reg_in, repeat=2):
                    pq = t[p][q]
                    if not any(t[t[pq][s]][pq] == pq for s in Ia):
                        bad_ideal += 1
    ok = bad_ideal == bad_words == converse == 0
    return ok, (f"{n_cr} cyclically regular / {n_other} other tables; violations: "
                f"ideal products {bad_ideal}, regular words {bad_words}, converse {converse}")


def criterion_8():
    rng = random.Random(8)
    alphabet = list(range(4))
    bad = 0
    for _ in range(1000):
        while True:
            u = Word(tuple(rng.choice(alphabet) for _ in range(rng.randint(2, 6))))
            if is_regular_word(u):
                break
        f = {c: Word(tuple(rng.choice(alphabet) for _ in range(rng.randint(1, 4))))
             for c in u.content}
        bad += not is_regular_word(apply_letter_map(u, f))
    return bad == 0, f"1000 pairs, {bad} violations"


def criterion_9():
    frozen = {"A0": 4, "N3": 3, "A": 4, "B": 6, "Cl": 5, "D": 6}
    wrong = [nm for nm, k in frozen.items() if builtin(nm).order != k]
    unverified = []
    for name, n in [("A0", None), ("A", None), ("B", None), ("Cl", None), ("Cr", None),
                    ("N3", None), ("D", None), ("K", 1), ("K", 2), ("K", 3)]:
        S = builtin(name, n)
        p = presentation_of(name, n)
        sigma = {letter(g): S.generators[g] for g in p.generators}
        for lhs, rhs in p.relations:
            v = [S.zero if s is None else evaluate_word(S, s, sigma) for s in (lhs, rhs)]
            if v[0] != v[1] or v[0] is None:
                unverified.append(name)
    return not wrong and not unverified, \
        "orders " + ", ".join(f"|{nm}|={builtin(nm).order}" for nm in frozen)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def _report(fn):
    start = time.perf_counter()
    ok, detail = fn()
    n = fn.__name__.split("_")[1]
    print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail} "
          f"({time.perf_counter() - start:.1f}s)")
    return ok


@pytest.mark.parametrize("fn", CRITERIA, ids=lambda f: f.__name__)
def test_acceptance(fn):
    assert _report(fn)


if __name__ == "__main__":
    results = [_report(fn) for fn in CRITERIA]
    sys.exit(0 if all(results) else 1)
