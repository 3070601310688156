"""
Cycles, components and similarity of words
==========================================
"""
from cyclreg import words as W

# A word is read letter by letter; powers and groups expand on parsing.
w = W.parse_word("xyxz(zy)^2")
print(w, "=", w.pretty())

# Each letter spans the interval from its first to its last occurrence.
# Overlapping intervals merge; positions no interval covers stand alone.
d = W.canonical_decomposition(W.parse_word("xyxz"))
print("components:", d, " m_c =", d.m_c)
print("blocking letters:", sorted(W.letter_name(c) for c in W.blocking_letters(d.word)))

# One component spanning the whole word makes it regular.
for text in ["xyyx", "xyxz", "x", "x^2"]:
    print(f"{text:6} regular: {W.is_regular_word(W.parse_word(text))}")

# Similar words have the same letters in the same components,
# with singletons marked.  xyx and yxy agree; xy and yx do not.
for a, b in [("xyx", "yxy"), ("xy", "yx"), ("z", "z^2"), ("xzzy", "xz^3y")]:
    print(f"{a} ~ {b}: {W.is_similar(W.parse_word(a), W.parse_word(b))}")
