"""
Small semigroups from presentations
===================================
"""
import numpy as np

from cyclreg.enumeration import enumerate_semigroups
from cyclreg.semigroup import (Presentation, builtin, close_presentation,
                               cyclic_regularity_witness, is_cyclically_regular,
                               regular_elements)

# The four element semigroup <a, b | a^2 = a, b^2 = b, ba = 0>.
A0 = builtin("A0")
print(A0)
print("regular:", sorted(A0.names[e] for e in regular_elements(A0)))

# Any finite presentation can be closed into a table by rewriting.
N4 = close_presentation(Presentation.parse("gens: x\nx^4 = 0"))
print(N4)

# Nilpotent elements are not regular, so x*x = x^2 is a witness.
a, x = cyclic_regularity_witness(N4)
print("witness:", N4.names[a], "times", "itself" if x is None else N4.names[x])

# How common is cyclic regularity among small semigroups?
for k in range(1, 5):
    flags = np.array([is_cyclically_regular(S) for S in enumerate_semigroups(k)])
    print(f"order {k}: {flags.sum()} of {flags.size} tables")
