"""
Deciding properties of varieties from a basis
=============================================
"""
from cyclreg.variety import Basis, decide_cyclic_regularity, decide_regular_closedness

bases = {
    "bands": Basis.of("x = x^2"),
    "commutative": Basis.of("xy = yx"),
    "xyx = yxy": Basis.of("xyx = yxy"),
    "aperiodic, xyx = (xy)^2x": Basis.of("x^2 = x^3", "xyx = (xy)^2x"),
}

for name, basis in bases.items():
    rc = decide_regular_closedness(basis)
    cr = decide_cyclic_regularity(basis)
    print(f"{name}:")
    print(f"  regularly closed: {rc.answer}")
    for w in rc.witnesses[:1]:
        print(f"    {w.identity} is {w.case.tag.value}, giving {w.derived}")
    print(f"  cyclically regular (n_max={cr.parameters['n_max']}): {cr.answer}")
    if cr.witnesses:
        print("    contains", ", ".join(w.label for w in cr.witnesses))

# Verdicts serialise to stable JSON
print(decide_regular_closedness(bases["bands"]).to_json())
