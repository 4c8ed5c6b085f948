"""
Frames, models and forcing
==========================

"""

from artifact import build_model, catalog_lookup, parse_formula
from artifact.morphisms import equivalent, reduce

# a catalog frame: root r below a leaf a and a two-point chain b < t
g3 = catalog_lookup("G3")
print(g3.to_text())

# a 2-model: bit i of each string is the value of x(i+1)
m = build_model(g3, 2, {"r": "00", "a": "10", "b": "00", "t": "11"})
a = parse_formula("x2 | (x2 -> x1 | ~x1)")
for w in g3.nodes:
    print(w, m.bits(w), m.forces(a, w))

# this model is already p-irreducible: reducing changes nothing
q, p = reduce(m)
print(len(q) == len(m))

# a fork with equal leaves collapses onto a two-point chain
f = build_model(catalog_lookup("F2"), 1, ["0", "1", "1"])
q, p = reduce(f)
print(q.to_text("Q"), p.to_text())

# a model and its reduct are equivalent
print("equivalent:", equivalent(f, q))
