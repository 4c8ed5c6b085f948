"""
Unifiers in the logic of a rhombus
==================================

"""

from artifact import logic, parse_formula, parse_substitution
from artifact.unification import filtering_join, is_unifier, more_general, sigma_classes

L = logic("R2")
A = parse_formula("x1 | x2 | (~x1 & ~x2)")

# three unifiers of A, none more general than another
e1 = parse_substitution("vars 2; x1 := true; x2 := x2")
e2 = parse_substitution("vars 2; x1 := x1; x2 := true")
e3 = parse_substitution("vars 2; x1 := false; x2 := false")
for e in (e1, e2, e3):
    print(e.to_text(), "unifies A:", is_unifier(L, e, A))
print("e1 more general than e3:", more_general(L, e1, e3))

# the logic contains KC, so two unifiers have a common generalization
mu = filtering_join(L, e1, e3)
print(mu.to_text())
print("mu over e1, e3:", more_general(L, mu, e1), more_general(L, mu, e3))

# picking x1 as the selector of the inner join keeps everything in three variables
inner = filtering_join(L, e1, e3, y=1)
outer = filtering_join(L, inner, e2)
print("variables used:", outer.k, [more_general(L, outer, e) for e in (e1, e2, e3)])

# the classes of sigma-models of each unifier, as a bitmask over 2-models
for e in (e1, e2, e3):
    print(bin(sigma_classes(L, e)))
