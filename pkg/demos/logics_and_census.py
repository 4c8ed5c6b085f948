"""
Logics of finite frames and their extensions
============================================

"""

from artifact import logic
from artifact.classifier import census, classify
from artifact.logics import extension_lattice, h_complete_extensions, lattice_dot

# a logic is kept as the family closed under generated subframes and p-morphic images
L = logic("G3")
print("closure of G3:", " ".join(L.frame_names()))

# classification by omitted frames
print(classify(logic("R2")).to_json())

# all extensions of the logic of G1, and those of single frames
big = logic("G1")
print(len(extension_lattice(big)), "extensions,", len(h_complete_extensions(big)), "of single frames")

c = census(big)
total, nullary, hereditary, finitary = c.counts()
print(f"{total} logics, {nullary} nullary, {hereditary} hereditary finitary")
print("finitary but not hereditary:", ", ".join(finitary))

# Hasse diagram with the nullary logics filled in
with open("census.dot", "w") as fh:
    fh.write(lattice_dot(c.logics, c.nullary()))
print("wrote census.dot")
