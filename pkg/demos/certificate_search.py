"""
Searching for finitary certificates
===================================

"""

from artifact import logic, parse_substitution
from artifact.scenarios import nnor_sigma, split_sigma
from artifact.unification import Inconclusive, certificate_to_text, search_certificate

# over G3 there is no certificate for this substitution at m = 1
s = nnor_sigma(2)
print(s.to_text())
print(search_certificate(logic("G3"), s, 1)[0])

# over the two frames R2 and F2 none exists at m = 2 either
print(search_certificate(logic("R2", "F2"), split_sigma(3), 2)[0])

# a small budget gives up instead of claiming a refutation
try:
    search_certificate(logic("R2", "F2"), split_sigma(3), 2, budget=100)
except Inconclusive as e:
    print("inconclusive:", e)

# over R2, which is unitary, a certificate is found and can be printed for replay
s = parse_substitution("vars 1; x1 := ~~x1 | ~x1")
status, cert = search_certificate(logic("R2"), s, 3)
print(status)
print(certificate_to_text(logic("R2"), s, cert))
