"""
Coproduct, counit and antipode
==============================

Delta on the current generators, with g1 and g2 the central markers of
the two tensor factors.
"""

from upqgl.field import Monomial
from upqgl.hopf import (d_coefficient, delta, hopf_suite, k_relation_ids, verify_coproduct_on_k_relation,
                        verify_coassociativity_L)
from upqgl.ncalg import Letter, NCPoly

for name in ("k1+", "k1-", "X1+", "X1-"):
    x = NCPoly.word(Letter(name, Monomial.of("z")))
    print(f"Delta {name}(z) =", delta(x, 2, 1).to_text().replace("\n", " + "))

# the coefficient left over from the cubic Serre combination
print("d(p, q) =", d_coefficient().to_text())
print("with the printed middle sign:", d_coefficient("literal").to_text()[:60], "...")

# a shift error in the coproduct is caught by the k-relations
(rid,) = [r for r in k_relation_ids(1, 1) if r.tag == "kiki"]
print(verify_coproduct_on_k_relation(rid).status, verify_coproduct_on_k_relation(rid, mutate="g2-squared").status)

print([verify_coassociativity_L(N).status for N in (1, 2, 3, 4)])

for r in hopf_suite(1, 1, 2):
    print(f"{r.check:28s} {r.status}")
