"""
Normal ordering and the Serre coefficients
==========================================

Exchange relations become rewrite rules; a Serre relation holds when the
canonical word collects coefficient zero.
"""

from upqgl.field import Monomial
from upqgl.ncalg import Letter, NCPoly, check_local_confluence, name_parity, normal_order
from upqgl.relations import as_rewrite_system, find, verify_confluence, verify_serre

m, n = 2, 1

# X1+ X1+ and X1+ X2+ exchange relations, ranked X1 < X2 and z1 < z2 < w
ids = [r.id for r in find(m, n, family="X-X-same", eps="+")] + [r.id for r in find(m, n, tag="X1X2 rel1")]
rules = as_rewrite_system(ids)
for r in find(m, n, tag="X1X2 rel1"):
    print(r.text())

X = lambda name, arg: Letter(name, Monomial.of(arg), name_parity(name, m, n))
word = NCPoly.word(X("X1+", "z2"), X("X1+", "z1"), X("X2+", "w"))
print("normal form:\n" + normal_order(word, rules).to_text())

# the orientation is locally confluent on all words of length three
print(check_local_confluence(rules, 3).status)

# rank-three Serre displays: coefficient exactly 0, mutated coefficient nonzero
for case in ("m3", "m2", "m1", "m0"):
    ok = [verify_serre(case=case, rel=k).status for k in (1, 2, 3, 4)]
    bad = [verify_serre(case=case, rel=k, mutate=True).status for k in (1, 2, 3, 4)]
    print(case, ok, bad)

# at rank four the listed X-X relations say nothing about X1 and X3
for r in verify_confluence(2, 2, 3):
    print(r.params["system"], r.status, r.residual)
