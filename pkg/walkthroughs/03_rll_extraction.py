"""
Entries of the RLL relation
===========================

Gauss forms of L(z), one entry equation of the RLL relation, and the
scripted derivation of the X1 X2 exchange relations.
"""

from upqgl.rll import (E_TUPLE, PRINTED_TUPLE, check_pre_rel1, derive_x1x2, extract_entry, gauss_L,
                       verify_gauss_inverse)

L = gauss_L(2, "+")
for i in (1, 2):
    for j in (1, 2):
        print(f"L+({i},{j}) =", L.get(i, j).to_text().replace("\n", " + "))

print([verify_gauss_inverse(N, "+").status for N in (1, 2, 3, 4)])

# the entry carrying e21(z) k1(z) k3(w)^-1 e32(w)
lhs, rhs = extract_entry("rel1", E_TUPLE, 2, 1)
print("lhs:\n" + lhs.to_text())
print("rhs:\n" + rhs.to_text())

# the transcribed display matches this tuple; the tuple printed next to it does not
print(E_TUPLE, check_pre_rel1(E_TUPLE).status)
print(PRINTED_TUPLE, check_pre_rel1(PRINTED_TUPLE).status)

# eliminate the auxiliary words and recover the exchange relation for every m
for m in (3, 2, 1, 0):
    for d in derive_x1x2(m, 3 - m):
        print(f"m={m} {d.id.tag}: {d.text()}")
