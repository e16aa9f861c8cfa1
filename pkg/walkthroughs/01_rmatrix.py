"""
The affine R-matrix of U_{p,q}(gl(m|n))
=======================================

Build R(z/w), look at a few entries and run the identity checks.
"""

from upqgl.field import var
from upqgl.rmatrix import build_affine_R, check_graded_YBE, check_symmetry, check_unitarity, verify_golden
from upqgl.text import format_matrix

# R lives on V (x) V; for gl(1|1) that is a 4x4 matrix over Q(p, q, z, w)
R = build_affine_R(1, 1)
print(format_matrix(R))

# the last diagonal entry carries the odd sign
print("R[4,4] =", R.at(4, 4).to_text())

# z = w collapses the bosonic R to the flip
R1 = build_affine_R(2, 0).substitute({"w": "z"})
print("R(1) for gl(2):", [[R1.at(i, j).to_text() for j in range(1, 5)] for i in range(1, 5)])

# graded Yang-Baxter, unitarity and symmetry, each an exact entrywise identity
for m, n in [(1, 1), (2, 1), (1, 2)]:
    for check in (check_graded_YBE, check_unitarity, check_symmetry):
        r = check(m, n)
        print(f"{r.check:10s} m={m} n={n}: {r.status}  {r.notes[-1]}")

# the constructor against the transcribed 4x4 and 9x9 displays
for name in ("type1", "type2", "type3", "r21"):
    print(name, verify_golden(name).status)

# homogeneity: only the ratio z/w matters
u = var("u")
scaled = R.substitute({"z": var("z") * u, "w": var("w") * u})
print("homogeneous:", scaled.equals(R))
