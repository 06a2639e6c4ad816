"""
Reduction matrices and their block structure
=============================================

Every power x^j reduces mod Phi_M(x) to a vector of phi(M) coefficients,
and stacking those vectors as columns gives the phi(M) x M reduction
matrix R_M. For a prime p the matrix is just the identity with one extra
column of -1; for a product of two primes the trailing columns organize
into three structured blocks: a low tail B1 whose first row is all -1 and
last row all +1, a Toeplitz band B2 of single -1 diagonals, and B3, which
is B1 rotated by 180 degrees.
"""
import numpy as np

from cycloring import make_modulus, reduction_matrix


def show(M):
    R = reduction_matrix(make_modulus(M))
    cuts = set()
    if R.blocks:
        cuts = {R.blocks.b1[0], R.blocks.b2[0], R.blocks.b3[0]}
    print(f"R_{M} ({R.modulus.phi} x {M}):")
    for row in np.asarray(R.entries, dtype=np.int64):
        cells = []
        for j, v in enumerate(row):
            if j in cuts:
                cells.append("|")
            cells.append(f"{v:>2}")
        print("  " + " ".join(cells))
    print()


show(7)
show(21)

# The rotation symmetry, read off the columns directly: reversing the
# coefficient vector of column phi+k yields column pq-1-k.
m = make_modulus(21)
R = reduction_matrix(m)
for k in range(21 - m.phi):
    left = R.column(m.phi + k)
    right = R.column(21 - 1 - k)
    assert tuple(reversed(left)) == right
print("column reversal carries the leading block onto the trailing one")

# Inflated moduli factor through the squarefree core: R_63 = R_21 (x) I_3.
m63 = make_modulus(63)
R63 = np.asarray(reduction_matrix(m63).entries, dtype=np.int64)
kron = np.kron(np.asarray(R.entries, dtype=np.int64), np.eye(3, dtype=np.int64))
print("R_63 equals R_21 kron I_3:", np.array_equal(R63, kron))
