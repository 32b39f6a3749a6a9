"""Frobenius images, the two factorizations of the character table, plethysm."""
from ubp.combinatorics import vector_partition
from ubp.conjugacy import b_matrix
from ubp.formats import format_matrix, format_multisym
from ubp.symfunc import (
    A_matrix, E, E_from_schur, U_matrix, X_matrix, frob_char, matmul, plethysm_schur_expansion,
)

print("E_2 =")
print(format_multisym(E(2)))
print("same from Schur functions:", all(E(r) == E_from_schur(r) for r in range(1, 8)))

print("\nFrobenius image of ((1),(1)):")
print(format_multisym(frob_char(vector_partition([(1,), (1,)], 3))))

for k in (3, 4):
    X, A, B, U = X_matrix(k), A_matrix(k), b_matrix(k), U_matrix(k)
    print(f"\nk = {k}: X = A B is {X == matmul(A, B)}, X = U A is {X == matmul(U, A)}")
    print(f"U_{k} =")
    print(format_matrix(k, U))

for shape in [((), (1, 1), (), ()), ((), (2,), (), ()), ((), (), (2,), (), (), ())]:
    terms = plethysm_schur_expansion(shape)
    print(shape, "->", " + ".join(f"{c} s{list(p)}" for p, c in terms.items()))
