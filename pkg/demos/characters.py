"""Irreducible modules on uniform tableaux and three ways to get characters."""
from ubp.combinatorics import enumerate_Ik, vector_partition
from ubp.formats import format_matrix, format_module_vector, format_tableau, parse_diagram, parse_tableau
from ubp.repmod import act, basis, character_table_merge, character_table_trace, dim, matrix
from ubp.symfunc import X_matrix

lam = vector_partition([(1,), (1,)], 3)
print("basis of", lam)
for S in basis(lam):
    print("  ", format_tableau(S))

cycle = parse_diagram("1,2' | 2,3' | 3,1'")
print("\nmatrix of", cycle)
for row in matrix(cycle, lam):
    print("  ", row)

d = parse_diagram("2,8' | 8,2' | 9,16' | 10,13' | 11,7' | 12,6' | 14,10' | 15,3' | 17,1' | "
                  "1,4,5',11' | 6,7,9',14' | 3,13,4',12' | 5,16,15',17'")
S = parse_tableau("{g}/{2},{7} ; {5b},{9e}/{13},{6d} ; {8fh}/{4ac}", 17)
print("\nk = 17 action, with one straightening step:")
print("  ", format_module_vector(act(d, S)))

for k in range(1, 6):
    total = sum(dim(mu) ** 2 for mu in enumerate_Ik(k))
    print(f"\nk = {k}: sum of dim^2 = {total}")

k = 4
trace, merge, frob = character_table_trace(k), character_table_merge(k), X_matrix(k)
print(f"\ncharacter table for k = {k} (traces, merge counts and Frobenius agree: "
      f"{trace == merge == frob})")
print(format_matrix(k, trace))
