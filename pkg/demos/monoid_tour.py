"""Diagrams, products, idempotents and Green's classes for small k."""
from ubp.combinatorics import enumerate_setpartitions, partitions
from ubp.conjugacy import class_rep, cycletype, omega
from ubp.diagram import enumerate_monoid, factorize, idempotent_of, monoid_size
from ubp.formats import format_setpartition, format_vp, parse_diagram
from ubp.green import jclass, lclass, maximal_subgroup

d = parse_diagram("1,4,2',3' | 2,1' | 3,6,4',5' | 5,6'")
e = parse_diagram("1,5,4',6' | 2,2' | 3,1' | 4,5' | 6,3'")
print("d     =", d)
print("e     =", e)
print("d * e =", d * e)

sigma = factorize(d)
print("\nd = e_top * sigma = sigma * e_bot with sigma =", sigma)
assert idempotent_of(d.top()) * sigma == d == sigma * idempotent_of(d.bot())

print("\nsizes:", [monoid_size(k) for k in range(8)])
print("by enumeration:", [len(enumerate_monoid(k)) for k in range(6)])

print("\nJ-classes of k = 3")
for lam in partitions(3):
    print(f"  type {lam}: {len(jclass(lam))} elements")
print("L-classes of k = 3")
for pi in enumerate_setpartitions(3):
    G = maximal_subgroup(pi)
    print(f"  bot = {format_setpartition(pi):6} {len(lclass(pi))} elements, group of order {len(G)}")

x = parse_diagram("1,7' | 2,8' | 3,4,4',5' | 5,10,9',10' | 6,6' | 7,8,1',2' | 9,3'")
idem, m = omega(x)
print(f"\nx^{m} = {idem} is idempotent")
print("cycle type of x:", format_vp(cycletype(x)))
print("class representative:", class_rep(cycletype(x)))
