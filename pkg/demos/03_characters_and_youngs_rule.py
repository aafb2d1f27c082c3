"""Exact character computations: permutation characters, the sign twist,
the one-common-irreducible pairing, and multiplicities versus Kostka
numbers.

Run:  python3 demos/03_characters_and_youngs_rule.py
"""

from younglab.characters import (
    class_size,
    class_types,
    ind_sgn_character,
    irreducible_characters,
    lemma1_check,
    multiplicity_table,
    perm_character,
    theorem1_check,
    theorem1_components,
)
from younglab.cli import frac_str
from younglab.partitions import enumerate_partitions, format_partition
from younglab.tableaux import kostka

n = 5
print(f"Conjugacy classes of degree {n} (cycle type, size):")
print("   ", "  ".join(f"{format_partition(r)}:{class_size(r)}" for r in class_types(n)))

print()
lam = (3, 2)
psi = perm_character(lam)
phi = ind_sgn_character(lam)
print(f"Row character psi_{format_partition(lam)} values:",
      [frac_str(v) for v in psi.values])
print(f"Column-sign character phi_{format_partition(lam)} values:",
      [frac_str(v) for v in phi.values])
print(f"<psi, phi> = {theorem1_check(lam)}  -- the one shared irreducible")
print("common components (shape, mult in rows, mult in columns):",
      [(format_partition(m), a, b) for m, a, b in theorem1_components(lam)])

print()
print(f"Character table of degree 4 (rows = shapes, columns = classes):")
chis = irreducible_characters(4)
types = class_types(4)
header = "        " + "  ".join(f"{format_partition(r):>7}" for r in types)
print(header)
for mu, chi in chis.items():
    row = "  ".join(f"{frac_str(chi(r)):>7}" for r in types)
    print(f"{format_partition(mu):>8}" + "  " + row)

print()
print("Multiplicities in the induced modules equal Kostka numbers:")
table = multiplicity_table(4)
lam = (2, 1, 1)
for mu in enumerate_partitions(4):
    print(f"    M({format_partition(mu)}, {format_partition(lam)}) = "
          f"{table(mu, lam)} = K = {kostka(mu, lam)}")

print()
print("Restriction to the previous degree matches the weighted sum over")
print("covered shapes for every shape of degree <= 6:",
      all(lemma1_check(l) for m in range(2, 7) for l in enumerate_partitions(m)))
