"""Kostka numbers by direct enumeration, the two-way counting identity,
and the explicit pairing that proves it one tableau at a time.

Run:  python3 demos/02_kostka_and_the_bijection.py
"""

from younglab.partitions import format_partition, predecessors, successors
from younglab.tableaux import (
    enumerate_ssyt,
    eq2_check,
    kostka,
    theorem4_bijection,
)


def tab(t):
    return " / ".join(" ".join(str(x) for x in row) for row in t)


print("Semistandard tableaux of shape (4,2) and weight (3,2,1):")
for t in enumerate_ssyt((4, 2), (3, 2, 1)):
    print("   ", tab(t))
print("K((4,2),(3,2,1)) =", kostka((4, 2), (3, 2, 1)))

print()
print("Weights are compositions: K is blind to reordering the counts:")
print("    K((3,1),(1,2,1)) =", kostka((3, 1), (1, 2, 1)),
      "  K((3,1),(2,1,1)) =", kostka((3, 1), (2, 1, 1)))

lam, rho = (2, 2, 1), (3, 1)
print()
print(f"Two-way count for lam = {format_partition(lam)}, rho = {format_partition(rho)}:")
left_terms = [f"K({format_partition(mu)},{format_partition(lam)}) = {kostka(mu, lam)}"
              for mu in successors(rho)]
right_terms = [f"{c} * K({format_partition(rho)},{format_partition(g)}) = {c * kostka(rho, g)}"
               for g, c in predecessors(lam)]
print("    adding a cell first: " + " + ".join(left_terms))
print("    removing a symbol first: " + " + ".join(right_terms))
print("    both sides:", eq2_check(lam, rho))

print()
print("The pairing behind the identity (remove the corner row's symbol,")
print("rightmost occurrence, and close the row):")
cert = theorem4_bijection(lam, rho)
for p in cert.pairs:
    print(f"    {tab(p.mu_tableau):<16} -({p.removed_symbol})->  "
          f"{tab(p.rho_tableau):<12} weight {format_partition(p.gamma_weight)}")
print("    every pair canonical:", cert.canonical)

print()
print("With all-distinct entries the per-item rule can fail (no symbol r in")
print("row r); a matching completes the pairing and the certificate records it:")
cert = theorem4_bijection((1, 1, 1, 1), (2, 1))
print(f"    lam = 1,1,1,1  rho = 2,1: {len(cert.pairs)} pairs, "
      f"{cert.canonical_count} canonical, certificate valid: {cert.check()}")
