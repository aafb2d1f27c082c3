"""Polylinear forms: the monomial model of the induced module, Specht
polynomials as the shift-invariant part, the fully worked 12-dimensional
example, and the multiplicity-free two-row split.

Run:  python3 demos/05_forms_and_specht.py
"""

from younglab.forms import (
    Form,
    example4_check,
    format_form,
    specht_poly,
    statement2_check,
    theorem5_check,
    two_row_decomposition,
    two_row_partition,
    x_monomials,
)
from younglab.partitions import format_partition
from younglab.tableaux import enumerate_standard

lam, n = (2, 1, 1), 4
monos = x_monomials(lam, n)
print(f"Monomial model of the induced module for {format_partition(lam)}:")
print(f"    {len(monos)} monomials of the x_i^2 x_j shape, e.g.")
print("   ", ", ".join(format_form(Form.monomial(n, m)) for m in monos[:4]), "...")
print("    substitution character matches the row character:",
      statement2_check(lam, n))

print()
print("Specht polynomials of the standard fillings (column Vandermondes):")
for t in enumerate_standard(lam):
    rows = " / ".join(",".join(map(str, row)) for row in t)
    print(f"    {rows}:  {format_form(specht_poly(t, n))}")

report = theorem5_check(lam, n)
print(f"    independent: {report['independent']}  rank = {report['rank']}")
print(f"    span is exactly the kernel of the total derivative: "
      f"{report['kernel_matches']}")
print(f"    restricted character is the irreducible of the shape: "
      f"{report['character_matches']}")

print()
print("The worked 12-dimensional decomposition (dims 1+2+3+3+3):")
ex = example4_check()
print("    dims:", ex["dims"])
print("    all five spans invariant:", all(ex["invariant"].values()))
print("    characters match (4),(2,2),(2,1,1),(3,1),(3,1):",
      all(ex["characters_match"].values()))
print("    even/odd halves under the degree swap:", ex["even_odd_dims"])
print("    C1 - C2 + C3 = 0:", ex["c_relation"])

print()
print("Two-row shapes: squarefree degree-k forms split without multiplicity:")
for (n2, k) in [(4, 2), (6, 3)]:
    rep = two_row_decomposition(n2, k)
    pieces = " + ".join(
        f"{d} ({format_partition(two_row_partition(n2, l))})"
        for l, d in enumerate(rep["dims"])
    )
    print(f"    n = {n2}, k = {k}:  C({n2},{k}) = {sum(rep['dims'])} = {pieces}")
    if rep["top_is_shift_invariant"] is not None:
        print(f"        top piece = shift-invariant part: "
              f"{rep['top_is_shift_invariant']}")
