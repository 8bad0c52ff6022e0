"""Per-stratum resistances for a few sporadic distance-regular graphs.

Nothing here builds a graph. The intersection array alone fixes every
two-point resistance, so each table below is a handful of rational
operations.
"""
from drgresist import FamilySpec, family_array, resistance_table

for spec in [FamilySpec("biggs_smith"), FamilySpec("foster"), FamilySpec("m22"),
             FamilySpec("dual_polar_B", {"q": 2, "d": 4})]:
    table = resistance_table(family_array(spec))
    print(spec.label())
    print(table.to_text(exact=True))

# The resistance grows with distance but saturates quickly: on the
# Biggs-Smith graph the last four strata differ by less than 3%.
bs = resistance_table(family_array(FamilySpec("biggs_smith")))
print("Biggs-Smith R^(4)..R^(7):", [str(r) for r in bs.R[3:]])
