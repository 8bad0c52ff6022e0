"""Commute times by simulation versus N * kappa * R."""
from drgresist import FamilySpec, build_graph, family_array, mc_commute_time, resistance_table, stratify

spec = FamilySpec("johnson", {"n": 6, "d": 3})
g = build_graph(spec)
arr = family_array(spec)
table = resistance_table(arr)
strata = stratify(g, 0)

print(f"{spec.label()}: N={arr.N}, kappa={arr.valency}")
for m in range(1, arr.d + 1):
    beta = min(strata.strata[m])
    mean, err = mc_commute_time(g, 0, beta, walks=50_000, seed=m)
    exact = arr.N * arr.valency * table.R[m - 1]
    print(f"m={m}: simulated {mean:8.3f} +/- {err:.3f}   exact {exact} = {float(exact):.3f}")
