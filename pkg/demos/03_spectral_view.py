"""Resistances from the spectrum of the tridiagonal Jacobi matrix.

The same numbers come out of a completely different computation: sum over
the distinct eigenvalues of the graph, weighted by multiplicity and by the
value of the m-th distance polynomial.
"""
import numpy as np

from drgresist import (
    FamilySpec,
    eigenmatrix_P,
    family_array,
    resistance_spectral,
    resistance_table,
    spectral_data,
)

arr = family_array(FamilySpec("foster"))
sd = spectral_data(arr)
print(f"Foster graph {arr}")
print("eigenvalues    ", np.round(sd.eigenvalues, 6))
print("multiplicities ", np.round(sd.multiplicities, 6))

exact = resistance_table(arr).R
for m in range(1, arr.d + 1):
    s = resistance_spectral(arr, m, sd)
    print(f"m={m}: recursion {str(exact[m - 1]):>8} = {float(exact[m - 1]):.15f}   spectral {s:.15f}")

# Rows of P are the distance polynomials evaluated on the spectrum; its first
# column recovers the stratum sizes.
P = eigenmatrix_P(arr, sd)
print("P[:, 0] =", np.round(P[:, 0], 9), " kappa =", arr.kappa)
