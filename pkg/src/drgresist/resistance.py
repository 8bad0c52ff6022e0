"""Per-stratum two-point resistances from an intersection array alone.

The nearest-neighbour resistance is ``2(N-1)/(N k)``; each further stratum
adds ``2 (N - sum_{l<=m} k_l) / (N k_m b_m)``, which is strictly positive for
``m < d``. Everything on this path is exact rational arithmetic.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .core import IntersectionArray, rational_to_json
from .errors import StratumOutOfRange

__all__ = [
    "ResistanceTable",
    "first_stratum_resistance",
    "resistance_increment",
    "resistance_table",
    "commute_time",
]


def first_stratum_resistance(arr: IntersectionArray) -> Fraction:
    return Fraction(2 * (arr.N - 1), arr.N * arr.valency)


def resistance_increment(arr: IntersectionArray, m: int) -> Fraction:
    """``R^(m+1) - R^(m)`` for ``1 <= m <= d-1``."""
    if not 1 <= m <= arr.d - 1:
        raise StratumOutOfRange(f"increment needs 1 <= m <= d-1 = {arr.d - 1}, got m={m}")
    outside = arr.N - sum(arr.kappa[: m + 1])
    return Fraction(2 * outside, arr.N * arr.kappa[m] * arr.b[m])


@dataclass(frozen=True)
class ResistanceTable:
    """Resistances, increments and commute times of one network.

    Lists are 0-based in Python: ``R[m-1]`` is R^(m), ``increments[m-1]`` is
    R^(m+1) - R^(m), ``commute[m-1]`` is the commute time to stratum m.
    """

    arr: IntersectionArray
    R: tuple[Fraction, ...]
    increments: tuple[Fraction, ...]
    commute: tuple[Fraction, ...]

    def resistance(self, m: int) -> Fraction:
        if not 1 <= m <= self.arr.d:
            raise StratumOutOfRange(f"stratum must be in 1..{self.arr.d}, got {m}")
        return self.R[m - 1]

    def to_json(self, exact: bool = True) -> dict:
        def entry(m, x):
            if exact:
                return {"m": m, **rational_to_json(x)}
            return {"m": m, "value": _float15(x)}

        return {
            "N": self.arr.N,
            "kappa": list(self.arr.kappa),
            "R": [entry(m, x) for m, x in enumerate(self.R, start=1)],
            "commute": [entry(m, x) for m, x in enumerate(self.commute, start=1)],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "R_num", "R_den", "R_float", "commute"])
        for m, (r, n) in enumerate(zip(self.R, self.commute), start=1):
            w.writerow([m, r.numerator, r.denominator, repr(_float15(r)), str(n)])
        return buf.getvalue()

    def to_text(self, exact: bool = True) -> str:
        rows = [("m", "kappa_m", "R", "commute")]
        for m, (r, n) in enumerate(zip(self.R, self.commute), start=1):
            if exact:
                rows.append((str(m), str(self.arr.kappa[m]), str(r), str(n)))
            else:
                rows.append((str(m), str(self.arr.kappa[m]), f"{float(r):.15g}", f"{float(n):.15g}"))
        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        head = f"array {self.arr}  N={self.arr.N}  kappa={self.arr.valency}"
        lines = [head] + ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]
        return "\n".join(lines) + "\n"


def _float15(x) -> float:
    return float(f"{float(x):.15g}")


def resistance_table(arr: IntersectionArray) -> ResistanceTable:
    R = [first_stratum_resistance(arr)]
    incs = []
    for m in range(1, arr.d):
        inc = resistance_increment(arr, m)
        incs.append(inc)
        R.append(R[-1] + inc)
    volume = arr.N * arr.valency
    return ResistanceTable(arr, tuple(R), tuple(incs), tuple(volume * r for r in R))


def commute_time(arr: IntersectionArray, m: int) -> Fraction:
    """Expected round-trip steps of the simple random walk between strata 0 and m."""
    if not 1 <= m <= arr.d:
        raise StratumOutOfRange(f"stratum must be in 1..{arr.d}, got {m}")
    return arr.N * arr.valency * resistance_table(arr).R[m - 1]
