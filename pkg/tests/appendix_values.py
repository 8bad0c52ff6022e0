"""Published per-stratum resistances and increments, transcribed as printed.

Each entry maps a family spec to (closed forms R^(1)..R^(d), increments
R^(m+1)-R^(m)). Fractions are compared by value, so unreduced printed forms
such as 150/153 are kept verbatim.
"""
from fractions import Fraction as F

from drgresist.families import FamilySpec


def _octagon(s):
    D = s**4 + 2 * s**3 + 2 * s**2 + 2 * s + 1
    R = [F(s**3 + 2 * s**2 + 2 * s + 2, D), F(s**3 + 3 * s**2 + 4 * s + 4, D),
         F(s**3 + 3 * s**2 + 5 * s + 6, D), F(s**3 + 3 * s**2 + 5 * s + 7, D)]
    inc = [F(s**2 + 2 * s + 2, D), F(s + 2, D), F(1, D)]
    return R, inc


def _pg(l):
    R = [F(2 * l * l - 1, l**3), F(2 * l * l - 1, l * l * (l - 1)),
         F(2 * l**3 + 1, l**3 * (l - 1)), F(2 * l * l + 1, l * l * (l - 1))]
    inc = [F(2 * l * l - 1 - l, l**3 * (l - 1)), F(l + 1, l**3 * (l - 1)), F(1, l**3)]
    return R, inc


def _hadamard(g):
    R = [F(16 * g - 1, 32 * g * g), F(8 * g - 1, 4 * g * (4 * g - 1)),
         F(64 * g * g - 4 * g + 1, 32 * g * g * (4 * g - 1)), F(2, 4 * g - 1)]
    inc = [F(12 * g - 1, 32 * g * g * (4 * g - 1)), F(4 * g + 1, 32 * g * g * (4 * g - 1)), F(1, 32 * g * g)]
    return R, inc


def _dodecagon(s):
    D = s**6 + 2 * (s**5 + s**4 + s**3 + s**2 + s) + 1
    R = [F(s**5 + 2 * (s**4 + s**3 + s**2 + s + 1), D),
         F(s**5 + 3 * s**4 + 4 * (s**3 + s**2 + s + 1), D),
         F(s**5 + 3 * s**4 + 5 * s**3 + 6 * (s**2 + s + 1), D),
         F(s**5 + 3 * s**4 + 5 * s**3 + 7 * s**2 + 8 * (s + 1), D),
         F(s**5 + 3 * s**4 + 5 * s**3 + 7 * s**2 + 9 * s + 10, D),
         F(s**5 + 3 * s**4 + 5 * s**3 + 7 * s**2 + 9 * s + 11, D)]
    inc = [F(s**4 + 2 * (s**3 + s**2 + s + 1), D), F(s**3 + 2 * (s**2 + s + 1), D),
           F(s**2 + 2 * (s + 1), D), F(s + 2, D), F(1, D)]
    return R, inc


def _family7(g):
    l, c = g * (g * g + 3 * g + 1), g * (g + 1)
    E = c + l * c + l * (l - 1)
    W = l * (l - 1) * (l - c) * E
    R = [F(c + 2 * l * c + 2 * l * (l - 1), l * E),
         F(2 * (c + l), E),
         F(2 * l * (l - 1) * (l * l - c * c) + c * c * (l + 1) + c * l * (l - 1), W),
         F(2 * (l * l * (2 * l * l - c * c - l) + c * l * (l + c)), W),
         F(2 * l * l * (2 * l * l - c * c - l) + c * l * (3 * l + c - 1) + c * c, W)]
    inc = [F(c + l * c + 2 * l * (l - 1), l * (l - 1) * E), F(c, l * (l - 1) * (l - c)),
           F(c * (l + 1), l * (l - 1) * E), F(c, l * E)]
    return R, inc


APPENDIX = {}
for s in (2, 3, 4):
    APPENDIX[FamilySpec("gen_octagon", {"s": s})] = _octagon(s)
for l in (4, 5, 7, 8):
    APPENDIX[FamilySpec("incidence_pg", {"l": l})] = _pg(l)
for g in (1, 2, 3):
    APPENDIX[FamilySpec("hadamard", {"gamma": g})] = _hadamard(g)
APPENDIX[FamilySpec("dual_polar_B", {"q": 2, "d": 4})] = (
    [F(2294, 34425), F(16623, 240975), F(16685, 240975), F(16699, 240975)],
    [F(566, 34425 * 7), F(62, 240975), F(2, 34425)],
)
APPENDIX[FamilySpec("m22")] = (
    [F(47, 165), F(164, 495), F(1183, 3465), F(113, 330)],
    [F(161, 3465), F(1, 99), F(1, 990)],
)
for s in (2, 3):
    APPENDIX[FamilySpec("gen_dodecagon", {"s": s})] = _dodecagon(s)
for g in (1, 2):
    APPENDIX[FamilySpec("family7", {"gamma": g})] = _family7(g)
APPENDIX[FamilySpec("biggs_smith")] = (
    [F(n, 153) for n in (101, 150, 173, 183, 190, 194, 195)],
    [F(n, 153) for n in (49, 23, 10, 7, 4, 1)],
)
APPENDIX[FamilySpec("foster")] = (
    [F(89, 135), F(132, 135), F(152, 135), F(321, 270), F(653, 540), F(663, 540), F(671, 540), F(675, 540)],
    [F(43, 135), F(4, 27), F(17, 270), F(11, 540), F(5, 270), F(2, 135), F(1, 135)],
)

# Printed orders N for the fixed arrays.
PRINTED_ORDER = {
    FamilySpec("dual_polar_B", {"q": 2, "d": 4}): 2295,
    FamilySpec("m22"): 330,
    FamilySpec("biggs_smith"): 102,
    FamilySpec("foster"): 90,
}
