"""Intersection arrays of named distance-regular families.

>>> family_array(FamilySpec("hadamard", {"gamma": 1})).N
16
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Mapping

from .core import IntersectionArray
from .errors import IntersectionArrayError, ParamOutOfDomain, ValidationFailed

__all__ = [
    "FamilySpec",
    "FamilyInfo",
    "family_array",
    "cycle_closed_form",
    "list_families",
    "catalog",
    "gaussian_one",
    "expected_order",
]


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "params", dict(self.params))

    def __hash__(self):
        return hash((self.name, tuple(sorted(self.params.items()))))

    def label(self) -> str:
        if not self.params:
            return self.name
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.name}({inner})"

    def to_json(self) -> dict:
        return {"family": self.name, "params": dict(self.params)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "FamilySpec":
        return cls(obj["family"], {k: int(v) for k, v in obj.get("params", {}).items()})


@dataclass(frozen=True)
class FamilyInfo:
    """Catalog entry describing one supported family."""

    name: str
    params: tuple[str, ...]
    domain: str
    array: str
    order: str
    fixed_order: int | None = None
    example: Mapping[str, int] = field(default_factory=dict)

    def template(self) -> FamilySpec:
        return FamilySpec(self.name, dict(self.example))


def gaussian_one(j: int, q: int) -> int:
    """Gaussian binomial [j, 1]_q = 1 + q + ... + q^(j-1); equals j at q = 1."""
    return sum(q**t for t in range(j))


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True


def _need(params: Mapping[str, int], *names: str) -> list[int]:
    missing = [n for n in names if n not in params]
    if missing:
        raise ParamOutOfDomain(f"missing parameter(s): {', '.join(missing)}")
    extra = set(params) - set(names)
    if extra:
        raise ParamOutOfDomain(f"unexpected parameter(s): {', '.join(sorted(extra))}")
    out = []
    for n in names:
        v = params[n]
        if isinstance(v, bool) or int(v) != v:
            raise ParamOutOfDomain(f"parameter {n} must be an integer, got {v!r}")
        out.append(int(v))
    return out


def _cycle(p):
    (n,) = _need(p, "N")
    if n < 3:
        raise ParamOutOfDomain(f"cycle needs N >= 3, got {n}")
    m = n // 2
    if n % 2 == 0:
        return [2] + [1] * (m - 1), [1] * (m - 1) + [2]
    return [2] + [1] * (m - 1), [1] * m


def _hypercube(p):
    (d,) = _need(p, "d")
    if d < 1:
        raise ParamOutOfDomain(f"hypercube needs d >= 1, got {d}")
    return [d - i for i in range(d)], list(range(1, d + 1))


def _johnson(p):
    n, d = _need(p, "n", "d")
    if n < 2 or d < 1 or 2 * d > n:
        raise ParamOutOfDomain(f"johnson needs n >= 2 and 1 <= d <= n/2, got n={n}, d={d}")
    return [(d - i) * (n - d - i) for i in range(d)], [i * i for i in range(1, d + 1)]


def _complete(p):
    (n,) = _need(p, "N")
    if n < 2:
        raise ParamOutOfDomain(f"complete graph needs N >= 2, got {n}")
    return [n - 1], [1]


def _gen_octagon(p):
    (s,) = _need(p, "s")
    if s not in (2, 3, 4):
        raise ParamOutOfDomain(f"gen_octagon needs s in {{2,3,4}}, got {s}")
    return [2 * s, s, s, s], [1, 1, 1, 2]


def _incidence_pg(p):
    (l,) = _need(p, "l")
    if l not in (4, 5, 7, 8):
        raise ParamOutOfDomain(f"incidence_pg needs l in {{4,5,7,8}}, got {l}")
    return [l, l - 1, l - 1, 1], [1, 1, l - 1, l]


def _hadamard(p):
    (g,) = _need(p, "gamma")
    if g < 1:
        raise ParamOutOfDomain(f"hadamard needs gamma >= 1, got {g}")
    return [4 * g, 4 * g - 1, 2 * g, 1], [1, 2 * g, 4 * g - 1, 4 * g]


def _classical(p):
    d, q, alpha, beta = _need(p, "d", "q", "alpha", "beta")
    if d < 1 or q < 1:
        raise ParamOutOfDomain(f"classical needs d >= 1 and q >= 1, got d={d}, q={q}")
    c = [gaussian_one(i, q) * (1 + alpha * gaussian_one(i - 1, q)) for i in range(1, d + 1)]
    b = [(gaussian_one(d, q) - gaussian_one(i, q)) * (beta - alpha * gaussian_one(i, q)) for i in range(d)]
    if min(b + c) <= 0:
        raise ParamOutOfDomain(f"classical parameters {(d, q, alpha, beta)} give non-positive entries b={b}, c={c}")
    return b, c


def _dual_polar_B(p):
    q, d = _need(p, "q", "d")
    if not _is_prime_power(q):
        raise ParamOutOfDomain(f"dual_polar_B needs q a prime power, got {q}")
    if d < 3:
        raise ParamOutOfDomain(f"dual_polar_B needs d >= 3, got {d}")
    b = [q ** (i + 1) * (q ** (d - i) - 1) // (q - 1) for i in range(d)]
    c = [(q**i - 1) // (q - 1) for i in range(1, d + 1)]
    return b, c


def _m22(p):
    _need(p)
    return [7, 6, 4, 4], [1, 1, 1, 6]


def _gen_dodecagon(p):
    (s,) = _need(p, "s")
    if s < 1:
        raise ParamOutOfDomain(f"gen_dodecagon needs s >= 1, got {s}")
    return [2 * s] + [s] * 5, [1] * 5 + [2]


def _family7(p):
    (g,) = _need(p, "gamma")
    if g < 1:
        raise ParamOutOfDomain(f"family7 needs gamma >= 1, got {g}")
    l = g * (g * g + 3 * g + 1)
    c = g * (g + 1)
    return [l, l - 1, l - c, c, 1], [1, c, l - c, l - 1, l]


def _biggs_smith(p):
    _need(p)
    return [3, 2, 2, 2, 1, 1, 1], [1, 1, 1, 1, 1, 1, 3]


def _foster(p):
    _need(p)
    return [3, 2, 2, 2, 2, 1, 1, 1], [1, 1, 1, 1, 2, 2, 2, 3]


_GENERATORS: dict[str, Callable] = {
    "cycle": _cycle,
    "hypercube": _hypercube,
    "johnson": _johnson,
    "complete": _complete,
    "gen_octagon": _gen_octagon,
    "incidence_pg": _incidence_pg,
    "hadamard": _hadamard,
    "classical": _classical,
    "dual_polar_B": _dual_polar_B,
    "m22": _m22,
    "gen_dodecagon": _gen_dodecagon,
    "family7": _family7,
    "biggs_smith": _biggs_smith,
    "foster": _foster,
}

_INFO = (
    FamilyInfo("cycle", ("N",), "N >= 3", "even N=2m: {2,1,...,1;1,...,1,2}; odd N=2m+1: {2,1,...,1;1,...,1}", "N", example={"N": 6}),
    FamilyInfo("hypercube", ("d",), "d >= 1", "b_i = d-i, c_i = i", "2^d", example={"d": 3}),
    FamilyInfo("johnson", ("n", "d"), "n >= 2, 1 <= d <= n/2", "b_i = (d-i)(n-d-i), c_i = i^2", "n!/(d!(n-d)!)", example={"n": 4, "d": 2}),
    FamilyInfo("complete", ("N",), "N >= 2", "{N-1; 1}", "N", example={"N": 5}),
    FamilyInfo("gen_octagon", ("s",), "s in {2,3,4}", "{2s,s,s,s; 1,1,1,2} (collinearity graph of GO(s,1))", "s^4+2s^3+2s^2+2s+1", example={"s": 2}),
    FamilyInfo("incidence_pg", ("l",), "l in {4,5,7,8}", "{l,l-1,l-1,1; 1,1,l-1,l} (incidence graph of pg(l-1,l-1,l-1))", "2 l^2", example={"l": 4}),
    FamilyInfo("hadamard", ("gamma",), "gamma >= 1", "{4g,4g-1,2g,1; 1,2g,4g-1,4g}", "16 gamma", example={"gamma": 1}),
    FamilyInfo("classical", ("d", "q", "alpha", "beta"), "d >= 1, q >= 1, all b_i and c_i positive integers",
               "classical parameters (d, q, alpha, beta): c_i = [i](1 + alpha [i-1]), b_i = ([d]-[i])(beta - alpha [i]), [j] = 1+q+...+q^(j-1)",
               "sum of valencies", example={"d": 3, "q": 1, "alpha": 0, "beta": 1}),
    FamilyInfo("dual_polar_B", ("q", "d"), "q a prime power, d >= 3", "b_i = q^(i+1)(q^(d-i)-1)/(q-1), c_i = (q^i-1)/(q-1)", "sum of valencies (2295 for q=2, d=4)", example={"q": 2, "d": 4}),
    FamilyInfo("m22", (), "no parameters", "{7,6,4,4; 1,1,1,6}", "330", fixed_order=330),
    FamilyInfo("gen_dodecagon", ("s",), "s >= 1", "{2s,s,s,s,s,s; 1,1,1,1,1,2} (collinearity graph of GD(s,1))", "s^6+2(s^5+s^4+s^3+s^2+s)+1", example={"s": 2}),
    FamilyInfo("family7", ("gamma",), "gamma >= 1", "{l,l-1,l-c,c,1; 1,c,l-c,l-1,l}, l = g(g^2+3g+1), c = g(g+1)", "2[1 + l + l(l-1)/c]", example={"gamma": 1}),
    FamilyInfo("biggs_smith", (), "no parameters", "{3,2,2,2,1,1,1; 1,1,1,1,1,1,3}", "102", fixed_order=102),
    FamilyInfo("foster", (), "no parameters", "{3,2,2,2,2,1,1,1; 1,1,1,1,2,2,2,3}", "90", fixed_order=90),
)


def family_array(spec: FamilySpec) -> IntersectionArray:
    try:
        gen = _GENERATORS[spec.name]
    except KeyError:
        raise ParamOutOfDomain(f"unknown family {spec.name!r}; known: {', '.join(_GENERATORS)}") from None
    b, c = gen(spec.params)
    try:
        return IntersectionArray(tuple(b), tuple(c))
    except IntersectionArrayError as exc:
        raise ValidationFailed(f"{spec.label()} produced an invalid array: {exc}") from exc


def cycle_closed_form(N: int, l: int) -> Fraction:
    """l(N-l)/N: resistance across l edges of an even cycle."""
    if N < 4 or N % 2:
        raise ParamOutOfDomain(f"cycle closed form needs even N >= 4, got {N}")
    if not 1 <= l <= N // 2:
        raise ParamOutOfDomain(f"l must be in 1..{N // 2}, got {l}")
    return Fraction(l * (N - l), N)


def list_families() -> list[FamilyInfo]:
    return list(_INFO)


def catalog() -> list[FamilySpec]:
    """Every concrete array exercised by the acceptance suite."""
    specs = [FamilySpec("cycle", {"N": n}) for n in range(3, 21)]
    specs += [FamilySpec("hypercube", {"d": d}) for d in range(1, 11)]
    specs += [FamilySpec("johnson", {"n": n, "d": d})
              for n, d in [(4, 2), (5, 2), (6, 2), (6, 3), (7, 2), (7, 3), (8, 4)]]
    specs += [FamilySpec("complete", {"N": n}) for n in range(2, 11)]
    specs += [FamilySpec("gen_octagon", {"s": s}) for s in (2, 3, 4)]
    specs += [FamilySpec("incidence_pg", {"l": l}) for l in (4, 5, 7, 8)]
    specs += [FamilySpec("hadamard", {"gamma": g}) for g in (1, 2, 3)]
    specs += [FamilySpec("dual_polar_B", {"q": 2, "d": 4}), FamilySpec("dual_polar_B", {"q": 3, "d": 3})]
    specs += [FamilySpec("classical", {"d": 4, "q": 2, "alpha": 0, "beta": 2})]
    specs += [FamilySpec("m22")]
    specs += [FamilySpec("gen_dodecagon", {"s": s}) for s in (2, 3)]
    specs += [FamilySpec("family7", {"gamma": g}) for g in (1, 2)]
    specs += [FamilySpec("biggs_smith"), FamilySpec("foster")]
    return specs


def expected_order(spec: FamilySpec) -> int:
    """Order predicted by the family's closed-form vertex count."""
    p = spec.params
    name = spec.name
    if name in ("cycle", "complete"):
        return p["N"]
    if name == "hypercube":
        return 2 ** p["d"]
    if name == "johnson":
        return comb(p["n"], p["d"])
    if name == "gen_octagon":
        s = p["s"]
        return s**4 + 2 * s**3 + 2 * s**2 + 2 * s + 1
    if name == "incidence_pg":
        return 2 * p["l"] ** 2
    if name == "hadamard":
        return 16 * p["gamma"]
    if name == "gen_dodecagon":
        s = p["s"]
        return s**6 + 2 * (s**5 + s**4 + s**3 + s**2 + s) + 1
    if name == "family7":
        g = p["gamma"]
        l, c = g * (g * g + 3 * g + 1), g * (g + 1)
        return 2 * (1 + l + l * (l - 1) // c)
    for info in _INFO:
        if info.name == name and info.fixed_order is not None:
            return info.fixed_order
    return family_array(spec).N
