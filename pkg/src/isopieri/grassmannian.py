"""Ambient isotropic Grassmannians and their Schubert symbols.

A Schubert symbol is stored as a plain sorted tuple of 1-based column
indices, e.g. ``(2, 3, 4, 10)``.  Tuples give us immutability, hashing and
structural equality for free, and serialize directly to JSON arrays.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import InvalidParameters, InvalidSymbol, WrongLieType

Symbol = tuple[int, ...]

LIE_TYPES = ("B", "C", "D")


@dataclass(frozen=True)
class GrassmannianSpec:
    """IG(m, N) of Lie type B, C or D with rank parameter n."""

    lie_type: str
    m: int
    n: int

    @property
    def N(self) -> int:
        return {"C": 2 * self.n, "B": 2 * self.n + 1, "D": 2 * self.n + 2}[self.lie_type]

    @property
    def k(self) -> int:
        return self.n - self.m + (1 if self.lie_type == "D" else 0)

    @property
    def orthogonal(self) -> bool:
        return self.lie_type in ("B", "D")

    @property
    def dimension(self) -> int:
        m, N = self.m, self.N
        if self.lie_type == "C":
            return m * (N - m) - m * (m - 1) // 2
        return m * (N - m) - m * (m + 1) // 2

    def name(self) -> str:
        prefix = "SG" if self.lie_type == "C" else "OG"
        return f"{prefix}({self.m},{self.N})"

    def to_json(self) -> dict:
        return {"lie_type": self.lie_type, "m": self.m, "n": self.n, "N": self.N, "k": self.k}

    @classmethod
    def from_json(cls, data: dict) -> "GrassmannianSpec":
        return make_spec(data["lie_type"], data["m"], data["n"])


def make_spec(lie_type: str, m: int, n: int) -> GrassmannianSpec:
    lie_type = str(lie_type).upper()
    if lie_type not in LIE_TYPES:
        raise InvalidParameters(f"unknown Lie type {lie_type!r}; expected one of B, C, D")
    if n < 1:
        raise InvalidParameters(f"n must be at least 1, got {n}")
    # Type D stops at m = n: OG(n+1, 2n+2) is disconnected and the
    # componentwise-plus-type criterion no longer describes containment.
    if not 1 <= m <= n:
        raise InvalidParameters(f"m must satisfy 1 <= m <= n={n} for type {lie_type}, got {m}")
    return GrassmannianSpec(lie_type, m, n)


def is_symbol(spec: GrassmannianSpec, elements: Iterable[int]) -> bool:
    P = tuple(elements)
    N = spec.N
    if len(P) != spec.m or any(a >= b for a, b in zip(P, P[1:])):
        return False
    if P and (P[0] < 1 or P[-1] > N):
        return False
    members = set(P)
    return all(N + 1 - c not in members for c in P)


def make_symbol(spec: GrassmannianSpec, elements: Iterable[int]) -> Symbol:
    """Sort and validate; raises :class:`InvalidSymbol` on any violation."""
    P = tuple(sorted(int(c) for c in elements))
    if len(set(P)) != len(P):
        raise InvalidSymbol(f"{list(P)} has repeated entries")
    if len(P) != spec.m:
        raise InvalidSymbol(f"{list(P)} has {len(P)} entries, expected m={spec.m}")
    if P[0] < 1 or P[-1] > spec.N:
        raise InvalidSymbol(f"{list(P)} has entries outside [1,{spec.N}]")
    if not is_symbol(spec, P):
        raise InvalidSymbol(f"{list(P)} is not isotropic: two entries sum to N+1={spec.N + 1}")
    return P


def count_symbols(spec: GrassmannianSpec) -> int:
    # one entry from each of `pairs` mirror pairs {c, N+1-c}
    pairs = spec.n + 1 if spec.lie_type == "D" else spec.n
    return comb(pairs, spec.m) * 2**spec.m


def enumerate_symbols(spec: GrassmannianSpec) -> list[Symbol]:
    """All Schubert symbols in lexicographic order (the canonical index order)."""
    return [P for P in combinations(range(1, spec.N + 1), spec.m) if is_symbol(spec, P)]


def entry(P: Symbol, i: int, N: int) -> int:
    """p_i with the sentinels p_0 = 0 and p_{m+1} = N+1 (1-based i)."""
    if i == 0:
        return 0
    if i == len(P) + 1:
        return N + 1
    return P[i - 1]


def reflect(spec: GrassmannianSpec, P: Symbol) -> Symbol:
    return tuple(sorted(spec.N + 1 - c for c in P))


def bracket(spec: GrassmannianSpec, P: Symbol) -> frozenset[int]:
    """[P] = P together with its reflection."""
    return frozenset(P) | frozenset(reflect(spec, P))


def _require_d(spec: GrassmannianSpec, what: str) -> None:
    if spec.lie_type != "D":
        raise WrongLieType(f"{what} is only defined in type D, got type {spec.lie_type}")


def iota(spec: GrassmannianSpec, P: Symbol) -> Symbol:
    _require_d(spec, "iota")
    a, b = spec.n + 1, spec.n + 2
    swap = {a: b, b: a}
    return tuple(sorted(swap.get(c, c) for c in P))


def dual(spec: GrassmannianSpec, P: Symbol) -> Symbol:
    R = reflect(spec, P)
    if spec.lie_type == "D" and spec.n % 2 == 0:
        return iota(spec, R)
    return R


def type_of(spec: GrassmannianSpec, P: Symbol) -> int:
    """The type-D invariant t(P) in {0, 1, 2}."""
    _require_d(spec, "type_of")
    n = spec.n
    if n + 1 not in P and n + 2 not in P:
        return 2
    return sum(1 for c in range(1, n + 2) if c not in P) % 2


def parse_symbol(spec: GrassmannianSpec, text: str) -> Symbol:
    """Parse ``"2,3,4,10"`` (or ``"[2,3,4,10]"``) into a validated symbol."""
    cleaned = text.strip().strip("[]{}()")
    try:
        values = [int(tok) for tok in cleaned.replace(" ", "").split(",") if tok]
    except ValueError as exc:
        raise InvalidSymbol(f"cannot parse symbol {text!r}") from exc
    return make_symbol(spec, values)
