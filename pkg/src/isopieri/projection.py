"""Complete-intersection data of projected Richardson varieties, and shrinking.

Z_{P,T} in P^{N-1} is cut out by x_c = 0 for c in L and by f_d - f_c = 0
for consecutive c < d in Q with d - c >= 2, where f_c is the partial sum
x_1 x_N + ... + x_c x_{N+1-c}.  Only the index data are stored.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bruhat import preceq
from .diagram import analyze
from .errors import NotPreceq, PreconditionViolated, WrongLieType
from .grassmannian import GrassmannianSpec, Symbol, entry


@dataclass(frozen=True)
class ZData:
    spec: GrassmannianSpec
    P: Symbol
    T: Symbol
    linear_vars: tuple[int, ...]
    quad_gaps: tuple[tuple[int, int], ...]

    @property
    def l(self) -> int:
        return len(self.linear_vars)

    @property
    def q(self) -> int:
        return len(self.quad_gaps)

    def to_json(self) -> dict:
        return {
            "linear": list(self.linear_vars),
            "quadratic_gaps": [list(g) for g in self.quad_gaps],
            "l": self.l,
            "q": self.q,
        }

    def generator_supports(self) -> list[frozenset[int]]:
        """Variables touched by each generator, linear ones first."""
        N = self.spec.N
        supports = [frozenset({c}) for c in self.linear_vars]
        for c, d in self.quad_gaps:
            cols = set(range(c + 1, d + 1))
            supports.append(frozenset(cols | {N + 1 - x for x in cols}))
        return supports


@dataclass(frozen=True)
class SSets:
    S: frozenset[int]
    S_prime: frozenset[int]


def _require_preceq(spec: GrassmannianSpec, P: Symbol, T: Symbol) -> None:
    if not preceq(spec, T, P):
        raise NotPreceq(f"T={list(T)} is not below P={list(P)} in the Bruhat order")


@lru_cache(maxsize=65536)
def _z_data_cached(spec: GrassmannianSpec, P: Symbol, T: Symbol) -> ZData:
    _require_preceq(spec, P, T)
    report = analyze(spec, P, T)
    Q = sorted(report.Q)
    gaps = tuple((c, d) for c, d in zip(Q, Q[1:]) if d - c >= 2)
    return ZData(spec, P, T, tuple(sorted(report.L)), gaps)


def z_data(spec: GrassmannianSpec, P: Symbol, T: Symbol) -> ZData:
    return _z_data_cached(spec, tuple(P), tuple(T))


def s_sets(spec: GrassmannianSpec, P: Symbol, T: Symbol) -> SSets:
    if spec.lie_type != "D":
        raise WrongLieType(f"S sets are only defined in type D, got type {spec.lie_type}")
    _require_preceq(spec, P, T)
    n, N = spec.n, spec.N
    S = frozenset(i for i in range(1, n + 2) if any(t <= i <= p for t, p in zip(T, P)))
    S_prime = frozenset(p for p in P if p >= n + 2 and N + 1 - p in S)
    return SSets(S, S_prime)


def z_type(spec: GrassmannianSpec, P: Symbol, T: Symbol) -> int:
    """Type of Z_{P,T} when it is a linear space of codimension n in the quadric."""
    sets = s_sets(spec, P, T)
    zd = z_data(spec, P, T)
    if zd.q != 0 or zd.l != spec.n + 1:
        raise PreconditionViolated(
            f"z_type needs q = 0 and l = n+1 = {spec.n + 1}, got q = {zd.q}, l = {zd.l}"
        )
    return (len(sets.S) + len(sets.S_prime) + spec.n + 1) % 2


def shrink(spec: GrassmannianSpec, P: Symbol, T: Symbol) -> Symbol:
    """Lower P to a symbol P' with T <= P' <= P, the same Z-data, and P' -> T."""
    _require_preceq(spec, P, T)
    report = analyze(spec, P, T)
    cuts, L = report.cuts, report.L
    N, n = spec.N, spec.n
    out = []
    for i in range(1, spec.m + 1):
        p, t, t_next = P[i - 1], T[i - 1], entry(T, i + 1, N)
        if p < t_next:
            out.append(p)
        elif t_next - 1 not in cuts:
            if spec.lie_type == "D" and t_next in (n + 1, n + 2):
                out.append(N + 1 - t_next)
            else:
                out.append(t_next)
        else:
            out.append(max(c for c in range(t, t_next) if c not in L))
    return tuple(out)
