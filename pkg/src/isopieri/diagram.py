"""Richardson diagrams D(P,T): cuts, zero columns, lone stars and the sets L, Q.

A cut position c in [0, N] means the boundary between column c and c+1.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bruhat import leq, preceq
from .errors import NotLeq, PreconditionViolated, WrongLieType
from .grassmannian import GrassmannianSpec, Symbol, bracket, entry, type_of


@dataclass(frozen=True)
class DiagramReport:
    spec: GrassmannianSpec
    P: Symbol
    T: Symbol
    rows: tuple[tuple[int, int], ...]
    visible_cuts: frozenset[int]
    cuts: frozenset[int]
    exceptional_cuts: frozenset[int]
    zero_columns: frozenset[int]
    lone_stars: frozenset[tuple[int, int]]
    L: frozenset[int]
    Q: frozenset[int]

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "P": list(self.P),
            "T": list(self.T),
            "rows": [list(r) for r in self.rows],
            "visible_cuts": sorted(self.visible_cuts),
            "cuts": sorted(self.cuts),
            "exceptional_cuts": sorted(self.exceptional_cuts),
            "zero_columns": sorted(self.zero_columns),
            "lone_stars": [list(s) for s in sorted(self.lone_stars)],
            "L": sorted(self.L),
            "Q": sorted(self.Q),
        }

    def render(self) -> str:
        return render(self)


def visible_cuts(spec: GrassmannianSpec, P: Symbol, T: Symbol) -> frozenset[int]:
    """Boundaries c that no row [t_j, p_j] straddles."""
    return frozenset(
        c for c in range(spec.N + 1)
        if not any(t <= c < p for t, p in zip(T, P))
    )


def _count_upto(S: Symbol, c: int) -> int:
    return sum(1 for x in S if x <= c)


def cut_candidates(spec: GrassmannianSpec, P: Symbol, T: Symbol) -> list[int]:
    """Type D: c in [1,n] with [c+1,n+1] inside [P] & [T] and T one ahead of P up to c."""
    n = spec.n
    common = bracket(spec, P) & bracket(spec, T)
    return [
        c for c in range(1, n + 1)
        if all(x in common for x in range(c + 1, n + 2))
        and _count_upto(T, c) == _count_upto(P, c) + 1
    ]


def _center_cut(spec: GrassmannianSpec, P: Symbol, T: Symbol) -> bool:
    n, N, m = spec.n, spec.N, spec.m
    for i in range(1, m + 1):
        if P[i - 1] == n + 2 and n + 2 <= entry(T, i + 1, N):
            return True
        if T[i - 1] == n + 1 and n + 1 >= entry(P, i - 1, N):
            return True
    return False


def _exceptional_cuts(spec: GrassmannianSpec, P: Symbol, T: Symbol) -> frozenset[int]:
    if spec.lie_type != "D":
        return frozenset()
    N = spec.N
    found: set[int] = set()
    if _center_cut(spec, P, T):
        found.add(spec.n + 1)
    if type_of(spec, P) != type_of(spec, T):
        for c in cut_candidates(spec, P, T):
            found.update((c, N - c))
    return frozenset(found)


def analyze(spec: GrassmannianSpec, P: Symbol, T: Symbol) -> DiagramReport:
    if not leq(T, P):
        raise NotLeq(f"T={list(T)} is not componentwise below P={list(P)}")
    N, m, n = spec.N, spec.m, spec.n
    visible = visible_cuts(spec, P, T)
    apparent = frozenset(c for c in range(N + 1) if c in visible or N - c in visible)
    exceptional = _exceptional_cuts(spec, P, T)
    cuts = apparent | exceptional

    zero_columns = frozenset(
        c for j in range(m + 1)
        for c in range(entry(P, j, N) + 1, entry(T, j + 1, N))
    )
    lone: set[tuple[int, int]] = set()
    for j in range(1, m + 1):
        t, p = T[j - 1], P[j - 1]
        if t in cuts:
            lone.add((j, t))
        if p - 1 in cuts:
            lone.add((j, p))
    L = zero_columns | {N + 1 - c for _, c in lone}

    Q = {c for c in cuts if c <= n}
    if spec.orthogonal:
        Q.add(n + 1)

    return DiagramReport(
        spec=spec,
        P=tuple(P),
        T=tuple(T),
        rows=tuple(zip(T, P)),
        visible_cuts=visible,
        cuts=cuts,
        exceptional_cuts=exceptional,
        zero_columns=zero_columns,
        lone_stars=frozenset(lone),
        L=frozenset(L),
        Q=frozenset(Q),
    )


def arrow(spec: GrassmannianSpec, P: Symbol, T: Symbol) -> bool:
    """The relation P -> T."""
    if not preceq(spec, T, P):
        return False
    n = spec.n
    cuts = None
    for i in range(len(P) - 1):
        p, t_next = P[i], T[i + 1]
        if spec.lie_type == "D" and p == n + 2 and t_next == n + 1:
            continue
        if p > t_next:
            return False
        if p == t_next:
            if cuts is None:
                cuts = analyze(spec, P, T).cuts
            if p in cuts:
                return False
    return True


def _require_d(spec: GrassmannianSpec, what: str) -> None:
    if spec.lie_type != "D":
        raise WrongLieType(f"{what} is only defined in type D, got type {spec.lie_type}")


def has_critical_window(spec: GrassmannianSpec, P: Symbol, T: Symbol) -> bool:
    """Some c in [1,n] with c and N-c visible and [c+1,n+1] inside [T] & [P].

    Only meaningful when t(P) != t(T); other inputs are rejected.
    """
    _require_d(spec, "has_critical_window")
    if not leq(T, P):
        raise NotLeq(f"T={list(T)} is not componentwise below P={list(P)}")
    if type_of(spec, P) == type_of(spec, T):
        raise PreconditionViolated("critical windows are defined only when t(P) != t(T)")
    N, n = spec.N, spec.n
    visible = visible_cuts(spec, P, T)
    common = bracket(spec, P) & bracket(spec, T)
    return any(
        c in visible and N - c in visible
        and all(x in common for x in range(c + 1, n + 2))
        for c in range(1, n + 1)
    )


def conflicting_lone_stars(spec: GrassmannianSpec, P: Symbol, T: Symbol) -> bool:
    """Lone stars sit in two mirrored columns d and N+1-d."""
    _require_d(spec, "conflicting_lone_stars")
    if tuple(P) == tuple(T):
        raise PreconditionViolated("conflicting lone stars need T != P")
    report = analyze(spec, P, T)
    columns = {c for _, c in report.lone_stars}
    return any(spec.N + 1 - c in columns for c in columns)


def render(report: DiagramReport) -> str:
    """ASCII picture: '*' star, '@' lone star, '0' empty cell, '|' at each cut."""
    N = report.spec.N
    lone = report.lone_stars
    width = len(str(len(report.rows)))
    head = " " * (width + 2) + "".join(f"{c % 10} " for c in range(1, N + 1))
    lines = [head.rstrip()]
    for j, (t, p) in enumerate(report.rows, start=1):
        cells = ["|" if 0 in report.cuts else " "]
        for c in range(1, N + 1):
            if (j, c) in lone:
                cells.append("@")
            elif t <= c <= p:
                cells.append("*")
            else:
                cells.append("0")
            cells.append("|" if c in report.cuts else " ")
        lines.append(f"{j:>{width}} " + "".join(cells).rstrip())
    lines.append(f"cuts: {sorted(report.cuts)}")
    if report.exceptional_cuts:
        lines.append(f"exceptional: {sorted(report.exceptional_cuts)}")
    lines.append(f"L: {sorted(report.L)}")
    lines.append(f"Q: {sorted(report.Q)}")
    return "\n".join(lines) + "\n"
