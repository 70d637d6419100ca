"""Bruhat order on Schubert symbols, its Hasse diagram, ranks and Moebius function."""
from __future__ import annotations

import threading
from typing import Iterable

from .errors import LengthMismatch, SizeLimitExceeded, UnknownSymbol
from .grassmannian import (
    GrassmannianSpec,
    Symbol,
    bracket,
    count_symbols,
    enumerate_symbols,
    make_spec,
    type_of,
)

DEFAULT_SIZE_CAP = 100_000


def leq(T: Symbol, P: Symbol) -> bool:
    """Componentwise order: t_i <= p_i for every i."""
    if len(T) != len(P):
        raise LengthMismatch(f"symbols of different lengths: {list(T)} vs {list(P)}")
    return all(t <= p for t, p in zip(T, P))


def _count_upto(S: Iterable[int], c: int) -> int:
    return sum(1 for x in S if x <= c)


def preceq(spec: GrassmannianSpec, T: Symbol, P: Symbol) -> bool:
    """T below P in the Bruhat order, i.e. X_T is contained in X_P."""
    if not leq(T, P):
        return False
    if spec.lie_type != "D":
        return True
    n = spec.n
    common = bracket(spec, P) & bracket(spec, T)
    tP = tT = None
    # c runs downward so the window [c+1, n+1] only grows; stop once it breaks.
    for c in range(n, 0, -1):
        if c + 1 not in common:
            break
        if _count_upto(P, c) == _count_upto(T, c):
            if tP is None:
                tP, tT = type_of(spec, P), type_of(spec, T)
            if tP != tT:
                return False
    return True


class BruhatPoset:
    """The Bruhat order on all Schubert symbols of one Grassmannian.

    Elements are addressed either by symbol or by their index in the
    canonical (lexicographic) order.  ``down[i]`` is the set of indices j
    with symbols[j] below-or-equal symbols[i].
    """

    def __init__(self, spec: GrassmannianSpec, symbols: list[Symbol], down: list[frozenset[int]]):
        self.spec = spec
        self.symbols = symbols
        self.index = {P: i for i, P in enumerate(symbols)}
        self.down = down
        self.up: list[set[int]] = [set() for _ in symbols]
        for i, ds in enumerate(down):
            for j in ds:
                self.up[j].add(i)
        self.lower_covers = self._lower_covers()
        self.covers = sorted((j, i) for i, lows in enumerate(self.lower_covers) for j in lows)
        self.rank = self._ranks()
        self._mobius_rows: dict[int, dict[int, int]] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, P) -> bool:
        return tuple(P) in self.index

    def idx(self, P: Symbol) -> int:
        try:
            return self.index[tuple(P)]
        except KeyError:
            raise UnknownSymbol(f"{list(P)} is not a Schubert symbol of {self.spec.name()}") from None

    def preceq(self, T: Symbol, P: Symbol) -> bool:
        return self.idx(T) in self.down[self.idx(P)]

    def _lower_covers(self) -> list[frozenset[int]]:
        result = []
        for i, ds in enumerate(self.down):
            strict = ds - {i}
            implied: set[int] = set()
            for s in strict:
                implied |= self.down[s] - {s}
            result.append(frozenset(strict - implied))
        return result

    def top_down_order(self) -> list[int]:
        """A linear extension read from the maximum downwards."""
        return sorted(range(len(self.symbols)), key=lambda i: (-len(self.down[i]), i))

    def _ranks(self) -> list[int]:
        rank = [0] * len(self.symbols)
        for i in self.top_down_order():
            ups = [u for u in self.up[i] if i in self.lower_covers[u]]
            rank[i] = max((rank[u] + 1 for u in ups), default=0)
        return rank

    @property
    def maximum(self) -> Symbol:
        tops = [P for i, P in enumerate(self.symbols) if len(self.down[i]) == len(self.symbols)]
        assert len(tops) == 1, tops
        return tops[0]

    @property
    def minimum(self) -> Symbol:
        bottoms = [P for i, P in enumerate(self.symbols) if len(self.up[i]) == len(self.symbols)]
        assert len(bottoms) == 1, bottoms
        return bottoms[0]

    def codim(self, P: Symbol) -> int:
        return self.rank[self.idx(P)]

    def is_graded(self) -> bool:
        """Every cover relation drops the rank by exactly one."""
        return all(self.rank[lo] == self.rank[hi] + 1 for lo, hi in self.covers)

    def mobius_row(self, q: int) -> dict[int, int]:
        """{p: mu(Q, P)} for every P above Q = symbols[q]; zero entries omitted."""
        row = self._mobius_rows.get(q)
        if row is not None:
            return row
        with self._lock:
            row = self._mobius_rows.get(q)
            if row is None:
                row = {}
                interval = sorted(self.up[q], key=lambda i: (len(self.down[i]), i))
                for p in interval:
                    if p == q:
                        row[p] = 1
                        continue
                    total = 0
                    for t in self.down[p]:
                        if t != p and t in row:
                            total += row[t]
                    row[p] = -total
                row = {p: v for p, v in row.items() if v}
                self._mobius_rows[q] = row
        return row

    def mobius(self, Q: Symbol, P: Symbol) -> int:
        q, p = self.idx(Q), self.idx(P)
        return self.mobius_row(q).get(p, 0)

    # -- serialization -------------------------------------------------

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "symbols": [list(P) for P in self.symbols],
            "covers": [[lo, hi] for lo, hi in self.covers],
            "rank": list(self.rank),
        }

    @classmethod
    def from_covers(cls, spec: GrassmannianSpec, symbols: list[Symbol], covers: Iterable[tuple[int, int]]):
        """Rebuild the order as the reflexive-transitive closure of a cover list."""
        lows: list[list[int]] = [[] for _ in symbols]
        for lo, hi in covers:
            lows[hi].append(lo)
        down: list[frozenset[int] | None] = [None] * len(symbols)

        def close(i: int) -> frozenset[int]:
            stack = [(i, iter(lows[i]))]
            pending = {i}
            while stack:
                node, it = stack[-1]
                child = next(it, None)
                if child is None:
                    stack.pop()
                    acc = {node}
                    for c in lows[node]:
                        acc |= down[c]
                    down[node] = frozenset(acc)
                    pending.discard(node)
                elif down[child] is None:
                    if child in pending:
                        raise ValueError("cover list contains a cycle")
                    pending.add(child)
                    stack.append((child, iter(lows[child])))
            return down[i]

        for i in range(len(symbols)):
            if down[i] is None:
                close(i)
        return cls(spec, symbols, down)

    @classmethod
    def from_json(cls, data: dict) -> "BruhatPoset":
        spec = make_spec(data["spec"]["lie_type"], data["spec"]["m"], data["spec"]["n"])
        symbols = [tuple(P) for P in data["symbols"]]
        return cls.from_covers(spec, symbols, [tuple(c) for c in data["covers"]])

    def to_dot(self) -> str:
        """Hasse diagram in Graphviz DOT, one rank per layer, maximum on top."""
        lines = ["graph hasse {", '  rankdir="TB";', "  node [shape=plaintext];"]
        by_rank: dict[int, list[int]] = {}
        for i, r in enumerate(self.rank):
            by_rank.setdefault(r, []).append(i)
        for r in sorted(by_rank):
            nodes = " ".join(f"n{i};" for i in by_rank[r])
            lines.append(f"  {{ rank=same; {nodes} }}")
        for i, P in enumerate(self.symbols):
            label = "{" + ",".join(map(str, P)) + "}"
            lines.append(f'  n{i} [label="{label}"];')
        for lo, hi in self.covers:
            lines.append(f"  n{hi} -- n{lo};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_poset(spec: GrassmannianSpec, size_cap: int = DEFAULT_SIZE_CAP) -> BruhatPoset:
    size = count_symbols(spec)
    if size > size_cap:
        raise SizeLimitExceeded(f"{spec.name()} has {size} Schubert symbols, above the cap of {size_cap}")
    symbols = enumerate_symbols(spec)
    down = [
        frozenset(j for j, T in enumerate(symbols) if preceq(spec, T, P))
        for P in symbols
    ]
    return BruhatPoset(spec, symbols, down)


def transitive_reduction(elements: list, relation) -> list[tuple[int, int]]:
    """Cover pairs (lo, hi) of an arbitrary partial order given as a predicate.

    Used to compare the Bruhat covers against the covers of plain <=.
    """
    n = len(elements)
    below = [
        {j for j in range(n) if j != i and relation(elements[j], elements[i])}
        for i in range(n)
    ]
    pairs = []
    for i in range(n):
        implied = set().union(*(below[s] for s in below[i])) if below[i] else set()
        pairs.extend((j, i) for j in below[i] - implied)
    return sorted(pairs)


def codim(poset: BruhatPoset, P: Symbol) -> int:
    return poset.codim(P)


def mobius(poset: BruhatPoset, Q: Symbol, P: Symbol) -> int:
    return poset.mobius(Q, P)


_POSETS: dict[GrassmannianSpec, BruhatPoset] = {}
_POSETS_LOCK = threading.Lock()


def poset_for(spec: GrassmannianSpec, size_cap: int = DEFAULT_SIZE_CAP) -> BruhatPoset:
    """Process-wide shared poset per spec, so Moebius memos are reused."""
    with _POSETS_LOCK:
        poset = _POSETS.get(spec)
        if poset is None:
            poset = build_poset(spec, size_cap)
            _POSETS[spec] = poset
        return poset


def register_poset(poset: BruhatPoset) -> None:
    with _POSETS_LOCK:
        _POSETS.setdefault(poset.spec, poset)
