"""K-theoretic Pieri coefficients, by Moebius sums and by the matrix method."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .bruhat import BruhatPoset, poset_for
from .grassmannian import GrassmannianSpec, Symbol
from .ktheory import SpecialSchubert, triple_intersection, validate_special

Matrix = list[list[int]]


def _poset(spec: GrassmannianSpec, poset: BruhatPoset | None) -> BruhatPoset:
    return poset if poset is not None else poset_for(spec)


def pieri_coefficient(
    spec: GrassmannianSpec,
    P: Symbol,
    Q: Symbol,
    special: SpecialSchubert,
    poset: BruhatPoset | None = None,
) -> int:
    """Coefficient of O_{X_Q} in O_{X_P} * O_{X_(r)}."""
    validate_special(spec, special)
    poset = _poset(spec, poset)
    p, q = poset.idx(P), poset.idx(Q)
    if q not in poset.down[p]:
        return 0
    total = 0
    for t, mu in poset.mobius_row(q).items():
        if t in poset.down[p]:
            total += mu * triple_intersection(spec, P, poset.symbols[t], special)
    return total


@dataclass(frozen=True)
class PieriRow:
    spec: GrassmannianSpec
    P: Symbol
    special: SpecialSchubert
    coefficients: dict = field(default_factory=dict)

    def row_sum(self) -> int:
        return sum(self.coefficients.values())

    def violations(self, poset: BruhatPoset) -> list[str]:
        """Support and sign problems; empty when the row is well formed."""
        out = []
        cp = poset.codim(self.P)
        for Q, c in self.coefficients.items():
            cq = poset.codim(Q)
            if not poset.preceq(Q, self.P) or cq < cp + self.special.r:
                out.append(f"{list(Q)} outside the allowed support")
            if (-1) ** (cq - cp - self.special.r) * c < 0:
                out.append(f"{list(Q)} has coefficient {c} of the wrong sign")
        return out

    def non_unit_entries(self) -> dict:
        """Entries whose magnitude is not 1; allowed, but worth reporting."""
        return {Q: c for Q, c in self.coefficients.items() if abs(c) != 1}

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "P": list(self.P),
            "special": self.special.to_json(),
            "coefficients": [[list(Q), c] for Q, c in sorted(self.coefficients.items())],
        }


def pieri_row(
    spec: GrassmannianSpec,
    P: Symbol,
    special: SpecialSchubert,
    poset: BruhatPoset | None = None,
) -> PieriRow:
    validate_special(spec, special)
    poset = _poset(spec, poset)
    p = poset.idx(P)
    below = poset.down[p]
    triples = {t: triple_intersection(spec, P, poset.symbols[t], special) for t in below}
    coefficients = {}
    for q in sorted(below):
        total = sum(mu * triples[t] for t, mu in poset.mobius_row(q).items() if t in below)
        if total:
            coefficients[poset.symbols[q]] = total
    return PieriRow(spec, tuple(P), special, coefficients)


# -- matrix method -----------------------------------------------------


def matmul(A: Matrix, B: Matrix) -> Matrix:
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * cols
        for k, a in enumerate(row):
            if a:
                brow = B[k]
                for j in range(cols):
                    if brow[j]:
                        acc[j] += a * brow[j]
        out.append(acc)
    return out


def identity(size: int) -> Matrix:
    return [[int(i == j) for j in range(size)] for i in range(size)]


def zeta_matrix(poset: BruhatPoset) -> Matrix:
    """M[i][j] = 1 if symbols[j] is below symbols[i]."""
    size = len(poset)
    return [[int(j in poset.down[i]) for j in range(size)] for i in range(size)]


def dual_matrix(poset: BruhatPoset) -> Matrix:
    """D[t][q] = mu(symbols[q], symbols[t]); columns are the dual classes."""
    size = len(poset)
    D = [[0] * size for _ in range(size)]
    for q in range(size):
        for t, mu in poset.mobius_row(q).items():
            D[t][q] = mu
    return D


@dataclass(frozen=True)
class PosetMatrices:
    spec: GrassmannianSpec
    special: SpecialSchubert
    symbols: list
    M: Matrix
    D: Matrix
    T_r: Matrix
    C_r: Matrix

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "special": self.special.to_json(),
            "symbols": [list(P) for P in self.symbols],
            "M": self.M,
            "D": self.D,
            "T_r": self.T_r,
            "C_r": self.C_r,
        }

    def to_csv(self) -> str:
        """C_r with a header of symbols and one row per P."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        labels = ["[" + ",".join(map(str, P)) + "]" for P in self.symbols]
        writer.writerow(["P"] + labels)
        for label, row in zip(labels, self.C_r):
            writer.writerow([label] + row)
        return buf.getvalue()


class CertificationError(AssertionError):
    pass


def build_matrices(
    spec: GrassmannianSpec,
    special: SpecialSchubert,
    poset: BruhatPoset | None = None,
) -> PosetMatrices:
    validate_special(spec, special)
    poset = _poset(spec, poset)
    size = len(poset)
    M = zeta_matrix(poset)
    D = dual_matrix(poset)
    if matmul(M, D) != identity(size):
        raise CertificationError(f"M*D != I for {spec.name()}")
    T_r = [[0] * size for _ in range(size)]
    for i, P in enumerate(poset.symbols):
        for j in poset.down[i]:
            T_r[i][j] = triple_intersection(spec, P, poset.symbols[j], special)
    C_r = matmul(T_r, D)
    return PosetMatrices(spec, special, list(poset.symbols), M, D, T_r, C_r)
