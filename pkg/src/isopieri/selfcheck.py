"""Exhaustive invariant sweeps over small Grassmannians, used by `isopieri selfcheck`."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import quadric_oracle as qo
from .bruhat import BruhatPoset, build_poset, leq, preceq
from .diagram import analyze, arrow, conflicting_lone_stars, has_critical_window
from .grassmannian import GrassmannianSpec, count_symbols, is_symbol, make_spec, reflect, type_of
from .ktheory import (
    chi,
    special_classes,
    triple_intersection,
    triple_intersection_printed,
    triple_intersection_unified,
    z_class,
)
from .pieri import build_matrices, dual_matrix, identity, matmul, pieri_row, zeta_matrix
from .projection import shrink, z_data

DEFAULT_SPECS = [
    ("C", 2, 2), ("C", 2, 4), ("C", 3, 4),
    ("B", 2, 3), ("B", 3, 3),
    ("D", 2, 2), ("D", 2, 3), ("D", 3, 3), ("D", 4, 4),
    ("C", 1, 3), ("B", 1, 2), ("B", 1, 3), ("D", 1, 2), ("D", 1, 3),
]
DEFAULT_BUDGET = 100


@dataclass
class CheckResult:
    name: str
    spec: str
    passed: bool
    detail: str = ""
    notes: list = field(default_factory=list)

    def line(self) -> str:
        status = "ok  " if self.passed else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return f"{status} {self.spec:<10} {self.name}{extra}"


def _pairs(poset: BruhatPoset):
    for i, P in enumerate(poset.symbols):
        for j in sorted(poset.down[i]):
            yield P, poset.symbols[j]


def check_order(spec: GrassmannianSpec, poset: BruhatPoset) -> list[str]:
    errs = []
    syms = poset.symbols
    for a in syms:
        for b in syms:
            ab, ba = poset.preceq(a, b), poset.preceq(b, a)
            if ab and ba and a != b:
                errs.append(f"antisymmetry fails at {a}, {b}")
            if ab and not leq(a, b):
                errs.append(f"{a} below {b} without <=")
            if spec.lie_type != "D" and ab != leq(a, b):
                errs.append(f"Bruhat and <= differ at {a}, {b}")
    for i in range(len(syms)):
        for j in poset.down[i]:
            if not poset.down[j] <= poset.down[i]:
                errs.append("transitivity fails")
    if not poset.is_graded():
        errs.append("not graded")
    if poset.rank[poset.idx(poset.maximum)] != 0:
        errs.append("maximum has nonzero rank")
    if poset.minimum != tuple(range(1, spec.m + 1)):
        errs.append(f"minimum is {poset.minimum}")
    if poset.codim(poset.minimum) != spec.dimension:
        errs.append("rank of minimum differs from the dimension")
    return errs


def check_type_d_order(spec: GrassmannianSpec, poset: BruhatPoset) -> list[str]:
    errs = []
    for P in poset.symbols:
        for T in poset.symbols:
            if P == T or not leq(T, P):
                continue
            direct = preceq(spec, T, P)
            stars = not conflicting_lone_stars(spec, P, T)
            same = type_of(spec, P) == type_of(spec, T)
            window = same or not has_critical_window(spec, P, T)
            if not direct == stars == window:
                errs.append(f"P={P} T={T}: preceq={direct} lone-stars={stars} window={window}")
    return errs


def check_diagrams(spec: GrassmannianSpec, poset: BruhatPoset) -> list[str]:
    errs = []
    N, n = spec.N, spec.n
    for P, T in _pairs(poset):
        rep = analyze(spec, P, T)
        tag = f"P={P} T={T}"
        if not {0, N} <= rep.visible_cuts:
            errs.append(f"{tag}: 0 or N not visible")
        if any(N - c not in rep.cuts for c in rep.cuts):
            errs.append(f"{tag}: cuts not symmetric")
        if any(c not in rep.cuts or c - 1 not in rep.cuts for c in rep.L):
            errs.append(f"{tag}: some c in L lacks cuts c-1, c")
        if (set(P) | set(T)) & rep.L:
            errs.append(f"{tag}: L meets P or T")
        for c in range(1, n + 2):
            if c - 1 in rep.Q and c in rep.Q and c not in rep.L and N + 1 - c not in rep.L:
                errs.append(f"{tag}: consecutive cuts {c - 1},{c} without a linear equation")
        rot = analyze(spec, reflect(spec, T), reflect(spec, P))
        if rot.cuts != rep.cuts:
            errs.append(f"{tag}: rotation changes the cuts")
        if len(rot.L) != len(rep.L):
            errs.append(f"{tag}: rotation changes #L")
    return errs


def check_zdata_and_shrink(spec: GrassmannianSpec, poset: BruhatPoset) -> list[str]:
    errs = []
    N, n = spec.N, spec.n
    for P, T in _pairs(poset):
        tag = f"P={P} T={T}"
        zd = z_data(spec, P, T)
        supports = zd.generator_supports()
        if any(a & b for a, b in combinations(supports, 2)):
            errs.append(f"{tag}: generators share a variable")
        if zd.l + 2 * zd.q > N:
            errs.append(f"{tag}: l + 2q > N")
        Q = set(analyze(spec, P, T).Q)
        if zd.q != sum(1 for c in Q if c > 0 and c - 1 not in Q):
            errs.append(f"{tag}: q disagrees with the gap count")
        if spec.orthogonal and zd.q == 0 and zd.l < n + 1:
            errs.append(f"{tag}: q = 0 but l < n+1")
        if zd.l + 2 * zd.q <= N - 1 and chi(z_class(spec, zd)) != 1:
            errs.append(f"{tag}: chi of Z is not 1")
        rot = z_data(spec, reflect(spec, T), reflect(spec, P))
        if (rot.l, rot.q) != (zd.l, zd.q):
            errs.append(f"{tag}: rotation changes (l, q)")
        S = shrink(spec, P, T)
        if not is_symbol(spec, S):
            errs.append(f"{tag}: shrink gave a non-symbol {S}")
            continue
        if not (preceq(spec, T, S) and preceq(spec, S, P)):
            errs.append(f"{tag}: shrink {S} not between T and P")
            continue
        zs = z_data(spec, S, T)
        if (zs.linear_vars, zs.quad_gaps) != (zd.linear_vars, zd.quad_gaps):
            errs.append(f"{tag}: shrink {S} changes Z")
        if not arrow(spec, S, T):
            errs.append(f"{tag}: shrink {S} does not satisfy S -> T")
        if set(S) & set(zd.linear_vars):
            errs.append(f"{tag}: shrink {S} meets L")
    return errs


def check_mobius(spec: GrassmannianSpec, poset: BruhatPoset) -> list[str]:
    errs = []
    if matmul(zeta_matrix(poset), dual_matrix(poset)) != identity(len(poset)):
        errs.append("M*D != I")
    for q, Qs in enumerate(poset.symbols):
        for t, mu in poset.mobius_row(q).items():
            expected = (-1) ** (poset.rank[q] - poset.rank[t])
            if mu != expected:
                errs.append(f"mu({Qs},{poset.symbols[t]}) = {mu}")
    return errs


def check_formulas(spec: GrassmannianSpec, poset: BruhatPoset) -> tuple[list[str], list[str]]:
    errs, errata = [], []
    for P, T in _pairs(poset):
        for sp in special_classes(spec):
            a = triple_intersection(spec, P, T, sp)
            b = triple_intersection_unified(spec, P, T, sp)
            c = triple_intersection_printed(spec, P, T, sp)
            if a != b:
                errs.append(f"P={P} T={T} {sp.label()}: per-type {a} vs unified {b}")
            if a != c:
                errata.append(f"P={P} T={T} {sp.label()}: per-type {a} vs printed reading {c}")
    return errs, errata


def check_pieri(spec: GrassmannianSpec, poset: BruhatPoset) -> tuple[list[str], int]:
    errs, non_unit = [], 0
    bottom = poset.minimum
    for sp in special_classes(spec):
        mats = build_matrices(spec, sp, poset)
        if matmul(mats.T_r, mats.D) != mats.C_r:
            errs.append(f"{sp.label()}: T_r*D != C_r")
        for i, P in enumerate(poset.symbols):
            row = pieri_row(spec, P, sp, poset)
            dense = {poset.symbols[j]: c for j, c in enumerate(mats.C_r[i]) if c}
            if dense != row.coefficients:
                errs.append(f"P={P} {sp.label()}: Moebius sum and matrix method differ")
            errs.extend(f"P={P} {sp.label()}: {v}" for v in row.violations(poset))
            if row.row_sum() != triple_intersection(spec, P, bottom, sp):
                errs.append(f"P={P} {sp.label()}: row sum differs from the triple number")
            non_unit += len(row.non_unit_entries())
    return errs, non_unit


def check_m1_oracle(spec: GrassmannianSpec, poset: BruhatPoset) -> list[str]:
    errs = []
    t, n = spec.lie_type, spec.n
    for sp in special_classes(spec):
        for P in poset.symbols:
            row = pieri_row(spec, P, sp, poset)
            if t == "C":
                expected = {Q for Q in poset.symbols if poset.codim(Q) == poset.codim(P) + sp.r}
                ok = all(c == 1 for c in row.coefficients.values()) and set(row.coefficients) == expected
                if not ok:
                    errs.append(f"P={P} r={sp.r}: not a unit vector at codim |P|+r")
                continue
            got = qo.QuadricClass(t, n, {qo.symbol_to_basis(t, n, Q[0]): c for Q, c in row.coefficients.items()})
            exp = qo.product(t, n, qo.symbol_to_basis(t, n, P[0]), (sp.r, sp.tilde))
            if isinstance(exp, qo.QuadricClass):
                ok = got == exp
            else:
                ok = qo.pushforward(got) == exp
            if not ok:
                errs.append(f"P={P} {sp.label()}: pipeline {got} vs oracle {exp}")
    return errs


def run_spec(spec: GrassmannianSpec) -> list[CheckResult]:
    label = f"{spec.lie_type}({spec.m},{spec.n})"
    poset = build_poset(spec)
    results = []

    def record(name, errs, detail=""):
        results.append(CheckResult(name, label, not errs, detail or (errs[0] if errs else ""), errs))

    record("Bruhat order axioms, grading, extremes", check_order(spec, poset))
    if spec.lie_type == "D":
        record("type D order: criterion, lone stars, critical windows agree", check_type_d_order(spec, poset))
    record("diagram invariants", check_diagrams(spec, poset))
    record("Z-data and shrink soundness", check_zdata_and_shrink(spec, poset))
    record("Moebius inversion and sign range", check_mobius(spec, poset))
    errs, errata = check_formulas(spec, poset)
    record("per-type and unified triple formulas agree", errs)
    pieri_errs, non_unit = check_pieri(spec, poset)
    record("Pieri: two paths, support, signs, row sums", pieri_errs,
           f"{non_unit} coefficients of magnitude other than 1" if non_unit and not pieri_errs else "")
    if spec.m == 1:
        record("m = 1 quadric oracle", check_m1_oracle(spec, poset))
    if errata:
        results.append(CheckResult(
            "erratum confirmed: literal unified-formula predicates", label, True,
            f"{len(errata)} disagreements, e.g. {errata[0]}", errata,
        ))
    return results


def check_mid_products() -> list[CheckResult]:
    results = []
    for n in (2, 3, 4, 5):
        square = qo.product("D", n, (n, False), (n, False))
        mixed = qo.product("D", n, (n, False), (n, True))
        point = (2 * n, False)
        want_sq = {point: 1} if n % 2 == 0 else {}
        want_mx = {} if n % 2 == 0 else {point: 1}
        ok = square.coeffs == want_sq and mixed.coeffs == want_mx
        results.append(CheckResult("middle classes: parity rule", f"Q{2 * n}", ok))
    return results


def run(specs=None, budget: int = DEFAULT_BUDGET) -> list[CheckResult]:
    specs = DEFAULT_SPECS if specs is None else specs
    results: list[CheckResult] = []
    for t, m, n in specs:
        spec = make_spec(t, m, n)
        if count_symbols(spec) > budget:
            results.append(CheckResult("skipped: above the size budget", f"{t}({m},{n})", True))
            continue
        results.extend(run_spec(spec))
    results.extend(check_mid_products())
    return results
