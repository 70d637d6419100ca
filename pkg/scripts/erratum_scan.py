"""Scan small spaces for places where literal readings of the formulas break.

Reports three things:
  * triples where the unified formula with its predicates read literally
    differs from the per-type formulas,
  * Pieri coefficients whose magnitude is not 1,
  * the OG(2,6) Hasse diagram compared with that of the componentwise order.
"""
import argparse
from collections import Counter

from isopieri.bruhat import leq, poset_for, preceq, transitive_reduction
from isopieri.grassmannian import make_spec
from isopieri.ktheory import special_classes, triple_intersection, triple_intersection_printed
from isopieri.pieri import pieri_row
from isopieri.projection import z_data

DEFAULT = ["C:2:4", "C:3:4", "B:1:2", "B:1:3", "B:2:3", "B:3:3", "D:1:3", "D:2:2", "D:2:3", "D:3:3", "D:4:4"]


def scan_formulas(spec, limit):
    poset = poset_for(spec)
    hits = []
    for i, P in enumerate(poset.symbols):
        for j in sorted(poset.down[i]):
            T = poset.symbols[j]
            for sp in special_classes(spec):
                a = triple_intersection(spec, P, T, sp)
                b = triple_intersection_printed(spec, P, T, sp)
                if a != b:
                    zd = z_data(spec, P, T)
                    hits.append((P, T, sp, a, b, zd.l, zd.q))
    print(f"{spec.name()}: {len(hits)} disagreement(s)")
    for P, T, sp, a, b, l, q in hits[:limit]:
        regime = "r < k" if sp.r < spec.k else ("r = k" if sp.r == spec.k else "r > k")
        print(f"   P={list(P)} T={list(T)} {sp.label()} ({regime}, l={l}, q={q}): per-type {a}, literal {b}")


def scan_magnitudes(spec):
    poset = poset_for(spec)
    sizes = Counter()
    for sp in special_classes(spec):
        for P in poset.symbols:
            for c in pieri_row(spec, P, sp, poset).coefficients.values():
                sizes[abs(c)] += 1
    print(f"{spec.name()}: |coefficient| histogram {dict(sorted(sizes.items()))}")


def og26():
    spec = make_spec("D", 2, 2)
    poset = poset_for(spec)
    S = poset.symbols
    plain = set(transitive_reduction(S, leq))
    bruhat = set(poset.covers)
    lost = [(T, P) for P in S for T in S if leq(T, P) and not preceq(spec, T, P)]
    print(f"OG(2,6): Bruhat covers {len(bruhat)}, componentwise covers {len(plain)}")
    print(f"   componentwise covers that are not Bruhat relations: {sorted((S[a], S[b]) for a, b in plain - bruhat)}")
    print(f"   componentwise relations lost in the Bruhat order: {len(lost)}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("spaces", nargs="*", default=DEFAULT)
    parser.add_argument("--limit", type=int, default=5, help="examples printed per space")
    args = parser.parse_args()
    specs = [make_spec(t, int(m), int(n)) for t, m, n in (s.split(":") for s in args.spaces)]
    print("== unified formula, literal predicates")
    for spec in specs:
        scan_formulas(spec, args.limit)
    print("== Pieri coefficient magnitudes")
    for spec in specs:
        scan_magnitudes(spec)
    print("== componentwise versus Bruhat order")
    og26()


if __name__ == "__main__":
    main()
