"""Write Pieri coefficient tables (CSV and JSON) for a list of spaces.

    python3 scripts/pieri_tables.py --out tables D:2:3 C:2:4
"""
import argparse
import json
from pathlib import Path

from isopieri.bruhat import poset_for
from isopieri.grassmannian import make_spec
from isopieri.ktheory import special_classes
from isopieri.pieri import build_matrices

DEFAULT = ["C:2:2", "C:2:4", "C:3:4", "B:2:3", "B:3:3", "D:2:2", "D:2:3", "D:3:3", "D:4:4"]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("spaces", nargs="*", default=DEFAULT, help="TYPE:m:n, e.g. D:2:3")
    parser.add_argument("--out", default="pieri_tables")
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for item in args.spaces:
        t, m, n = item.split(":")
        spec = make_spec(t, int(m), int(n))
        poset = poset_for(spec)
        for sp in special_classes(spec):
            mats = build_matrices(spec, sp, poset)
            stem = f"{t}{m}{n}_r{sp.r}{'_tilde' if sp.tilde else ''}"
            (out / f"{stem}.csv").write_text(mats.to_csv())
            (out / f"{stem}.json").write_text(json.dumps(mats.to_json()))
            nonzero = sum(1 for row in mats.C_r for c in row if c)
            print(f"{spec.name():<10} {sp.label():<8} {len(poset):>4} symbols {nonzero:>6} nonzero coefficients")


if __name__ == "__main__":
    main()
