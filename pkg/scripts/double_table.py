"""Print the multiplication table and coproducts of the double of a catalog group."""
import argparse

from mhopf import catalog
from mhopf.double import build_double, d_canonical_map, d_mul
from mhopf.tensor import Vec, fmt_label, tensor_product


def show(v) -> str:
    if v.is_zero():
        return "0"
    return " + ".join(f"{'' if c == 1 else c}{fmt_label(k)}" for k, c in sorted(v.items(), key=lambda kv: repr(kv[0])))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("example", nargs="?", default="Z2", help="finite catalog example, e.g. Z2, S3, D4")
    ap.add_argument("--verify", choices=("full", "sample", "none"), default="sample")
    args = ap.parse_args()
    P = catalog.example(args.example)
    if not P.is_finite:
        ap.error("the table needs a finite example")
    D = build_double(P, verify=args.verify)
    e = Vec.basis
    ls = D.labels()
    print(f"{D.name}: {len(ls)} basis elements (δ_g, h)")
    for x in ls:
        for y in ls:
            p = d_mul(D, e(x), e(y))
            if not p.is_zero():
                print(f"{fmt_label(x)} · {fmt_label(y)} = {show(p)}")
    if D.unit is not None:
        for x in ls:
            print(f"Δ{fmt_label(x)} = {show(d_canonical_map(D, 't1', tensor_product(e(x), D.unit)))}")


if __name__ == "__main__":
    main()
