"""Write the example spec files under specs/."""
import argparse
import os

from mhopf import catalog
from mhopf.specfile import FORMAT, _sorted_rows, dump_pairing, dumps


def oracle_spec(G) -> dict:
    """Classical double of ``G`` from the textbook formulas (product and coproduct rows)."""
    labels = [(g, a) for g in G.elements for a in G.elements]
    mul, cop = {}, {}
    for x in labels:
        for y in labels:
            for z, c in catalog.classical_double_mul(G, x, y).items():
                mul[(x, y, z)] = c
        for (p, q), c in catalog.classical_double_coproduct(G, x).items():
            cop[(x, p, q)] = c
    return {"format": FORMAT, "name": f"classical double of {G.name}", "mul": _sorted_rows(mul),
            "coproduct": _sorted_rows(cop),
            "counit": _sorted_rows({(x,): catalog.classical_double_counit(G, x) for x in labels
                                    if catalog.classical_double_counit(G, x)})}


def write(path, data):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(data) + "\n")
    print("wrote", path)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dir", default=os.path.join(os.path.dirname(__file__), "..", "specs"))
    args = ap.parse_args()
    os.makedirs(args.dir, exist_ok=True)
    write(os.path.join(args.dir, "z2_pair.json"), dump_pairing(catalog.example("Z2"), "Z2 pair"))
    write(os.path.join(args.dir, "s3_pair.json"), dump_pairing(catalog.example("S3"), "S3 pair"))
    write(os.path.join(args.dir, "h4_pair.json"), dump_pairing(catalog.example("H4"), "Sweedler pair"))
    write(os.path.join(args.dir, "int_group.json"), {"format": FORMAT, "field": "Q", "group": "int", "window": 8})
    write(os.path.join(args.dir, "s3_group.json"), {"format": FORMAT, "field": "Q", "group": "S3"})
    write(os.path.join(args.dir, "s3_double_oracle.json"), oracle_spec(catalog.symmetric(3)))


if __name__ == "__main__":
    main()
