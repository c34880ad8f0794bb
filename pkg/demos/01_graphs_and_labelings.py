"""Build the three path-derived families and show their colorings.

Run:  python3 demos/01_graphs_and_labelings.py [p]
"""

import sys

from racnshare import degree_stats, diameter, family_coloring


def show(family: str, p: int) -> None:
    g, lab, w = family_coloring(family, p)
    lo, hi = degree_stats(g)
    print(f"== {family} of P_{p}:  n={g.n}, {len(g.edges)} edges, "
          f"degrees {lo}..{hi}, diameter {diameter(g)}")
    print("   labels:", "  ".join(f"{g.names[v]}={lab.values[v]}" for v in range(g.n)))
    for value in sorted(w.classes):
        edges = ", ".join(f"{g.names[a]}-{g.names[b]}" for a, b in w.classes[value])
        print(f"   weight {value:>2}: {edges}")
    print(f"   -> {len(w.classes)} distinct weights")
    print()


if __name__ == "__main__":
    p = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    for family in ("shadow", "splitting", "mycielski"):
        show(family, p)
