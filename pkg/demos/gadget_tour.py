"""A walk through the gadget construction.

Builds Z, the block J, the gadget H and the chained graph G_n, and prints the
numbers that matter: sizes, blocks, cut vertices, connectivity and the face
count of the planar drawing.
"""

from __future__ import annotations

import argparse

from prismham import blocks, build_G, build_H, build_J, build_Z, vertex_connectivity, verify_planar_embedding


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3, help="number of gadgets in the chain")
    args = ap.parse_args()

    z = build_Z()
    print(f"Z: {z.graph.n} vertices, {z.graph.m} edges (two 5-cycles sharing x3)")

    j = build_J()
    print(f"J: {j.graph.n} vertices, {j.graph.m} edges, cut vertices: {sorted(blocks(j.graph).cutvertices)}")

    h = build_H()
    bd = blocks(h.graph)
    print(f"H: {h.graph.n} vertices in {len(bd.blocks)} blocks; cut vertices {sorted(map(str, bd.cutvertices))}")
    print("  upper boundary:", " ".join(map(str, h.upper)))
    print("  lower boundary:", " ".join(map(str, h.lower)))

    g = build_G(args.n)
    faces, euler = verify_planar_embedding(g.graph, g.rotation)
    print(f"G_{args.n}: {g.graph.n} vertices (38n+3 = {38 * args.n + 3}), {g.graph.m} edges")
    print(f"  faces {faces}; V - E + F = {g.graph.n - g.graph.m + faces} (planar drawing: {euler})")
    # Exact connectivity grows expensive quickly; a few gadgets are enough to see it.
    if args.n <= 5:
        print(f"  vertex connectivity {vertex_connectivity(g.graph)}")


if __name__ == "__main__":
    main()
