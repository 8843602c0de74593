"""Prints the five-rung spanning-structure table for a handful of small graphs.

Each rung implies the next: hamiltonian, traceable, prism-hamiltonian, closed
spanning 2-walk, spanning tree of maximum degree 3.
"""

from __future__ import annotations

from prismham.generators import named_graphs
from prismham.spanning import RUNGS, hierarchy_report

header = ["graph"] + [r.replace("_", " ") for r in RUNGS]
widths = [10] + [max(len(h), 5) for h in header[1:]]
print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
for name, g in named_graphs().items():
    rep = hierarchy_report(g)
    cells = [name] + list(rep.verdicts())
    print("  ".join(c.ljust(w) for c, w in zip(cells, widths)))

# The Petersen graph is the classic example of a non-hamiltonian graph whose
# prism is hamiltonian; its prism cycle is shown in full below.
pet = hierarchy_report(named_graphs()["petersen"])
print("\nPetersen prism cycle:", " ".join(map(str, pet.prism_hamiltonian.witness)))
