"""Independent brute-force oracles used to validate the fast implementations.

These deliberately share no code with the package: the Rips oracle
materializes every simplex up to dimension 2, builds the full boundary
matrix, and runs the textbook left-to-right Z2 reduction with no clearing
and no shortcuts.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np


def naive_rips_diagram(dmat: np.ndarray, max_dim: int = 1) -> list[tuple[int, float, float]]:
    """Full boundary-matrix reduction; returns sorted (dim, birth, death) triples."""
    d = np.asarray(dmat, dtype=float)
    m = d.shape[0]

    simplices: list[tuple[int, ...]] = [(i,) for i in range(m)]
    values = [0.0] * m
    for i, j in combinations(range(m), 2):
        simplices.append((i, j))
        values.append(float(d[i, j]))
    if max_dim >= 1:
        for i, j, k in combinations(range(m), 3):
            simplices.append((i, j, k))
            values.append(float(max(d[i, j], d[i, k], d[j, k])))

    order = sorted(range(len(simplices)), key=lambda s: (values[s], len(simplices[s]), simplices[s]))
    rank = {simplices[s]: r for r, s in enumerate(order)}

    columns: list[set[int]] = []
    for r, s in enumerate(order):
        verts = simplices[s]
        if len(verts) == 1:
            columns.append(set())
        else:
            columns.append({rank[f] for f in combinations(verts, len(verts) - 1)})

    low_owner: dict[int, int] = {}
    pair_of: dict[int, int] = {}
    for j in range(len(columns)):
        col = columns[j]
        while col:
            low = max(col)
            if low not in low_owner:
                low_owner[low] = j
                pair_of[low] = j
                break
            col ^= columns[low_owner[low]]

    triples = []
    for r, s in enumerate(order):
        verts = simplices[s]
        dim = len(verts) - 1
        if columns[r]:
            continue  # destroyer: belongs to a pair recorded at its low
        birth = values[s]
        if r in pair_of:
            killer = pair_of[r]
            death = values[order[killer]]
        else:
            death = np.inf
        if dim <= max_dim:
            triples.append((dim, float(birth), float(death)))
    triples.sort()
    return triples
