#!/usr/bin/env python3
# Copyright 2026 The topostab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Brute-force reference values for small lattice files.

Shares no code with the C++ library: ranks come from a plain integer
bitmask elimination, distances from a full 2^n sweep per sector, and
spectra from syndrome histograms over all 2^n error patterns.
"""

import argparse
import json
import sys
from collections import Counter

import numpy as np


def masks_of(plaquettes):
    return [sum(1 << q for q in p) for p in plaquettes]


def gf2_rank(rows):
    pivots = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in pivots:
                pivots[top] = r
                break
            r ^= pivots[top]
    return len(pivots)


def parity_table(vectors, rows):
    """bits[j] = parity(vectors & rows[j]) for every vector, as uint8 arrays."""
    out = []
    for r in rows:
        out.append((np.bitwise_count(vectors & np.uint64(r)) & 1).astype(np.uint8))
    return out


def kernel_masks(rows, n):
    """Basis of {v : <v, r> = 0 for all rows} as integer masks."""
    basis = []
    pivots = []
    for r in rows:
        for b, p in zip(basis, pivots):
            if (r >> p) & 1:
                r ^= b
        if r:
            p = r.bit_length() - 1
            for i, b in enumerate(basis):
                if (b >> p) & 1:
                    basis[i] = b ^ r
            basis.append(r)
            pivots.append(p)
    free = [c for c in range(n) if c not in pivots]
    kernel = []
    for f in free:
        v = 1 << f
        for b, p in zip(basis, pivots):
            if (b >> f) & 1:
                v |= 1 << p
        kernel.append(v)
    return kernel


def sector_distance(n, same, opposite, vectors):
    """Minimum weight of v with opposite.v = 0 and v outside rowspace(same)."""
    commuting = np.ones(len(vectors), dtype=bool)
    for bits in parity_table(vectors, opposite):
        commuting &= bits == 0
    outside = np.zeros(len(vectors), dtype=bool)
    for bits in parity_table(vectors, kernel_masks(same, n)):
        outside |= bits == 1
    hits = vectors[commuting & outside]
    if len(hits) == 0:
        return None
    return int(np.bitwise_count(hits).min())


def syndrome_energy_histogram(vectors, rows):
    """Counter of (#satisfied - #violated) over all error patterns."""
    violated = np.zeros(len(vectors), dtype=np.int64)
    for bits in parity_table(vectors, rows):
        violated += bits
    energies = len(rows) - 2 * violated
    values, counts = np.unique(energies, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


def analyse(lattice, want_spectrum):
    n = lattice["n"]
    kind = lattice["kind"]
    plaqs = lattice["plaquettes"]
    if kind == "surface":
        xs = masks_of(p["qubits"] for p in plaqs if p["color"] == "dark")
        zs = masks_of(p["qubits"] for p in plaqs if p["color"] == "light")
    else:
        xs = masks_of(p["qubits"] for p in plaqs)
        zs = list(xs)
    rx, rz = gf2_rank(xs), gf2_rank(zs)
    k = n - rx - rz
    result = {"n": n, "k": k, "rank_x": rx, "rank_z": rz,
              "kernel_x": n - rx, "kernel_z": n - rz}
    if n > 24:
        return result
    vectors = np.arange(1 << n, dtype=np.uint64)
    dx = sector_distance(n, xs, zs, vectors)
    dz = sector_distance(n, zs, xs, vectors)
    ds = [d for d in (dx, dz) if d is not None]
    result["d"] = min(ds) if ds else None
    if want_spectrum:
        # X terms see Z errors and vice versa; each syndrome appears 2^(n-rank) times.
        hx = syndrome_energy_histogram(vectors, xs)
        hz = syndrome_energy_histogram(vectors, zs)
        levels = Counter()
        for ex, cx in hx.items():
            for ez, cz in hz.items():
                patterns = (cx >> (n - rx)) * (cz >> (n - rz))
                levels[-(ex + ez)] += patterns << k
        result["levels"] = [[e, str(levels[e])] for e in sorted(levels)]
    return result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("lattices", nargs="+")
    parser.add_argument("--spectrum", action="store_true")
    args = parser.parse_args()
    for path in args.lattices:
        with open(path) as f:
            lattice = json.load(f)
        print(path, json.dumps(analyse(lattice, args.spectrum)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
