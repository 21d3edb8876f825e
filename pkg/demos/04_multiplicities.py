"""Minimum common-neighbor counts over independent pairs and triples.

    python demos/04_multiplicities.py
"""

from math import comb

import ectf
from ectf.graphs import bit_indices

print("== pair and triple multiplicities across the families ==")
rows = [
    ("albert_cycles(6)", ectf.albert_cycles(6)),
    ("albert_matrix(I5)", ectf.albert_matrix(ectf.BitMatrix.identity(5))),
    ("erdos_hypercube(1)", ectf.erdos_hypercube(1)),
    ("erdos_hypercube(2)", ectf.erdos_hypercube(2)),
    ("hypercube_ckj(2,1)", ectf.hypercube_ckj(2, 1)),
    ("hypercube_ckj(2,2)", ectf.hypercube_ckj(2, 2)),
    ("twisted_four(2,2,2,2)", ectf.twisted_four(2, 2, 2, 2)),
]
for name, g in rows:
    mu2 = ectf.multiplicity(g, 2)
    mu3 = ectf.multiplicity(g, 3)
    print(f"{name:<24} mu2 = {mu2.value}  (witness {mu2.witness}); "
          f"mu3 = {mu3.value}")

print("\nthe hypercube family grows its pair multiplicity as the central")
print("binomial coefficient while triples stay pinned at one:")
for k in (1, 2):
    g = ectf.erdos_hypercube(k)
    print(f"  k={k}: mu2 = {ectf.multiplicity(g, 2).value} = C({2*k},{k}) = {comb(2*k, k)}")

print("\n== sampled mode on the 1024-vertex instance ==")
c10 = ectf.erdos_hypercube(3)
print(f"mu2 exact: {ectf.multiplicity(c10, 2).value} (= C(6,3) = {comb(6, 3)})")
sampled = ectf.multiplicity(c10, 3, mode="sampled", trials=3000, seed=7)
print(f"mu3 sampled upper bound: {sampled.value} "
      f"({sampled.trials} trials, rng {sampled.rng}, seed {sampled.seed})")
print("a triple of disjoint weight-3 vectors has exactly one common")
print("neighbor, the all-ones vector:")
triple = (0b111, 0b111000, 0b111000000)
cn = ectf.common_neighbors(c10, triple)
print(f"  common neighbors of {triple}: vertices {bit_indices(cn)} "
      f"(1023 = the all-ones vector in 10 coordinates)")
