"""Tour of the graph families: build one instance of each, show its shape.

Run from the repository root after installing the package:

    python demos/01_families_tour.py
"""

from collections import Counter

import ectf

print("== Cayley graphs on the hypercube ==")
clebsch = ectf.build_cayley(ectf.DistanceSetSpec(4, {1, 4}))
print(f"<Z_2^4, {{1,4}}>: {clebsch.order} vertices, {clebsch.edge_count} edges, "
      f"degrees {dict(Counter(clebsch.degrees()))}")
print(f"graph6: {ectf.encode_graph6(clebsch).decode()}")

for k in (1, 2, 3):
    g = ectf.erdos_hypercube(k)
    print(f"distance-{{{2*k+1}..{3*k+1}}} graph on Z_2^{3*k+1}: "
          f"{g.order} vertices, {set(g.degrees())}-regular")

print("\n== Albert graphs ==")
a5 = ectf.albert_cycles(5)
print(f"five 4-cycles with cross antipodes: {a5.order} vertices, "
      f"{set(a5.degrees())}-regular, first labels {a5.labels[:5]}")

m = ectf.BitMatrix.identity(4)
am = ectf.albert_matrix(m)
print(f"matrix form at the 4x4 identity: {am.order} vertices; "
      f"isomorphic to the Clebsch graph: {ectf.are_isomorphic(am, clebsch) is not None}")

rect = ectf.random_matrix(4, 8, seed=2026)
arect = ectf.albert_matrix(rect)
print(f"random 4x8 matrix: degrees {dict(Counter(arect.degrees()))}")

print("\n== Layered hypercube graphs ==")
for (k, mm) in [(1, 4), (1, 6), (2, 4)]:
    g = ectf.hypercube_layers(k, mm)
    print(f"{mm} layers over Z_2^{3*k-1}: {g.order} vertices, "
          f"{set(g.degrees())}-regular")
print("4 layers coincide with the plain hypercube construction:",
      ectf.are_isomorphic(ectf.hypercube_layers(2, 4), ectf.erdos_hypercube(2)) is not None)

print("\n== Mixed odd/top distance graphs ==")
for (k, j) in [(1, 1), (2, 1), (2, 2)]:
    g = ectf.hypercube_ckj(k, j)
    print(f"k={k}, j={j}: dimension {3*k+j}, {g.order} vertices, "
          f"{set(g.degrees())}-regular")

print("\n== Circular graphs (the excluded family) ==")
for n in (1, 2, 3, 4):
    g = ectf.circular(n)
    print(f"arcs of {n} elements in Z_{3*n-1}: {g.order} vertices, "
          f"{set(g.degrees())}-regular")

print("\n== Twisted graphs ==")
g = ectf.twisted_four(2, 2, 2, 3)
print(f"twisted parts (2,2,2,3): {g.order} vertices, {set(g.degrees())}-regular")

t4, t4p = ectf.canonical_tournaments()
print(f"canonical tournament arcs: {t4.arcs()}")
gt = ectf.twisted_tournament(t4p, 3)
print(f"reversed-tournament twist, m=3: {gt.order} vertices, {set(gt.degrees())}-regular")

gtk = ectf.twisted_tournament_hypercube(t4, 2, 2)
print(f"hypercube twist, m=2, k=2: {gtk.order} vertices, {set(gtk.degrees())}-regular")
print("k=1 collapses to the plain twisted graph:",
      ectf.are_isomorphic(ectf.twisted_tournament_hypercube(t4, 2, 1),
                          ectf.twisted_tournament(t4, 2)) is not None)
