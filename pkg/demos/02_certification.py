"""Certification walkthrough: the property battery on positive and
negative instances, with witnesses.

    python demos/02_certification.py
"""

import ectf

print("== a graph that passes everything ==")
g = ectf.albert_cycles(6)
report = ectf.certify(g, k_max=3)
print(report.to_text())

print("== circular graphs pass the common-neighbor test but fail the full")
print("   extension property, and the recognizer names them ==")
o11 = ectf.circular(4)
report = ectf.certify(o11, k_max=3)
print(report.to_text())
verdict, witness = ectf.satisfies_e_k(o11, 3)
print(f"first failing (attach-set, avoid-part selection): {witness}\n")

print("== a non-shattered matrix builds a graph that fails certification ==")
ones = ectf.BitMatrix.filled(4, 5, 1)
ok, wit = ectf.is_shattered_matrix(ones)
print(f"all-ones 4x5 shattered: {ok}, witness {wit}")
bad = ectf.albert_matrix(ones)
report = ectf.is_3ectf(bad)
print(f"graph verdict: {report.is_3ectf}, reason: {report.witness('is_3ectf')}")
kind, uncovered = report.witness("is_3ectf")
print(f"uncovered independent set {uncovered} has common neighbors:",
      ectf.common_neighbors(bad, uncovered))

print("\n== the two equivalent extension formulations agree ==")
for name, graph in [("twisted (2,2,2,2)", ectf.twisted_four(2, 2, 2, 2)),
                    ("circular n=3", ectf.circular(3))]:
    e3 = ectf.satisfies_e_k(graph, 3)[0]
    e3p = ectf.satisfies_e_k_prime(graph, 3)[0]
    print(f"{name}: definitional={e3}, exactly-k form={e3p}")

print("\n== machine-readable report (canonical JSON) ==")
print(ectf.is_3ectf(ectf.circular(3)).to_json())
