"""Closedness does not care whether you work over R or over C.

For a real group acting on real points, the Hausdorff-closedness of the
real orbit agrees with the Zariski-closedness of the complexified orbit.
Numerically: run the same real starting point through the flow once for
SL(2, R) and once for SL(2, C); the verdicts must match pair by pair.

Run:  python demos/real_vs_complex.py
"""

import numpy as np

import orbitlab as ol

rep_r = ol.sym2(ol.special_linear(2, "real"))
rep_c = ol.sym2(ol.special_linear(2, "complex"))
group_r = ol.special_linear(2, "real")
group_c = ol.special_linear(2, "complex")

rng = np.random.default_rng(0)
print(f"{'starting point':34s} {'det':>8s} {'over R':>12s} {'over C':>12s}")
for k in range(8):
    m = ol.random_vector(rep_r, rng)
    verdict_r = ol.closedness_verdict(rep_r, group_r, m)
    verdict_c = ol.closedness_verdict(rep_c, group_c, m.astype(complex))
    label = np.array2string(m.round(2).ravel(), separator=",")
    print(f"{label:34s} {np.linalg.det(m):8.3f} {verdict_r.status:>12s} "
          f"{verdict_c.status:>12s}")

# A degenerate start (det = 0) collapses to zero in both fields.
m = np.array([[1.0, 1.0], [1.0, 1.0]])
verdict_r = ol.closedness_verdict(rep_r, group_r, m)
verdict_c = ol.closedness_verdict(rep_c, group_c, m.astype(complex))
print(f"{'[[1,1],[1,1]] (rank one)':34s} {0.0:8.3f} {verdict_r.status:>12s} "
      f"{verdict_c.status:>12s}")
