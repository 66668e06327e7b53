#!/usr/bin/env python3
"""Initial-charge oracle: sum(2d-6) + sum(len-6) for fixed embedded graphs."""
import json
from oracle_faces import trace_faces, subdivide_all, K4, C6

out = {}
for name, rot in [("K4", K4), ("subdivided_K4", subdivide_all(K4)),
                  ("C6", C6), ("subdivided_C6", subdivide_all(C6))]:
    faces = trace_faces(rot)
    vsum = sum(2 * len(r) - 6 for r in rot)
    fsum = sum(len(f) - 6 for f in faces)
    out[name] = {"vertex_sum": vsum, "face_sum": fsum, "total": vsum + fsum}
print(json.dumps(out, indent=1))
