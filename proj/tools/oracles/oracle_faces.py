#!/usr/bin/env python3
"""Independent face-tracing oracle.

Traces faces of a rotation system with the convention: the dart after
(u -> v) is (v -> w) where w is the successor of u in the rotation at v.
Prints face counts, lengths, and Euler checks for a few fixed graphs.
"""
import json


def trace_faces(rot):
    n = len(rot)
    darts = [(u, v) for u in range(n) for v in rot[u]]
    nxt = {}
    for v in range(n):
        r = rot[v]
        pos = {u: i for i, u in enumerate(r)}
        for u in r:
            w = r[(pos[u] + 1) % len(r)]
            nxt[(u, v)] = (v, w)
    seen = set()
    faces = []
    for d in darts:
        if d in seen:
            continue
        face = []
        cur = d
        while cur not in seen:
            seen.add(cur)
            face.append(cur)
            cur = nxt[cur]
        faces.append(face)
    return faces


def subdivide_all(rot):
    """Subdivide every edge once, maintaining rotations."""
    n = len(rot)
    rot = [list(r) for r in rot]
    mids = {}
    nxt_id = n
    for u in range(n):
        for i, v in enumerate(rot[u]):
            if v >= n:
                continue  # already replaced
            e = (min(u, v), max(u, v))
            if e not in mids:
                mids[e] = nxt_id
                rot.append([u, v] if u < v else [v, u])
                nxt_id += 1
            rot[u][i] = mids[e]
    return rot


K4 = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]  # planar rotation of K4
C6 = [[(i - 1) % 6, (i + 1) % 6] for i in range(6)]


def report(name, rot):
    faces = trace_faces(rot)
    n = len(rot)
    m = sum(len(r) for r in rot) // 2
    lens = sorted(len(f) for f in faces)
    euler = n - m + len(faces)
    return {"name": name, "n": n, "m": m, "faces": len(faces),
            "lengths": lens, "euler": euler}


out = [report("K4", K4),
       report("subdivided_K4", subdivide_all(K4)),
       report("C6", C6),
       report("subdivided_C6", subdivide_all(C6))]
print(json.dumps(out, indent=1))
