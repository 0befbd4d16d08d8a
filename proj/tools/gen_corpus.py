#!/usr/bin/env python3
"""Regenerates corpus/*.json and corpus/manifest.json.

Expected extreme-ray counts for random cones come from scipy's ConvexHull of
the base points; samples are kept only in general position so the floating
hull is exact.
"""
import itertools
import json
import random
from fractions import Fraction
from pathlib import Path

import numpy as np
from scipy.spatial import ConvexHull

ROOT = Path(__file__).resolve().parent.parent / "corpus"
SEED = 20240607


def rat(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def det(rows):
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    d = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            m[k], m[p] = m[p], m[k]
            d = -d
        d *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return d


def general_position(points):
    n = len(points[0])
    for sub in itertools.combinations(points, n + 1):
        if det([list(p) + [1] for p in sub]) == 0:
            return False
    return True


def hull_vertex_count(points):
    if len(points[0]) == 1:
        return 2
    return len(ConvexHull(np.array(points, dtype=float)).vertices)


def entry(name, gens, classical, rays, note=""):
    return {"name": name, "ambient_dim": len(gens[0]), "generators": [[rat(x) for x in g] for g in gens],
            "expected": {"classical": classical, "extreme_rays": rays}, "note": note}


def lift(points):
    return [list(p) + [1] for p in points]


def named():
    out = []
    for n in (2, 3, 4, 5):
        gens = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        out.append(entry(f"rplus{n}", gens, True, n, "nonnegative orthant"))
    out.append(entry("square", lift([(-1, -1), (1, -1), (1, 1), (-1, 1)]), False, 4, "cone over [-1,1]^2"))
    kites = {"kite_zero": (0, 0, 0, 0), "kite_half": (Fraction(1, 2), 0, 0, 0),
             "kite_mixed": (Fraction(1, 3), Fraction(-1, 2), Fraction(2, 5), Fraction(-1, 4))}
    for name, a in kites.items():
        pts = [(1, a[0]), (a[1], 1), (-1, a[2]), (a[3], -1)]
        out.append(entry(name, lift(pts), False, 4, "cone over a kite"))
    pentagon = [(0, 1), (Fraction(95, 100), Fraction(31, 100)), (Fraction(59, 100), Fraction(-81, 100)),
                (Fraction(-59, 100), Fraction(-81, 100)), (Fraction(-95, 100), Fraction(31, 100))]
    out.append(entry("pentagon", lift(pentagon), False, 5, "rational near-regular pentagon"))
    hexagon = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]
    out.append(entry("hexagon", lift(hexagon), False, 6, "lattice hexagon"))
    out.append(entry("quadrilateral", [[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 2]], False, 4,
                     "non-uniform levels"))
    pyramid = [(-1, -1, 0), (1, -1, 0), (1, 1, 0), (-1, 1, 0), (0, 0, 1)]
    out.append(entry("pyramid", lift(pyramid), False, 5, "cone over a square pyramid"))
    cross = [tuple(s if i == j else 0 for j in range(3)) for i in range(3) for s in (1, -1)]
    out.append(entry("cross_polytope", lift(cross), False, 6, "cone over the octahedron"))
    cube = list(itertools.product((-1, 1), repeat=3))
    out.append(entry("cube", lift(cube), False, 8, "cone over the 3-cube"))
    prism = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1), (0, 1, 1)]
    out.append(entry("prism", lift(prism), False, 6, "cone over a triangular prism"))
    bipyramid = [(1, 0, 0), (0, 1, 0), (-1, -1, 0), (0, 0, 1), (0, 0, -1)]
    out.append(entry("bipyramid", lift(bipyramid), False, 5, "cone over a triangular bipyramid"))
    dup = lift([(-1, -1), (1, -1), (1, 1), (-1, 1)]) + [[0, 0, 1], [2, 2, 2], [1, 0, 1]]
    out.append(entry("square_redundant", dup, False, 4, "square with redundant generators"))
    return out


def random_transform(rng, m):
    while True:
        t = [[rng.randint(-2, 2) for _ in range(m)] for _ in range(m)]
        for i in range(m):
            t[i][i] += 3
        if det(t) != 0:
            return t


def apply(t, v):
    return [sum(Fraction(t[i][j]) * v[j] for j in range(len(v))) for i in range(len(t))]


def random_cones(rng):
    out = []
    index = 0
    for m in (3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5):
        n = m - 1
        while True:
            count = rng.randint(n + 2, n + 5)
            pts = [tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)) for _ in range(count)]
            if len(set(pts)) == count and general_position(pts):
                k = hull_vertex_count(pts)
                if k > n + 1:
                    break
        t = random_transform(rng, m)
        gens = []
        for p in pts:
            scale = rng.randint(1, 3)
            gens.append([x * scale for x in apply(t, list(p) + [1])])
        out.append(entry(f"random{index:02d}_d{m}", gens, False, k, "random rational cone"))
        index += 1
    for m in (3, 4, 5):
        t = random_transform(rng, m)
        basis = [apply(t, [1 if i == j else 0 for j in range(m)]) for i in range(m)]
        coef = [rng.randint(1, 3) for _ in basis]
        mix = [sum(c * b[j] for c, b in zip(coef, basis)) for j in range(m)]
        out.append(entry(f"random_classical_d{m}", basis + [mix], True, m, "random simplicial cone"))
    return out


def main():
    rng = random.Random(SEED)
    ROOT.mkdir(exist_ok=True)
    for old in ROOT.glob("*.json"):
        old.unlink()
    manifest = []
    for e in named() + random_cones(rng):
        gens = ",\n".join("    " + json.dumps(g) for g in e["generators"])
        text = (f'{{\n  "name": {json.dumps(e["name"])},\n  "ambient_dim": {e["ambient_dim"]},\n'
                f'  "generators": [\n{gens}\n  ]\n}}\n')
        (ROOT / f"{e['name']}.json").write_text(text)
        manifest.append({"file": f"{e['name']}.json", "name": e["name"], "ambient_dim": e["ambient_dim"],
                         **e["expected"], "note": e["note"]})
    rows = ",\n".join("    " + json.dumps(m) for m in manifest)
    (ROOT / "manifest.json").write_text(f'{{\n  "cones": [\n{rows}\n  ]\n}}\n')
    print(f"wrote {len(manifest)} cones to {ROOT}")


if __name__ == "__main__":
    main()
