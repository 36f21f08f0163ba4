"""Regenerate golden ad-operator files from the raw bracket lists with sympy.

Run from the repository root: python3 tests/golden/make_golden.py
"""
import json
import os

import sympy

from rigidlie import catalog

RAW = {
    "N6_6": (6, catalog.MU1), "N6_7": (6, catalog.MU2), "N6_12": (6, catalog.N612),
    "N6_14": (6, catalog.N614), "g1hat_r8_22_2": (8, catalog.G1HAT),
    "g2hat_r8_22_normal": (8, catalog.G2HAT), "r8_29_2": (8, catalog.R829_2),
}


def ad_matrices(n, brackets):
    c = {}
    for i, j, img in brackets:
        for k, v in img.items():
            c[(i, j, k)] = c.get((i, j, k), 0) + sympy.Rational(v)
            c[(j, i, k)] = c.get((j, i, k), 0) - sympy.Rational(v)
    out = []
    for x in range(1, n + 1):
        M = sympy.zeros(n, n)
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                M[k - 1, j - 1] = c.get((x, j, k), 0)
        out.append([[str(M[r, s]) for s in range(n)] for r in range(n)])
    return out


if __name__ == "__main__":
    here = os.path.dirname(__file__)
    for key, (n, br) in RAW.items():
        with open(os.path.join(here, f"ad_{key}.json"), "w") as fh:
            json.dump(ad_matrices(n, br), fh)
            fh.write("\n")
