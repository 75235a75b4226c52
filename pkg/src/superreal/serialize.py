"""Deterministic JSON wire formats for the exact types.

All rational values travel as ``"p/q"`` strings; dictionaries are
emitted with sorted keys and fixed separators so identical inputs give
byte-identical output.
"""

from __future__ import annotations

import json

from .scalars import GaussianRational as QI
from .grassmann import GrassmannAlgebraSpec, GrassmannElement
from .supermatrix import SuperMatrix


def qi_to_json(c: QI) -> dict:
    re, im = c.to_pair()
    return {"re": re, "im": im}


def qi_from_json(obj) -> QI:
    return QI.from_pair(obj["re"], obj["im"])


def grassmann_to_json(e: GrassmannElement) -> dict:
    terms = []
    for mono in sorted(e.terms, key=lambda m: (len(m), m)):
        c = e.terms[mono]
        if c.is_zero():
            continue
        re, im = c.to_pair()
        terms.append({"idx": list(mono), "re": re, "im": im})
    return {"terms": terms}


def grassmann_from_json(spec: GrassmannAlgebraSpec, obj) -> GrassmannElement:
    terms = {}
    for t in obj["terms"]:
        terms[tuple(t["idx"])] = QI.from_pair(t["re"], t["im"])
    return GrassmannElement(spec, terms)


def spec_to_json(spec: GrassmannAlgebraSpec) -> dict:
    return {"pairs": spec.pairs, "kind": spec.kind}


def spec_from_json(obj) -> GrassmannAlgebraSpec:
    return GrassmannAlgebraSpec(obj["pairs"], obj["kind"])


def supermatrix_to_json(mat: SuperMatrix) -> dict:
    enc = qi_to_json if mat.spec is None else grassmann_to_json

    def block(r0, r1, c0, c1):
        return [[enc(mat.rows[i][j]) for j in range(c0, c1)] for i in range(r0, r1)]

    m, n = mat.m, mat.n
    out = {"m": m, "n": n, "blocks": {
        "a": block(0, m, 0, m),
        "b": block(0, m, m, m + n),
        "c": block(m, m + n, 0, m),
        "d": block(m, m + n, m, m + n),
    }}
    if mat.spec is not None:
        out["coefficients"] = spec_to_json(mat.spec)
    return out


def supermatrix_from_json(obj) -> SuperMatrix:
    m, n = obj["m"], obj["n"]
    if "coefficients" in obj:
        spec = spec_from_json(obj["coefficients"])
        dec = lambda x: grassmann_from_json(spec, x)
    else:
        dec = qi_from_json
    b = obj["blocks"]
    rows = []
    for i in range(m):
        rows.append([dec(x) for x in b["a"][i]] + [dec(x) for x in b["b"][i]])
    for i in range(n):
        rows.append([dec(x) for x in b["c"][i]] + [dec(x) for x in b["d"][i]])
    return SuperMatrix(m, n, rows)


def matrix_to_json(rows) -> list:
    return [[qi_to_json(x) for x in row] for row in rows]


def matrix_from_json(obj) -> list:
    return [[qi_from_json(x) for x in row] for row in obj]


def algebra_to_json(g) -> dict:
    return {
        "label": g.label,
        "m": g.m,
        "n": g.n,
        "dim": g.dim,
        "parities": list(g.parities),
        "basis": [supermatrix_to_json(b) for b in g.basis],
    }


def structure_to_json(struct) -> dict:
    return {
        "kind": struct.kind,
        "conjugates": True,
        "matrix": matrix_to_json(struct.matrix),
    }


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed separators, newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
