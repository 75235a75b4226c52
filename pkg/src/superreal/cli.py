"""Command line front end: build algebras, run verification suites, and
sample group-level identities, emitting deterministic JSON reports.

Exit codes: 0 all checks pass, 1 a check failed, 2 unusable input.
"""

from __future__ import annotations

import os
import random
import sys

import click

from . import serialize
from .grassmann import GrassmannAlgebraSpec
from .algebras import build_gl, build_sl, build_osp
from .points import phi_graded
from .structures import (
    omega_compact,
    sigma_C_n,
    entrywise_conjugation,
    verify_real_structure,
)
from .hermitian import compact_certificate, standard_gl_form, graded_gl_form, functorial_extend
from .grouppoints import (
    entrywise_group_structure,
    group_structure_from_vector,
    factorize_point,
    factorization_uniqueness_certificate,
    real_form_membership,
    sample_group_point,
    unitary_star_point,
)

SCHEMA = "superreal-report/1"
MAX_PAIRS = 3


def _fail_usage(msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(2)


def _resolve_algebra(family, m, n, t):
    try:
        if family == "gl":
            if n is None:
                _fail_usage("gl needs --m and --n")
            return build_gl(m, n)
        if family == "sl":
            if n is None:
                _fail_usage("sl needs --m and --n")
            return build_sl(m, n)
        if family == "osp":
            if t is None:
                _fail_usage("osp needs --m and --t")
            return build_osp(m, t)
    except ValueError as e:
        _fail_usage(str(e))
    _fail_usage(f"unknown family {family!r}")


def _emit(doc, out):
    text = serialize.dumps(doc)
    if out:
        base = os.environ.get("SUPERREAL_OUT_DIR", "")
        path = os.path.join(base, out) if base else out
        with open(path, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@click.group()
def main():
    """Exact constructions and verifications for matrix Lie
    superalgebras with real structures."""


@main.command()
@click.option("--family", required=True, type=click.Choice(["gl", "sl", "osp"]))
@click.option("--m", type=int, required=True)
@click.option("--n", type=int, default=None)
@click.option("--t", type=int, default=None)
@click.option("--out", default=None)
def build(family, m, n, t, out):
    """Construct an algebra and emit its basis as JSON."""
    g = _resolve_algebra(family, m, n, t)
    doc = {"schema": SCHEMA, "command": "build", "algebra": serialize.algebra_to_json(g)}
    _emit(doc, out)


@main.command()
@click.option("--structure", "structure", required=True,
              type=click.Choice(["omega", "sigma-cn", "entrywise"]))
@click.option("--kind", default="standard", type=click.Choice(["standard", "graded"]))
@click.option("--family", required=True, type=click.Choice(["gl", "sl", "osp"]))
@click.option("--m", type=int, required=True)
@click.option("--n", type=int, default=None)
@click.option("--t", type=int, default=None)
@click.option("--out", default=None)
def verify(structure, kind, family, m, n, t, out):
    """Verify a real structure on an algebra; certificates included."""
    g = _resolve_algebra(family, m, n, t)
    try:
        if structure == "omega":
            struct = omega_compact(g)
        elif structure == "sigma-cn":
            if family != "osp" or m != 2:
                _fail_usage("sigma-cn is defined for osp(2|2t)")
            struct = sigma_C_n(g)
        else:
            struct = entrywise_conjugation(g, kind)
    except ValueError as e:
        _fail_usage(str(e))
    rep = verify_real_structure(struct)
    checks = [
        {"id": f"structure:{c['id']}", "passed": c["passed"]} for c in rep["checks"]
    ]
    doc = {
        "schema": SCHEMA,
        "command": "verify",
        "algebra": g.label,
        "structure": structure,
        "kind": struct.kind,
    }
    if structure in ("omega", "sigma-cn"):
        cert = compact_certificate(g, struct)
        checks.append({"id": "certificate:super-hermitian",
                       "passed": cert["super_hermitian"]})
        checks.append({"id": "certificate:even-part-compact",
                       "passed": cert["even_part_compact"]})
        if structure == "omega":
            checks.append({"id": "certificate:embeds-in-unitary",
                           "passed": cert["embeds_in_unitary"]})
        doc["certificate"] = {
            "super_hermitian": cert["super_hermitian"],
            "positive_definite": cert["positive_definite"],
            "embeds_in_unitary": cert["embeds_in_unitary"],
            "even_part_compact": cert["even_part_compact"],
        }
    doc["checks"] = checks
    doc["all_passed"] = all(c["passed"] for c in checks)
    _emit(doc, out)
    sys.exit(0 if doc["all_passed"] else 1)


@main.command("group-check")
@click.option("--group", required=True, type=click.Choice(["gl"]))
@click.option("--m", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--kind", default="standard", type=click.Choice(["standard", "graded"]))
@click.option("--pairs", type=int, default=2)
@click.option("--samples", type=int, default=50)
@click.option("--seed", type=int, default=None)
@click.option("--out", default=None)
def group_check(group, m, n, kind, pairs, samples, seed, out):
    """Sampled group-point identities: factorization, real-form
    membership directness, and unitary star laws."""
    if pairs < 1 or pairs > MAX_PAIRS:
        _fail_usage(f"--pairs must be between 1 and {MAX_PAIRS}")
    if samples < 0:
        _fail_usage("--samples must be nonnegative")
    doc = {
        "schema": SCHEMA,
        "command": "group-check",
        "group": f"{group}({m}|{n})",
        "kind": kind,
        "pairs": pairs,
        "samples": samples,
    }
    if samples == 0:
        doc["checks"] = []
        doc["all_passed"] = True
        _emit(doc, out)
        sys.exit(0)
    if seed is None:
        _fail_usage("--seed is mandatory for sampled runs")
    if kind == "graded":
        if n % 2:
            _fail_usage("graded structures need an even odd dimension")
        phi = group_structure_from_vector(phi_graded(m, n // 2))
        form = graded_gl_form(m, n, 1)
    else:
        phi = entrywise_group_structure(m, n)
        form = standard_gl_form(m, n, 1)
    fform = functorial_extend(form)
    spec = GrassmannAlgebraSpec(pairs, kind)
    rng = random.Random(seed)
    counts = {
        "factorize-recombine": 0,
        "factorize-unique": 0,
        "membership-direct": 0,
        "star-involutive": 0,
        "star-multiplicative": 0,
    }
    first_failure = None
    prev = None
    for idx in range(samples):
        g = sample_group_point(m, n, spec, rng)
        results = {}
        fp = factorize_point(g)
        results["factorize-recombine"] = fp.recombine() == g
        results["factorize-unique"] = factorization_uniqueness_certificate(fp)["passed"]
        results["membership-direct"] = real_form_membership(phi, g)["direct"]
        star = unitary_star_point(g, fform)
        results["star-involutive"] = unitary_star_point(star, fform) == g
        if prev is not None:
            lhs = unitary_star_point(prev * g, fform)
            rhs = unitary_star_point(prev, fform) * star
            results["star-multiplicative"] = lhs == rhs
        prev = g
        for key, ok in results.items():
            if ok:
                counts[key] += 1
            elif first_failure is None:
                first_failure = {
                    "sample": idx,
                    "identity": key,
                    "point": serialize.supermatrix_to_json(g.mat),
                }
    expected = dict.fromkeys(counts, samples)
    expected["star-multiplicative"] = samples - 1
    checks = [
        {"id": key, "passed": counts[key] == expected[key],
         "count": counts[key], "expected": expected[key]}
        for key in sorted(counts)
    ]
    doc["seed"] = seed
    doc["checks"] = checks
    doc["all_passed"] = all(c["passed"] for c in checks)
    if first_failure is not None:
        doc["first_failure"] = first_failure
    _emit(doc, out)
    sys.exit(0 if doc["all_passed"] else 1)


if __name__ == "__main__":
    main()
