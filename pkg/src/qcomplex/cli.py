"""Command-line interface tying generators, homology, spectra, and search
into reproducible runs.

Exit codes: 0 success, 1 contract or computation failure (bound
violations, failed checks, convergence problems), 2 usage errors.
All randomness flows from ``--seed``; identical invocations on identical
inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import acceptance, chains, extremal, families, homology, spectra
from .complex_core import read_facets, write_facets
from .errors import USAGE_ERRORS, QComplexError

JSON_SCHEMA_VERSION = 1


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


@dataclass
class RunConfig:
    """One CLI invocation: subcommand plus every flag that shapes output."""

    subcommand: str
    options: dict = field(default_factory=dict)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_added(spec: str | None):
    if not spec:
        return None
    return [tuple(int(v) for v in part.split(",")) for part in spec.split(";")]


def _cmd_gen(opt) -> int:
    K = families.make(opt["family"], n=opt.get("n"), r=opt.get("r"),
                      t=opt.get("t"), seed=opt.get("seed") or 0,
                      added=_parse_added(opt.get("add")))
    if opt.get("output"):
        write_facets(K, opt["output"])
    else:
        sys.stdout.write(f"n {K.n_vertices}\n")
        for f in K.facets:
            sys.stdout.write(" ".join(map(str, f)) + "\n")
    return 0


def _cmd_betti(opt) -> int:
    K = read_facets(opt["file"])
    profile = homology.betti_profile(K)
    line = " ".join(str(b) for b in profile.betti) + f"  chi={profile.euler}\n"
    if opt.get("format") == "json":
        payload = {"schema": JSON_SCHEMA_VERSION,
                   "betti": list(profile.betti),
                   "ranks": list(profile.ranks),
                   "chi": profile.euler}
        _emit(json.dumps(payload, sort_keys=True) + "\n", opt.get("output"))
    else:
        _emit(line, opt.get("output"))
    return 0


def _cmd_spectra(opt) -> int:
    K = read_facets(opt["file"])
    i = opt["dim"]
    tol = opt.get("tol") or 1e-10
    seed = opt.get("seed") or 0
    if opt.get("perron"):
        res = spectra.perron_vector(K, i, opt.get("normalization", "unit_norm"),
                                    tol=tol, seed=seed)
    else:
        res = spectra.spectral_radius(K, i, tol=tol, seed=seed)
    lines = [f"value={_fmt(res.value)} residual={_fmt(res.residual)} "
             f"iterations={res.iterations}"]
    if res.degenerate:
        lines.append("warning=top eigenvalue numerically multiple; "
                     "vector unreliable")
    if opt.get("perron"):
        for face_, x in zip(K.faces(i), res.vector):
            lines.append(",".join(map(str, face_)) + " " + _fmt(x))
    _emit("\n".join(lines) + "\n", opt.get("output"))
    return 0


def _cmd_check(opt) -> int:
    K = read_facets(opt["file"])
    seed = opt.get("seed") or 0
    failures = 0
    lines = []

    def record(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        failures += 0 if ok else 1
        suffix = f" ({detail})" if detail else ""
        lines.append(f"{name}: {'pass' if ok else 'FAIL'}{suffix}")

    profile = homology.betti_profile(K)
    chi = homology.euler_characteristic(K)
    chi_b = sum((-1) ** i * b for i, b in enumerate(profile.betti))
    record("euler_identity", chi == chi_b, f"chi={chi}")

    for i in range(2, K.dim + 1):
        prod = (chains.signed_boundary(K, i - 1).toarray()
                @ chains.signed_boundary(K, i).toarray())
        record(f"chain_identity_d{i - 1}d{i}", not prod.any())

    if max(K.n_faces(i) for i in range(K.dim + 1)) <= 512:
        hodge_ok = all(homology.hodge_betti(K, i) == profile.betti[i]
                       for i in range(K.dim + 1))
        record("hodge_vs_betti", hodge_ok,
               "betti=" + ",".join(map(str, profile.betti)))
    else:
        lines.append("hodge_vs_betti: skipped (too large for dense solve)")

    if K.dim >= 1:
        i = K.dim - 1
        rng = np.random.default_rng(seed)
        f = rng.standard_normal(K.n_faces(i))
        g = rng.standard_normal(K.n_faces(i))
        lhs = chains.quadratic_form(K, i, f, g)
        rhs = float(chains.apply_q_up(K, i, f) @ g)
        record("quadratic_form", abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs)))

        res = spectra.spectral_radius(K, i, seed=seed)
        gdown = spectra.transfer_to_down(K, i, res)
        dres = float(np.linalg.norm(chains.apply_q_down(K, i + 1, gdown)
                                    - res.value * gdown)
                     / np.linalg.norm(gdown))
        record("transfer_residual", dres <= 1e-7, f"residual={_fmt(dres)}")
        err = spectra.second_order_identity_check(K, i, res)
        record("second_order_identity", err <= 1e-6 * res.value ** 2,
               f"max_error={_fmt(err)}")

    if K.is_pure() and K.dim >= 1:
        if homology.is_basic_hole(K):
            rep = homology.check_basic_hole_properties(K)
            record("basic_hole_properties", rep.all_pass)
        else:
            lines.append("basic_hole: no")

    _emit("\n".join(lines) + "\n", opt.get("output"))
    return 1 if failures else 0


def _cmd_search(opt) -> int:
    workers = opt.get("workers") or os.cpu_count() or 1
    kwargs = dict(full_skeleton=opt.get("full_skeleton", True), workers=workers)
    if opt["mode"] == "facets":
        report = extremal.max_facets_search(opt["n"], opt["t"], **kwargs)
    else:
        report = extremal.max_spectral_search(opt["n"], opt["t"], **kwargs)
    payload = {"schema": JSON_SCHEMA_VERSION, "mode": opt["mode"],
               **report.to_dict()}
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n",
          opt.get("output"))
    return 1 if report.bound_violations else 0


def _csv(rows: list[list], header: list[str]) -> str:
    out = [",".join(header)]
    for row in rows:
        out.append(",".join(_fmt(x) if isinstance(x, float) else str(x)
                            for x in row))
    return "\n".join(out) + "\n"


def _cmd_inspect(opt) -> int:
    K = read_facets(opt["file"])
    report = extremal.proof_inspector(K, tol=opt.get("tol") or 1e-10,
                                      seed=opt.get("seed") or 0)
    d = report.to_dict()
    if opt.get("format") == "json":
        _emit(json.dumps({"schema": JSON_SCHEMA_VERSION, **d}, sort_keys=True,
                         indent=2) + "\n", opt.get("output"))
        return 0
    scalar_keys = ["betti_top", "apex", "u", "v", "w", "n_outside",
                   "outside_0", "outside_1", "outside_2", "outside_3",
                   "n_weak_outside", "two_class_u", "two_class_v",
                   "two_class_w", "n_apex_missing", "n_shared_edge_missing",
                   "down_pair_count"]
    header = ["peak_face"] + scalar_keys + [f"verdict_{k}"
                                            for k in sorted(d["verdicts"])]
    row = [" ".join(map(str, d["peak_face"]))]
    row += [str(d[k]) for k in scalar_keys]
    row += [str(d["verdicts"][k]).lower() for k in sorted(d["verdicts"])]
    _emit(_csv([row], header), opt.get("output"))
    return 0


def _cmd_asymptotic(opt) -> int:
    n_list = [int(x) for x in opt["n"].split(",")]
    rows = extremal.asymptotic_check(opt["t"], n_list,
                                     tol_schedule=opt.get("tol"),
                                     seed=opt.get("seed") or 0)
    if opt.get("format") == "json":
        payload = {"schema": JSON_SCHEMA_VERSION, "t": opt["t"],
                   "rows": [{"n": r.n, "q1": r.q1, "excess": r.excess,
                             "g": r.g, "error_bound": r.error_bound}
                            for r in rows]}
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n",
              opt.get("output"))
        return 0
    table = [[r.n, r.q1, r.excess, r.g, r.error_bound] for r in rows]
    _emit(_csv(table, ["n", "q1", "excess", "g", "error_bound"]),
          opt.get("output"))
    return 0


def _cmd_acceptance(opt) -> int:
    results = acceptance.run_all()
    lines = [r.line() for r in results]
    n_pass = sum(r.passed for r in results)
    lines.append(f"{n_pass}/{len(results)} criteria passed")
    report_path = opt.get("output") or "acceptance_report.json"
    payload = {
        "schema": JSON_SCHEMA_VERSION,
        "passed": n_pass == len(results),
        "criteria": [{"id": r.cid, "name": r.name, "passed": r.passed,
                      "details": r.details} for r in results],
    }
    with open(report_path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, indent=2, default=float)
        fh.write("\n")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if n_pass == len(results) else 1


_DISPATCH = {
    "gen": _cmd_gen,
    "betti": _cmd_betti,
    "spectra": _cmd_spectra,
    "check": _cmd_check,
    "search": _cmd_search,
    "inspect": _cmd_inspect,
    "asymptotic": _cmd_asymptotic,
    "acceptance": _cmd_acceptance,
}


def run(config: RunConfig) -> int:
    """Execute a parsed invocation and return the process exit code."""
    try:
        return _DISPATCH[config.subcommand](config.options)
    except QComplexError as exc:
        sys.stderr.write(f"error {exc.code}: {exc}\n")
        return 2 if isinstance(exc, USAGE_ERRORS) else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--workers", type=int, default=None,
                        help="parallel workers (default: logical cores)")
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default=None)
    common.add_argument("-o", "--output", default=None)

    p = argparse.ArgumentParser(
        prog="qcomplex",
        description="Spectra, homology, and extremal search for pure "
                    "simplicial complexes.")
    sub = p.add_subparsers(dest="subcommand", required=True)

    g = sub.add_parser("gen", parents=[common],
                       help="generate a named family as a .facets file")
    g.add_argument("family", choices=families.FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--r", type=int)
    g.add_argument("--t", type=int)
    g.add_argument("--add", help="added faces, e.g. '1,2,3;4,5,6'")

    b = sub.add_parser("betti", parents=[common],
                       help="print Betti numbers and Euler characteristic")
    b.add_argument("file")

    s = sub.add_parser("spectra", parents=[common],
                       help="largest eigenvalue of the up signless Laplacian")
    s.add_argument("file")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--perron", action="store_true",
                   help="also print the Perron vector as 'face value' lines")
    s.add_argument("--normalization", choices=spectra.NORMALIZATIONS,
                   default="unit_norm")

    c = sub.add_parser("check", parents=[common],
                       help="verify operator and homology identities")
    c.add_argument("file")

    se = sub.add_parser("search", parents=[common],
                        help="exhaustive extremal search (JSON report)")
    se.add_argument("--mode", choices=("facets", "spectral"), required=True)
    se.add_argument("--n", type=int, required=True)
    se.add_argument("--t", type=int, required=True)
    se.add_argument("--full-skeleton", dest="full_skeleton",
                    action="store_true", default=True)
    se.add_argument("--no-full-skeleton", dest="full_skeleton",
                    action="store_false")

    ins = sub.add_parser("inspect", parents=[common],
                         help="proof-quantity inspector (CSV)")
    ins.add_argument("file")

    a = sub.add_parser("asymptotic", parents=[common],
                       help="normalized spectral excess of the tent family")
    a.add_argument("--t", type=int, required=True)
    a.add_argument("--n", required=True, help="comma-separated list, e.g. 60,120,240")

    sub.add_parser("acceptance", parents=[common],
                   help="run the acceptance suite and write its report")
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    options = {k: v for k, v in vars(args).items() if k != "subcommand"}
    return run(RunConfig(args.subcommand, options))


if __name__ == "__main__":
    sys.exit(main())
