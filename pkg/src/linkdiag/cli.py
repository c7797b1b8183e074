"""Command-line interface: ``linkdiag <subcommand> ...``.

Exit status 0 means success, 1 a failed check, 2 a usage, parse or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import bounds, certify, generate, invariants
from .diagram import (DiagramError, LinkDiagram, PreconditionError, connected_sum, format_pd,
                      mirror, parse_diagram, pieces_of)
from .embedding import Embedding
from .seifert import seifert_smooth, stats

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _load(path: str) -> LinkDiagram:
    text = _read(path)
    return parse_diagram(text, name="stdin" if path == "-" else Path(path).stem)


def _side(spec: str | None):
    if spec is None:
        return None
    try:
        e, s = (int(x) for x in spec.split(","))
    except ValueError as exc:
        raise UsageError(f"--outer expects EDGE,SIDE such as 3,-1; got {spec!r}") from exc
    if s not in (1, -1):
        raise UsageError("--outer side must be 1 or -1")
    return (e, s)


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc.strerror or exc}") from exc


# --------------------------------------------------------------------------
# subcommands


def cmd_analyze(args) -> int:
    d = _load(args.file)
    st = stats(d)
    rep = bounds.bound_star(d)
    doc = {"name": d.name, "stats": st.as_dict(), "bounds": rep.as_dict()}
    if len(pieces_of(d)) + len(d.crossingless) == 1 and d.n_crossings:
        emb = Embedding(seifert_smooth(d), _side(args.outer))
        doc["embedding"] = emb.forest_dict()
        if args.embedding:
            doc["embedding"]["faces"] = [[list(side) for side in f] for f in emb.faces.boundaries]
            doc["embedding"]["depth"] = {str(k): v for k, v in sorted(emb.depth.items())}
    if args.json or args.embedding:
        _write(_dump(doc), None)
        return EXIT_OK
    lines = [f"diagram: {d.name}"]
    lines += [f"  {k}: {v}" for k, v in st.as_dict().items()]
    lines += [f"  {k}: {v}" for k, v in rep.as_dict().items() if k != "eulerS"]
    if "embedding" in doc:
        emb = doc["embedding"]
        lines.append(f"  outermost: {' '.join(map(str, emb['roots']))}")
        lines.append("  orientation: " + " ".join(f"{c}={f}" for c, f in emb["orientation"].items()))
    _write("\n".join(lines) + "\n", None)
    return EXIT_OK


def cmd_bound(args) -> int:
    _write(_dump(bounds.bound_star(_load(args.file)).as_dict()), None)
    return EXIT_OK


def cmd_certify(args) -> int:
    d = _load(args.file)
    if args.max_crossings is not None and d.n_crossings > args.max_crossings:
        raise UsageError(f"{d.n_crossings} crossings exceed --max-crossings {args.max_crossings}")
    cert = certify.certify_positive(d, _side(args.outer), expanded=args.expand)
    text = certify.dumps(cert, d)
    report = certify.verify_cert(certify.loads(text)[0], d)
    _write(text, args.output)
    if not report.ok:
        print("certificate rejected: " + "; ".join(report.errors), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    d = _load(args.file)
    try:
        cert, header = certify.loads(_read(args.cert))
    except (ValueError, KeyError) as exc:
        raise UsageError(f"malformed certificate: {exc}") from exc
    report = certify.verify_cert(cert, d)
    if header.get("diagramHash") not in (None, certify.diagram_hash(d)):
        report = certify.CheckReport(False, ["header hash does not match the diagram"] + report.errors)
    _write(_dump(report.as_dict()), None)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_invariants(args) -> int:
    d = _load(args.file)
    doc = invariants.invariants_report(d, args.max_crossings)
    if args.json:
        _write(_dump(doc), None)
    else:
        _write("".join(f"{k}: {doc[k]}\n" for k in ("jones", "alexander", "determinant", "signature")), None)
    return EXIT_OK


def cmd_almost_positive(args) -> int:
    rep = bounds.almost_positive_analyze(_load(args.file))
    doc = rep.as_dict()
    if rep.reduced is not None:
        doc["reducedPD"] = format_pd(rep.reduced)
    _write(_dump(doc), None)
    return EXIT_OK


def _generate_one(kind: str, params: list[str], seed: int | None) -> LinkDiagram:
    if kind not in generate.GENERATORS:
        raise UsageError(f"unknown generator {kind!r}; choose from {', '.join(generate.GENERATORS)}")
    try:
        nums = [int(p) for p in params]
    except ValueError as exc:
        raise UsageError("generator parameters must be integers") from exc
    fn, names = generate.GENERATORS[kind]
    if kind == "chain":
        return fn(nums)
    if kind == "pretzel":
        return fn(*nums)
    if "seed" in names and seed is not None:
        nums = nums[:len(names) - 1] + [seed]
    if len(nums) != len(names):
        raise UsageError(f"{kind} takes parameters {' '.join(names)}")
    return fn(*nums)


def cmd_generate(args) -> int:
    if args.count > 1:
        if args.seed is None or args.output is None:
            raise UsageError("--count needs --seed and an output directory")
        os.makedirs(args.output, exist_ok=True)
        for k in range(args.count):
            d = _generate_one(args.kind, args.params, args.seed + k)
            _write(format_pd(d), os.path.join(args.output, f"{args.kind}-{args.seed + k}.pd"))
        return EXIT_OK
    _write(format_pd(_generate_one(args.kind, args.params, args.seed)), args.output)
    return EXIT_OK


def cmd_mirror(args) -> int:
    _write(format_pd(mirror(_load(args.file))), args.output)
    return EXIT_OK


def cmd_connect(args) -> int:
    d1, d2 = _load(args.file1), _load(args.file2)
    e1 = args.edges[0] if args.edges else min(d1.edges)
    e2 = args.edges[1] if args.edges else min(d2.edges)
    _write(format_pd(connected_sum(d1, e1, d2, e2)), args.output)
    return EXIT_OK


# --------------------------------------------------------------------------
# batch

CSV_FIELDS = ["name", "crossings", "components", "negative", "eulerS", "star", "sbi", "degenerate",
              "certificate", "hopfBands", "signature", "determinant", "status", "detail"]


def _check_existing(text: str | None, d: LinkDiagram) -> certify.CheckReport:
    if text is None:
        return certify.CheckReport(False, ["missing certificate"])
    try:
        cert, header = certify.loads(text)
    except (ValueError, KeyError) as exc:
        return certify.CheckReport(False, [f"malformed certificate: {exc}"])
    if header.get("diagramHash") != certify.diagram_hash(d):
        return certify.CheckReport(False, ["header hash does not match the diagram"])
    return certify.verify_cert(cert, d)


def batch_row(d: LinkDiagram, require_positive: bool, limit: int | None,
              existing: str | None = None, verify_only: bool = False) -> tuple[dict, str | None]:
    """One CSV row and the certificate text (if any) for a diagram.

    With ``verify_only`` the certificate text ``existing`` is checked instead
    of certifying afresh.
    """
    st = stats(d)
    rep = bounds.bound_star(d)
    row = {"name": d.name, "crossings": st.n_crossings, "components": st.n_components,
           "negative": st.n_neg, "eulerS": st.euler_s, "star": rep.star, "sbi": rep.sbi,
           "degenerate": str(rep.degenerate).lower(), "certificate": "", "hopfBands": "",
           "signature": "", "determinant": "", "status": "pass", "detail": ""}
    problems = []
    if rep.star != rep.sbi - 2 * st.n_lt:
        problems.append("star/sbi identity")
    cert_text = None
    positive = st.n_neg == 0
    if require_positive and not positive:
        row["status"] = "skip"
        row["detail"] = "not positive"
        return row, None
    if positive and verify_only:
        chk = _check_existing(existing, d)
        cert_text = existing
    elif positive:
        cert = certify.certify_positive(d, expanded=True)
        chk = certify.verify_cert(cert, d)
        cert_text = certify.dumps(cert, d)
    if positive:
        row["certificate"] = "accepted" if chk.ok else "rejected"
        if chk.ok:
            row["hopfBands"] = chk.hopf_bands
        else:
            problems.append("certificate rejected")
        if not rep.degenerate and rep.star != st.euler_s:
            problems.append("star differs from chi(S)")
    lim = invariants.max_crossings(limit)
    if d.n_crossings <= lim:
        row["signature"] = invariants.signature(d)
        try:
            row["determinant"] = invariants.determinant(d, limit)
        except invariants.InconsistencyError as exc:
            problems.append(str(exc))
        if invariants.signature(mirror(d)) != -row["signature"]:
            problems.append("signature is not odd under mirroring")
    if problems:
        row["status"] = "fail"
        row["detail"] = "; ".join(problems)
    return row, cert_text


def _batch_inputs(args) -> list[LinkDiagram]:
    if args.paths:
        files: list[str] = []
        for p in args.paths:
            if os.path.isdir(p):
                files += sorted(os.path.join(p, f) for f in os.listdir(p)
                                if f.endswith((".pd", ".braid", ".txt")))
            else:
                files.append(p)
        return [_load(f) for f in files]
    seed = 1 if args.seed is None else args.seed
    return generate.positive_corpus(seed) + generate.mixed_corpus(seed)


def cmd_batch(args) -> int:
    diagrams = _batch_inputs(args)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    failed = 0
    if args.artifacts:
        os.makedirs(args.artifacts, exist_ok=True)
    for k, d in enumerate(diagrams):
        existing = None
        if args.verify_artifacts:
            f = Path(args.verify_artifacts, f"{k:04d}.cert.json")
            existing = f.read_text() if f.exists() else None
        try:
            row, cert_text = batch_row(d, args.require_positive, args.max_crossings,
                                       existing, bool(args.verify_artifacts))
        except DiagramError as exc:
            row = {f: "" for f in CSV_FIELDS}
            row.update(name=d.name, status="fail", detail=str(exc))
            cert_text = None
        failed += row["status"] == "fail"
        writer.writerow(row)
        if args.artifacts and cert_text is not None:
            Path(args.artifacts, f"{k:04d}.cert.json").write_text(cert_text)
    _write(buf.getvalue(), args.output)
    return EXIT_FAIL if failed else EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linkdiag", description="Seifert surfaces of link diagrams")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, file=True):
        sp = sub.add_parser(name, help=help_)
        if file:
            sp.add_argument("file", help="diagram in PD or braid notation")
        sp.set_defaults(func=fn)
        return sp

    sp = add("analyze", cmd_analyze, "statistics, nesting and bounds")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--embedding", action="store_true", help="include faces and nesting (JSON)")
    sp.add_argument("--outer", help="outer face as EDGE,SIDE (side 1 = left of the edge)")
    add("bound", cmd_bound, "bound report as JSON")
    sp = add("certify", cmd_certify, "quasipositivity certificate for a positive diagram")
    sp.add_argument("--expand", action="store_true", help="expand torus fibers into Hopf bands")
    sp.add_argument("--outer", help="outer face as EDGE,SIDE (side 1 = left of the edge)")
    sp.add_argument("--max-crossings", type=int)
    sp.add_argument("-o", "--output")
    sp = sub.add_parser("verify-cert", help="check a certificate against a diagram")
    sp.add_argument("cert")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_verify)
    sp = add("invariants", cmd_invariants, "Jones, Alexander, determinant, signature")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--max-crossings", type=int)
    add("almost-positive", cmd_almost_positive, "case analysis for one negative crossing")
    sp = add("generate", cmd_generate, "write a generated diagram", file=False)
    sp.add_argument("kind", help=", ".join(generate.GENERATORS))
    sp.add_argument("params", nargs="*")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("-o", "--output")
    sp = add("batch", cmd_batch, "run checks over files or the seeded corpus", file=False)
    sp.add_argument("paths", nargs="*")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--require-positive", action="store_true")
    sp.add_argument("--max-crossings", type=int)
    sp.add_argument("--artifacts", help="directory for certificate JSON files")
    sp.add_argument("--verify-artifacts", metavar="DIR",
                    help="check certificates written by an earlier --artifacts run instead of certifying")
    sp.add_argument("-o", "--output")
    sp = add("mirror", cmd_mirror, "mirror image")
    sp.add_argument("-o", "--output")
    sp = sub.add_parser("connect", help="connected sum of two diagrams")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.add_argument("--edges", type=int, nargs=2, metavar=("E1", "E2"))
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_connect)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"linkdiag: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, invariants.InconsistencyError) as exc:
        print(f"linkdiag: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except DiagramError as exc:
        print(f"linkdiag: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
