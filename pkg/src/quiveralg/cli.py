"""Command-line interface.

Exit codes: 0 result computed (any verdict), 1 usage error, 2 parse error,
3 truncation insufficient.  ``--json`` prints a report; when the
``QUIVERALG_REPORT_DIR`` environment variable is set the report is also
written there.
"""

import argparse
import json
import os
import sys

from . import __version__
from .dsl import FieldConflictError, ParseError, format_quiver, parse_quiver
from .fields import field_from_name
from .groebner import DEFAULT_TRUNCATION, TruncationError, prune_low_degree, truncated_groebner
from .invariants import central_degree_one, iso_necessary, tangent_dimension
from .isosearch import STRATEGIES, polynomial_extension, search_graded_iso
from .quiver import adjacency_matrix

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_TRUNCATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _ArgumentParser(prog="quiveralg", description="Path algebras of quivers modulo homogeneous relations.")
    p.add_argument("--version", action="version", version=f"quiveralg {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, degree=True):
        sp.add_argument("--field", help="coefficient field: Q or fP (e.g. f5)")
        sp.add_argument("--json", action="store_true", help="print a JSON report")
        if degree:
            sp.add_argument("--max-degree", type=int, default=DEFAULT_TRUNCATION, metavar="D")

    sp = sub.add_parser("dims", help="graded dimension matrices")
    sp.add_argument("file")
    common(sp)
    sp = sub.add_parser("prune", help="remove degree 0 and 1 relations")
    sp.add_argument("file")
    common(sp, degree=False)
    sp = sub.add_parser("invariants", help="tangent dimension, degree-1 centre, screen")
    sp.add_argument("file")
    sp.add_argument("file2", nargs="?")
    common(sp)
    sp = sub.add_parser("iso", help="decide isomorphism by graded map search")
    sp.add_argument("file")
    sp.add_argument("file2")
    common(sp)
    sp.add_argument("--strategy", choices=STRATEGIES, default="exhaustive")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--deterministic", action="store_true")
    sp.add_argument("--no-screen", action="store_true", help="skip the dimension-matrix screen")
    sp = sub.add_parser("extend", help="presentation of the polynomial extension A[t]")
    sp.add_argument("file")
    common(sp, degree=False)
    return p


def _read(path, field):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return text, parse_quiver(text, field)


def _matrix_lines(M):
    return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in M) + "]"


def _basis(ideal, D):
    if D < ideal.max_degree():
        raise TruncationError(f"--max-degree {D} is below the maximal relation degree {ideal.max_degree()}")
    return truncated_groebner(ideal, D)


def _load(args, path):
    field = field_from_name(args.field) if args.field else None
    text, src = _read(path, field)
    return text, src, prune_low_degree(src.ideal)


def run(argv):
    """Execute a command; returns ``(exit_code, report, text)``."""
    args = build_parser().parse_args(argv)
    cmd = args.command
    inputs = {}
    report = {"tool": "quiveralg", "version": __version__, "command": cmd, "argv": list(argv)}
    lines = []

    text, src, ideal = _load(args, args.file)
    inputs[args.file] = text
    report["inputs"] = inputs
    report["field"] = ideal.field.name
    report["vertices"] = list(ideal.quiver.vertices)

    if cmd == "prune":
        out = format_quiver(src.name, ideal)
        report["result"] = {"presentation": out}
        lines.append(out.rstrip("\n"))
    elif cmd == "extend":
        ext = polynomial_extension(ideal)
        out = format_quiver(src.name + "_t", ext)
        report["result"] = {"presentation": out, "adjacency": adjacency_matrix(ext.quiver).tolist()}
        lines.append(out.rstrip("\n"))
    elif cmd == "dims":
        D = args.max_degree
        G = _basis(ideal, D)
        mats = [m.tolist() for m in G.dimension_matrices(D)]
        report.update(truncation=G.degree, complete_upto=G.complete_upto)
        report["result"] = {"dimension_matrices": mats, "totals": [sum(map(sum, m)) for m in mats]}
        for n, m in enumerate(mats):
            lines.append(f"degree {n}: {_matrix_lines(m)}")
        lines.append("totals: " + ",".join(str(t) for t in report["result"]["totals"]))
        lines.append(f"(certified up to degree {G.complete_upto} over {G.field.name})")
    elif cmd == "invariants":
        D = args.max_degree
        G = _basis(ideal, max(D, 2))
        S = tangent_dimension(G)
        centre = central_degree_one(G)
        res = {
            "adjacency": adjacency_matrix(G.quiver).tolist(),
            "tangent_dimension": S.tolist(),
            "central_degree_one": [repr(z) for z in centre],
        }
        lines.append(f"adjacency: {_matrix_lines(res['adjacency'])}")
        lines.append(f"tangent dimension: {_matrix_lines(res['tangent_dimension'])}")
        lines.append(f"degree-1 centre: {res['central_degree_one'] or '0'}")
        report.update(truncation=G.degree, complete_upto=G.complete_upto)
        if args.file2:
            text2, src2, ideal2 = _load(args, args.file2)
            inputs[args.file2] = text2
            if ideal2.field != ideal.field:
                raise FieldConflictError(f"{args.file} is over {ideal.field.name}, {args.file2} over {ideal2.field.name}")
            G2 = _basis(ideal2, max(D, 2))
            cert = iso_necessary(G, G2, min(G.complete_upto, G2.complete_upto))
            res["screen"] = cert.to_dict()
            lines.append(f"screen: {cert.verdict} (up to degree {cert.degree})")
            lines.append(f"witness: {json.dumps(cert.witness)}")
        report["result"] = res
    elif cmd == "iso":
        text2, src2, ideal2 = _load(args, args.file2)
        inputs[args.file2] = text2
        if ideal2.field != ideal.field:
            raise FieldConflictError(f"{args.file} is over {ideal.field.name}, {args.file2} over {ideal2.field.name}")
        D = args.max_degree
        GA, GB = _basis(ideal, D), _basis(ideal2, D)
        cert = search_graded_iso(
            GA, GB, args.strategy, jobs=args.jobs, deterministic=args.deterministic or args.jobs <= 1,
            screen=not args.no_screen,
        )
        report.update(truncation=D, complete_upto=min(GA.complete_upto, GB.complete_upto))
        report["result"] = cert.to_dict()
        lines.append(f"verdict: {cert.verdict}")
        if cert.map is not None:
            lines.append(f"sigma: {list(cert.map.sigma)}")
            for b in cert.map.to_dict()["blocks"]:
                V = GA.quiver.vertices
                lines.append(f"  block {V[b['source']]}->{V[b['target']]}: {b['matrix']}")
        lines.append(f"witness: {json.dumps(cert.witness)}")
        if cert.verdict != "non-isomorphic":
            lines.append(f"(dimension profiles compared up to degree {cert.degree})")
    return EXIT_OK, report, "\n".join(lines)


def replay(report):
    """Re-run a report's command on its recorded inputs; returns the new report."""
    import tempfile

    with tempfile.TemporaryDirectory() as tmp:
        mapping = {}
        for i, (name, text) in enumerate(report["inputs"].items()):
            path = os.path.join(tmp, f"in{i}.qv")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
            mapping[name] = path
        argv = [mapping.get(a, a) for a in report["argv"]]
        code, new, _ = run(argv)
    new["argv"] = report["argv"]
    new["inputs"] = {k: report["inputs"][k] for k in report["inputs"]}
    return new


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        code, report, text = run(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except TruncationError as e:
        print(f"truncation insufficient: {e}", file=sys.stderr)
        return EXIT_TRUNCATION
    except (FieldConflictError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if "--json" in argv:
        payload = json.dumps(report, indent=2, sort_keys=True)
        print(payload)
        outdir = os.environ.get("QUIVERALG_REPORT_DIR")
        if outdir:
            os.makedirs(outdir, exist_ok=True)
            name = f"{report['command']}-{os.path.basename(argv[1]) if len(argv) > 1 else 'report'}.json"
            with open(os.path.join(outdir, name), "w", encoding="utf-8") as fh:
                fh.write(payload + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
