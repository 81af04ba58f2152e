"""Command-line front end.

Machine-readable results go to standard output (JSON unless another format
is selected); progress and diagnostics go to standard error.  Exit codes:
0 success, 1 usage or guard error, 2 verification failure, 3 internal
consistency failure.

Partitions are written on the command line as comma-separated descending
integers (``--mu 3,3,3,3``); families are only ever read from JSON files.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Sequence

from . import characters, families, generalized, specht
from .errors import ConsistencyError, GuardError
from .partitions import as_partition, star, star_preimage
from .subsets import as_msubset, level, lower_covers


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _parse_partition(text: str):
    if text in ("", "-"):
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}")
    return as_partition(parts)


def _parse_subset(text: str):
    try:
        elements = [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}")
    return as_msubset(elements)


def _load_family(path: str) -> families.SetFamily:
    with open(path, encoding="utf-8") as fh:
        return families.family_from_json(json.load(fh))


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _render_json(obj, indent: int = 0) -> str:
    """json.dumps with flat lists kept on one line (partitions, subsets)."""
    pad = " " * indent
    inner = " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        lines = [
            f'{inner}{json.dumps(str(k))}: {_render_json(v, indent + 2)}'
            for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(lines) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        items = list(obj)
        if not items:
            return "[]"
        if all(not isinstance(x, (dict, list, tuple)) for x in items):
            return json.dumps(items)
        lines = [f"{inner}{_render_json(x, indent + 2)}" for x in items]
        return "[\n" + ",\n".join(lines) + f"\n{pad}]"
    return json.dumps(obj)


def _emit_json(obj, output: str | None) -> None:
    _emit(_render_json(obj) + "\n", output)


def _enum_guard(args) -> int | None:
    if args.enum_guard is None:
        return families.ENUM_GUARD
    return None if args.enum_guard == 0 else args.enum_guard


def _progress(message: str) -> None:
    print(message, file=sys.stderr, flush=True)


def _minimal_rows(m: int, n: int, enum_guard: int | None) -> list[dict]:
    """Minimal constituent rows for one shape; search for odd m, the
    rectangle itself for even m."""
    if m % 2 == 1:
        found = families.minimal_types(m, n, guard=enum_guard)
        return [
            {
                "type": list(t),
                "d": info.multiplicity,
                "families": [families.family_to_json(f) for f in info.families],
            }
            for t, info in found.items()
        ]
    return [{"type": [m] * n, "d": 1, "families": []}]


def _oracle_check_rows(m: int, n: int, rows: list[dict], guard: int | None) -> None:
    """Check each row's label and multiplicity against the oracle, and that
    everything strictly below a minimal label has multiplicity zero."""
    dec = characters.decompose((m,) * n, guard=guard)
    ours = {tuple(row["type"]): row["d"] for row in rows}
    oracle = {
        lam: dec.mults[lam] for lam in characters.minimal_constituents(dec)
    }
    if ours != oracle:
        raise ConsistencyError(
            f"minimal types for ({m}^{n}) disagree with the oracle: "
            f"search {ours}, oracle {oracle}"
        )
    from .partitions import partitions_of, strictly_dominates

    for lam in ours:
        for mu in partitions_of(m * n, guard=None):
            if strictly_dominates(lam, mu) and dec.mults.get(mu, 0):
                raise ConsistencyError(
                    f"oracle found constituent {mu} strictly below minimal {lam}"
                )


def cmd_minimal(args) -> int:
    rows = _minimal_rows(args.m, args.n, _enum_guard(args))
    if args.oracle:
        _oracle_check_rows(args.m, args.n, rows, args.guard_points)
    obj = {"m": args.m, "n": args.n, "minimal": rows, "oracle_checked": args.oracle}
    if args.format == "csv":
        buf = _csv_from_rows(args.m, args.n, rows, args.oracle)
        _emit(buf, args.output)
    else:
        _emit_json(obj, args.output)
    return 0


def _csv_from_rows(m: int, n: int, rows: list[dict], oracle: bool) -> str:
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["m", "n", "type", "d", "oracle_checked"])
    for row in rows:
        writer.writerow(
            [m, n, " ".join(str(p) for p in row["type"]), row["d"], oracle]
        )
    return buf.getvalue()


def cmd_decompose(args) -> int:
    method = "naive" if args.naive else "assembled"
    dec = characters.decompose(args.mu, method=method, guard=args.guard_points)
    _emit_json(dec.to_json_obj(), args.output)
    return 0


def cmd_verify_hom(args) -> int:
    fam = _load_family(args.family)
    rpt = families.report(fam)
    obj = {
        "family": families.family_to_json(fam),
        "conj_type": list(rpt.conj_type),
        "type": list(rpt.type) if rpt.type is not None else None,
        "closed": rpt.closed,
    }
    if fam.m % 2 == 0:
        raise ValueError("the homomorphism check applies to odd set sizes only")
    if rpt.type is None:
        _progress("family has no well-defined type")
        _emit_json(obj | {"verified": False}, args.output)
        return 2
    if not rpt.closed and not args.force:
        _progress("not closed")
        _emit_json(obj | {"verified": False}, args.output)
        return 2

    guard = args.group_guard
    garnir = specht.garnir_check(fam, guard=guard)
    image = specht.hom_image(fam, force=args.force, guard=guard)
    coeffs = sorted({c for _, c in image.items()})
    strips_back = all(
        specht.strip_to_family(key) == fam for key in image.support()
    )
    expected_terms = specht.column_group_order(rpt.type)
    obj.update(
        {
            "garnir": garnir.ok,
            "garnir_certificate": None
            if garnir.ok
            else {
                "column": garnir.failure[0],
                "X": [list(s) for s in garnir.failure[1]],
                "Y": [list(s) for s in garnir.failure[2]],
            },
            "terms": len(image),
            "expected_terms": expected_terms,
            "coefficients": coeffs,
            "nonzero": bool(image),
            "strips_back": strips_back,
        }
    )
    verified = (
        rpt.closed
        and garnir.ok
        and bool(image)
        and strips_back
        and len(image) == expected_terms
        and set(coeffs) <= {-1, 1}
    )
    obj["verified"] = verified
    _emit_json(obj, args.output)
    return 0 if verified else 2


def cmd_dataset(args) -> int:
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    enum_guard = _enum_guard(args)
    dataset = {"max_sum": args.max_sum, "rows": []}
    for m in range(1, args.max_sum):
        for n in range(1, args.max_sum - m + 1):
            _progress(f"dataset: shape ({m}^{n})")
            rows = _minimal_rows(m, n, enum_guard)
            checked = bool(args.oracle_max) and m * n <= args.oracle_max
            if checked:
                _oracle_check_rows(m, n, rows, args.guard_points)
            dataset["rows"].append(
                {"m": m, "n": n, "types": rows, "oracle_checked": checked}
            )
    json_path = outdir / "dataset.json"
    json_path.write_text(json.dumps(dataset, indent=2) + "\n", encoding="utf-8")
    csv_path = outdir / "dataset.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["m", "n", "type", "d", "oracle_checked"])
        for row in dataset["rows"]:
            for entry in row["types"]:
                writer.writerow(
                    [
                        row["m"],
                        row["n"],
                        " ".join(str(p) for p in entry["type"]),
                        entry["d"],
                        row["oracle_checked"],
                    ]
                )
    _progress(f"dataset: wrote {json_path} and {csv_path}")
    return 0


def _family_row(f: families.SetFamily) -> dict:
    t = families.family_type(f)
    nu = star_preimage(f.m, f.n, t)
    return {
        "family": families.family_to_json(f),
        "type": list(t),
        "star_nu": list(nu) if nu is not None else None,
    }


def cmd_closed_families(args) -> int:
    fams = families.enumerate_closed(args.m, args.n, guard=_enum_guard(args))
    obj = {
        "m": args.m,
        "n": args.n,
        "count": len(fams),
        "families": [_family_row(f) for f in fams],
    }
    _emit_json(obj, args.output)
    return 0


def cmd_closure(args) -> int:
    fam = _load_family(args.family)
    rpt = families.report(fam)
    closed = families.close(fam)
    obj = {
        "input": families.family_to_json(fam),
        "input_closed": rpt.closed,
        "input_conj_type": list(rpt.conj_type),
        "input_type": list(rpt.type) if rpt.type is not None else None,
        "output": families.family_to_json(closed),
        "output_type": list(families.family_type(closed)),
    }
    _emit_json(obj, args.output)
    return 0


def _downset_dot(fam: families.SetFamily) -> str:
    members = set(fam.sets)

    def name(s) -> str:
        return ",".join(str(e) for e in s)

    lines = ["digraph downset {"]
    for s in fam.sets:
        lines.append(f'  "{name(s)}" [rank={level(s)}];')
    for s in fam.sets:
        for c in lower_covers(s):
            if c in members:
                lines.append(f'  "{name(s)}" -> "{name(c)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_downset(args) -> int:
    a = _parse_subset(args.a)
    fam = families.downset(a)
    fmt = "dot" if args.dot else args.format
    if fmt == "dot":
        _emit(_downset_dot(fam), args.output)
    else:
        obj = {
            "a": list(a),
            "level": level(a),
            "count": fam.n,
            "family": families.family_to_json(fam),
            "closed": True,
        }
        _emit_json(obj, args.output)
    return 0


def cmd_star(args) -> int:
    nu = _parse_partition(args.nu)
    result = star(args.m, args.n, nu)
    obj = {"m": args.m, "n": args.n, "nu": list(nu), "type": list(result)}
    _emit_json(obj, args.output)
    return 0


def cmd_generalized(args) -> int:
    rpt = generalized.build_report(
        args.mu,
        oracle=args.oracle,
        enum_guard=_enum_guard(args),
        guard=args.guard_points,
    )
    _emit_json(rpt.to_json_obj(), args.output)
    return 0


def cmd_enumerate_of_type(args) -> int:
    fams = families.enumerate_of_type(args.m, args.n, args.type)
    nu = star_preimage(args.m, args.n, args.type)
    obj = {
        "m": args.m,
        "n": args.n,
        "type": list(args.type),
        "star_nu": list(nu) if nu is not None else None,
        "count": len(fams),
        "families": [
            {
                "family": families.family_to_json(f),
                "closed": families.is_closed(f),
            }
            for f in fams
        ],
    }
    _emit_json(obj, args.output)
    return 0


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--output", help="write the result to this file instead of stdout")
    sub.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="worker cap; results are independent of it (evaluation is sequential)",
    )
    sub.add_argument(
        "--guard-points",
        type=int,
        default=None,
        help="override the oracle degree guard (env FOULKES_GUARD_POINTS)",
    )
    sub.add_argument(
        "--enum-guard",
        type=int,
        default=None,
        help="override the m*n family-enumeration guard (0 = unbounded batch mode)",
    )


def build_parser() -> _Parser:
    parser = _Parser(
        prog="foulkes",
        description="Minimal constituents of block-partition permutation "
        "characters via closed set families, with a brute-force character oracle.",
    )
    subs = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = subs.add_parser("minimal", help="minimal types with multiplicities and witnesses")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check against the character oracle")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    _add_common(p)
    p.set_defaults(handler=cmd_minimal)

    p = subs.add_parser("decompose", help="full character decomposition")
    p.add_argument("--mu", type=_parse_partition, required=True)
    p.add_argument("--naive", action="store_true", help="use exhaustive fixed-point enumeration")
    _add_common(p)
    p.set_defaults(handler=cmd_decompose)

    p = subs.add_parser("verify-hom", help="verify a family's homomorphism")
    p.add_argument("--family", required=True, help="family JSON file")
    p.add_argument("--force", action="store_true", help="compute even for a non-closed family")
    p.add_argument("--group-guard", type=int, default=specht.GROUP_GUARD)
    _add_common(p)
    p.set_defaults(handler=cmd_verify_hom)

    p = subs.add_parser("dataset", help="minimal types for all shapes with m+n up to a bound")
    p.add_argument("--max-sum", type=int, required=True)
    p.add_argument("--oracle-max", type=int, default=0, help="oracle-verify rows with m*n up to K")
    p.add_argument("--outdir", default="dataset")
    _add_common(p)
    p.set_defaults(handler=cmd_dataset)

    p = subs.add_parser("closed-families", help="enumerate all closed families of a shape")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=cmd_closed_families)

    p = subs.add_parser("closure", help="close a family by downward moves")
    p.add_argument("--family", required=True, help="family JSON file")
    _add_common(p)
    p.set_defaults(handler=cmd_closure)

    p = subs.add_parser("downset", help="the downset of a subset")
    p.add_argument("--a", required=True, help="comma-separated subset, e.g. 2,4,6,8")
    p.add_argument("--dot", action="store_true", help="emit the cover graph in DOT form")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    _add_common(p)
    p.set_defaults(handler=cmd_downset)

    p = subs.add_parser("star", help="the box-moving construction on the rectangle")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nu", required=True, help="partition of n-1, e.g. 4,2,1 (empty: '')")
    _add_common(p)
    p.set_defaults(handler=cmd_star)

    p = subs.add_parser("generalized", help="minimal labels for mixed block sizes")
    p.add_argument("--mu", type=_parse_partition, required=True)
    p.add_argument("--oracle", action="store_true")
    _add_common(p)
    p.set_defaults(handler=cmd_generalized)

    p = subs.add_parser("enumerate-of-type", help="all families of a shape and type")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--type", type=_parse_partition, required=True)
    _add_common(p)
    p.set_defaults(handler=cmd_enumerate_of_type)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "command", None):
        parser.print_help(sys.stderr)
        return 1
    if getattr(args, "jobs", 1) < 1:
        print("foulkes: error: --jobs must be at least 1", file=sys.stderr)
        return 1
    try:
        return args.handler(args)
    except GuardError as exc:
        print(f"foulkes: guard: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"foulkes: internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"foulkes: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
