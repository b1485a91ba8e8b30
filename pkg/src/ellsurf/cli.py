"""Command-line front end.

Thin adapters over the library: every command is one pipeline, all I/O is
exact text, and identical inputs produce byte-identical reports.  Exit
codes: 0 success, 2 domain error (degenerate model, impossible operation),
64 usage or parse error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import catalog, configuration, monodromy, weierstrass
from .configuration import (
    ConfigFormatError,
    Configuration,
    TORELLI_FAILS,
    TORELLI_OUT_OF_SCOPE,
    counts,
    parse_configuration,
    report,
)
from .kodaira import euler_number
from .ratfunc import PolyParseError
from .weierstrass import ModelFormatError, ZeroDiscriminantError

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_USAGE = 64

_PARSE_ERRORS = (PolyParseError, ModelFormatError, ConfigFormatError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract says 64
        raise UsageError(message)


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _parse_partition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: comma-separated integers expected") from exc
    if not parts or any(p < 1 for p in parts):
        raise UsageError(f"bad partition {text!r}: parts must be positive")
    return tuple(sorted(parts, reverse=True))


def _config_doc(config: Configuration) -> dict:
    return {
        "genus": config.genus,
        "fibers": [{"label": f.label, "type": str(f.type)} for f in config.fibers],
    }


# --------------------------------------------------------------------------
# command handlers: each returns (exit_code, text, results, verdicts)


def _cmd_classify(args) -> tuple[int, str, dict, dict]:
    text = _read(args.model)
    model = weierstrass.parse_model(text)
    out = weierstrass.format_classification(model)
    places = weierstrass.classify_places(model)
    total = sum(euler_number(r.fiber) * r.degree for r in places)
    results = {
        "input_sha256": _digest(text),
        "places": [
            {
                "place": r.place.label(),
                "fiber": str(r.fiber),
                "v_c4": "inf" if r.data.v_c4 == float("inf") else r.data.v_c4,
                "v_c6": "inf" if r.data.v_c6 == float("inf") else r.data.v_c6,
                "v_delta": r.data.v_delta,
                "degree": r.degree,
            }
            for r in places
        ],
        "deg_L": total // 12,
        "sum_euler": total,
    }
    return EXIT_OK, out, results, {"noether": "ok"}


def _cmd_analyze(args) -> tuple[int, str, dict, dict]:
    text = _read(args.config)
    config = parse_configuration(text)
    rep = report(config)
    cnt = rep.counts
    j_constant = cnt.d + cnt.e == 0
    verdict = configuration.is_extremal(config, j_constant)
    torelli = configuration.torelli_verdict(
        rep.p_g, j_constant, verdict.status == configuration.EXTREMAL
    )
    j_text = "constant" if j_constant else "non-constant"
    lines = [
        f"genus       = {config.genus}",
        f"deg_L       = {rep.deg_L}",
        f"p_g         = {rep.p_g}",
        f"h11         = {rep.h11}",
        f"rho_tr      = {rep.rho_tr}",
        f"(a,b,c,d,e) = ({cnt.a}, {cnt.b}, {cnt.c}, {cnt.d}, {cnt.e})",
        f"delta       = {rep.delta}",
        f"j-invariant = {j_text} (inferred)",
        f"extremal    = {verdict}",
        f"torelli     = {torelli}",
    ]
    results = {
        "input_sha256": _digest(text),
        "genus": config.genus,
        "deg_L": rep.deg_L,
        "p_g": rep.p_g,
        "h11": rep.h11,
        "rho_tr": rep.rho_tr,
        "counts": list(cnt),
        "delta": rep.delta,
    }
    verdicts = {
        "j_constant": j_constant,
        "extremal": verdict.status,
        "extremal_note": verdict.note,
        "torelli": torelli,
    }
    return EXIT_OK, "\n".join(lines) + "\n", results, verdicts


def _cmd_twist(args) -> tuple[int, str, dict, dict]:
    text = _read(args.config)
    config = parse_configuration(text)
    sites = [s.strip() for s in args.sites.split(",") if s.strip()]
    if not sites:
        raise UsageError("--sites needs a comma-separated list of labels")
    twisted, change = configuration.twist(config, sites)
    out = configuration.format_configuration(twisted) + f"# delta change = {change}\n"
    results = {
        "input_sha256": _digest(text),
        "sites": sites,
        "configuration": _config_doc(twisted),
        "delta_change": change,
    }
    return EXIT_OK, out, results, {}


def _cmd_star_minimal(args) -> tuple[int, str, dict, dict]:
    text = _read(args.config)
    config = parse_configuration(text)
    result = configuration.star_minimal_twist(config)
    out = configuration.format_configuration(result)
    return EXIT_OK, out, {
        "input_sha256": _digest(text),
        "configuration": _config_doc(result),
    }, {}


def _cmd_min_twist(args) -> tuple[int, str, dict, dict]:
    text = _read(args.config)
    config = parse_configuration(text)
    result = configuration.minimal_delta_twist(config)
    rep = report(result)
    out = configuration.format_configuration(result) + f"# delta = {rep.delta}\n"
    return EXIT_OK, out, {
        "input_sha256": _digest(text),
        "configuration": _config_doc(result),
        "delta": rep.delta,
    }, {}


def _cmd_basechange(args) -> tuple[int, str, dict, dict]:
    text = _read(args.config)
    config = parse_configuration(text)
    profile = {}
    for item in args.ramify or []:
        if ":" not in item:
            raise UsageError(f"--ramify wants <label>:<e1,e2,...>, got {item!r}")
        label, _, indices = item.partition(":")
        label = label.strip()
        if label in profile:
            raise UsageError(f"duplicate --ramify for {label!r}")
        profile[label] = _parse_partition(indices)
    result = configuration.base_change(config, args.degree, profile)
    out = configuration.format_configuration(result)
    return EXIT_OK, out, {
        "input_sha256": _digest(text),
        "degree": args.degree,
        "profile": {k: list(v) for k, v in profile.items()},
        "configuration": _config_doc(result),
    }, {}


def _cmd_torelli(args) -> tuple[int, str, dict, dict]:
    verdict = configuration.torelli_verdict(args.pg, args.constant_j, args.extremal)
    if verdict == TORELLI_FAILS:
        text = "FAILS infinitesimal Torelli\n"
    elif verdict == TORELLI_OUT_OF_SCOPE:
        text = "out of scope: criterion needs p_g > 1 (the K3 case satisfies)\n"
    else:
        text = "satisfies infinitesimal Torelli\n"
    results = {"p_g": args.pg, "j_constant": args.constant_j, "extremal": args.extremal}
    return EXIT_OK, text, results, {"torelli": verdict}


def _search_problem(args) -> monodromy.SearchProblem:
    return monodromy.SearchProblem(
        args.degree,
        over0=_parse_partition(args.over0),
        over1728=_parse_partition(args.over1728),
        over_inf=_parse_partition(args.overinf),
    )


def _cmd_search(args) -> tuple[int, str, dict, dict]:
    problem = _search_problem(args)
    result = monodromy.search(problem, args.bound)
    genus = monodromy.genus_of_cover(
        problem.degree, [problem.over0, problem.over1728, problem.over_inf]
    )
    results = {
        "degree": problem.degree,
        "over0": list(problem.over0),
        "over1728": list(problem.over1728),
        "over_inf": list(problem.over_inf),
        "scanned": result.candidates_scanned,
        "genus": genus,
    }
    if result.witness is None:
        text = f"NONEXISTENT\nscanned = {result.candidates_scanned}\n"
        return EXIT_OK, text, results, {"exists": False}
    w = result.witness
    prod = monodromy.product(w.sigma0, w.sigma1)
    text = (
        f"sigma0 = {monodromy.format_permutation(w.sigma0)}\n"
        f"sigma1 = {monodromy.format_permutation(w.sigma1)}\n"
        f"product = {monodromy.format_permutation(prod)}\n"
        f"genus = {genus}\n"
        f"scanned = {result.candidates_scanned}\n"
    )
    results["sigma0"] = monodromy.format_permutation(w.sigma0)
    results["sigma1"] = monodromy.format_permutation(w.sigma1)
    results["product"] = monodromy.format_permutation(prod)
    return EXIT_OK, text, results, {"exists": True}


def _cmd_survey(args) -> tuple[int, str, dict, dict]:
    try:
        table = monodromy.survey_partitions(args.degree, args.bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    lines = []
    doc = []
    for part, exists in table.items():
        name = ",".join(map(str, part))
        lines.append(f"{name} : {'realizable' if exists else 'NONEXISTENT'}")
        doc.append({"partition": list(part), "realizable": exists})
    realizable = sum(1 for v in table.values() if v)
    lines.append(f"total = {len(table)}, realizable = {realizable}")
    results = {"degree": args.degree, "partitions": doc,
               "total": len(table), "realizable": realizable}
    return EXIT_OK, "\n".join(lines) + "\n", results, {}


def _cmd_tables(args) -> tuple[int, str, dict, dict]:
    lines = []
    doc = []
    failures = 0
    for row in catalog.ROWS:
        config = weierstrass.classify_model(row.model())
        got = sorted((f.label, str(f.type)) for f in config.fibers)
        expected = sorted(row.expected)
        ok = got == expected
        deg_l = config.deg_L()
        ok = ok and deg_l == row.p_g + 1
        if ok:
            lines.append(f"PASS {row.name}")
        else:
            failures += 1
            lines.append(f"FAIL {row.name}: expected {expected}, got {got}")
        doc.append({"model": row.name, "pass": ok,
                    "expected": [list(e) for e in expected],
                    "got": [list(g) for g in got]})
    lines.append(f"{len(catalog.ROWS)} rows checked, {len(catalog.ROWS) - failures} passed")
    code = EXIT_OK if failures == 0 else EXIT_DOMAIN
    return code, "\n".join(lines) + "\n", {"rows": doc}, {"all_pass": failures == 0}


# --------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="ellsurf", description=__doc__)
    parser.add_argument("--json", action="store_true", default=False,
                        help="emit one machine-readable JSON document")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one machine-readable JSON document")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=lambda **kw: _Parser(parents=[common], **kw))

    p = sub.add_parser("classify", help="classify the fibers of a Weierstrass model")
    p.add_argument("model", help="file with lines 'A = <poly>' and 'B = <poly>'")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("analyze", help="invariants and verdicts of a configuration")
    p.add_argument("config", help="configuration file")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("twist", help="quadratic twist of a configuration")
    p.add_argument("config")
    p.add_argument("--sites", required=True,
                   help="comma-separated labels (an even number of points)")
    p.set_defaults(handler=_cmd_twist)

    p = sub.add_parser("star-minimal", help="*-minimal twist of a configuration")
    p.add_argument("config")
    p.set_defaults(handler=_cmd_star_minimal)

    p = sub.add_parser("min-twist", help="twist minimizing h11 - rho_tr")
    p.add_argument("config")
    p.set_defaults(handler=_cmd_min_twist)

    p = sub.add_parser("basechange", help="pull a configuration back along a cover")
    p.add_argument("config")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--ramify", action="append", metavar="LABEL:E1,E2,...",
                   help="ramification indices above a place (repeatable)")
    p.set_defaults(handler=_cmd_basechange)

    p = sub.add_parser("torelli", help="infinitesimal Torelli verdict")
    p.add_argument("--pg", type=int, required=True)
    p.add_argument("--constant-j", action="store_true", dest="constant_j")
    p.add_argument("--extremal", action="store_true")
    p.set_defaults(handler=_cmd_torelli)

    p = sub.add_parser("search", help="find permutations realizing a branched cover")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--over0", required=True, help="cycle type over 0, e.g. 3,3,3,3")
    p.add_argument("--over1728", required=True, help="cycle type over 1728")
    p.add_argument("--overinf", required=True, help="cycle type over infinity")
    p.add_argument("--bound", type=int, default=monodromy.DEFAULT_DEGREE_BOUND,
                   help="largest degree the exhaustive search accepts")
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("survey", help="realizability of every infinity profile")
    p.add_argument("--degree", type=int, default=12)
    p.add_argument("--bound", type=int, default=monodromy.DEFAULT_DEGREE_BOUND)
    p.set_defaults(handler=_cmd_survey)

    p = sub.add_parser("tables", help="verify the constant-j catalog")
    p.set_defaults(handler=_cmd_tables)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    command = "?"
    as_json = "--json" in argv
    try:
        args = parser.parse_args(argv)
        command = args.command
        code, text, results, verdicts = args.handler(args)
    except UsageError as exc:
        _emit_error(command, str(exc), EXIT_USAGE, as_json)
        return EXIT_USAGE
    except _PARSE_ERRORS as exc:
        _emit_error(command, str(exc), EXIT_USAGE, as_json)
        return EXIT_USAGE
    except (ZeroDiscriminantError, ValueError) as exc:
        _emit_error(command, str(exc), EXIT_DOMAIN, as_json)
        return EXIT_DOMAIN
    if as_json:
        doc = {
            "command": command,
            "results": results,
            "verdicts": verdicts,
            "exit_code": code,
        }
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(text)
    return code


def _emit_error(command: str, message: str, code: int, as_json: bool) -> None:
    if as_json:
        print(json.dumps({"command": command, "error": message, "exit_code": code},
                         indent=2))
    else:
        print(f"error: {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
