"""Command line entry point: ``python -m gggrlab <group> <verb> ...``."""
from __future__ import annotations

import argparse
import json
import sys

from . import multiplicity as mult
from . import scenarios
from .grading import GradingError, WeightedDynkinDiagram, index_exponent
from .ohmori import OhmoriError, solve, system_from_json
from .rootsys import RootSystemError, build_root_system, classify_type
from .torus import CyclicParams, TorusElement, TorusError, kernel_subsystem, make_ohmori_torus, order


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_scenario_list(args) -> int:
    for entry in scenarios.list_scenarios():
        if args.json:
            print(json.dumps(entry, sort_keys=True))
        else:
            extra = f" variants={','.join(entry['variants'])}" if entry["variants"] else ""
            if entry["params"]:
                extra += f" params=--p/--e (default p,e={entry['default_params']})"
            print(f"{entry['name']:14s} {entry['description']} [{entry['anchor']}]{extra}")
    return 0


def cmd_scenario_run(args) -> int:
    rep = scenarios.run(args.name, args.variant, args.p, args.e)
    line = rep.to_json()
    if args.report:
        with open(args.report, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")
    if not args.json:
        print(rep.summary())
    print(line)
    return 0 if rep.passed else 1


def cmd_rootsys_dump(args) -> int:
    print(build_root_system(args.type).to_json())
    return 0


def cmd_grading_presets(args) -> int:
    for name, doc in scenarios.diagram_presets().items():
        print(f"{name}: {json.dumps(doc)}")
    return 0


def cmd_grading_show(args) -> int:
    if args.preset:
        doc = scenarios.diagram_presets().get(args.preset)
        if doc is None:
            raise GradingError(f"unknown preset {args.preset!r}")
        if "ambient" in doc:
            print(json.dumps(doc))
            return 0
        wdd = WeightedDynkinDiagram.of(doc["type"], doc["weights"])
    else:
        wdd = WeightedDynkinDiagram.of(args.type, _ints(args.weights))
    levels = {str(k): len(v) for k, v in wdd.grading.level_sets.items()}
    print(json.dumps({"type": str(wdd.rs.simple_type), "weights": list(wdd.weights),
                      "levels": levels, "index_exponent": index_exponent(wdd)}))
    return 0


def cmd_ohmori_solve(args) -> int:
    if args.spec == "-":
        doc = json.load(sys.stdin)
    else:
        with open(args.spec, encoding="utf-8") as fh:
            doc = json.load(fh)
    sol = solve(system_from_json(doc))
    print(json.dumps(sol.to_dict()))
    return 0


def cmd_torus_eval(args) -> int:
    params = CyclicParams(args.p, args.e)
    rs = build_root_system(args.type)
    if args.exponents is not None:
        t = TorusElement(params, tuple(args.exponents))
    else:
        t = make_ohmori_torus(params, args.n, args.half)
    if t.rank != rs.rank:
        raise TorusError(f"vector has length {t.rank}, {rs.simple_type} has rank {rs.rank}")
    kernel = kernel_subsystem(t, rs)
    print(json.dumps({
        "order": order(t),
        "exponents": list(t.exponents),
        "kernel_type": [str(x) for x in classify_type(kernel)],
    }))
    return 0


def cmd_mult_table(args) -> int:
    tab = mult.kawanaka_table(args.n)
    if args.json:
        print(tab.to_json())
    else:
        print(tab.render())
        print(tab.to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gggrlab", description=__doc__)
    groups = ap.add_subparsers(dest="group", required=True)

    sc = groups.add_parser("scenario", help="run the case studies").add_subparsers(dest="verb", required=True)
    p = sc.add_parser("list")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scenario_list)
    p = sc.add_parser("run")
    p.add_argument("name")
    p.add_argument("--variant", help="type for regular-class/single-node, n for multiplicity")
    p.add_argument("--p", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--json", action="store_true", help="emit only the JSON report")
    p.add_argument("--report", help="append the JSON report line to this file")
    p.set_defaults(func=cmd_scenario_run)

    rs = groups.add_parser("rootsys").add_subparsers(dest="verb", required=True)
    p = rs.add_parser("dump")
    p.add_argument("type")
    p.set_defaults(func=cmd_rootsys_dump)

    gr = groups.add_parser("grading").add_subparsers(dest="verb", required=True)
    p = gr.add_parser("presets")
    p.set_defaults(func=cmd_grading_presets)
    p = gr.add_parser("show")
    p.add_argument("--preset")
    p.add_argument("--type")
    p.add_argument("--weights")
    p.set_defaults(func=cmd_grading_show)

    oh = groups.add_parser("ohmori").add_subparsers(dest="verb", required=True)
    p = oh.add_parser("solve")
    p.add_argument("spec", help="system spec JSON file, or - for stdin")
    p.set_defaults(func=cmd_ohmori_solve)

    to = groups.add_parser("torus").add_subparsers(dest="verb", required=True)
    p = to.add_parser("eval")
    p.add_argument("--type", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e", type=int, default=1)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=_ints, help="exponents of nu")
    g.add_argument("--exponents", type=_ints, help="raw exponents over the generator of F_q^x")
    p.add_argument("--half", action="store_true", help="use a square root of nu")
    p.set_defaults(func=cmd_torus_eval)

    mu = groups.add_parser("mult").add_subparsers(dest="verb", required=True)
    p = mu.add_parser("table")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mult_table)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RootSystemError, GradingError, OhmoriError, TorusError,
            mult.MultiplicityError, scenarios.ScenarioError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
