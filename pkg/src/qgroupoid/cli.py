"""Command-line interface.

Reports are emitted as line-delimited JSON on stdout (header record with
the truncation parameters, one record per check, one summary record) plus
a human summary on stderr; --json-only suppresses the summary.  Exit
codes: 0 pass, 1 fail, 2 indeterminate, 3 usage or parse error.
"""

import argparse
import sys

from .axb import axb_iso_phi, axb_relation_suite, build_axb
from .deform import DeformedEnvAlgebroid, deformed_axiom_suite, twistor_validate
from .drinfeld import (
    duality_roundtrip, hprime_member, semiclassical_cobracket,
    semiclassical_dual_bracket, vee_build, vee_semiclassical,
)
from .errors import EngineError, NonIntegralError, ParseError, SemanticError
from .jets import LEFT, RIGHT, JetContext, jet_axiom_suite
from .properties import structure_property_suite
from .report import Check, Report
from .scalars import parse_poly
from .specfile import load_spec_file

EXIT = {"pass": 0, "fail": 1, "indeterminate": 2}


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="qgroupoid",
        description="exact checks for twisted enveloping algebroids and "
                    "their jet duals")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_spec=True):
        if needs_spec:
            p.add_argument("specfile", help="engine spec file")
        p.add_argument("--h-order", type=int, default=None)
        p.add_argument("--pbw-degree", type=int, default=None)
        p.add_argument("--jet-degree", type=int, default=None)
        p.add_argument("--n-max", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--json-only", action="store_true")

    add_common(sub.add_parser("validate", help="structure and property checks"))
    add_common(sub.add_parser("twist", help="twistor and deformed axioms"))
    dual = sub.add_parser("dualize", help="jet dual axioms and relations")
    dual.add_argument("--side", choices=("left", "right"), default="left")
    add_common(dual)
    drin = sub.add_parser("drinfeld", help="rescaling functors")
    drin.add_argument("--functor", choices=("vee", "prime", "roundtrip"),
                      default="roundtrip")
    add_common(drin)
    add_common(sub.add_parser("semiclassical", help="order-h structure"))
    ex = sub.add_parser("example", help="built-in worked examples")
    ex.add_argument("name", choices=("axb",))
    add_common(ex, needs_spec=False)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; the exit-code contract uses 3
        return 0 if exc.code == 0 else 3
    try:
        report = _run(args)
    except (ParseError, SemanticError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except EngineError as exc:
        report = Report(args.command)
        report.add(Check("engine", True, str(exc), status="indeterminate"))
        _emit(report, args)
        return 2
    _emit(report, args)
    return EXIT[report.verdict()]


def _emit(report, args):
    sys.stdout.write(report.json_lines() + "\n")
    if not args.json_only:
        sys.stderr.write(report.human_summary() + "\n")


def _load(args):
    espec = load_spec_file(args.specfile)
    if args.h_order is not None:
        espec.h_order = args.h_order
    if args.pbw_degree is not None:
        espec.pbw_degree = args.pbw_degree
    if args.jet_degree is not None:
        espec.jet_degree = args.jet_degree
    if args.n_max is not None:
        espec.n_max = args.n_max
    if args.seed is not None:
        espec.seed = args.seed
    return espec


def _dfa_from(espec):
    spec = espec.build_structure()
    tw = espec.build_twistor(spec, espec.h_order)
    return spec, DeformedEnvAlgebroid(spec, tw, validate=False)


def _extras(espec):
    return [parse_poly(t, espec.nvars) for t in espec.extra_polys]


def _run(args):
    if args.command == "example":
        n = args.h_order if args.h_order is not None else 4
        d = args.jet_degree if args.jet_degree is not None else 4
        n_max = args.n_max if args.n_max is not None else min(3, n)
        bundle = build_axb(n, d)
        report = Report("example-axb",
                        {"h_order": n, "jet_degree": d, "n_max": n_max,
                         "seed": args.seed if args.seed is not None else 0})
        report.extend(axb_relation_suite(n, d, bundle=bundle), prefix="relations")
        report.extend(axb_iso_phi(n, d, bundle=bundle), prefix="iso")
        report.extend(duality_roundtrip(bundle.left, n_max=n_max,
                                        degree=min(d, 3)), prefix="roundtrip")
        from .deform import defelem_from_env
        from .envelope import EnvElement
        for i in (0, 1):
            u = defelem_from_env(bundle.spec,
                                 EnvElement.gen(2, 2, i), n).shift(1)
            ok = hprime_member(bundle.dfa, u, n_max=n_max)
            report.add(Check("membership/h-d%d" % (i + 1), ok,
                             None if ok else "rescaled generator rejected"))
        return report

    espec = _load(args)
    if args.command == "validate":
        spec = espec.build_structure()
        report = Report("validate", {"seed": espec.seed,
                                     "sample_degree": espec.sample_degree})
        report.extend(structure_property_suite(
            spec, espec.seed, espec.sample_degree,
            min(espec.h_order, 2), espec.jet_degree))
        return report

    if args.command == "twist":
        spec, dfa = _dfa_from(espec)
        report = Report("twist", {"h_order": espec.h_order,
                                  "seed": espec.seed})
        report.extend(twistor_validate(spec, dfa.twistor), prefix="twistor")
        report.extend(deformed_axiom_suite(
            dfa, min(espec.sample_degree, 2), _extras(espec)), prefix="axioms")
        return report

    if args.command == "dualize":
        spec, dfa = _dfa_from(espec)
        flavor = LEFT if args.side == "left" else RIGHT
        ctx = JetContext(dfa, flavor, espec.jet_degree)
        report = Report("dualize-%s" % args.side,
                        {"h_order": espec.h_order,
                         "jet_degree": espec.jet_degree, "seed": espec.seed})
        report.extend(jet_axiom_suite(ctx, min(espec.sample_degree, 2)),
                      prefix="axioms")
        v = vee_build(ctx, degree=min(espec.jet_degree, 3))
        for (na, nb), rel in sorted(v.relations.items()):
            entries = "; ".join(
                "%s: %r" % (beta, val) for beta, val in sorted(rel.table.items()))
            report.add(Check("relation/%s-%s" % (na, nb), True,
                             meta={"table": entries or "0"}))
        return report

    if args.command == "drinfeld":
        spec, dfa = _dfa_from(espec)
        ctx = JetContext(dfa, LEFT, espec.jet_degree)
        report = Report("drinfeld-%s" % args.functor,
                        {"h_order": espec.h_order, "n_max": espec.n_max,
                         "jet_degree": espec.jet_degree, "seed": espec.seed})
        if args.functor == "vee":
            try:
                v = vee_build(ctx, degree=min(espec.jet_degree, 3))
            except NonIntegralError as exc:
                report.add(Check("vee-integrality", False, str(exc)))
                return report
            dual, rep = vee_semiclassical(v)
            report.extend(rep, prefix="vee")
        elif args.functor == "prime":
            from .deform import defelem_from_env
            from .envelope import EnvElement
            for i in range(spec.rank):
                u = defelem_from_env(spec, EnvElement.gen(
                    spec.nvars, spec.rank, i), espec.h_order).shift(1)
                ok = hprime_member(dfa, u, n_max=min(espec.n_max, espec.h_order))
                report.add(Check("member/h-gen%d" % (i + 1), ok,
                                 None if ok else "rescaled generator rejected"))
                u0 = defelem_from_env(spec, EnvElement.gen(
                    spec.nvars, spec.rank, i), espec.h_order)
                ok = not hprime_member(dfa, u0, n_max=1)
                report.add(Check("nonmember/gen%d" % (i + 1), ok,
                                 None if ok else "unrescaled generator accepted"))
        else:
            report.extend(duality_roundtrip(
                ctx, n_max=min(espec.n_max, 3),
                degree=min(espec.jet_degree, 3)))
        return report

    if args.command == "semiclassical":
        spec, dfa = _dfa_from(espec)
        report = Report("semiclassical", {"h_order": espec.h_order,
                                          "seed": espec.seed})
        delta, dual, rep = semiclassical_cobracket(dfa)
        report.extend(rep, prefix="cobracket")
        ctxR = JetContext(dfa, RIGHT, espec.jet_degree)
        dualR, repR = semiclassical_dual_bracket(ctxR)
        report.extend(repR, prefix="dual-bracket")
        ok = dualR.bracket == dual.bracket and dualR.anchor == dual.anchor
        report.add(Check("dual-bracket-matches-cobracket", ok,
                         None if ok else "right-dual structure differs"))
        return report

    raise SemanticError("unknown command %r" % args.command)


if __name__ == "__main__":
    sys.exit(main())
