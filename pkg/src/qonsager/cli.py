"""Command-line front end.

Exit codes: 0 = affirmative, 1 = negative verdict, 2 = error.  All output
is JSON with rationals as strings, deterministic byte-for-byte for a
fixed input.
"""

import argparse
import json
import sys

from . import analysis, qstrings
from .loop_module import EvaluationSpec, ModuleSpec, build_module, generator_set_to_json
from .onsager import OnsagerParams, pair_to_json, phi_images
from .scalars import DeformationParameter, DomainError, parse_rational


class SpecError(DomainError):
    pass


def _field(payload, name, parser):
    if name not in payload:
        raise SpecError("missing field '%s'" % name)
    try:
        return parser(payload[name])
    except SpecError:
        raise
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SpecError("invalid field '%s': %s" % (name, exc))


def parse_spec(payload):
    """Parse {"q", "factors", "s", "t"} into (ModuleSpec, OnsagerParams)."""
    q = _field(payload, "q", lambda v: DeformationParameter(parse_rational(v)))
    factors = []
    raw_factors = _field(payload, "factors", list)
    if not raw_factors:
        raise SpecError("invalid field 'factors': must be nonempty")
    for entry in raw_factors:
        ell = _field(entry, "ell", int)
        a = _field(entry, "a", parse_rational)
        try:
            factors.append(EvaluationSpec(ell=ell, a=a))
        except DomainError as exc:
            raise SpecError("invalid field '%s': %s"
                            % ("a" if a == 0 else "ell", exc))
    s = _field(payload, "s", parse_rational)
    t = _field(payload, "t", parse_rational)
    try:
        params = OnsagerParams(s=s, t=t)
    except DomainError as exc:
        raise SpecError("invalid field '%s': %s" % ("s" if s == 0 else "t", exc))
    return ModuleSpec(q=q, factors=tuple(factors)), params


def load_spec(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise SpecError("cannot read spec file: %s" % exc)
    except json.JSONDecodeError as exc:
        raise SpecError("spec file is not valid JSON: %s" % exc)
    return parse_spec(payload)


def _emit(doc, out_path):
    text = json.dumps(doc, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args):
    spec, params = load_spec(args.spec)
    gens = build_module(spec)
    pair = phi_images(spec.q, gens, params)
    _emit({"module": generator_set_to_json(gens), "pair": pair_to_json(pair)},
          args.out)
    return 0


def cmd_analyze(args):
    spec, params = load_spec(args.spec)
    report = analysis.analysis_report(spec, params)
    _emit(report, args.out)
    return 0 if report["irreducible"] else 1


def _parse_omega(text):
    values = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        value = parse_rational(piece)
        if value == 0:
            raise SpecError("invalid field 'omega': entries must be nonzero")
        values.append(value)
    if not values:
        raise SpecError("invalid field 'omega': no entries")
    return values


def cmd_qstrings(args):
    q = DeformationParameter(parse_rational(args.q))
    omega = _parse_omega(args.omega)
    if args.inverse_closed:
        strings = qstrings.decompose_inverse_closed(q, omega)
        doc = {
            "strings": qstrings.multiset_to_json(strings),
            "strongly_general_position":
                qstrings.strongly_in_general_position(q, strings),
        }
    else:
        strings = qstrings.decompose(q, omega)
        doc = {
            "strings": qstrings.multiset_to_json(strings),
            "general_position": qstrings.in_general_position(q, strings),
        }
    _emit(doc, args.out)
    return 0


def cmd_isomorphic(args):
    spec_a, params_a = load_spec(args.spec_a)
    spec_b, params_b = load_spec(args.spec_b)
    for label, spec, params in (("a", spec_a, params_a), ("b", spec_b, params_b)):
        if not analysis.theorem_criteria(spec, params).irreducible:
            raise SpecError("spec %s is not irreducible; the isomorphism "
                            "criteria require irreducibility" % label)
    by_criteria = analysis.theorem_iso_criteria(spec_a, params_a, spec_b, params_b)
    pair_a = analysis.build_pair(spec_a, params_a)
    pair_b = analysis.build_pair(spec_b, params_b)
    if pair_a.dim == pair_b.dim:
        dim = analysis.intertwiner_dimension(pair_a, pair_b)
    else:
        dim = 0
    by_oracle = dim == 1
    doc = {
        "criteria_isomorphic": by_criteria,
        "intertwiner_dimension": dim,
        "oracle_isomorphic": by_oracle,
        "agree": by_criteria == by_oracle,
    }
    _emit(doc, args.out)
    return 0 if by_criteria else 1


def cmd_sweep(args):
    try:
        with open(args.spec, "r", encoding="utf-8") as fh:
            payloads = json.load(fh)
    except OSError as exc:
        raise SpecError("cannot read sweep file: %s" % exc)
    except json.JSONDecodeError as exc:
        raise SpecError("sweep file is not valid JSON: %s" % exc)
    if not isinstance(payloads, list):
        raise SpecError("sweep file must hold a JSON array of specs")
    lines = []
    for payload in payloads:
        spec, params = parse_spec(payload)
        lines.append(json.dumps(analysis.analysis_report(spec, params)))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def make_parser():
    parser = argparse.ArgumentParser(
        prog="qonsager",
        description="Exact construction and analysis of q-Onsager pairs "
                    "on loop-algebra evaluation modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit module matrices and the (Z, Z*) pair")
    p.add_argument("--spec", required=True, help="spec JSON path")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="criteria, oracles, split decomposition")
    p.add_argument("--spec", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("qstrings", help="decompose a scalar multiset into q-strings")
    p.add_argument("--q", required=True, help="deformation parameter, |q| > 1")
    p.add_argument("--omega", required=True, help="comma-separated rationals")
    p.add_argument("--inverse-closed", action="store_true",
                   help="use the paired S u S^-1 decomposition")
    p.add_argument("--out")
    p.set_defaults(func=cmd_qstrings)

    p = sub.add_parser("isomorphic", help="compare two irreducible configurations")
    p.add_argument("spec_a")
    p.add_argument("spec_b")
    p.add_argument("--out")
    p.set_defaults(func=cmd_isomorphic)

    p = sub.add_parser("sweep", help="analyze a JSON array of specs, one JSON line each")
    p.add_argument("--spec", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
