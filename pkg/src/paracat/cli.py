"""Command line: ``build``, ``check``, ``export`` and ``validate``.

Exit codes: 0 success, 1 a check failed, 2 parse error, 3 validation error,
4 size budget exceeded.  Results go to ``--out`` (or stdout); a summary line
per check and any witnesses go to stderr.
"""

import argparse
import sys
from importlib import resources

from . import schema
from .checks import CHECKS, run_checks
from .dot import export_dot
from .errors import BoundTooSmall, ParacatError, ParseError, SizeBudgetExceeded, ValidationError
from .fibration import TCat
from .fincat import FinCat
from .fincat.diagrams import SetDiagram

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3, 4

BUILD_TARGETS = ("orbit-cat", "vop", "dual", "fun-tilde", "underline-objects", "fun-underline",
                 "rke", "presheaf-tcat", "discrete-tspace", "galois-vect")


def bundled(name):
    """Path of a bundled fixture file."""
    return str(resources.files("paracat") / "data" / name)


DEFAULT_INPUT = {
    "orbit-cat": "group_c2.json",
    "vop": "tcat_const_1.json",
    "dual": "functor_source_projection.json",
    "fun-tilde": "manifest_fun_tilde.json",
    "underline-objects": "manifest_underline_objects.json",
    "fun-underline": "manifest_fun_underline.json",
    "rke": "manifest_rke.json",
    "presheaf-tcat": "manifest_presheaf_tcat.json",
    "discrete-tspace": "tset_c2e_c2c2.json",
    "galois-vect": "galois_2_2_1.json",
}


class Inputs:
    """A loaded input file: either one document or a manifest of named documents."""

    def __init__(self, path):
        doc = schema.read(path)
        self.manifest = None
        if doc.get("kind") == "manifest":
            self.manifest = schema.Manifest(doc)
            self.values = self.manifest.inputs()
            self.params = dict(self.manifest.params)
            self.budget = self.manifest.budget
        else:
            self.values = {"input": schema.load(doc)}
            self.params = {}
            self.budget = None

    def get(self, name, kind=None):
        if name in self.values:
            return self.values[name]
        if kind is not None:
            hits = [v for v in self.values.values() if isinstance(v, kind)]
            if len(hits) == 1:
                return hits[0]
        if len(self.values) == 1:
            return next(iter(self.values.values()))
        raise ValidationError(f"input {name!r} not found")


def build(target, inp, budget, card_bound):
    from .fincat import Functor, FinCat
    from .orbits import FinGroup, FinTSet, GaloisConfig, discrete_T_space, galois_vect, orbit_category
    from .paramcat.sections import fun_underline, right_kan_extend
    from .paramcat.tilde import fun_tilde, underline_objects
    from .paramcat.vop import dualize, vop
    from .paramcat.yoneda import presheaf_tcat

    if target == "orbit-cat":
        return orbit_category(inp.get("G", FinGroup))
    if target == "vop":
        return vop(inp.get("C", TCat))
    if target == "dual":
        return dualize(inp.get("q", Functor))
    if target == "fun-tilde":
        return fun_tilde(inp.get("X"), inp.get("Y"), budget=budget)
    if target == "underline-objects":
        return underline_objects(inp.get("D"), inp.get("T"), budget=budget)
    if target == "fun-underline":
        return fun_underline(inp.get("C"), inp.get("D"), budget=budget)
    if target == "rke":
        return right_kan_extend(inp.get("i"), inp.get("D"), budget=budget)
    if target == "presheaf-tcat":
        n = card_bound if card_bound is not None else inp.params.get("card_bound", 3)
        return presheaf_tcat(inp.get("C", TCat), n=n, budget=budget)
    if target == "discrete-tspace":
        U = inp.get("U", FinTSet)
        return discrete_T_space(U.cat, U)
    if target == "galois-vect":
        return galois_vect(inp.get("cfg", GaloisConfig))
    raise ValidationError(f"unknown build target {target!r}")


def _check_params(inp, args):
    params = dict(inp.params) if inp else {}
    if args.budget is not None:
        params["budget"] = args.budget
    elif inp and inp.budget is not None:
        params["budget"] = inp.budget
    if args.card_bound is not None:
        params["card_bound"] = args.card_bound
    if inp:
        tcats = {n: v for n, v in inp.values.items() if isinstance(v, TCat)}
        pre = {n: v for n, v in inp.values.items() if isinstance(v, SetDiagram)}
        if tcats:
            params["tcats"] = tcats
        if pre:
            params["presheaves"] = pre
    return params


def _write(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args):
    inp = Inputs(args.input or bundled(DEFAULT_INPUT[args.target]))
    budget = args.budget if args.budget is not None else inp.budget
    value = build(args.target, inp, budget, args.card_bound)
    _write(schema.dump(value, budget=budget), args.out)
    return EXIT_OK


def cmd_check(args):
    ids = sorted(CHECKS) if args.check == "all" else [args.check]
    if args.check != "all" and args.check not in CHECKS:
        raise ValidationError(f"unknown check {args.check!r}; known: {', '.join(sorted(CHECKS))}")
    inp = Inputs(args.input) if args.input else None
    results = run_checks(ids, **_check_params(inp, args))
    doc = {"schema_version": schema.SCHEMA_VERSION, "kind": "check-results",
           "results": [r.to_dict(timings=args.timings) for r in results]}
    _write(schema.dumps(doc), args.out)
    for r in results:
        verdict = "PASS" if r.passed else "FAIL"
        print(f"{r.check:9s} {verdict} {len(r.sizes)} instances {r.wall_time:.2f}s", file=sys.stderr)
        for w in r.witnesses:
            print(f"  witness: {w}", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_export(args):
    inp = Inputs(args.input)
    if args.format == "structured":
        if inp.manifest is not None and args.name is None:
            docs = {n: schema.to_dict(v, base=getattr(v, "base", None))
                    for n, v in inp.values.items()}
            text = schema.dumps({"schema_version": schema.SCHEMA_VERSION, "kind": "manifest",
                                 "inputs": docs})
        else:
            v = inp.get(args.name or "input")
            text = schema.dump(v, base=getattr(v, "base", None))
    else:
        v = inp.get(args.name or "input")
        if not isinstance(v, (FinCat, TCat)):
            raise ValidationError("dot export takes a category or a TCat")
        text = export_dot(v, suppress_identities=args.suppress_identities)
    _write(text, args.out)
    return EXIT_OK


def cmd_validate(args):
    inp = Inputs(args.input)
    for n, v in sorted(inp.values.items()):
        if hasattr(v, "validate"):
            v.validate()
        print(f"ok {n}: {type(v).__name__} {getattr(v, 'name', '')}".rstrip(), file=sys.stderr)
    return EXIT_OK


def parser():
    p = argparse.ArgumentParser(prog="paracat",
                                description="Exact parametrized category theory on finite instances.")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(q):
        q.add_argument("--budget", type=int, help="enumeration budget (candidate assignments)")
        q.add_argument("--card-bound", type=int, help="cardinality bound n for presheaf values")
        q.add_argument("--out", help="output path (default stdout)")

    b = sub.add_parser("build", help="construct an object and print its JSON")
    b.add_argument("target", choices=BUILD_TARGETS)
    b.add_argument("input", nargs="?", help="input document or manifest (default: bundled)")
    common(b)
    b.set_defaults(fn=cmd_build)

    c = sub.add_parser("check", help="run a theorem check ('all' for every one)")
    c.add_argument("check", help=f"one of {', '.join(sorted(CHECKS))} or all")
    c.add_argument("input", nargs="?", help="manifest with instances and parameters")
    c.add_argument("--timings", action="store_true", help="include wall times in the output")
    common(c)
    c.set_defaults(fn=cmd_check)

    e = sub.add_parser("export", help="re-export a document as canonical JSON or DOT")
    e.add_argument("format", choices=("structured", "dot"))
    e.add_argument("input")
    e.add_argument("--name", help="which input of a manifest to export")
    e.add_argument("--suppress-identities", action="store_true")
    common(e)
    e.set_defaults(fn=cmd_export)

    v = sub.add_parser("validate", help="parse and validate a document")
    v.add_argument("input")
    common(v)
    v.set_defaults(fn=cmd_validate)
    return p


def main(argv=None):
    args = parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (SizeBudgetExceeded, BoundTooSmall) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValidationError, ParacatError) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        witness = getattr(exc, "witness", None) or getattr(exc, "triple", None)
        if witness is not None:
            print(f"  witness: {witness}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
