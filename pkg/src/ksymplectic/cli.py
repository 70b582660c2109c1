"""Batch command line: ``ksymp VERB [options]``, JSON on stdout.

Exit status 0 on success (including an ``"unknown"`` verdict), 1 on domain
errors and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .darboux import darboux_map, find_polarization, graph_check, is_ksymplectomorphism
from .errors import KSymplecticError, NotPolarized, SchemaError
from .forms import (
    Poly,
    PolySection,
    compose_hamiltonian,
    d1,
    hamilton_jacobi_check,
    hamilton_jacobi_check_section,
    is_closed_section,
    pullback_omega,
    section_from_potentials,
)
from .kspace import fixture, random_kspace, space_from_json
from .linalg import RationalMatrix, Subspace
from .propsuite import run_suite
from .subspaces import classify, isotropic_complement, l_orthogonal, lagrangian_completion


class _SpaceSource(argparse.Action):
    def __call__(self, parser, namespace, value, option_string=None):
        kind = "fixture" if option_string == "--fixture" else "file"
        sources = list(getattr(namespace, self.dest) or [])
        sources.append((kind, value))
        setattr(namespace, self.dest, sources)


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc


def _load_space(source):
    kind, value = source
    if kind == "fixture":
        return fixture(value)
    return space_from_json(_read_json(value))


def _spaces(args, count=1):
    sources = args.spaces or []
    if not sources:
        raise SchemaError("a space is required (--space FILE or --fixture NAME)")
    spaces = [_load_space(src) for src in sources[:count]]
    while len(spaces) < count:
        spaces.append(spaces[-1])
    return spaces


def _subspace(args, s, required=True):
    if args.subspace is None:
        if required:
            raise SchemaError("--subspace is required")
        return None
    w = Subspace.from_json(_read_json(args.subspace))
    if w.ambient_dim != s.dim:
        raise SchemaError(f"subspace ambient {w.ambient_dim} does not match space dimension {s.dim}")
    return w


def _level(args, s):
    if args.level is None:
        raise SchemaError("--level is required")
    return args.level


def _map(args):
    if args.map is None:
        raise SchemaError("--map is required")
    return RationalMatrix.from_json(_read_json(args.map))


def cmd_validate(args):
    s = _spaces(args)[0]
    return {"valid": True, "n": s.n, "k": s.k}


def cmd_kernel(args):
    s = _spaces(args)[0]
    return {
        "kernels": [s.kernel(r).to_json() for r in range(1, s.k + 1)],
        "common": s.common_kernel().to_json(),
    }


def cmd_orth(args):
    s = _spaces(args)[0]
    w, l = _subspace(args, s), _level(args, s)
    return {"level": l, "complement": l_orthogonal(s, w, l).to_json()}


def cmd_classify(args):
    s = _spaces(args)[0]
    doc = classify(s, _subspace(args, s), _level(args, s)).to_json()
    doc["result"] = doc["lagrangian"]
    return doc


def cmd_complete(args):
    s = _spaces(args)[0]
    w = lagrangian_completion(s, _subspace(args, s), _level(args, s))
    return {"completion": w.to_json()}


def cmd_complement(args):
    s = _spaces(args)[0]
    return {"complement": isotropic_complement(s, _subspace(args, s), _level(args, s)).to_json()}


def cmd_polarize(args):
    s = _spaces(args)[0]
    w = find_polarization(s, args.seed)
    if w is None:
        return {"result": "unknown", "polarization": None}
    return {"result": "found", "polarization": w.to_json()}


def cmd_darboux(args):
    s = _spaces(args)[0]
    w = _subspace(args, s, required=False)
    if w is None:
        w = find_polarization(s, args.seed)
        if w is None:
            raise NotPolarized("no polarization found; pass one with --subspace")
    v0 = None
    if args.complement is not None:
        v0 = Subspace.from_json(_read_json(args.complement))
    return darboux_map(s, w, v0).to_json()


def cmd_symplecto(args):
    s1, s2 = _spaces(args, 2)
    return {"symplectomorphism": is_ksymplectomorphism(s1, s2, _map(args))}


def cmd_graph_check(args):
    s1, s2 = _spaces(args, 2)
    res = graph_check(s1, s2, _map(args))
    doc = {
        "symplectomorphism": res.symplectomorphism,
        "graph_lagrangian": res.lagrangian.verdict.value,
        "agree": res.agree,
    }
    if res.lagrangian.witness is not None:
        doc["witness"] = res.lagrangian.witness.to_json()
    return doc


def _two_form_json(c):
    return [{"i": i, "j": j, "coef": p.to_json()} for (i, j), p in sorted(c.items()) if not p.is_zero()]


def _section(args):
    if args.section is None:
        raise SchemaError("--section is required")
    return PolySection.from_json(_read_json(args.section))


def cmd_closed(args):
    gamma = _section(args)
    return {
        "closed": is_closed_section(gamma),
        "d": [_two_form_json(d1(g)) for g in gamma.forms],
        "pullbacks": [_two_form_json(pullback_omega(gamma, r)) for r in range(1, gamma.k + 1)],
    }


def cmd_hj(args):
    if args.hamiltonian is None:
        raise SchemaError("--hamiltonian is required")
    h = Poly.from_json(_read_json(args.hamiltonian))
    if args.potentials is not None:
        doc = _read_json(args.potentials)
        if not isinstance(doc, list) or not doc:
            raise SchemaError("potentials must be a non-empty array of polynomials")
        w = [Poly.from_json(p) for p in doc]
        ok = hamilton_jacobi_check(h, w)
        gamma = section_from_potentials(w)
    elif args.section is not None:
        gamma = _section(args)
        ok = hamilton_jacobi_check_section(h, gamma)
    else:
        raise SchemaError("--potentials or --section is required")
    return {"solution": ok, "composed": compose_hamiltonian(h, gamma).to_json()}


def cmd_gen(args):
    if args.n is None or args.k is None:
        raise SchemaError("--n and --k are required")
    if args.n < 1 or args.k < 1:
        raise SchemaError("--n and --k must be positive")
    s, p = random_kspace(args.n, args.k, args.seed)
    return {"space": s.to_json(), "witness": p.to_json()}


def cmd_prop_suite(args):
    if args.trials < 0 or args.n_max < 1 or args.k_max < 1:
        raise SchemaError("--trials must be >= 0, --n-max and --k-max >= 1")
    return run_suite(args.seed, args.trials, args.n_max, args.k_max).to_json()


COMMANDS = {
    "validate": cmd_validate,
    "kernel": cmd_kernel,
    "orth": cmd_orth,
    "classify": cmd_classify,
    "complete": cmd_complete,
    "complement": cmd_complement,
    "polarize": cmd_polarize,
    "darboux": cmd_darboux,
    "symplecto": cmd_symplecto,
    "graph-check": cmd_graph_check,
    "closed": cmd_closed,
    "hj": cmd_hj,
    "gen": cmd_gen,
    "prop-suite": cmd_prop_suite,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ksymp", description=__doc__.splitlines()[0])
    parser.add_argument("verb", choices=sorted(COMMANDS))
    parser.add_argument("--space", dest="spaces", action=_SpaceSource, metavar="FILE",
                        help="space JSON file (repeat for source and target)")
    parser.add_argument("--fixture", dest="spaces", action=_SpaceSource, metavar="NAME",
                        help="r3-2symp, r6-2symp, r6-5symp or canonical:n,k")
    parser.add_argument("--subspace", metavar="FILE")
    parser.add_argument("--complement", metavar="FILE", help="complement for darboux")
    parser.add_argument("--level", type=int)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--n-max", type=int, default=3)
    parser.add_argument("--k-max", type=int, default=3)
    parser.add_argument("--n", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--map", metavar="FILE")
    parser.add_argument("--section", metavar="FILE")
    parser.add_argument("--hamiltonian", metavar="FILE")
    parser.add_argument("--potentials", metavar="FILE")
    return parser


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    status = 0
    try:
        doc = COMMANDS[args.verb](args)
        if args.verb == "prop-suite" and not doc["ok"]:
            status = 1
    except SchemaError as exc:
        doc, status = {"error": "SchemaError", "message": str(exc)}, 2
    except KSymplecticError as exc:
        doc, status = exc.to_json(), 1
    out.write(dumps(doc) + "\n")
    return status


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
