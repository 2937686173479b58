"""Command-line entry point.

Exit status: 0 on success, 1 when a computation cannot certify its answer
(or ``verify`` finds a failing check), 2 on unreadable input, 3 when
certified data contradicts a structural invariant.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .algebra import InfiniteDimensional, MonomialAlgebra, opposite
from .formats import ParseError, format_algebra, format_module, parse_algebra_file, parse_module_file
from .rep import DEFAULT_SEED, Representation, dual, strip_projective_summands
from .resolution import Resolution, complexity_estimate, ext_dim
from .sg import (
    InvariantViolation,
    UncertifiedInput,
    default_ext_horizon,
    is_n_sg_flat,
    is_n_sg_injective,
    is_n_sg_projective,
    sg_projective_period_set,
    verify_theorem_suite,
)

SEED_ENV = "GORENSTEIN_SEED"

_ALGEBRA_WORDS = {"field", "vertices", "arrow", "relation", "nakayama"}
_MODULE_WORDS = {"module", "dim", "map", "simple", "proj", "inj"}


class UsageError(Exception):
    """Bad request; reported with exit status 2."""


def _inline_text(tokens: list[str], keywords: set[str]) -> str:
    """Turn ``simple 1 proj 2`` into one directive per line."""
    lines: list[list[str]] = []
    for tok in tokens:
        if tok in keywords or not lines:
            lines.append([tok])
        else:
            lines[-1].append(tok)
    return "\n".join(" ".join(l) for l in lines)


def _read_source(spec: str, keywords: set[str]) -> str:
    path = Path(spec)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    tokens = spec.replace(":", " ").split()
    if not tokens or tokens[0] not in keywords:
        raise UsageError(f"{spec!r} is neither a readable file nor an inline description")
    return _inline_text(tokens, keywords)


def _load_algebra(args) -> MonomialAlgebra:
    if not args.algebra:
        raise UsageError("--algebra is required")
    return parse_algebra_file(_read_source(args.algebra, _ALGEBRA_WORDS), prime=args.prime)


def _load_modules(args, A: MonomialAlgebra) -> list[Representation]:
    specs = list(args.module or [])
    if args.tokens:
        specs.append(" ".join(args.tokens))
    if not specs:
        raise UsageError("no module given (use --module or builtin tokens such as 'simple 1')")
    return [parse_module_file(_read_source(s, _MODULE_WORDS), A) for s in specs]


def _resolve_seed(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(SEED_ENV)
    if env is None or env.strip() == "":
        return DEFAULT_SEED
    try:
        return int(env, 0)
    except ValueError:
        raise UsageError(f"{SEED_ENV}={env!r} is not an integer") from None


def _label(M: Representation) -> str:
    return M.name or "M"


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [headers] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(headers))]
    out = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    out.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(out)


def _terms(vertices) -> str:
    return " + ".join(f"P{v}" for v in vertices) or "0"


# --- commands: each returns (payload, table text, exit status) --------------------


def cmd_resolve(args, A, seed):
    M = _load_modules(args, A)[0]
    horizon = args.horizon or 3 * A.dimension
    res = Resolution(M, horizon)
    rows, terms = [], []
    for k in range(horizon):
        vs = res.term_vertices(k)
        omega = res.syzygy(k + 1)
        terms.append({"degree": k, "term": list(vs), "term_dim": res.term(k).module.total_dim,
                      "syzygy_dims": list(omega.dims)})
        rows.append([k, _terms(vs), res.term(k).module.total_dim, " ".join(map(str, omega.dims))])
    payload = {"module": _label(M), "horizon": horizon, "terms": terms,
               "dims_sequence": res.dims_sequence(horizon), "projective_dimension": res.projective_dimension}
    text = _table(["degree", "term", "dim", "next syzygy dims"], rows)
    if res.finished:
        text += f"\nprojective dimension {res.projective_dimension}"
    return payload, text, 0


def cmd_ext(args, A, seed):
    mods = _load_modules(args, A)
    if len(mods) > 2:
        raise UsageError("ext takes at most two modules")
    M, N = mods[0], mods[-1]
    lo = args.degree_from
    hi = args.degree_to if args.degree_to is not None else default_ext_horizon(A)
    if lo < 1 or hi < lo:
        raise UsageError(f"need 1 <= degree-from <= degree-to, got {lo}..{hi}")
    res = Resolution(M)
    dims = {i: ext_dim(M, N, i, resolution=res) for i in range(lo, hi + 1)}
    payload = {"source": _label(M), "target": _label(N), "ext_dims": {str(i): d for i, d in dims.items()}}
    text = _table(["degree", f"dim Ext^i({_label(M)}, {_label(N)})"], [[i, d] for i, d in dims.items()])
    return payload, text, 0


_DETECTORS = {"projective": is_n_sg_projective, "injective": is_n_sg_injective, "flat": is_n_sg_flat}


def cmd_sg(args, A, seed):
    if args.n is None or args.n < 1:
        raise UsageError("sg needs --n >= 1")
    M = _load_modules(args, A)[0]
    verdict = _DETECTORS[args.kind](M, args.n, seed=seed, ext_horizon=args.horizon)
    payload = {"module": _label(M), **verdict.to_dict()}
    rows = [["module", _label(M)], ["kind", verdict.kind.value], ["n", verdict.n],
            ["outcome", verdict.outcome.value], ["witness", "yes" if verdict.witness is not None else "no"]]
    if verdict.failed_degree is not None:
        rows.append(["failed degree", verdict.failed_degree])
    rows += [["assumption", a] for a in verdict.assumptions]
    status = 0 if verdict.certified else 1
    return payload, _table(["field", "value"], rows), status


def cmd_period_set(args, A, seed):
    M = _load_modules(args, A)[0]
    horizon = args.horizon or A.dimension
    ps = sg_projective_period_set(M, horizon, seed=seed)
    payload = {"module": _label(M), **ps.to_dict()}
    rows = [[n, v.outcome.value] for n, v in sorted(ps.verdicts.items())]
    members = "{" + ", ".join(map(str, ps.members)) + "}"
    text = f"period set of {_label(M)} up to {horizon}: {members}\n" + _table(["n", "outcome"], rows)
    return payload, text, 0 if ps.all_certified else 1


def cmd_strip(args, A, seed):
    M = _load_modules(args, A)[0]
    s = strip_projective_summands(M)
    payload = {"module": _label(M), "stable_dims": list(s.stable_part.dims),
               "projective_summands": list(s.projective_vertices),
               "stable_module": format_module(s.stable_part)}
    rows = [["stable part dims", " ".join(map(str, s.stable_part.dims))],
            ["projective summands", _terms(s.projective_vertices)]]
    return payload, _table(["part", "value"], rows) + "\n\n" + format_module(s.stable_part).rstrip(), 0


def cmd_dual(args, A, seed):
    D = dual(_load_modules(args, A)[0])
    module_text, algebra_text = format_module(D), format_algebra(opposite(A))
    if args.output:
        Path(args.output).write_text(module_text, encoding="utf-8")
    if args.algebra_output:
        Path(args.algebra_output).write_text(algebra_text, encoding="utf-8")
    payload = {"module": module_text, "algebra": algebra_text}
    text = "# opposite algebra\n" + algebra_text + "\n# dual module\n" + module_text.rstrip()
    return payload, text, 0


def cmd_complexity(args, A, seed):
    M = _load_modules(args, A)[0]
    horizon = args.horizon or 3 * A.dimension
    if horizon < 4:
        raise UsageError("complexity needs --horizon >= 4")
    est = complexity_estimate(M, horizon, seed=seed)
    payload = {"module": _label(M), "horizon": horizon, **est.to_dict()}
    rows = [["classification", est.classification], ["certified", est.certified],
            ["period", est.period if est.period is not None else "-"],
            ["exponent", est.exponent if est.exponent is not None else "-"],
            ["dims", " ".join(map(str, est.dims_sequence))]]
    return payload, _table(["field", "value"], rows), 0


def cmd_verify(args, A, seed):
    horizon = args.horizon or A.dimension
    report = verify_theorem_suite(A, horizon, seed=seed)
    rows = [[c.name, c.status, c.checked] for c in report.checks]
    text = _table(["check", "status", "cases"], rows)
    details = [f"{c.name}: {d}" for c in report.checks if c.status == "fail" for d in c.details]
    if details:
        text += "\n" + "\n".join(details)
    return report.to_dict(), text, 0 if report.passed else 1


COMMANDS = {
    "resolve": (cmd_resolve, "minimal projective resolution"),
    "ext": (cmd_ext, "Ext dimensions over a degree range"),
    "sg": (cmd_sg, "decide n-strong Gorenstein projectivity, injectivity or flatness"),
    "period-set": (cmd_period_set, "all n up to the horizon for which the module is n-SG-projective"),
    "strip": (cmd_strip, "split off projective direct summands"),
    "dual": (cmd_dual, "k-linear dual over the opposite algebra"),
    "complexity": (cmd_complexity, "growth of the minimal resolution"),
    "verify": (cmd_verify, "run the structural checks on the algebra"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", help="algebra file, or inline text such as 'nakayama cyclic 3'")
    common.add_argument("--module", action="append",
                        help="module file or builtin such as 'simple 1'; repeat for ext's second argument")
    common.add_argument("--n", type=int)
    common.add_argument("--degree-from", type=int, default=1)
    common.add_argument("--degree-to", type=int)
    common.add_argument("--horizon", type=int)
    common.add_argument("--prime", type=int, help="override the field of the algebra file")
    common.add_argument("--seed", type=lambda s: int(s, 0), help=f"RNG seed (beats ${SEED_ENV})")
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("tokens", nargs="*", help="builtin module tokens, e.g. simple 1")

    parser = argparse.ArgumentParser(prog="gorenstein", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name == "sg":
            p.add_argument("--kind", choices=tuple(_DETECTORS), default="projective")
        if name == "dual":
            p.add_argument("--output", help="write the dual module file here")
            p.add_argument("--algebra-output", help="write the opposite algebra file here")
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        seed = _resolve_seed(args.seed)
        A = _load_algebra(args)
        payload, text, status = handler(args, A, seed)
    except (ParseError, UsageError, InfiniteDimensional, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    except (UncertifiedInput, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    label = A.name or f"{A.vertex_count}-vertex algebra"
    if args.format == "json":
        doc = {"command": args.command, "seed": seed, "algebra": label, "prime": A.p, "result": payload}
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        out.write(f"# {args.command}  algebra {label} over GF({A.p})  seed {seed:#x}\n{text}\n")
    return status


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
