"""Command-line entry point ``pck``.

Exit codes: 0 analysis complete, 1 invalid input, 2 preconditions unmet.
An algebra argument is a JSON file path or ``corpus:NAME`` for a built-in.
"""

from __future__ import annotations

import argparse
import sys

from .connections import AsymmetricSupportError, compute_supports
from .errors import InputError, PreconditionError
from .workbench import corpus
from .workbench.fileformat import dump_algebra, load_algebra, parse_algebra_unchecked
from .workbench import report as rep

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2


def _load(source: str, threads: int, check: bool = True):
    if source.startswith("corpus:"):
        name = source.split(":", 1)[1]
        try:
            return corpus.corpus_member(name)
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    try:
        if check:
            return load_algebra(source, threads)
        with open(source, encoding="utf-8") as fh:
            return parse_algebra_unchecked(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise InputError(f"{source} is not UTF-8 text") from None


def cmd_validate(args) -> tuple[dict, int]:
    A = _load(args.algebra, args.threads, check=False)
    out = rep.header(A)
    section, _ = rep.axioms_section(A, args.threads)
    out.update(section)
    return out, EXIT_OK if out["axioms"]["valid"] else EXIT_INPUT


def cmd_support(args):
    A = _load(args.algebra, args.threads)
    out = rep.header(A)
    out.update(rep.support_section(A))
    return out, EXIT_OK


def cmd_classes(args):
    A = _load(args.algebra, args.threads)
    S = compute_supports(A)
    out = rep.header(A)
    out.update(rep.support_section(A, S))
    if not out["symmetric_support"]:
        return out, EXIT_PRECONDITION
    out.update(rep.classes_section(A, S)[0])
    if args.witness:
        try:
            src, dst = (A.lambda_spec.parse_mult(t) for t in args.witness)
            out["witness"] = rep.witness_entry(A, S, src, dst)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    return out, EXIT_OK


def cmd_decompose(args):
    A = _load(args.algebra, args.threads)
    out = rep.analyze(A, seed=args.seed, threads=args.threads)
    return out, EXIT_OK if out.get("symmetric_support") else EXIT_PRECONDITION


def cmd_simplicity(args):
    A = _load(args.algebra, args.threads)
    out = rep.header(A)
    out.update(rep.simplicity_section(A, args.seed))
    return out, EXIT_OK


def cmd_center(args):
    A = _load(args.algebra, args.threads)
    out = rep.header(A)
    out.update(rep.center_section(A))
    return out, EXIT_OK


def cmd_corpus(args):
    if args.emit:
        try:
            A = corpus.corpus_member(args.emit)
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
        return dump_algebra(A), EXIT_OK
    return {"corpus": list(corpus.CORPUS_NAMES)}, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker threads for axiom checks")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampled oracle probes")
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="pck", description="Graded Poisson color algebra workbench", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check the bi-character and every defining identity").add_argument("algebra")
    add("support", cmd_support, "Lambda- and G-supports").add_argument("algebra")
    sp = add("classes", cmd_classes, "connection classes with witness chains")
    sp.add_argument("algebra")
    sp.add_argument("--witness", nargs=2, metavar=("LAMBDA", "MU"))
    add("decompose", cmd_decompose, "full analysis: classes, ideals, decomposition").add_argument("algebra")
    add("simplicity", cmd_simplicity, "graded simplicity by criterion and oracle").add_argument("algebra")
    add("center", cmd_center, "center of the algebra").add_argument("algebra")
    sp = add("corpus", cmd_corpus, "built-in example algebras")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--emit", metavar="NAME")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.threads = max(1, getattr(args, "threads", 1))
    args.seed = getattr(args, "seed", 0)
    fmt = getattr(args, "format", "json")
    try:
        out, code = args.func(args)
    except (AsymmetricSupportError, PreconditionError) as exc:
        print(f"pck: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InputError as exc:
        print(f"pck: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(out if isinstance(out, str) else rep.emit_report(out, fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
