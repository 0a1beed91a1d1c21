"""Command-line interface: ``sufread <command> ...``.

Each command loads its inputs, calls one library operation and prints the
result.  Exit status is 0 on success, 1 on a domain error (or a negative
answer from ``equiv``), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from .core import AutomatonError, Dfa, Dsa, chars, show, size_metrics, tokens, validate
from .derivation import (NotSuffixTrackingError, derive, derive_smallest,
                         enumerate_suffix_tracking_sets, induced_dsa, is_suffix_tracking, state_set)
from .dfa_ops import complete, language_equiv, minimize
from .generators import random_dfa, random_dsa
from .hardness import Graph, build_vc_dfa, default_theta, reduction_k
from .semantics import dfa_run, dsa_run
from .strong import brute_force_min_dsa, minimize_strong
from .textio import Document, load, serialize, to_dot
from .tracking import tracking_dfa


class CliError(Exception):
    pass


def _doc(path: str, *kinds: str) -> Document:
    doc = load(path)
    if kinds and doc.kind not in kinds:
        raise CliError(f"{path}: expected {' or '.join(kinds)}, got {doc.kind}")
    return doc


def _as_dfa(doc: Document) -> Dfa:
    """DFAs pass through; DSAs are replaced by their tracking DFA."""
    if isinstance(doc.payload, Dsa):
        return tracking_dfa(doc.payload).dfa
    return doc.payload


def _emit(args, payload, header: Sequence[str] = ()) -> None:
    if args.format == "dot":
        text = to_dot(payload)
    else:
        text = serialize(payload)
    for line in header:
        print(f"# {line}")
    sys.stdout.write(text)


def _names(m: Dfa, S) -> str:
    return "{" + ", ".join(m.names[q] for q in sorted(S)) + "}"


# ------------------------------------------------------------------ commands

def cmd_validate(args) -> int:
    doc = load(args.file)
    problems = doc.payload.problems() if isinstance(doc.payload, Graph) else validate(doc.payload)
    if problems:
        raise CliError("; ".join(problems))
    print(f"ok: {doc.kind}")
    return 0


def cmd_run(args) -> int:
    doc = _doc(args.file, "dfa", "dsa")
    word = chars("".join(args.word)) if args.chars else tokens(" ".join(args.word))
    a = doc.payload
    if isinstance(a, Dsa):
        run = dsa_run(a, word)
        print("\n".join(run.describe(a)))
        return 0
    q = dfa_run(a, word)
    print(f"final state: {'undefined' if q is None else a.names[q]}")
    print("accept" if q in a.accepting else "reject")
    return 0


def cmd_size(args) -> int:
    print(size_metrics(_doc(args.file, "dfa", "dsa").payload))
    return 0


def cmd_to_dfa(args) -> int:
    a = _doc(args.file, "dsa").payload
    _emit(args, tracking_dfa(a).dfa)
    return 0


def cmd_complete(args) -> int:
    _emit(args, complete(_doc(args.file, "dfa").payload))
    return 0


def cmd_minimize(args) -> int:
    m, _ = minimize(complete(_as_dfa(_doc(args.file, "dfa", "dsa"))))
    _emit(args, m)
    return 0


def cmd_equiv(args) -> int:
    x = _doc(args.file1, "dfa", "dsa").payload
    y = _doc(args.file2, "dfa", "dsa").payload
    res = language_equiv(x, y)
    if res.equivalent:
        print("equivalent")
        return 0
    print(f"not equivalent; counterexample: {show(res.counterexample)}")
    return 1


def cmd_sts(args) -> int:
    m = complete(_doc(args.file, "dfa").payload)
    count = 0
    for S in enumerate_suffix_tracking_sets(m, max_card=args.max_card, cap=args.cap):
        count += 1
        total = size_metrics(derive(m, S, args.cap)).total
        print(f"{_names(m, S)}  derived total={total}")
    print(f"{count} suffix-tracking set(s)")
    return 0


def cmd_derive(args) -> int:
    m = complete(_doc(args.file, "dfa").payload)
    S = state_set(m, [s.strip() for s in args.states.split(",") if s.strip()])
    if args.force:
        report = is_suffix_tracking(m, S, args.cap)
        _emit(args, induced_dsa(m, S, args.cap, force=True),
              [] if report else ["forced: " + line for line in report.describe(m)[1:]])
        return 0
    try:
        d = derive(m, S, args.cap)
    except NotSuffixTrackingError as err:
        raise CliError("; ".join(err.report.describe(m))) from None
    _emit(args, d)
    return 0


def cmd_derive_smallest(args) -> int:
    m = complete(_doc(args.file, "dfa").payload)
    res = derive_smallest(m, args.cap)
    _emit(args, res.dsa, [f"kept states: {_names(m, res.states)}",
                          f"size: {size_metrics(res.dsa)}"])
    return 0


def cmd_minimize_strong(args) -> int:
    res = minimize_strong(_as_dfa(_doc(args.file, "dfa", "dsa")), cap=args.cap)
    _emit(args, res.dsa, [f"kept states of the canonical DFA: {_names(res.canonical, res.states)}",
                          f"size: {size_metrics(res.dsa)}"])
    return 0


def cmd_brute_min(args) -> int:
    m = _as_dfa(_doc(args.file, "dfa", "dsa"))
    cert = brute_force_min_dsa(m, args.max_total, strong_only=args.strong, all_minima=args.all)
    if cert.automaton is None:
        print(f"no equivalent {'strong ' if args.strong else ''}DSA with total <= {args.max_total} "
              f"({cert.candidates} candidates examined)")
        return 0
    found = cert.minima if args.all else (cert.automaton,)
    for i, a in enumerate(found):
        if i:
            print()
        _emit(args, a, [f"minimum total: {cert.total} ({cert.candidates} candidates examined)"]
              if i == 0 else [])
    return 0


def cmd_gen_vc(args) -> int:
    g = _doc(args.graph, "graph").payload
    theta = default_theta(g) if args.theta is None else args.theta
    m = build_vc_dfa(g, theta)
    header = [f"theta: {theta}"]
    if args.k_prime is not None:
        header.append(f"k': {args.k_prime}")
        header.append(f"k: {reduction_k(args.k_prime, theta)}")
    _emit(args, m, header)
    return 0


def cmd_dot(args) -> int:
    sys.stdout.write(to_dot(load(args.file)))
    return 0


def cmd_random(args) -> int:
    if args.kind == "dfa":
        _emit(args, random_dfa(args.seed, args.states, tuple("abc"[: args.alphabet])))
    else:
        _emit(args, random_dsa(args.seed, args.states, args.alphabet))
    return 0


# -------------------------------------------------------------------- parser

def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=_positive, default=argparse.SUPPRESS,
                        help="simple-word cap (default: $SUFREAD_CAP or 10000)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for random helpers")
    common.add_argument("--format", choices=("text", "dot"), default=argparse.SUPPRESS,
                        help="output format for automata")

    p = argparse.ArgumentParser(prog="sufread", parents=[common],
                                description="Deterministic suffix-reading automata toolkit.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check a file").add_argument("file")
    sp = add("run", cmd_run, "run an automaton on a word and print the trace")
    sp.add_argument("file")
    sp.add_argument("word", nargs="*", help="whitespace-separated tokens")
    sp.add_argument("--chars", action="store_true", help="split the word into characters")
    add("size", cmd_size, "print size metrics").add_argument("file")
    add("to-dfa", cmd_to_dfa, "tracking DFA of a DSA").add_argument("file")
    add("complete", cmd_complete, "add a sink to make a DFA complete").add_argument("file")
    add("minimize", cmd_minimize, "canonical DFA").add_argument("file")
    sp = add("equiv", cmd_equiv, "language equivalence; exit 0 iff equivalent")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp = add("sts", cmd_sts, "enumerate suffix-tracking sets")
    sp.add_argument("file")
    sp.add_argument("--max-card", type=_positive, default=None)
    sp = add("derive", cmd_derive, "derive a DSA from a DFA and a set of states")
    sp.add_argument("file")
    sp.add_argument("--states", required=True, help="comma-separated state names")
    sp.add_argument("--force", action="store_true",
                    help="print the induced DSA even if the set is not suffix-tracking")
    add("derive-smallest", cmd_derive_smallest, "smallest derivable DSA").add_argument("file")
    add("minimize-strong", cmd_minimize_strong, "smallest strong DSA from the canonical DFA"
        ).add_argument("file")
    sp = add("brute-min", cmd_brute_min, "exhaustive minimal-DSA search")
    sp.add_argument("file")
    sp.add_argument("--max-total", type=_positive, required=True)
    sp.add_argument("--strong", action="store_true", help="only strong DSAs")
    sp.add_argument("--all", action="store_true", help="print every minimum")
    sp = add("gen-vc", cmd_gen_vc, "DFA of the vertex-cover reduction")
    sp.add_argument("graph")
    sp.add_argument("--theta", type=_positive, default=None, help="default: (|V|+|E|)^4")
    sp.add_argument("--k-prime", type=int, default=None)
    add("dot", cmd_dot, "render any file as DOT").add_argument("file")
    sp = add("random", cmd_random, "random automaton (uses --seed)")
    sp.add_argument("kind", choices=("dfa", "dsa"))
    sp.add_argument("--states", type=_positive, default=4)
    sp.add_argument("--alphabet", type=int, choices=(1, 2, 3), default=2)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for name, default in (("cap", None), ("seed", None), ("format", "text")):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (AutomatonError, CliError, OSError) as err:
        print(f"sufread: error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
