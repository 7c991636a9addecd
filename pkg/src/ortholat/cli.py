"""Command-line front end.

Exit status: 0 when every reported property holds, 1 on a mathematical
failure, 2 on bad input or I/O trouble.  Reports go to stdout (or ``-o``);
diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import __version__
from .adjunction import DEFAULT_MAX_SUBSET_SIZE
from .checks import FAIL, run_suite
from .completion import (DEFAULT_MAX_COMPLETION_SIZE, consequence, enumerate_completion,
                         external_hook, heyting_hook)
from .documents import (completion_doc, dumps, ideal_from_spec, is_completion_doc,
                        lattice_doc, load_completion, load_lattice, load_sequent, read_json)
from .dynamics import (dyn_hook_backward, dyn_hook_forward, freeze, sasaki_environment,
                       tensor_backward, tensor_forward)
from .errors import OrtholatError
from .ortho import as_ortho, generate, lattice_of, sasaki_hook, sasaki_project
from .poset import DEFAULT_MAX_LATTICE_SIZE

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
COMMANDS = ("gen", "check", "hook", "complete", "consequence", "export-dot")
GEN_KINDS = ("boolean", "mo", "o6", "chain")
HOOK_KINDS = ("sasaki", "projection", "external", "heyting", "dynamic", "tensor")


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple = ()
    out: Optional[str] = None
    fmt: str = "json"
    caps: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        bad = {k: v for k, v in self.caps.items() if v < 1}
        if bad:
            raise InputError(f"caps must be positive: {bad}")


def _emit(cfg: RunConfig, text: str):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path, cfg: RunConfig):
    return load_lattice(read_json(path), cfg.caps["lattice"])


def _completion_of(X, cfg):
    return enumerate_completion(X, cap=cfg.caps["completion"], lattice_cap=cfg.caps["lattice"])


def dot_graph(names, covers, label="lattice") -> str:
    """Hasse diagram as DOT; nodes in index order, edges drawn upward from below."""
    lines = [f'digraph "{label}" {{', "  rankdir=BT;"]
    lines += [f'  n{i} [label="{name}"];' for i, name in enumerate(names)]
    lines += [f"  n{i} -> n{j};" for i, j in sorted(covers)]
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- commands -------------------------------------------------------------------


def cmd_gen(args, cfg) -> int:
    if args.kind not in GEN_KINDS:
        raise InputError(f"unknown lattice kind {args.kind!r}; expected one of {GEN_KINDS}")
    if args.kind != "o6" and args.n is None:
        raise InputError(f"{args.kind} needs a size argument")
    try:
        X = generate(args.kind, args.n, cap=cfg.caps["lattice"])
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(cfg, dumps(lattice_doc(X)))
    return EXIT_OK


def _text_report(results) -> str:
    rows = []
    for r in results:
        d = r.to_dict()
        tail = f"  witness={d['witness']}" if "witness" in d else ""
        note = f"  ({d['detail']})" if "detail" in d else ""
        rows.append(f"{r.status.upper():4}  {r.name}{tail}{note}")
    return "\n".join(rows) + "\n"


def cmd_check(args, cfg) -> int:
    X = _load(args.path, cfg)
    results = run_suite(args.suite, X, {"subsets": cfg.caps["subsets"],
                                        "lattice": cfg.caps["lattice"],
                                        "completion": cfg.caps["completion"]})
    ok = all(r.status != FAIL for r in results)
    if cfg.fmt == "text":
        _emit(cfg, _text_report(results))
    else:
        _emit(cfg, dumps({"suite": args.suite, "ok": ok,
                          "results": [r.to_dict() for r in results]}))
    return EXIT_OK if ok else EXIT_FAIL


def _ideal_arg(C, text):
    """``a,b`` means the downset generated by a and b; ``@a,b`` lists an ideal as is."""
    names = [t for t in text.lstrip("@").split(",") if t]
    return ideal_from_spec(C, {"ideal": names} if text.startswith("@") else {"down": names})


def cmd_hook(args, cfg) -> int:
    X = _load(args.path, cfg)
    L = lattice_of(X)
    doc = {"kind": args.kind, "left": args.left, "right": args.right}
    if args.kind in ("sasaki", "projection"):
        OL = as_ortho(X)
        fn = sasaki_hook if args.kind == "sasaki" else sasaki_project
        doc["result"] = L.names[fn(OL, args.left, args.right)]
    elif args.kind == "external":
        doc["result"] = external_hook(L, args.left, args.right).names()
    else:
        C = _completion_of(X, cfg)
        A1, A2 = _ideal_arg(C, args.left), _ideal_arg(C, args.right)
        if args.kind == "heyting":
            doc["result"] = heyting_hook(C, A1, A2).names()
        else:
            if args.on is None:
                E = freeze(L)
            else:
                E = sasaki_environment(as_ortho(X), args.on)
            doc["environment"] = E.label
            doc["direction"] = args.direction
            if args.kind == "dynamic":
                fn = dyn_hook_forward if args.direction == "forward" else dyn_hook_backward
            else:
                fn = tensor_forward if args.direction == "forward" else tensor_backward
            doc["result"] = fn(E, C, A1, A2).names()
    if cfg.fmt == "text":
        _emit(cfg, f"{doc['result']}\n")
    else:
        _emit(cfg, dumps(doc))
    return EXIT_OK


def cmd_complete(args, cfg) -> int:
    X = _load(args.path, cfg)
    C = enumerate_completion(X, args.mode, cap=cfg.caps["completion"],
                             lattice_cap=cfg.caps["lattice"])
    if cfg.fmt == "dot":
        _emit(cfg, dot_graph(C.lattice.names, C.lattice.covers, f"{C.mode} completion"))
    else:
        _emit(cfg, dumps(completion_doc(C)))
    return EXIT_OK


def cmd_consequence(args, cfg) -> int:
    X = _load(args.path, cfg)
    C = _completion_of(X, cfg)
    ants, cons = load_sequent(C, read_json(args.sequent))
    v = consequence(C, ants, cons)
    if cfg.fmt == "text":
        _emit(cfg, ("holds" if v else f"fails  witness={list(v.witness)}") + "\n")
    else:
        _emit(cfg, dumps({"holds": v.holds, **({"witness": list(v.witness)} if v.witness else {})}))
    return EXIT_OK if v else EXIT_FAIL


def cmd_export_dot(args, cfg) -> int:
    doc = read_json(args.path)
    if is_completion_doc(doc):
        C = load_completion(doc, cfg.caps["lattice"], cfg.caps["completion"])
        text = dot_graph(C.lattice.names, C.lattice.covers, f"{C.mode} completion")
    else:
        L = lattice_of(load_lattice(doc, cfg.caps["lattice"]))
        text = dot_graph(L.names, L.covers)
    _emit(cfg, text)
    return EXIT_OK


HANDLERS = {"gen": cmd_gen, "check": cmd_check, "hook": cmd_hook, "complete": cmd_complete,
            "consequence": cmd_consequence, "export-dot": cmd_export_dot}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap-lattice", type=int, default=DEFAULT_MAX_LATTICE_SIZE,
                        help="largest lattice accepted (default %(default)s)")
    common.add_argument("--cap-completion", type=int, default=DEFAULT_MAX_COMPLETION_SIZE,
                        help="largest completion accepted (default %(default)s)")
    common.add_argument("--cap-subsets", type=int, default=DEFAULT_MAX_SUBSET_SIZE,
                        help="largest set whose subsets are enumerated (default %(default)s)")
    common.add_argument("--format", choices=("json", "text", "dot"), default=None)
    common.add_argument("-o", "--out", help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="ortholat", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="emit a standard lattice")
    g.add_argument("kind")
    g.add_argument("n", nargs="?", type=int)

    c = sub.add_parser("check", parents=[common], help="run a property suite")
    c.add_argument("path")
    c.add_argument("suite", choices=("ortho", "heyting", "dynamics", "all"))

    h = sub.add_parser("hook", parents=[common], help="compute one hook or tensor")
    h.add_argument("path")
    h.add_argument("kind", choices=HOOK_KINDS)
    h.add_argument("left", help="element name, or ideal as a,b (downset) or @a,b (listed)")
    h.add_argument("right")
    h.add_argument("--on", help="measured element of the Sasaki environment (default: freeze)")
    h.add_argument("--direction", choices=("forward", "backward"), default="forward")

    k = sub.add_parser("complete", parents=[common], help="emit the ideal completion")
    k.add_argument("path")
    k.add_argument("--mode", choices=("distributive", "ideals"), default="distributive")

    q = sub.add_parser("consequence", parents=[common], help="evaluate a sequent file")
    q.add_argument("path")
    q.add_argument("sequent")

    d = sub.add_parser("export-dot", parents=[common], help="Hasse diagram as DOT")
    d.add_argument("path")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    default_fmt = "dot" if args.command == "export-dot" else "json"
    try:
        cfg = RunConfig(args.command, inputs=tuple(v for k, v in vars(args).items()
                                                      if k in ("path", "sequent")),
                        out=args.out, fmt=args.format or default_fmt,
                        caps={"lattice": args.cap_lattice, "completion": args.cap_completion,
                              "subsets": args.cap_subsets})
        return HANDLERS[args.command](args, cfg)
    except (InputError, OrtholatError, OSError, ValueError, KeyError, TypeError) as exc:
        # json.JSONDecodeError is a ValueError
        print(f"ortholat: {type(exc).__name__}: {exc}", file=sys.stderr)
        witness = getattr(exc, "witness", None)
        if witness:
            print(f"ortholat: witness {list(witness)}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
