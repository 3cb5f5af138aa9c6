"""Command-line tool and text formats.

Graph documents are line oriented::

    # torus: two charts whose overlap carries two loops
    format 1
    uniform_dim 2
    vertex id=0 dim=2
    vertex id=1 dim=2
    edge u=0 v=1 label=3

``format`` comes first; ``uniform_dim`` is optional; vertex ids must run
0, 1, 2, ... in order. Blank lines and ``#`` comments are ignored.

Exit status is 0 on success or an affirmative answer, 2 on a negative
answer (``classify``, ``iso``) and 1 on any error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__
from .canon import are_isomorphic, canonical_form
from .classify import classify
from .cycles import cycle_rank_simple, label_excess, labeled_cycle_rank
from .enumeration import build_catalog, count_connected_graphs
from .errors import AtlasGraphError, EdgeError, ParseError
from .graph_core import LabeledGraph, new_labeled_graph
from .pi1 import presentation

FORMAT_VERSION = 1

_FIELDS = {
    "vertex": ("id", "dim"),
    "edge": ("u", "v", "label"),
}


def _int_token(token: str, line: int, col: int, what: str) -> int:
    try:
        value = int(token, 10)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line, col) from None
    return value


def _split(text: str) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based columns."""
    out = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace():
            j += 1
        out.append((text[i:j], i + 1))
        i = j
    return out


def parse_graph(text: str | bytes) -> LabeledGraph:
    """Parse a graph document into a validated :class:`LabeledGraph`."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8 text ({exc.reason})", 1, 1) from None
    version_seen = False
    uniform_dim = None
    dims: list[int] = []
    edges: list[tuple[int, int, int]] = []
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = _split(body)
        if not tokens:
            continue
        head, hcol = tokens[0]
        args = tokens[1:]
        if not version_seen:
            if head != "format":
                raise ParseError("document must start with 'format <version>'", lineno, hcol)
            if len(args) != 1:
                raise ParseError("'format' takes exactly one value", lineno, hcol)
            version = _int_token(args[0][0], lineno, args[0][1], "format version")
            if version != FORMAT_VERSION:
                raise ParseError(f"unsupported format version {version}", lineno, args[0][1])
            version_seen = True
            continue
        if head == "format":
            raise ParseError("repeated 'format' directive", lineno, hcol)
        if head == "uniform_dim":
            if uniform_dim is not None:
                raise ParseError("repeated 'uniform_dim' directive", lineno, hcol)
            if len(args) != 1:
                raise ParseError("'uniform_dim' takes exactly one value", lineno, hcol)
            uniform_dim = _int_token(args[0][0], lineno, args[0][1], "uniform_dim")
            continue
        if head not in _FIELDS:
            raise ParseError(f"unknown directive {head!r}", lineno, hcol)
        values: dict[str, int] = {}
        for token, col in args:
            key, sep, val = token.partition("=")
            if not sep:
                raise ParseError(f"expected key=value, got {token!r}", lineno, col)
            if key not in _FIELDS[head]:
                raise ParseError(f"unknown field {key!r} for {head}", lineno, col)
            if key in values:
                raise ParseError(f"repeated field {key!r}", lineno, col)
            values[key] = _int_token(val, lineno, col + len(key) + 1, key)
        missing = [k for k in _FIELDS[head] if k not in values]
        if missing:
            raise ParseError(f"{head} is missing field(s) {', '.join(missing)}", lineno, hcol)
        if head == "vertex":
            if values["id"] != len(dims):
                raise ParseError(f"expected vertex id {len(dims)}, got {values['id']}", lineno, hcol)
            dims.append(values["dim"])
        else:
            edges.append((values["u"], values["v"], values["label"]))
            edge_lines.append(lineno)
    if not version_seen:
        raise ParseError("empty document, expected 'format <version>'", 1, 1)
    try:
        return new_labeled_graph(dims, edges, uniform_dim=uniform_dim)
    except EdgeError as exc:
        raise type(exc)(exc.index, exc.edge, f"line {edge_lines[exc.index]}") from None


def render_graph(g: LabeledGraph) -> str:
    lines = [f"format {FORMAT_VERSION}"]
    if g.uniform_dim is not None:
        lines.append(f"uniform_dim {g.uniform_dim}")
    lines += [f"vertex id={v.id} dim={v.dim}" for v in g.vertices]
    lines += [f"edge u={e.u} v={e.v} label={e.label}" for e in g.edges]
    return "\n".join(lines) + "\n"


def render_dot(g: LabeledGraph, name: str = "atlas") -> str:
    """Undirected DOT text; edges show both the label and the loop count."""
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f'  {v.id} [label="U{v.id} (dim {v.dim})"];')
    for e in g.edges:
        lines.append(f'  {e.u} -- {e.v} [label="L={e.label} (κ={e.kappa})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _read(path: str) -> LabeledGraph:
    if path == "-":
        return parse_graph(sys.stdin.buffer.read())
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


def _flag(b: bool) -> str:
    return "true" if b else "false"


def cmd_rank(args) -> int:
    g = _read(args.file)
    print(f"simple_rank={cycle_rank_simple(g)}")
    print(f"label_excess={label_excess(g)}")
    print(f"labeled_rank={labeled_cycle_rank(g)}")
    return 0


def cmd_pi1(args) -> int:
    g = _read(args.file)
    p = presentation(g, args.basepoint)
    print(f"basepoint={p.basepoint}")
    print(f"generators={p.generator_count}")
    edges = p.multigraph.parallel_edges
    for i, walk in enumerate(p.generator_walks):
        via = ",".join("{}-{}#{}".format(*edges[e]) for e in walk.edges)
        print(f"a{i}: {' '.join(map(str, walk.vertices))} edges={via}")
    return 0


def cmd_classify(args) -> int:
    report = classify(_read(args.file))
    for key, value in report.as_record().items():
        print(f"{key}={_flag(value) if isinstance(value, bool) else value}")
    return 0 if report.homotopy_sphere else 2


def cmd_canon(args) -> int:
    print(canonical_form(_read(args.file)).hex())
    return 0


def cmd_iso(args) -> int:
    return 0 if are_isomorphic(_read(args.file1), _read(args.file2)) else 2


def cmd_enumerate(args) -> int:
    entries = build_catalog(args.order, args.max_label, args.dim, jobs=args.jobs)
    text = "".join(e.record() + "\n" for e in entries)
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
        print(len(entries))
    else:
        sys.stdout.write(text)
        print(len(entries), file=sys.stderr)
    return 0


def cmd_count_graphs(args) -> int:
    print(count_connected_graphs(args.order, jobs=args.jobs))
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="atlasgraph", description="Labeled atlas graph toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="cycle rank decomposition")
    p.add_argument("file")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("pi1", help="free presentation of the fundamental group")
    p.add_argument("file")
    p.add_argument("--basepoint", type=int, default=0)
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("classify", help="class report; exit 0 iff homotopy sphere")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("canon", help="canonical form as hex")
    p.add_argument("file")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("iso", help="exit 0 iff the two graphs are isomorphic")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("enumerate", help="catalog of minimal-atlas labeled graphs")
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--max-label", type=_positive, required=True)
    p.add_argument("--dim", type=_positive, default=1)
    p.add_argument("--out")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count-graphs", help="number of connected graphs of a given order")
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_count_graphs)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (AtlasGraphError, OSError, ValueError) as exc:
        print(f"atlasgraph {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
