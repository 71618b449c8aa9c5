"""Command-line interface.

Exit status: 0 ok, 1 usage or parse error, 2 the two classifications
disagree, 3 the fan failed an integrity check.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .crosscheck import DisagreementError, cross_validate
from .errors import CapacityError, ContractError, FanIntegrityError, GraphFormatError
from .fan import Fan, Tube, build_fan
from .forbidden import extract_cycle_or_diamond, find_forbidden
from .graphio import parse_graph, parse_inline_edges, to_graph6
from .graphs import Graph, connected_components, format_nodes, is_connected, members
from .intersection import (
    Classification,
    Verdict,
    classify_fan,
    enumerate_walls,
    graph_verdict,
    witness_wall,
)

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_INTEGRITY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="edge-list or graph6 file ('-' for stdin)")
    p.add_argument("--edges", help='inline edges, e.g. "1-2,2-3"')
    p.add_argument("--n", type=int, help="node count for --edges")
    p.add_argument("--format", choices=["auto", "edges", "graph6"], default="auto")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cubeahedra", description="Toric Fano tests for graph cubeahedra.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="classify one graph both ways")
    _add_input(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("fan", help="dump the normal fan")
    _add_input(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("walls", help="dump all walls with their relations")
    _add_input(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("witness", help="show a wall of number <= 0 and graph-side witnesses")
    _add_input(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("crosscheck", help="exhaustive agreement check over labelled graphs")
    p.add_argument("--max-nodes", type=int, required=True)
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="JSONL census file")
    return parser


def _read_graph(args) -> Graph:
    if args.edges is not None:
        if args.input is not None:
            raise GraphFormatError("give either an input file or --edges, not both")
        return parse_inline_edges(args.edges, args.n)
    if args.input is None or args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphFormatError(f"cannot read {args.input}: {exc.strerror}") from None
    return parse_graph(text, args.format)


def _fan_json(fan: Fan) -> dict:
    return {
        "n": fan.n,
        "rays": [{"label": str(lab), "vector": [int(x) for x in vec]} for lab, vec in zip(fan.labels, fan.rays)],
        "maximal_cones": [[str(fan.labels[int(i)]) for i in row] for row in fan.cones],
    }


def _classification_json(c: Classification) -> dict:
    return {
        "verdict": c.verdict.value,
        "min_number": c.min_number,
        "wall": c.wall.to_json() if c.wall else None,
    }


def _classify(G: Graph) -> tuple[Classification, Verdict, Fan | None]:
    if G.n == 0:
        return Classification(Verdict.FANO, None, None), graph_verdict(G), None
    fan = build_fan(G)
    return classify_fan(fan), graph_verdict(G), fan


def cmd_classify(args, out) -> int:
    G = _read_graph(args)
    c, gv, fan = _classify(G)
    forbidden = find_forbidden(G)
    agree = c.verdict is gv
    if args.json:
        payload = {
            "graph": to_graph6(G),
            "n": G.n,
            "edges": G.edge_count,
            "rays": fan.ray_count if fan else 0,
            "maximal_cones": fan.cone_count if fan else 0,
            "fan": _classification_json(c),
            "graph_classification": gv.value,
            "forbidden": {"kind": forbidden.kind.value, "nodes": list(members(forbidden.nodes))} if forbidden else None,
            "agree": agree,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(f"graph: {to_graph6(G)} n={G.n} edges={G.edge_count}\n")
        if fan is not None:
            out.write(f"fan: rays={fan.ray_count} maximal_cones={fan.cone_count}\n")
        out.write(f"fan classification: {c.verdict.value}\n")
        out.write(f"graph classification: {gv.value}\n")
        out.write(f"min intersection number: {c.min_number}\n")
        if c.wall is not None:
            out.write(f"witness wall: {c.wall}\n")
        if forbidden is not None:
            out.write(f"forbidden subgraph: {forbidden.kind.value} nodes {format_nodes(forbidden.nodes)}\n")
        out.write(f"{c.verdict.value}\n" if agree else "MISMATCH\n")
    return EXIT_OK if agree else EXIT_DISAGREE


def cmd_fan(args, out) -> int:
    G = _read_graph(args)
    fan = build_fan(G)
    if args.json:
        out.write(json.dumps(_fan_json(fan)) + "\n")
    else:
        out.write(f"n={fan.n} rays={fan.ray_count} maximal_cones={fan.cone_count}\n")
        for lab, vec in zip(fan.labels, fan.rays):
            out.write(f"ray {lab} {tuple(int(x) for x in vec)}\n")
        for row in fan.cones:
            out.write("cone " + " ".join(str(fan.labels[int(i)]) for i in row) + "\n")
    return EXIT_OK


def cmd_walls(args, out) -> int:
    G = _read_graph(args)
    walls = enumerate_walls(build_fan(G))
    if args.json:
        out.write(json.dumps([w.to_json() for w in walls]) + "\n")
    else:
        for w in walls:
            out.write(f"{w} coefficients={list(w.coefficients)}\n")
    return EXIT_OK


def _overlap_pair(G: Graph, fan: Fan, walls) -> tuple | None:
    """A wall whose two neighbours are tubes with a disconnected overlap."""
    for w in walls:
        J, Jp = w.neighbors
        if isinstance(J, Tube) and isinstance(Jp, Tube):
            common = J.nodes & Jp.nodes
            if common and not is_connected(G, common):
                return w, extract_cycle_or_diamond(G, J.nodes, Jp.nodes)
    return None


def cmd_witness(args, out) -> int:
    G = _read_graph(args)
    c, gv, fan = _classify(G)
    result: dict = {"graph": to_graph6(G), "fan_classification": c.verdict.value}
    lines = [f"fan classification: {c.verdict.value}"]
    if c.wall is not None and c.min_number <= 0:
        result["wall"] = c.wall.to_json()
        lines.append(f"wall: {c.wall}")
    forbidden = find_forbidden(G)
    if forbidden is not None:
        result["forbidden"] = {"kind": forbidden.kind.value, "nodes": list(members(forbidden.nodes))}
        lines.append(f"forbidden subgraph: {forbidden.kind.value} nodes {format_nodes(forbidden.nodes)}")
        pattern = forbidden.kind.value
        proof_wall, expected = witness_wall(G, pattern, fan=fan)
        result["proof_wall"] = {**proof_wall.to_json(), "expected": expected}
        lines.append(f"proof wall ({pattern}): {proof_wall} expected={expected}")
    elif fan is not None and not c.is_fano:
        comp = next(m for m in connected_components(G) if m.bit_count() >= 3)
        proof_wall, expected = witness_wall(G, "component", fan=fan)
        result["proof_wall"] = {**proof_wall.to_json(), "expected": expected}
        lines.append(f"proof wall (component {format_nodes(comp)}): {proof_wall} expected={expected}")
    if fan is not None and not c.is_weak_fano:
        found = _overlap_pair(G, fan, enumerate_walls(fan))
        if found is not None:
            w, wit = found
            result["extraction"] = {
                "J": str(w.neighbors[0]), "J'": str(w.neighbors[1]),
                "kind": wit.kind.value, "nodes": list(members(wit.nodes)),
            }
            lines.append(f"extraction from {w.neighbors[0]}, {w.neighbors[1]}: {wit}")
    if args.json:
        out.write(json.dumps(result, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return EXIT_OK if c.verdict is gv else EXIT_DISAGREE


def cmd_crosscheck(args, out) -> int:
    if args.max_nodes < 1:
        raise GraphFormatError("--max-nodes must be at least 1")
    sink = open(args.out, "w") if args.out else None
    try:
        report = cross_validate(args.max_nodes, args.connected_only, args.jobs, sink)
    except DisagreementError as exc:
        sys.stderr.write(f"disagreement: {exc}\n")
        return EXIT_DISAGREE
    finally:
        if sink:
            sink.close()
    out.write(report.summary() + "\n")
    return EXIT_OK if report.disagreements == 0 else EXIT_DISAGREE


COMMANDS = {
    "classify": cmd_classify,
    "fan": cmd_fan,
    "walls": cmd_walls,
    "witness": cmd_witness,
    "crosscheck": cmd_crosscheck,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (GraphFormatError, CapacityError, ContractError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except FanIntegrityError as exc:
        sys.stderr.write(f"fan integrity failure: {exc}\n")
        return EXIT_INTEGRITY


def main() -> None:
    sys.exit(run())
