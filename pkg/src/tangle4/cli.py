"""Command-line entry point: ``tangle4 COMMAND GRAPH [options]``."""

import argparse
import json
import sys

from .chops import decomposition, greedy_maximal_3chop, verify_chop_theorem
from .connectivity import is_internally_4connected, is_quasi_4connected
from .errors import TangleError, TheoremViolation, UniversalityViolation, ParseError
from .graph import is_k_connected, members
from .io import detect_format, parse_graph, to_dot
from .tangles import enumerate_tangles, is_cubic_tangle
from .theorems import main_witness, quasi4_star_decomposition, universality_check

SCHEMA = "tangle4/{}/1"
COMMANDS = ("tangles", "chop", "decompose", "classify", "verify", "universality", "quasi4")
# commands whose running time is exponential in n
BOUNDED = {"tangles": "tangle enumeration", "chop": "separation enumeration",
           "decompose": "tangle enumeration", "verify": "tangle enumeration",
           "universality": "tangle enumeration", "quasi4": "separation enumeration"}

OK, BAD_INPUT, VIOLATION = 0, 1, 2


def _sep(a, b):
    return [members(a), members(b)]


def _graph_json(h):
    return {"n": h.n, "edges": [list(e) for e in h.sorted_edges()], "labels": list(h.labels)}


def cmd_tangles(g, args):
    ts = enumerate_tangles(g, args.k)
    out = []
    for i, t in enumerate(ts):
        row = {"index": i, "orientations": [_sep(o.small, o.big) for o in t.sorted_members()]}
        if args.k == 4:
            x = is_cubic_tangle(g, t)
            row["cubic_set"] = members(x) if x is not None else None
        out.append(row)
    return {"k": args.k, "count": len(ts), "tangles": out}


def _chop_report(g, args):
    if not is_k_connected(g, 3):
        raise TangleError("chop needs a 3-connected graph")
    chop = greedy_maximal_3chop(g, args.seed)
    dec = decomposition(g, chop)
    tangles = enumerate_tangles(g, 4)
    nodes = []
    for nd in dec.nodes:
        nodes.append({
            "index": nd.index,
            "bag": members(nd.bag),
            "kind": nd.kind,
            "torso": _graph_json(nd.torso),
            "star": [_sep(o.small, o.big) for o in sorted(nd.star)],
            "tangles": [i for i, t in enumerate(tangles) if nd in dec.node_of(t)],
        })
    return dec, {
        "seed": args.seed,
        "chop": [_sep(s.a, s.b) for s in chop.separations],
        "nodes": nodes,
        "tree": [[i, j, _sep(s.a, s.b)] for i, j, s in dec.edges],
    }


def cmd_chop(g, args):
    return _chop_report(g, args)[1]


def chop_dot(g, args):
    dec, _ = _chop_report(g, args)
    lines = ["graph decomposition {"]
    for nd in dec.nodes:
        lines.append(f'  n{nd.index} [label="{" ".join(map(str, members(nd.bag)))}\\n{nd.kind}"];')
    for i, j, s in dec.edges:
        lines.append(f'  n{i} -- n{j} [label="{" ".join(map(str, members(s.a & s.b)))}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_decompose(g, args):
    out = []
    for i, t in enumerate(enumerate_tangles(g, 4)):
        w = main_witness(g, t, args.seed)
        out.append({
            "index": i,
            "witness": _graph_json(w.h),
            "fibers": [members(f) for f in w.map.fibers],
            "bag_size": w.bag_size,
            "via_cube": w.via_cube,
            "lift_matches": w.tangle_check,
        })
    return {"seed": args.seed, "witnesses": out}


def cmd_classify(g, args):
    return {
        "three_connected": is_k_connected(g, 3),
        "quasi4": is_quasi_4connected(g),
        "internally4": is_internally_4connected(g),
    }


def cmd_verify(g, args):
    checks = {}
    tangles = enumerate_tangles(g, 4)
    if is_k_connected(g, 3):
        rep = verify_chop_theorem(g, greedy_maximal_3chop(g, args.seed), tangles)
        checks["chop"] = rep.checked
    for t in tangles:
        main_witness(g, t, args.seed)
    checks["main_witness"] = len(tangles)
    return {"seed": args.seed, "tangles": len(tangles), "passed": checks}


def cmd_universality(g, args):
    rep = universality_check(g, args.trials, args.seed)
    return {
        "seeds": rep.seeds,
        "tangles": rep.n_tangles,
        "cubic_bag_sizes": {str(k): v for k, v in rep.cubic.items()},
        "torso_sizes": {str(k): v for k, v in rep.torsos.items()},
    }


def cmd_quasi4(g, args):
    d = quasi4_star_decomposition(g, args.seed)
    return {
        "center": members(d.center),
        "center_kind": d.center_kind,
        "center_torso": _graph_json(d.center_torso),
        "leaves": [members(x) for x in d.leaves],
        "adhesion": d.adhesion,
    }


HANDLERS = {
    "tangles": cmd_tangles, "chop": cmd_chop, "decompose": cmd_decompose, "classify": cmd_classify,
    "verify": cmd_verify, "universality": cmd_universality, "quasi4": cmd_quasi4,
}


def _text(obj, indent=0):
    pad = "  " * indent
    lines = []
    for key in sorted(obj):
        val = obj[key]
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_text(val, indent + 1))
        else:
            lines.append(f"{pad}{key}: {json.dumps(val)}")
    return lines


def build_parser():
    p = argparse.ArgumentParser(prog="tangle4", description="4-tangles, maximal 3-chops and their torsos")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("graph", help="input file, or - for standard input")
    p.add_argument("--input-format", choices=["graph6", "edge-list", "dot"],
                   help="input format (default: from the extension, else sniffed)")
    p.add_argument("--format", choices=["json", "dot", "text"], default="json", help="report format")
    p.add_argument("--k", type=int, default=4, help="tangle order for 'tangles' (1..4)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=3, help="chops compared by 'universality'")
    p.add_argument("--max-n", type=int, default=16, help="refuse larger graphs for exponential commands")
    return p


def run(args, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        if args.graph == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(args.graph, "rb") as fh:
                data = fh.read()
    except OSError as e:
        print(f"error: {e}", file=stderr)
        return BAD_INPUT
    try:
        fmt = args.input_format or detect_format(None if args.graph == "-" else args.graph, data)
        g = parse_graph(data, fmt)
    except ParseError as e:
        print(f"error: cannot parse graph: {e}", file=stderr)
        return BAD_INPUT

    if args.command in BOUNDED and g.n > args.max_n:
        print(f"error: {g.n} vertices exceeds --max-n {args.max_n}; "
              f"{BOUNDED[args.command]} is exponential in the number of vertices", file=stderr)
        return BAD_INPUT
    try:
        if args.format == "dot":
            stdout.write(chop_dot(g, args) if args.command == "chop" else to_dot(g))
            return OK
        report = HANDLERS[args.command](g, args)
    except (TheoremViolation, UniversalityViolation) as e:
        print(f"theorem violation: {e}", file=stderr)
        return VIOLATION
    except (TangleError, ValueError) as e:
        print(f"error: {e}", file=stderr)
        return BAD_INPUT

    report = {"schema": SCHEMA.format(args.command), "graph": {"n": g.n, "m": g.num_edges()}, **report}
    if args.format == "text":
        stdout.write("\n".join(_text(report)) + "\n")
    else:
        stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    return OK


def main(argv=None):
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
