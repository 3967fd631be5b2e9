"""Command line front: headless replay, document diff, and the HTTP
bridge the canvas UI talks to.

    movables replay --scene in.scene.json --trace moves.trace --out out.scene.json
                    [--log run.log] [--svg out.svg] [--covers]
    movables diff --a left.json --b right.json
    movables serve [--port 8787] [--scene initial.json]

diff exits 0 when the documents match byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .scene import export_svg, load_scene, parse_trace, replay, save_scene


def _cmd_replay(args: argparse.Namespace) -> int:
    scene = load_scene(Path(args.scene).read_text(encoding="utf-8"))
    events = parse_trace(Path(args.trace).read_text(encoding="utf-8"))
    log = replay(scene, events)
    Path(args.out).write_text(save_scene(scene), encoding="utf-8")
    if args.log:
        Path(args.log).write_text("\n".join(log) + "\n", encoding="utf-8")
    if args.svg:
        Path(args.svg).write_text(export_svg(scene, show_covers=args.covers),
                                  encoding="utf-8")
    return 0


def _cmd_diff(args: argparse.Namespace) -> int:
    a = Path(args.a).read_bytes()
    b = Path(args.b).read_bytes()
    if a == b:
        print("match")
        return 0
    print("documents differ")
    return 1


def _cmd_serve(args: argparse.Namespace) -> int:
    from .bridge import serve
    initial = None
    if args.scene:
        initial = Path(args.scene).read_text(encoding="utf-8")
    serve(args.port, initial)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="movables", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_replay = sub.add_parser("replay", help="replay a pointer trace headlessly")
    p_replay.add_argument("--scene", required=True)
    p_replay.add_argument("--trace", required=True)
    p_replay.add_argument("--out", required=True)
    p_replay.add_argument("--log")
    p_replay.add_argument("--svg")
    p_replay.add_argument("--covers", action="store_true",
                          help="overlay cover outlines in the SVG")
    p_replay.set_defaults(func=_cmd_replay)

    p_diff = sub.add_parser("diff", help="compare two scene documents")
    p_diff.add_argument("--a", required=True)
    p_diff.add_argument("--b", required=True)
    p_diff.set_defaults(func=_cmd_diff)

    p_serve = sub.add_parser("serve", help="HTTP bridge for the canvas UI")
    p_serve.add_argument("--port", type=int, default=8787)
    p_serve.add_argument("--scene", help="initial scene document")
    p_serve.set_defaults(func=_cmd_serve)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
