"""JSON-over-HTTP bridge exposing the scene command vocabulary and the
pointer-event entry points to the canvas UI.

The UI is a pure event pump: it forwards every pointer event here,
repaints from the returned SVG, and never mutates geometry itself. One
session replayer lives server-side so warp offsets behave exactly as in
headless replay.

Endpoints (all bodies UTF-8 text or JSON):
    POST /load      scene document            -> {"ok": true}
    GET  /doc                                 -> scene document
    POST /event     one trace line            -> {"log": [...], "warped": [x, y] | null}
    POST /trace     whole trace               -> {"log": [...]}
    POST /command   {"verb": ..., "args": []} -> {"result": "OK" | "ERR ..."}
    GET  /svg?covers=0|1                      -> SVG document
    GET  /hint?x=..&y=..                      -> {"cursor": token, "id": int}
    GET  /menu?x=..&y=..                      -> {"id": int, "commands": [...]}
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .cover import CursorHint
from .geometry import Rect
from .groups import DominantGroup, ElasticGroup, WidgetProxy
from .scene import Scene, export_svg, load_scene, parse_trace, save_scene
from .scene.replay import _Replayer

_COMMON_COMMANDS = ["top", "bottom", "up", "down", "hide", "recolor"]


def _menu_for(obj) -> list[str]:
    if isinstance(obj, ElasticGroup):
        return _COMMON_COMMANDS + ["visible-all", "fix", "unfix"]
    if isinstance(obj, DominantGroup):
        return _COMMON_COMMANDS + ["switch-dominant"]
    if isinstance(obj, WidgetProxy):
        return _COMMON_COMMANDS + ["fix", "unfix"]
    return _COMMON_COMMANDS


class _Session:
    def __init__(self, initial: str | None):
        if initial:
            self.scene = load_scene(initial)
        else:
            self.scene = Scene(Rect(0, 0, 1000, 700))
        self.player = _Replayer(self.scene)

    def load(self, text: str) -> None:
        self.scene = load_scene(text)
        self.player = _Replayer(self.scene)


def serve(port: int, initial: str | None = None) -> None:
    session = _Session(initial)

    class Handler(BaseHTTPRequestHandler):
        def log_message(self, *args):  # keep stdout clean
            pass

        def _send(self, body: str, content_type: str = "application/json",
                  status: int = 200) -> None:
            data = body.encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(data)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(data)

        def _body(self) -> str:
            length = int(self.headers.get("Content-Length", 0))
            return self.rfile.read(length).decode("utf-8")

        def do_OPTIONS(self):
            self.send_response(204)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.end_headers()

        def do_GET(self):
            url = urlparse(self.path)
            query = parse_qs(url.query)
            if url.path == "/doc":
                self._send(save_scene(session.scene), "application/json")
            elif url.path == "/svg":
                covers = query.get("covers", ["0"])[0] == "1"
                self._send(export_svg(session.scene, covers), "image/svg+xml")
            elif url.path == "/hint":
                x = float(query["x"][0])
                y = float(query["y"][0])
                info = session.scene.engine.point_info((x, y))
                cursor = (info.cursor or CursorHint.DEFAULT).value
                target = 0
                if info.object_index >= 0:
                    target = session.scene.engine.queue[info.object_index].id
                self._send(json.dumps({"cursor": cursor, "id": target}))
            elif url.path == "/menu":
                x = float(query["x"][0])
                y = float(query["y"][0])
                info = session.scene.engine.point_info((x, y))
                if info.object_index < 0:
                    self._send(json.dumps({"id": 0, "commands": []}))
                    return
                obj = session.scene.engine.queue[info.object_index]
                root = session.scene.root_of(obj)
                self._send(json.dumps({"id": obj.id, "root": root.id,
                                       "commands": _menu_for(root)}))
            else:
                self._send('{"error": "not found"}', status=404)

        def do_POST(self):
            url = urlparse(self.path)
            body = self._body()
            try:
                if url.path == "/load":
                    session.load(body)
                    self._send('{"ok": true}')
                elif url.path == "/event":
                    events = parse_trace(body)
                    before = len(session.player.log)
                    warped = None
                    for event in events:
                        session.player.handle(event)
                    for line in session.player.log[before:]:
                        if line.startswith("WARP "):
                            parts = line.split()
                            warped = [float(parts[1]), float(parts[2])]
                    self._send(json.dumps(
                        {"log": session.player.log[before:], "warped": warped}))
                elif url.path == "/trace":
                    events = parse_trace(body)
                    player = _Replayer(session.scene)
                    for event in events:
                        player.handle(event)
                    session.player = player
                    self._send(json.dumps({"log": player.log}))
                elif url.path == "/command":
                    req = json.loads(body)
                    result = session.scene.command(req["verb"],
                                                   tuple(req.get("args", [])))
                    self._send(json.dumps({"result": result}))
                else:
                    self._send('{"error": "not found"}', status=404)
            except Exception as exc:  # surface errors to the UI as JSON
                self._send(json.dumps({"error": str(exc)}), status=400)

    server = ThreadingHTTPServer(("127.0.0.1", port), Handler)
    print(f"movables bridge on http://127.0.0.1:{port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass


__all__ = ["serve"]
