"""Scene assembly, persistence, trace replay, and the SVG emitter."""

from .docio import SceneDocError, load_scene, save_scene
from .replay import replay
from .scene import (ClickKind, ClickOutcome, Scene, ZAction, classify_click)
from .svg import export_svg
from .trace import TraceEvent, format_trace, parse_trace

__all__ = [
    "SceneDocError", "load_scene", "save_scene",
    "replay",
    "ClickKind", "ClickOutcome", "Scene", "ZAction", "classify_click",
    "export_svg",
    "TraceEvent", "format_trace", "parse_trace",
]
