"""movables: a rendering-agnostic direct-manipulation engine.

Arbitrary 2D screen objects become movable, resizable and rotatable by
covering them with invisible sensitive nodes; a single engine (the
mover) turns pointer events into object movements. A deterministic
trace-replay harness plus a scene document format make every behaviour
testable headlessly.
"""

from .cover import Behaviour, Cover, CoverNode, CursorHint, NodeShape, Resizing
from .engine import ClippingLevel, Engine, MouseButton
from .geometry import Point, Rect

__all__ = [
    "Behaviour", "Cover", "CoverNode", "CursorHint", "NodeShape", "Resizing",
    "ClippingLevel", "Engine", "MouseButton",
    "Point", "Rect",
]

__version__ = "0.1.0"
