"""Label boxes: the stand-in for every movable/rotatable text.

Hosts measure the text and hand the size over; the core never touches
fonts. A label is anchored by one of nine basis points and rotates
around that point.
"""

from __future__ import annotations

import enum
import math

from .. import geometry as geo
from ..cover import Cover, CursorHint, polygon_node
from ..engine import MouseButton
from ..geometry import Point
from .base import GestureAux, Movable


class TextBasis(enum.Enum):
    NW = "nw"
    N = "n"
    NE = "ne"
    W = "w"
    M = "m"
    E = "e"
    SW = "sw"
    S = "s"
    SE = "se"


# basis point as (fraction of width, fraction of height) in text-local frame
_BASIS_FRACTIONS = {
    TextBasis.NW: (0.0, 0.0), TextBasis.N: (0.5, 0.0), TextBasis.NE: (1.0, 0.0),
    TextBasis.W: (0.0, 0.5), TextBasis.M: (0.5, 0.5), TextBasis.E: (1.0, 0.5),
    TextBasis.SW: (0.0, 1.0), TextBasis.S: (0.5, 1.0), TextBasis.SE: (1.0, 1.0),
}


class LabelBox(Movable):
    """Host-sized text box, movable by any point and rotatable around
    its basis point."""

    kind = "label"

    def __init__(self, anchor: Point, width: float, height: float,
                 basis: TextBasis = TextBasis.M, angle: float = 0.0,
                 text: str = "", color: str = "#202020"):
        super().__init__()
        self.anchor = tuple(anchor)
        self.width = float(width)
        self.height = float(height)
        self.basis = basis
        self.angle = geo.normalize_angle(angle)
        self.text = text
        self.color = color
        self._aux: GestureAux | None = None

    def corners(self) -> list[Point]:
        """NW, NE, SE, SW corners of the rotated box."""
        fx, fy = _BASIS_FRACTIONS[self.basis]
        bx = fx * self.width
        by = fy * self.height
        cos_a = math.cos(self.angle)
        sin_a = math.sin(self.angle)
        pts = []
        for lx, ly in ((0.0, 0.0), (self.width, 0.0),
                       (self.width, self.height), (0.0, self.height)):
            # local offset from the basis point, rotated, Y grows downward
            ox = lx - bx
            oy = ly - by
            rx = ox * cos_a + oy * sin_a
            ry = -ox * sin_a + oy * cos_a
            pts.append((self.anchor[0] + rx, self.anchor[1] + ry))
        return pts

    def resize(self, width: float, height: float) -> None:
        """Host re-measured the text; the anchor stays put."""
        self.width = float(width)
        self.height = float(height)
        self.update_cover()

    def define_cover(self) -> Cover:
        return Cover([polygon_node(self.corners(), cursor=CursorHint.SIZE_ALL)])

    def move(self, dx: float, dy: float) -> None:
        self.anchor = (self.anchor[0] + dx, self.anchor[1] + dy)
        self.update_cover()

    def begin_gesture(self, engine, p, button, node_id, node_shape) -> None:
        if button is MouseButton.RIGHT:
            self.begin_rotation(p)

    def begin_rotation(self, p: Point) -> GestureAux:
        mouse = geo.line_angle(self.anchor, p)
        self._aux = GestureAux(
            compensation=geo.normalize_angle(mouse - self.angle))
        return self._aux

    def rotation_update(self, aux: GestureAux, p: Point) -> None:
        mouse = geo.line_angle(self.anchor, p)
        self.angle = geo.normalize_angle(mouse - aux.compensation)
        self.update_cover()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is MouseButton.LEFT:
            self.move(dx, dy)
            return True
        if self._aux is None:
            self.begin_rotation(p)
        self.rotation_update(self._aux, p)
        return True

    def basic_points(self) -> list[Point]:
        return [self.anchor] + self.corners()
