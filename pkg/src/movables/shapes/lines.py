"""Line shapes: the solitary line and the segmented line."""

from __future__ import annotations

from .. import geometry as geo
from ..cover import Cover, CursorHint, circle_node, strip_node
from ..engine import MouseButton
from ..geometry import Point
from .base import (GestureAux, Movable, multi_point_rotation_start,
                   rotate_points)


class LineShape(Movable):
    """Straight line, moved by any inner point and resized by both ends.

    Rotation (right button) uses proper per-endpoint compensation around
    the midpoint, so either end may be grabbed without drift.
    """

    kind = "line"

    MIN_LEN = 20.0

    def __init__(self, pt_a: Point, pt_b: Point, stroke: str = "#c03030"):
        super().__init__()
        self.pt_a = tuple(pt_a)
        if geo.distance(pt_a, pt_b) >= self.MIN_LEN:
            self.pt_b = tuple(pt_b)
        else:
            angle = geo.line_angle(pt_a, pt_b)
            self.pt_b = geo.point_at(pt_a, angle, self.MIN_LEN)
        self.stroke = stroke
        self._aux: GestureAux | None = None

    def define_cover(self) -> Cover:
        return Cover([
            circle_node(self.pt_a),
            circle_node(self.pt_b),
            strip_node(self.pt_a, self.pt_b, cursor=CursorHint.SIZE_ALL),
        ])

    def move(self, dx: float, dy: float) -> None:
        self.pt_a = (self.pt_a[0] + dx, self.pt_a[1] + dy)
        self.pt_b = (self.pt_b[0] + dx, self.pt_b[1] + dy)
        self.update_cover()

    def begin_gesture(self, engine, p, button, node_id, node_shape) -> None:
        if button is MouseButton.RIGHT:
            self.begin_rotation(p)

    def begin_rotation(self, p: Point) -> GestureAux:
        mid = ((self.pt_a[0] + self.pt_b[0]) / 2.0,
               (self.pt_a[1] + self.pt_b[1]) / 2.0)
        self._aux = multi_point_rotation_start(mid, [self.pt_a, self.pt_b], p)
        self._aux.extra["anchor"] = mid
        return self._aux

    def rotation_update(self, aux: GestureAux, p: Point) -> None:
        self.pt_a, self.pt_b = rotate_points(aux.extra["anchor"], aux, p)
        self.update_cover()

    def move_node(self, node_id: int, dx: float, dy: float, p: Point,
                  button: MouseButton) -> bool:
        if button is MouseButton.RIGHT:
            if self._aux is None:
                self.begin_rotation(p)
            self.rotation_update(self._aux, p)
            return True
        if node_id == 0:
            new = (self.pt_a[0] + dx, self.pt_a[1] + dy)
            if geo.distance(new, self.pt_b) >= self.MIN_LEN:
                self.pt_a = new
                self.update_cover()
                return True
            return False
        if node_id == 1:
            new = (self.pt_b[0] + dx, self.pt_b[1] + dy)
            if geo.distance(self.pt_a, new) >= self.MIN_LEN:
                self.pt_b = new
                self.update_cover()
                return True
            return False
        self.move(dx, dy)
        return True

    def basic_points(self) -> list[Point]:
        return [self.pt_a, self.pt_b]


class SegmentedLineShape(Movable):
    """Polyline with independently movable joints.

    Moving a joint circle relocates that point only; any strip moves the
    whole line. Rotation needs one radius and one compensation per point,
    all fixed at the catch; the rotation center is externally settable.
    """

    kind = "segmented_line"

    JOINT_RADIUS = 5.0

    def __init__(self, pts: list[Point], anchor: Point | None = None,
                 stroke: str = "#3050c0"):
        super().__init__()
        if len(pts) < 2:
            raise ValueError("a segmented line needs at least 2 points")
        self.pts = [tuple(p) for p in pts]
        if anchor is None:
            anchor = (sum(p[0] for p in self.pts) / len(self.pts),
                      sum(p[1] for p in self.pts) / len(self.pts))
        self.anchor = tuple(anchor)
        self.stroke = stroke
        self._aux: GestureAux | None = None

    def define_cover(self) -> Cover:
        nodes = [circle_node(p, self.JOINT_RADIUS) for p in self.pts]
        nodes += [strip_node(self.pts[i], self.pts[i + 1],
                             cursor=CursorHint.SIZE_ALL)
                  for i in range(len(self.pts) - 1)]
        return Cover(nodes)

    def move(self, dx: float, dy: float) -> None:
        self.pts = [(x + dx, y + dy) for x, y in self.pts]
        self.anchor = (self.anchor[0] + dx, self.anchor[1] + dy)
        self.update_cover()

    def begin_gesture(self, engine, p, button, node_id, node_shape) -> None:
        if button is MouseButton.RIGHT:
            self.begin_rotation(p)

    def begin_rotation(self, p: Point) -> GestureAux:
        self._aux = multi_point_rotation_start(self.anchor, self.pts, p)
        return self._aux

    def rotation_update(self, aux: GestureAux, p: Point) -> None:
        self.pts = rotate_points(self.anchor, aux, p)
        self.update_cover()

    def move_node(self, node_id: int, dx: float, dy: float, p: Point,
                  button: MouseButton) -> bool:
        if button is MouseButton.RIGHT:
            if self._aux is None:
                self.begin_rotation(p)
            self.rotation_update(self._aux, p)
            return True
        if node_id < len(self.pts):
            x, y = self.pts[node_id]
            self.pts[node_id] = (x + dx, y + dy)
            self.update_cover()
            return True
        self.move(dx, dy)
        return True

    def basic_points(self) -> list[Point]:
        return list(self.pts)
