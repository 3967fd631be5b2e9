"""Perforated boards and the plugs that fill their holes."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .. import geometry as geo
from ..cover import (Behaviour, Cover, CursorHint, NodeShape, circle_node,
                     polygon_node, rect_node, strip_node)
from ..engine import MouseButton
from ..geometry import Point, Rect, round_half_away
from .base import GestureAux, Movable
from .circles import SMALL_NODE_RADIUS, nodes_on_circle


class HoleKind(enum.Enum):
    CIRCLE = "circle"
    POLYGON = "polygon"


@dataclass
class Hole:
    kind: HoleKind
    center: Point
    radius: float
    n: int = 0          # vertex count, 0 for circles
    angle: float = 0.0

    def vertices(self) -> list[Point]:
        return geo.regular_polygon_vertices(self.center, self.radius,
                                            self.n, self.angle)


@dataclass
class FitTolerance:
    center: float = 5.0
    radius: float = 4.0
    angle: float = 0.1  # radians


def plug_fits(hole: Hole, plug: "Plug", tol: FitTolerance | None = None) -> bool:
    """Good-enough fit between a hole and a plug.

    Shapes and vertex counts must match; center, radius and (for
    polygons) the angle modulo the rotational symmetry must be within
    tolerance.
    """
    tol = tol or FitTolerance()
    if hole.kind is HoleKind.CIRCLE:
        if plug.n != 0:
            return False
    else:
        if plug.n != hole.n:
            return False
    if geo.distance(hole.center, plug.center) > tol.center:
        return False
    if abs(hole.radius - plug.radius) > tol.radius:
        return False
    if hole.kind is HoleKind.POLYGON:
        step = geo.TWO_PI / hole.n
        delta = geo.normalize_angle(plug.angle - hole.angle)
        best = min(abs(geo.normalize_angle(delta + k * step))
                   for k in range(hole.n))
        if best > tol.angle:
            return False
    return True


class PerforatedBoard(Movable):
    """Rectangular board with non-resizable holes cut by transparent nodes.

    The cover is one transparent node per hole plus the whole-area
    rectangle, so anything below the board is caught through a hole.
    """

    kind = "board"

    def __init__(self, rect: Rect, holes: list[Hole], fill: str = "#308030"):
        super().__init__()
        self.rect = rect.copy()
        self.holes = list(holes)
        self.fill = fill

    def define_cover(self) -> Cover:
        nodes = []
        for hole in self.holes:
            if hole.kind is HoleKind.CIRCLE:
                nodes.append(circle_node(hole.center, hole.radius,
                                         behaviour=Behaviour.TRANSPARENT))
            else:
                nodes.append(polygon_node(hole.vertices(),
                                          behaviour=Behaviour.TRANSPARENT))
        nodes.append(rect_node(self.rect))
        return Cover(nodes)

    def move(self, dx: float, dy: float) -> None:
        self.rect.x += dx
        self.rect.y += dy
        for hole in self.holes:
            hole.center = (hole.center[0] + dx, hole.center[1] + dy)
        self.update_cover()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        self.move(dx, dy)
        return True

    def remove_hole(self, hole: Hole) -> None:
        self.holes.remove(hole)
        self.update_cover()

    def basic_points(self) -> list[Point]:
        return self.rect.corners() + [h.center for h in self.holes]

    def bounds(self) -> Rect:
        return self.rect.copy()


class Plug(Movable):
    """Circle or regular polygon meant to close a matching hole.

    Movable by the whole body, resizable by the border (circles via an
    N-node fan, polygons via side strips with a scaling coefficient),
    rotatable with the right button.
    """

    kind = "plug"

    MIN_RADIUS = 8.0

    def __init__(self, center: Point, radius: float, n: int = 0,
                 angle: float = 0.0, fill: str = "#c0c0c0"):
        super().__init__()
        self.center = tuple(center)
        self.radius = float(radius)
        self.n = int(n)  # 0 = circle
        self.angle = geo.normalize_angle(angle)
        self.fill = fill
        self.border_nodes = nodes_on_circle(self.radius) if self.n == 0 else self.n
        self._aux: GestureAux | None = None

    def define_cover(self) -> Cover:
        if self.n == 0:
            count = self.border_nodes
            nodes = [circle_node(geo.point_at(self.center,
                                              geo.TWO_PI * i / count,
                                              self.radius), SMALL_NODE_RADIUS)
                     for i in range(count)]
            nodes.append(circle_node(self.center, self.radius,
                                     cursor=CursorHint.SIZE_ALL,
                                     clearance=False))
            return Cover(nodes)
        pts = geo.regular_polygon_vertices(self.center, self.radius, self.n,
                                           self.angle)
        nodes = [strip_node(pts[i], pts[(i + 1) % self.n], 5.0)
                 for i in range(self.n)]
        nodes.append(polygon_node(pts))
        return Cover(nodes)

    def move(self, dx: float, dy: float) -> None:
        self.center = (self.center[0] + dx, self.center[1] + dy)
        self.update_cover()

    def begin_gesture(self, engine, p, button, node_id, node_shape) -> None:
        if button is MouseButton.RIGHT:
            self.begin_rotation(p)
        elif node_shape is NodeShape.STRIP:
            self.begin_border_scaling(p)

    def begin_rotation(self, p: Point) -> GestureAux:
        mouse = geo.line_angle(self.center, p)
        self._aux = GestureAux(
            compensation=geo.normalize_angle(mouse - self.angle))
        return self._aux

    def rotation_update(self, aux: GestureAux, p: Point) -> None:
        mouse = geo.line_angle(self.center, p)
        self.angle = geo.normalize_angle(mouse - aux.compensation)
        self.update_cover()

    def begin_border_scaling(self, p: Point) -> GestureAux:
        d = geo.distance(self.center, p)
        if d == 0.0:
            raise ValueError("border scaling from the exact center")
        self._aux = GestureAux(scaling=self.radius / d)
        return self._aux

    def scale_update(self, aux: GestureAux, p: Point) -> bool:
        proposed = geo.distance(self.center, p) * aux.scaling
        if proposed < self.MIN_RADIUS:
            return False
        self.radius = float(round_half_away(proposed))
        if self.n != 0:
            self.update_cover()  # side strips keep their ids
        return True

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is MouseButton.RIGHT:
            if self._aux is None or self._aux.compensation is None:
                self.begin_rotation(p)
            self.rotation_update(self._aux, p)
            return True
        whole = self.border_nodes if self.n == 0 else self.n
        if node_id == whole:
            self.move(dx, dy)
            return True
        if self.n == 0:
            proposed = float(round_half_away(geo.distance(self.center, p)))
            if proposed != self.radius and proposed >= self.MIN_RADIUS:
                self.radius = proposed  # N-node border: rebuild on release
                return True
            return False
        if self._aux is None or self._aux.scaling is None:
            self.begin_border_scaling(p)
        return self.scale_update(self._aux, p)

    def redefine_cover_on_release(self) -> None:
        if self.n == 0:
            self.border_nodes = nodes_on_circle(self.radius)
        self.update_cover()

    def on_release(self, node_id, node_shape) -> None:
        self.redefine_cover_on_release()

    def basic_points(self) -> list[Point]:
        if self.n == 0:
            return [self.center, geo.point_at(self.center, self.angle,
                                              self.radius)]
        return [self.center] + geo.regular_polygon_vertices(
            self.center, self.radius, self.n, self.angle)
