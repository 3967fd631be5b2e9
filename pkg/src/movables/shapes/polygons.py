"""Polygon shapes: regular polygons, always-convex polygons, and the
freely reconfigurable (chatoyant) polygons."""

from __future__ import annotations

import enum

from .. import geometry as geo
from ..cover import (Cover, CursorHint, NodeShape, circle_node, polygon_node,
                     strip_node)
from ..engine import MouseButton
from ..geometry import Point, round_half_away
from .base import GestureAux, Movable

POLY_DISAPPEARANCE_RADIUS = 5.0


class PolyMode(enum.Enum):
    NON_RESIZABLE = "non_resizable"
    ZOOM_BY_VERTICES = "zoom_by_vertices"
    ZOOM_BY_BORDER = "zoom_by_border"


class MovementAllowed(enum.Enum):
    ANY = "any"
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


class RegularPolyShape(Movable):
    """Regular polygon with three resizing variants and limitable movement.

    Border zoom keeps the catch-time ratio of radius to mouse distance (the
    scaling coefficient) for the whole gesture. The disappearing variant
    drops the minimum radius and is deleted when released below 5 px.
    """

    kind = "regular_poly"

    def __init__(self, center: Point, radius: float, n: int,
                 angle: float = 0.0, mode: PolyMode = PolyMode.ZOOM_BY_BORDER,
                 movement: MovementAllowed = MovementAllowed.ANY,
                 min_radius: float = 10.0, disappearance: bool = False,
                 fill: str = "#9070d0"):
        super().__init__()
        self.center = tuple(center)
        self.radius = float(radius)
        self.n = int(n)
        self.angle = geo.normalize_angle(angle)
        self.mode = mode
        self.movement = movement
        self.min_radius = 1.0 if disappearance else float(min_radius)
        self.disappearance = disappearance
        self.fill = fill
        self._aux: GestureAux | None = None

    def vertices(self) -> list[Point]:
        return geo.regular_polygon_vertices(self.center, self.radius,
                                            self.n, self.angle)

    def _whole_cursor(self) -> CursorHint:
        if self.movement is MovementAllowed.HORIZONTAL:
            return CursorHint.SIZE_WE
        if self.movement is MovementAllowed.VERTICAL:
            return CursorHint.SIZE_NS
        return CursorHint.SIZE_ALL

    def define_cover(self) -> Cover:
        pts = self.vertices()
        whole = polygon_node(pts, cursor=self._whole_cursor())
        if self.mode is PolyMode.NON_RESIZABLE:
            return Cover([whole])
        if self.mode is PolyMode.ZOOM_BY_VERTICES:
            nodes = [circle_node(pt, 5.0) for pt in pts]
        else:
            nodes = [strip_node(pts[i], pts[(i + 1) % self.n], 5.0)
                     for i in range(self.n)]
        return Cover(nodes + [whole])

    def move(self, dx: float, dy: float) -> None:
        if self.movement is MovementAllowed.HORIZONTAL:
            dy = 0.0
        elif self.movement is MovementAllowed.VERTICAL:
            dx = 0.0
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
        if proposed < self.min_radius:
            return False
        self.radius = float(round_half_away(proposed))
        self.update_cover()
        return True

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is MouseButton.RIGHT:
            if self._aux is None or self._aux.compensation is None:
                self.begin_rotation(p)
            self.rotation_update(self._aux, p)
            return True
        if self.mode is PolyMode.NON_RESIZABLE or node_id == self.n:
            self.move(dx, dy)
            return True
        if self.mode is PolyMode.ZOOM_BY_VERTICES:
            # vertex circles snap the radius straight to the mouse distance
            d = geo.distance(self.center, p)
            if d >= self.min_radius:
                self.radius = float(round_half_away(d))
                self.update_cover()
                return True
            return False
        if self._aux is None or self._aux.scaling is None:
            self.begin_border_scaling(p)
        return self.scale_update(self._aux, p)

    def should_disappear(self, node_id, node_shape) -> bool:
        return (self.disappearance and node_shape is NodeShape.STRIP and
                self.radius < POLY_DISAPPEARANCE_RADIUS)

    def basic_points(self) -> list[Point]:
        return [self.center] + self.vertices()


class ConvexPolyShape(Movable):
    """Arbitrary polygon that the vertex checks keep convex at all times.

    A proposed vertex position is accepted only when it stays farther
    than min_side from both neighbours and passes the three side-of-line
    tests against the surrounding vertices.
    """

    kind = "convex_poly"

    def __init__(self, pts: list[Point], min_side: float = 10.0,
                 fill: str = "#50a0a0"):
        super().__init__()
        if len(pts) < 4:
            raise ValueError("an always-convex polygon needs >= 4 vertices")
        self.pts = [tuple(p) for p in pts]
        self.min_side = float(min_side)
        self.fill = fill

    def define_cover(self) -> Cover:
        nodes = [circle_node(p, 4.0) for p in self.pts]
        return Cover(nodes + [polygon_node(self.pts)])

    def move(self, dx: float, dy: float) -> None:
        self.pts = [(x + dx, y + dy) for x, y in self.pts]
        self.update_cover()

    def vertex_move(self, i: int, dx: float, dy: float) -> bool:
        pts = self.pts
        n = len(pts)
        new = (pts[i][0] + dx, pts[i][1] + dy)
        j_next = (i + 1) % n
        j_next2 = (i + 2) % n
        j_prev = (i - 1) % n
        j_prev2 = (i - 2) % n
        if geo.distance(pts[j_prev], new) <= self.min_side:
            return False
        if geo.distance(pts[j_next], new) <= self.min_side:
            return False
        try:
            ok = (geo.opposite_side(pts[j_prev], pts[j_next], new, pts[j_next2]) and
                  geo.same_side(pts[j_prev2], pts[j_prev], new, pts[j_next]) and
                  geo.same_side(pts[j_next2], pts[j_next], new, pts[j_prev]))
        except ValueError:
            return False
        if not ok:
            return False
        self.pts[i] = new
        self.update_cover()
        return True

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if node_id < len(self.pts):
            return self.vertex_move(node_id, dx, dy)
        self.move(dx, dy)
        return True

    def basic_points(self) -> list[Point]:
        return list(self.pts)


class ChatoyantPolyShape(Movable):
    """Polygon with free vertices and a free center point.

    The cover has 3N+1 nodes: vertex circles, the center circle, border
    strips (zoom), and center-fan triangles (whole-object move). Zoom and
    rotation fix per-vertex coefficients at the catch.
    """

    kind = "chatoyant_poly"

    ZOOM_MIN_MOUSE_DISTANCE = 25.0

    def __init__(self, pts: list[Point], center: Point | None = None,
                 fill: str = "#c080b0"):
        super().__init__()
        if len(pts) < 3:
            raise ValueError("a chatoyant polygon needs >= 3 vertices")
        self.pts = [tuple(p) for p in pts]
        if center is None:
            center = (sum(p[0] for p in self.pts) / len(self.pts),
                      sum(p[1] for p in self.pts) / len(self.pts))
        self.center = tuple(center)
        self.fill = fill
        self._aux: GestureAux | None = None

    def define_cover(self) -> Cover:
        n = len(self.pts)
        nodes = [circle_node(p, 6.0) for p in self.pts]
        nodes.append(circle_node(self.center, 6.0))
        for i in range(n):
            nodes.append(strip_node(self.pts[i], self.pts[(i + 1) % n]))
        for i in range(n):
            tri = [self.pts[i], self.pts[(i + 1) % n], self.center]
            nodes.append(polygon_node(tri))
        return Cover(nodes)

    def move(self, dx: float, dy: float) -> None:
        self.pts = [(x + dx, y + dy) for x, y in self.pts]
        self.center = (self.center[0] + dx, self.center[1] + dy)
        self.update_cover()

    def _vertex_arrays(self) -> tuple[tuple[float, ...], tuple[float, ...]]:
        radii = tuple(geo.distance(self.center, p) for p in self.pts)
        angles = tuple(geo.line_angle(self.center, p) for p in self.pts)
        return radii, angles

    def begin_gesture(self, engine, p, button, node_id, node_shape) -> None:
        if button is MouseButton.RIGHT:
            self.begin_rotation(p)
        elif node_shape is NodeShape.STRIP:
            self.begin_border_scaling(p)

    def begin_rotation(self, p: Point) -> GestureAux:
        radii, angles = self._vertex_arrays()
        mouse = geo.line_angle(self.center, p)
        comps = tuple(geo.normalize_angle(mouse - a) for a in angles)
        self._aux = GestureAux(compensations=comps, radii=radii)
        return self._aux

    def rotation_update(self, aux: GestureAux, p: Point) -> None:
        mouse = geo.line_angle(self.center, p)
        self.pts = [geo.point_at(self.center,
                                 geo.normalize_angle(mouse - comp), radius)
                    for comp, radius in zip(aux.compensations, aux.radii)]
        self.update_cover()

    def begin_border_scaling(self, p: Point) -> GestureAux:
        radii, angles = self._vertex_arrays()
        d = geo.distance(self.center, p)
        if d == 0.0:
            raise ValueError("border scaling from the exact center")
        self._aux = GestureAux(scalings=tuple(r / d for r in radii),
                               angles=angles)
        return self._aux

    def scale_update(self, aux: GestureAux, p: Point) -> bool:
        d = geo.distance(self.center, p)
        if d <= self.ZOOM_MIN_MOUSE_DISTANCE:
            return False
        self.pts = [geo.point_at(self.center, angle, d * scaling)
                    for angle, scaling in zip(aux.angles, aux.scalings)]
        self.update_cover()
        return True

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        n = len(self.pts)
        if button is MouseButton.RIGHT:
            if self._aux is None or not self._aux.compensations:
                self.begin_rotation(p)
            self.rotation_update(self._aux, p)
            return True
        if node_id < n:
            x, y = self.pts[node_id]
            self.pts[node_id] = (x + dx, y + dy)
            self.update_cover()
            return True
        if node_id == n:
            self.center = (self.center[0] + dx, self.center[1] + dy)
            self.update_cover()
            return True
        if node_id >= 2 * n + 1:
            self.move(dx, dy)
            return True
        if self._aux is None or not self._aux.scalings:
            self.begin_border_scaling(p)
        return self.scale_update(self._aux, p)

    def basic_points(self) -> list[Point]:
        return list(self.pts) + [self.center]
