"""Circle sectors: the four resizing variants unified by three flags.

The sweep never exceeds half a turn. Two transparent rectangles burn the
unused half-planes out of the big circular node, so the sector is
grabbed only inside its own pie slice.
"""

from __future__ import annotations

import math

from .. import geometry as geo
from ..cover import (Behaviour, Cover, CursorHint, circle_node, polygon_node,
                     strip_node)
from ..engine import MouseButton
from ..geometry import Point, round_half_away
from .base import GestureAux, Movable
from .circles import SMALL_NODE_RADIUS, nodes_on_arc


class SectorShape(Movable):
    """Sector of a circle: center, radius, start angle and sweep.

    Flags select the resizable parts: the arc (radius), the end side
    (angle_start + sweep) and the start side. The end side is the one a
    renderer draws wide, so a fully closed sector stays discoverable.
    """

    kind = "sector"

    def __init__(self, center: Point, radius: float, angle_start: float,
                 angle_sweep: float, *, arc_resizable: bool = False,
                 end_side_movable: bool = False,
                 start_side_movable: bool = False,
                 min_radius: float = 15.0, fill: str = "#e0a040"):
        super().__init__()
        if abs(angle_sweep) > math.pi:
            raise ValueError("sector sweep cannot exceed half a turn")
        self.center = tuple(center)
        self.radius = float(radius)
        self.angle_start = geo.normalize_angle(angle_start)
        self.angle_sweep = float(angle_sweep)
        self.arc_resizable = arc_resizable
        self.end_side_movable = end_side_movable
        self.start_side_movable = start_side_movable
        self.min_radius = float(min_radius)
        self.fill = fill
        # sweep direction chosen at construction; kept when the sweep hits 0
        self._sweep_sign = 1.0 if angle_sweep >= 0 else -1.0
        self._aux: GestureAux | None = None
        self._layout: dict = {}

    # -- cover ---------------------------------------------------------------

    def _transparent_rects(self) -> tuple[list[Point], list[Point]]:
        c = self.center
        r = self.radius
        if self.angle_sweep >= 0:
            angle_b = self.angle_start
            angle_a = self.angle_start + self.angle_sweep
        else:
            angle_a = self.angle_start
            angle_b = self.angle_start + self.angle_sweep
        pt_a = geo.point_at(c, angle_a, r)
        pt_b = geo.point_at(c, angle_b, r)
        pts_a = [pt_a,
                 geo.point_at(pt_a, angle_a + math.pi / 2.0, r),
                 geo.point_at(c, angle_a + 3.0 * math.pi / 4.0, r * math.sqrt(2.0)),
                 geo.point_at(c, angle_a - math.pi, r)]
        pts_b = [pt_b,
                 geo.point_at(c, angle_b - math.pi, r),
                 geo.point_at(c, angle_b - 3.0 * math.pi / 4.0, r * math.sqrt(2.0)),
                 geo.point_at(pt_b, angle_b - math.pi / 2.0, r)]
        return pts_a, pts_b

    def arc_node_count(self) -> int:
        return nodes_on_arc(self.angle_sweep, self.radius)

    def node_counts(self) -> dict[str, int]:
        return {"arc": self.arc_node_count()}

    def define_cover(self) -> Cover:
        nodes = []
        layout = {"end_side": None, "start_side": None, "arc": None}
        c = self.center
        if self.end_side_movable:
            layout["end_side"] = len(nodes)
            nodes.append(strip_node(
                c, geo.point_at(c, self.angle_start + self.angle_sweep,
                                self.radius)))
        if self.start_side_movable:
            layout["start_side"] = len(nodes)
            nodes.append(strip_node(
                c, geo.point_at(c, self.angle_start, self.radius)))
        if self.arc_resizable:
            n = self.arc_node_count()
            layout["arc"] = (len(nodes), n)
            delta = self.angle_sweep / (n - 1)
            for i in range(n):
                nodes.append(circle_node(
                    geo.point_at(c, self.angle_start + i * delta, self.radius),
                    SMALL_NODE_RADIUS))
        pts_a, pts_b = self._transparent_rects()
        nodes.append(polygon_node(pts_a, behaviour=Behaviour.TRANSPARENT))
        nodes.append(polygon_node(pts_b, behaviour=Behaviour.TRANSPARENT))
        nodes.append(circle_node(c, self.radius, cursor=CursorHint.SIZE_ALL,
                                 clearance=False))
        self._layout = layout
        return Cover(nodes)

    def _node_role(self, node_id: int) -> str:
        lay = self._layout
        if lay.get("end_side") == node_id:
            return "end_side"
        if lay.get("start_side") == node_id:
            return "start_side"
        arc = lay.get("arc")
        if arc is not None and arc[0] <= node_id < arc[0] + arc[1]:
            return "arc"
        return "whole"

    # -- movement --------------------------------------------------------------

    def move(self, dx: float, dy: float) -> None:
        self.center = (self.center[0] + dx, self.center[1] + dy)
        self.update_cover()

    def begin_gesture(self, engine, p, button, node_id, node_shape) -> None:
        if button is MouseButton.RIGHT:
            self.begin_rotation(p)
            return
        role = self._node_role(node_id)
        if role in ("end_side", "start_side"):
            self.start_resectoring(0 if role == "end_side" else 1, p)

    def begin_rotation(self, p: Point) -> GestureAux:
        mouse = geo.line_angle(self.center, p)
        self._aux = GestureAux(
            compensation=geo.normalize_angle(mouse - self.angle_start))
        return self._aux

    def rotation_update(self, aux: GestureAux, p: Point) -> None:
        mouse = geo.line_angle(self.center, p)
        self.angle_start = geo.normalize_angle(mouse - aux.compensation)
        self.update_cover()

    def start_resectoring(self, side: int, p: Point) -> GestureAux:
        """Fix the half-plane and mouse offset for a side move.

        side 0 is the end side (start stays fixed), side 1 the start side.
        The diameter along the fixed side plus a witness point ptIn bound
        the half-plane the moving side may sweep through.
        """
        c = self.center
        r = self.radius
        if self.angle_sweep != 0.0:
            self._sweep_sign = 1.0 if self.angle_sweep > 0 else -1.0
        sweep_sign = self._sweep_sign
        if side == 0:
            fixed_angle = self.angle_start
            moving_angle = self.angle_start + self.angle_sweep
            angle_to_in = fixed_angle + sweep_sign * math.pi / 2.0
        else:
            fixed_angle = geo.normalize_angle(self.angle_start + self.angle_sweep)
            moving_angle = self.angle_start
            angle_to_in = fixed_angle - sweep_sign * math.pi / 2.0
        mouse = geo.line_angle(c, p)
        seg0 = geo.point_at(c, fixed_angle, r)
        # mirror algebraically so the diameter passes exactly through c
        seg1 = (2.0 * c[0] - seg0[0], 2.0 * c[1] - seg0[1])
        self._aux = GestureAux(
            compensation=geo.normalize_angle(mouse - moving_angle),
            extra={
                "side": side,
                "fixed_angle": fixed_angle,
                "seg0": seg0,
                "seg1": seg1,
                "pt_in": geo.point_at(c, angle_to_in, r),
            })
        return self._aux

    def side_move(self, aux: GestureAux, node_side: int, p: Point) -> bool:
        """Move a side toward the mouse while it stays in the allowed half."""
        if geo.opposite_side(aux.extra["seg0"], aux.extra["seg1"], p,
                             aux.extra["pt_in"]):
            return False
        mouse = geo.line_angle(self.center, p)
        slider = geo.normalize_angle(mouse - aux.compensation)
        fixed = aux.extra["fixed_angle"]
        if node_side == 0:
            sweep = geo.normalize_angle(slider - fixed)
        else:
            sweep = geo.normalize_angle(fixed - slider)
        if self._sweep_sign < 0 and sweep == math.pi:
            sweep = -math.pi  # the wrap boundary belongs to the allowed half
        if self._sweep_sign * sweep < 0:
            return False
        self.angle_sweep = sweep
        if node_side == 1:
            self.angle_start = geo.normalize_angle(fixed - sweep)
        self.update_cover()
        return True

    def arc_resize(self, p: Point) -> bool:
        proposed = float(round_half_away(geo.distance(self.center, p)))
        if proposed != self.radius and proposed >= self.min_radius:
            self.radius = proposed
            return True
        return False

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is MouseButton.RIGHT:
            if self._aux is None or self._aux.compensation is None:
                self.begin_rotation(p)
            self.rotation_update(self._aux, p)
            return True
        role = self._node_role(node_id)
        if role == "whole":
            self.move(dx, dy)
            return True
        if role == "arc":
            return self.arc_resize(p)  # N-node part: rebuild happens on release
        side = 0 if role == "end_side" else 1
        if self._aux is None or self._aux.extra.get("side") != side:
            self.start_resectoring(side, p)
        return self.side_move(self._aux, side, p)

    def redefine_cover_on_release(self) -> None:
        self.update_cover()

    def on_release(self, node_id, node_shape) -> None:
        self.redefine_cover_on_release()

    def basic_points(self) -> list[Point]:
        return [self.center,
                geo.point_at(self.center, self.angle_start, self.radius),
                geo.point_at(self.center,
                             self.angle_start + self.angle_sweep, self.radius)]
