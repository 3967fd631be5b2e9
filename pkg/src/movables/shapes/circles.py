"""Circular shapes: rotatable circles, N-node circles/rings/strips, and
circles with sliding partitions.

N-node covers approximate curved borders with many small circular nodes
(radius 5, neighbours 8 px apart). Their node count depends on the size,
so such covers may only be rebuilt when the object is released; the
rounded strip is the documented exception (its width nodes keep ids 0
and 1 in every cover).
"""

from __future__ import annotations

import math

from .. import geometry as geo
from ..cover import Behaviour, Cover, CursorHint, circle_node, strip_node
from ..engine import MouseButton
from ..geometry import Point, round_half_away
from .base import GestureAux, Movable, single_angle_rotation_start

SMALL_NODE_RADIUS = 5.0
NEIGHBOUR_SPACING = 8.0


def nodes_on_circle(radius: float) -> int:
    """Small-node count for a full circular border."""
    return round_half_away(geo.TWO_PI * radius / NEIGHBOUR_SPACING)


def nodes_on_arc(sweep: float, radius: float) -> int:
    """Small-node count for an arc; never fewer than two."""
    return max(round_half_away(abs(sweep) * radius / NEIGHBOUR_SPACING) + 1, 2)


def nnode_counts(shape) -> dict[str, int]:
    """Current node-count record of any N-node shape."""
    return shape.node_counts()


class SectoredCircle(Movable):
    """Non-resizable multicolored circle: movable and rotatable.

    A single circular node is enough; forward movement and rotation are
    told apart by the pressed button.
    """

    kind = "sectored_circle"

    def __init__(self, center: Point, radius: float, angle: float = 0.0,
                 weights: list[float] | None = None,
                 fills: list[str] | None = None):
        super().__init__()
        self.center = tuple(center)
        self.radius = float(radius)
        self.angle = geo.normalize_angle(angle)
        self.weights = list(weights or [1.0, 1.0, 1.0, 1.0])
        self.fills = fills or ["#4070d0", "#d04040", "#30a060", "#e0c040"]
        self._aux: GestureAux | None = None

    def define_cover(self) -> Cover:
        return Cover([circle_node(self.center, self.radius,
                                  cursor=CursorHint.SIZE_ALL)])

    def move(self, dx: float, dy: float) -> None:
        self.center = (self.center[0] + dx, self.center[1] + dy)
        self.update_cover()

    def begin_gesture(self, engine, p, button, node_id, node_shape) -> None:
        if button is MouseButton.RIGHT:
            self.begin_rotation(p)

    def begin_rotation(self, p: Point) -> GestureAux:
        self._aux = single_angle_rotation_start(self.center, self.angle, p)
        return self._aux

    def rotation_update(self, aux: GestureAux, p: Point) -> None:
        mouse = geo.line_angle(self.center, p)
        self.angle = geo.normalize_angle(mouse - aux.compensation)

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is MouseButton.LEFT:
            self.move(dx, dy)
            return True
        if self._aux is None:
            self.begin_rotation(p)
        self.rotation_update(self._aux, p)
        return True

    def basic_points(self) -> list[Point]:
        return [self.center,
                geo.point_at(self.center, self.angle, self.radius)]


class NnodeCircle(Movable):
    """Circle resizable by any border point through its N-node cover."""

    kind = "nnode_circle"

    def __init__(self, center: Point, radius: float, min_radius: float = 10.0,
                 fill: str = "#60b0e0"):
        super().__init__()
        self.center = tuple(center)
        self.radius = float(radius)
        self.min_radius = float(min_radius)
        self.fill = fill
        self.border_nodes = nodes_on_circle(self.radius)

    def node_counts(self) -> dict[str, int]:
        return {"border": nodes_on_circle(self.radius)}

    def define_cover(self) -> Cover:
        n = self.border_nodes
        nodes = [circle_node(geo.point_at(self.center, geo.TWO_PI * i / n,
                                          self.radius), SMALL_NODE_RADIUS,
                             clearance=False)
                 for i in range(n)]
        nodes.append(circle_node(self.center, self.radius,
                                 cursor=CursorHint.SIZE_ALL, clearance=False))
        return Cover(nodes)

    def move(self, dx: float, dy: float) -> None:
        self.center = (self.center[0] + dx, self.center[1] + dy)
        self.update_cover()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if node_id == self.border_nodes:
            self.move(dx, dy)
            return True
        # The node count is frozen while caught: the cover is rebuilt on release.
        new_radius = float(round_half_away(geo.distance(self.center, p)))
        if new_radius != self.radius and new_radius >= self.min_radius:
            self.radius = new_radius
            return True
        return False

    def redefine_cover_on_release(self) -> None:
        self.border_nodes = nodes_on_circle(self.radius)
        self.update_cover()

    def on_release(self, node_id, node_shape) -> None:
        self.redefine_cover_on_release()

    def basic_points(self) -> list[Point]:
        return [self.center, geo.point_at(self.center, 0.0, self.radius)]


class NnodeRing(Movable):
    """Ring resizable on both borders; the hole is a transparent node.

    Cover order: outer border circles, inner border circles, transparent
    hole circle, big circle. Objects underneath are caught through the
    hole.
    """

    kind = "nnode_ring"

    def __init__(self, center: Point, r_outer: float, r_inner: float,
                 min_inner: float = 10.0, min_width: float = 10.0,
                 fill: str = "#d08040"):
        super().__init__()
        self.center = tuple(center)
        self.r_outer = float(r_outer)
        self.r_inner = float(r_inner)
        self.min_inner = float(min_inner)
        self.min_width = float(min_width)
        self.fill = fill
        self.outer_nodes = nodes_on_circle(self.r_outer)
        self.inner_nodes = nodes_on_circle(self.r_inner)

    def node_counts(self) -> dict[str, int]:
        return {"outer": nodes_on_circle(self.r_outer),
                "inner": nodes_on_circle(self.r_inner)}

    def define_cover(self) -> Cover:
        nodes = []
        for i in range(self.outer_nodes):
            nodes.append(circle_node(
                geo.point_at(self.center, geo.TWO_PI * i / self.outer_nodes,
                             self.r_outer), SMALL_NODE_RADIUS,
                clearance=False))
        for i in range(self.inner_nodes):
            nodes.append(circle_node(
                geo.point_at(self.center, geo.TWO_PI * i / self.inner_nodes,
                             self.r_inner), SMALL_NODE_RADIUS,
                clearance=False))
        nodes.append(circle_node(self.center, self.r_inner,
                                 behaviour=Behaviour.TRANSPARENT,
                                 cursor=CursorHint.DEFAULT, clearance=False))
        nodes.append(circle_node(self.center, self.r_outer,
                                 cursor=CursorHint.SIZE_ALL, clearance=False))
        return Cover(nodes)

    def move(self, dx: float, dy: float) -> None:
        self.center = (self.center[0] + dx, self.center[1] + dy)
        self.update_cover()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if node_id >= self.outer_nodes + self.inner_nodes:
            self.move(dx, dy)
            return True
        proposed = float(round_half_away(geo.distance(self.center, p)))
        if node_id < self.outer_nodes:
            if self.r_inner + self.min_width <= proposed:
                self.r_outer = proposed
                return True
            return False
        if self.min_inner <= proposed <= self.r_outer - self.min_width:
            self.r_inner = proposed
            return True
        return False

    def redefine_cover_on_release(self) -> None:
        self.outer_nodes = nodes_on_circle(self.r_outer)
        self.inner_nodes = nodes_on_circle(self.r_inner)
        self.update_cover()

    def on_release(self, node_id, node_shape) -> None:
        if node_id < self.outer_nodes + self.inner_nodes:
            self.redefine_cover_on_release()

    def basic_points(self) -> list[Point]:
        return [self.center,
                geo.point_at(self.center, 0.0, self.r_inner),
                geo.point_at(self.center, 0.0, self.r_outer)]


class NnodeStrip(Movable):
    """Rounded strip: length changed by the curved ends, width by the
    straight sides, movable by any inner point, rotatable.

    Width nodes keep ids 0 and 1 in every cover, so this shape may
    rebuild its cover mid-gesture (the safe exception to the N-node
    rule).
    """

    kind = "nnode_strip"

    MIN_RADIUS = 12.0
    MIN_STRAIGHT = 20.0

    def __init__(self, pt_c0: Point, pt_c1: Point, radius: float,
                 fill: str = "#70c070"):
        super().__init__()
        self.pt_c0 = tuple(pt_c0)
        self.pt_c1 = tuple(pt_c1)
        self.radius = max(float(radius), self.MIN_RADIUS)
        self.fill = fill
        self._aux: GestureAux | None = None

    @property
    def angle(self) -> float:
        return geo.line_angle(self.pt_c0, self.pt_c1)

    @property
    def straight_len(self) -> float:
        return geo.distance(self.pt_c0, self.pt_c1)

    def _strip_center(self) -> Point:
        return ((self.pt_c0[0] + self.pt_c1[0]) / 2.0,
                (self.pt_c0[1] + self.pt_c1[1]) / 2.0)

    def corner_points(self) -> list[Point]:
        """Rectangle-part corners: [c0 side, c1 side] x [left, right of axis]."""
        a = self.angle
        return [
            geo.point_at(self.pt_c0, a + math.pi / 2.0, self.radius),
            geo.point_at(self.pt_c1, a + math.pi / 2.0, self.radius),
            geo.point_at(self.pt_c1, a - math.pi / 2.0, self.radius),
            geo.point_at(self.pt_c0, a - math.pi / 2.0, self.radius),
        ]

    def fan_count(self) -> int:
        return nodes_on_arc(math.pi, self.radius)

    def node_counts(self) -> dict[str, int]:
        return {"fan": self.fan_count()}

    def define_cover(self) -> Cover:
        pts = self.corner_points()
        a = self.angle
        n_half = self.fan_count()
        small_angle = math.pi / (n_half - 1)
        nodes = [
            strip_node(pts[0], pts[1], SMALL_NODE_RADIUS),
            strip_node(pts[2], pts[3], SMALL_NODE_RADIUS),
        ]
        for i in range(n_half):
            nodes.append(circle_node(
                geo.point_at(self.pt_c0, a + math.pi / 2.0 + i * small_angle,
                             self.radius), SMALL_NODE_RADIUS))
        for i in range(n_half):
            nodes.append(circle_node(
                geo.point_at(self.pt_c1, a - math.pi / 2.0 + i * small_angle,
                             self.radius), SMALL_NODE_RADIUS))
        whole = strip_node(self.pt_c0, self.pt_c1, self.radius,
                           cursor=CursorHint.SIZE_ALL, clearance=False)
        return Cover(nodes + [whole])

    def move(self, dx: float, dy: float) -> None:
        self.pt_c0 = (self.pt_c0[0] + dx, self.pt_c0[1] + dy)
        self.pt_c1 = (self.pt_c1[0] + dx, self.pt_c1[1] + dy)
        self.update_cover()

    def begin_gesture(self, engine, p, button, node_id, node_shape) -> None:
        self.initial_catch(p)
        if button is MouseButton.LEFT:
            self.start_length_change(p, node_id)

    def initial_catch(self, p: Point) -> GestureAux:
        center = self._strip_center()
        mouse = geo.line_angle(center, p)
        self._aux = GestureAux(
            compensation=geo.normalize_angle(mouse - self.angle),
            start_distance=geo.distance(center, p))
        self._aux.extra["length"] = self.straight_len
        return self._aux

    def _axis_reach(self, far: Point, near: Point, p: Point) -> float:
        """Projection of p onto the axis, measured from the far end."""
        ux = near[0] - far[0]
        uy = near[1] - far[1]
        length = math.hypot(ux, uy)
        return ((p[0] - far[0]) * ux + (p[1] - far[1]) * uy) / length

    def start_length_change(self, p: Point, node_id: int) -> None:
        """Remember how far beyond the dragged end the grab landed.

        The mouse keeps its distance to the cross-line through the fixed
        end, so off-axis grabs track the axis without warping.
        """
        n_half = self.fan_count()
        if node_id < 2 or node_id >= 2 + 2 * n_half:
            return
        moving = 0 if node_id < 2 + n_half else 1
        far = self.pt_c1 if moving == 0 else self.pt_c0
        near = self.pt_c0 if moving == 0 else self.pt_c1
        reach = self._axis_reach(far, near, p)
        self._aux.extra["length_offset"] = reach - self.straight_len
        self._aux.extra["moving_end"] = moving

    def _pose_ok(self, c0: Point, c1: Point, radius: float) -> bool:
        """Hook for restricted variants (labyrinth strip overrides)."""
        return True

    def _reject(self) -> bool:
        """Hook: restricted variants warp the cursor back here."""
        return False

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if self._aux is None:
            self.initial_catch(p)
        if button is MouseButton.RIGHT:
            return self._rotate(p)
        n_half = self.fan_count()
        last = 2 + 2 * n_half
        if node_id in (0, 1):
            return self._change_width(node_id, p)
        if node_id < last:
            return self._change_length(p)
        return self._translate(dx, dy)

    def _translate(self, dx, dy) -> bool:
        c0 = (self.pt_c0[0] + dx, self.pt_c0[1] + dy)
        c1 = (self.pt_c1[0] + dx, self.pt_c1[1] + dy)
        if not self._move_ok(c0, c1):
            return self._reject()
        self.pt_c0, self.pt_c1 = c0, c1
        self.update_cover()
        return True

    def _move_ok(self, c0: Point, c1: Point) -> bool:
        return self._pose_ok(c0, c1, self.radius)

    def _change_width(self, node_id: int, p: Point) -> bool:
        pts = self.corner_points()
        witness = pts[0] if node_id == 0 else pts[3]
        try:
            if not geo.same_side(self.pt_c0, self.pt_c1, p, witness):
                return False
        except ValueError:
            return False
        dist = geo.point_segment_distance(
            p, self.pt_c0, self.pt_c1)[0]
        if dist < self.MIN_RADIUS:
            return False
        if not self._pose_ok(self.pt_c0, self.pt_c1, dist):
            return self._reject()
        self.radius = dist
        self.update_cover()  # ids 0 and 1 are stable: rebuild is safe
        return True

    def _change_length(self, p: Point) -> bool:
        aux = self._aux
        if "moving_end" not in aux.extra:
            return False
        moving = aux.extra["moving_end"]
        far = self.pt_c1 if moving == 0 else self.pt_c0
        near = self.pt_c0 if moving == 0 else self.pt_c1
        new_len = self._axis_reach(far, near, p) - aux.extra["length_offset"]
        if new_len < self.MIN_STRAIGHT:
            return False
        new_near = geo.point_at(far, geo.line_angle(far, near), new_len)
        c0, c1 = (new_near, far) if moving == 0 else (far, new_near)
        if not self._pose_ok(c0, c1, self.radius):
            return self._reject()
        self.pt_c0, self.pt_c1 = c0, c1
        self.update_cover()
        return True

    def _rotate(self, p: Point) -> bool:
        aux = self._aux
        center = self._strip_center()
        mouse = geo.line_angle(center, p)
        new_angle = geo.normalize_angle(mouse - aux.compensation)
        half = self.straight_len / 2.0
        c1 = geo.point_at(center, new_angle, half)
        c0 = geo.point_at(center, new_angle + math.pi, half)
        if not self._pose_ok(c0, c1, self.radius):
            return self._reject()
        self.pt_c0, self.pt_c1 = c0, c1
        self.update_cover()
        return True

    def basic_points(self) -> list[Point]:
        return [self.pt_c0, self.pt_c1] + self.corner_points()


class PartitionedCircle(Movable):
    """Multicolored circle whose sector partitions slide.

    Sector weights are re-split between the two neighbours of a moved
    partition, so the sweep total stays one full turn. The border keeps
    an N-node cover for resizing.
    """

    kind = "partitioned_circle"

    MIN_RADIUS = 15.0
    MIN_SECTOR = 0.05  # radians

    def __init__(self, center: Point, radius: float, angle: float = 0.0,
                 values: list[float] | None = None,
                 fills: list[str] | None = None):
        super().__init__()
        if radius < self.MIN_RADIUS:
            raise ValueError("radius below the partitioned-circle minimum")
        self.center = tuple(center)
        self.radius = float(radius)
        self.angle = geo.normalize_angle(angle)
        self.values = [float(v) for v in (values or [1.0, 1.0, 1.0, 1.0])]
        if len(self.values) < 2:
            raise ValueError("a partitioned circle needs at least 2 sectors")
        self.fills = fills or ["#4070d0", "#d04040", "#30a060", "#e0c040",
                               "#b060c0", "#808080"][:len(self.values)]
        self.border_nodes = nodes_on_circle(self.radius)
        self._aux: GestureAux | None = None

    def sweeps(self) -> list[float]:
        total = sum(self.values)
        return [geo.TWO_PI * v / total for v in self.values]

    def partition_angles(self) -> list[float]:
        angles = []
        a = self.angle
        for sweep in self.sweeps():
            angles.append(geo.normalize_angle(a))
            a += sweep
        return angles

    def node_counts(self) -> dict[str, int]:
        return {"border": nodes_on_circle(self.radius)}

    def define_cover(self) -> Cover:
        n = self.border_nodes
        nodes = [circle_node(geo.point_at(self.center, geo.TWO_PI * i / n,
                                          self.radius), SMALL_NODE_RADIUS,
                             clearance=False)
                 for i in range(n)]
        for a in self.partition_angles():
            nodes.append(strip_node(self.center,
                                    geo.point_at(self.center, a, self.radius),
                                    clearance=False))
        nodes.append(circle_node(self.center, self.radius,
                                 cursor=CursorHint.SIZE_ALL, clearance=False))
        return Cover(nodes)

    def move(self, dx: float, dy: float) -> None:
        self.center = (self.center[0] + dx, self.center[1] + dy)
        self.update_cover()

    def begin_gesture(self, engine, p, button, node_id, node_shape) -> None:
        from ..cover import NodeShape
        if button is MouseButton.LEFT and node_shape is NodeShape.STRIP:
            self.start_resectoring(node_id)

    def start_resectoring(self, node_id: int) -> GestureAux:
        """Angular window for the caught partition from its two neighbours."""
        j = node_id - self.border_nodes
        sweeps = self.sweeps()
        k = len(self.values)
        prev = (j - 1) % k
        boundary = self.partition_angles()[j]
        self._aux = GestureAux(
            limits=(-(sweeps[prev] - self.MIN_SECTOR),
                    sweeps[j] - self.MIN_SECTOR),
            extra={"partition": j, "prev": prev,
                   "boundary": boundary,
                   "pair_sum": self.values[prev] + self.values[j],
                   "pair_sweep": sweeps[prev] + sweeps[j]})
        return self._aux

    def partition_move(self, aux: GestureAux, p: Point) -> bool:
        mouse = geo.line_angle(self.center, p)
        delta = geo.normalize_angle(mouse - aux.extra["boundary"])
        lo, hi = aux.limits
        if not lo < delta < hi:
            return False
        j = aux.extra["partition"]
        prev = aux.extra["prev"]
        pair_sum = aux.extra["pair_sum"]
        pair_sweep = aux.extra["pair_sweep"]
        sweeps = self.sweeps()
        new_prev_sweep = sweeps[prev] + delta
        self.values[prev] = pair_sum * new_prev_sweep / pair_sweep
        self.values[j] = pair_sum - self.values[prev]
        if j == 0:
            self.angle = geo.normalize_angle(mouse)
        aux.extra["boundary"] = mouse
        aux.limits = (lo - delta, hi - delta)
        return True

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if node_id < self.border_nodes:
            proposed = float(round_half_away(geo.distance(self.center, p)))
            if proposed != self.radius and proposed >= self.MIN_RADIUS:
                self.radius = proposed
                return True
            return False
        if node_id < self.border_nodes + len(self.values):
            if self._aux is None or self._aux.extra.get("partition") != \
                    node_id - self.border_nodes:
                self.start_resectoring(node_id)
            accepted = self.partition_move(self._aux, p)
            if accepted:
                self.update_cover()  # partition strips: ids stay in place
            return accepted
        self.move(dx, dy)
        return True

    def redefine_cover_on_release(self) -> None:
        self.border_nodes = nodes_on_circle(self.radius)
        self.update_cover()

    def on_release(self, node_id, node_shape) -> None:
        self.redefine_cover_on_release()

    def basic_points(self) -> list[Point]:
        return [self.center] + [geo.point_at(self.center, a, self.radius)
                                for a in self.partition_angles()]
