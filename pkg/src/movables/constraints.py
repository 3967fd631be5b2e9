"""Restricted movement: bounded sliders, contained balls, same-color
overlap rejection, and the adhered-cursor / labyrinth protocols.

The adhered protocol keeps the pointer glued to the grab point of a
movement-restricted body: when a proposed pose is illegal the tracing
link is cut, the cursor is warped back over the body, and the link is
restored, all within one move tick.
"""

from __future__ import annotations

import math

from . import geometry as geo
from .cover import (Behaviour, Cover, CursorHint, Resizing, circle_node,
                    polygon_node, standard_rect_cover, strip_node)
from .engine import Engine, MouseButton
from .geometry import Point, Rect
from .shapes.base import GestureAux, Movable
from .shapes.circles import NnodeStrip

INF = float("inf")


class Labyrinth(Movable):
    """Immutable set of zero-thickness wall segments.

    The walls carry Nonmoveable nodes, so nothing is caught through a
    wall point; the labyrinth itself never moves.
    """

    kind = "labyrinth"

    def __init__(self, walls: list[tuple[Point, Point]],
                 stroke: str = "#404040"):
        super().__init__()
        self.walls = [(tuple(a), tuple(b)) for a, b in walls]
        self.stroke = stroke

    def define_cover(self) -> Cover:
        return Cover([strip_node(a, b, 1.0, behaviour=Behaviour.NONMOVEABLE,
                                 cursor=CursorHint.DEFAULT)
                      for a, b in self.walls])

    def move(self, dx: float, dy: float) -> None:
        pass

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        return False

    def basic_points(self) -> list[Point]:
        return [p for wall in self.walls for p in wall]


def labyrinth_allow_circle(lab: Labyrinth, center_old: Point,
                           center_new: Point, radius: float) -> bool:
    """A circle pose is rejected when it touches a wall (distance <= r)
    or when the center path crosses one (the anti-tunnel check)."""
    for a, b in lab.walls:
        if geo.point_segment_distance(center_new, a, b)[0] <= radius:
            return False
        if geo.segments_cross(a, b, center_old, center_new) is not None:
            return False
    return True


def labyrinth_allow_capsule(lab: Labyrinth, pt_c0: Point, pt_c1: Point,
                            radius: float) -> bool:
    """A capsule pose is allowed only with clearance strictly above r."""
    for a, b in lab.walls:
        if geo.segment_segment_distance(a, b, pt_c0, pt_c1) <= radius:
            return False
    return True


def labyrinth_allow_capsule_move(lab: Labyrinth, old_c0: Point, old_c1: Point,
                                 new_c0: Point, new_c1: Point,
                                 radius: float) -> bool:
    """Whole translations also forbid the axis midpoint from crossing a wall."""
    if not labyrinth_allow_capsule(lab, new_c0, new_c1, radius):
        return False
    old_mid = ((old_c0[0] + old_c1[0]) / 2.0, (old_c0[1] + old_c1[1]) / 2.0)
    new_mid = ((new_c0[0] + new_c1[0]) / 2.0, (new_c0[1] + new_c1[1]) / 2.0)
    for a, b in lab.walls:
        if geo.segments_cross(a, b, old_mid, new_mid) is not None:
            return False
    return True


class BoundedSlider(Movable):
    """Line slider living inside a parent rectangle.

    The slider moves only across its line, within the narrowest of the
    rectangle borders and the neighbour limits; its position against the
    rectangle is a coefficient, replayed whenever the rectangle changes.
    """

    kind = "slider"

    HALF_SENSE = 3.0

    def __init__(self, parent_rect: Rect, horizontal: bool,
                 pos_coef: float = 0.5, order_preserving: bool = False,
                 stroke: str = "#2040c0"):
        super().__init__()
        self.parent_rect = parent_rect.copy()
        self.horizontal = horizontal
        self.pos_coef = pos_coef
        self.order_preserving = order_preserving
        self.stroke = stroke
        # neighbour limits; far beyond any border by default
        self.f_low = -INF
        self.f_high = INF

    def coor(self) -> float:
        rc = self.parent_rect
        if self.horizontal:
            return geo.coor_by_coef(rc.top, rc.bottom, self.pos_coef)
        return geo.coor_by_coef(rc.left, rc.right, self.pos_coef)

    def ends(self) -> tuple[Point, Point]:
        rc = self.parent_rect
        c = self.coor()
        if self.horizontal:
            return (rc.left, c), (rc.right, c)
        return (c, rc.top), (c, rc.bottom)

    def define_cover(self) -> Cover:
        rc = self.parent_rect
        hs = self.HALF_SENSE
        c = self.coor()
        if self.horizontal:
            node_rect = Rect(rc.left + hs, c - hs, rc.w - 2 * hs, 2 * hs)
            cursor = CursorHint.SIZE_NS
        else:
            node_rect = Rect(c - hs, rc.top + hs, 2 * hs, rc.h - 2 * hs)
            cursor = CursorHint.SIZE_WE
        return Cover([polygon_node(node_rect.corners(), cursor=cursor)])

    def set_limits(self, low: float, high: float) -> None:
        self.f_low = low
        self.f_high = high

    def set_area(self, rect: Rect) -> None:
        """Coefficient from the old rect first, coordinate from the new one."""
        rc = self.parent_rect
        if self.horizontal:
            coef = geo.coef_by_coor(rc.top, rc.bottom, self.coor())
            self.parent_rect = rect.copy()
            self.pos_coef = coef
        else:
            coef = geo.coef_by_coor(rc.left, rc.right, self.coor())
            self.parent_rect = rect.copy()
            self.pos_coef = coef
        self.update_cover()

    def move(self, dx: float, dy: float) -> None:
        rc = self.parent_rect
        if self.horizontal:
            new = self.coor() + dy
            self.pos_coef = geo.coef_by_coor(rc.top, rc.bottom, new)
        else:
            new = self.coor() + dx
            self.pos_coef = geo.coef_by_coor(rc.left, rc.right, new)
        self.update_cover()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        rc = self.parent_rect
        if self.horizontal:
            new = self.coor() + dy
            if max(self.f_low, rc.top) <= new <= min(self.f_high, rc.bottom):
                self.move(dx, dy)
                return True
        else:
            new = self.coor() + dx
            if max(self.f_low, rc.left) <= new <= min(self.f_high, rc.right):
                self.move(dx, dy)
                return True
        return False

    def basic_points(self) -> list[Point]:
        return list(self.ends())


def slider_limits_at_catch(slider: BoundedSlider,
                           siblings: list[BoundedSlider],
                           board_rect: Rect) -> None:
    """Order-preserving sliders are boxed in by their list neighbours."""
    if not slider.order_preserving:
        slider.set_limits(-INF, INF)
        return
    i = siblings.index(slider)
    if slider.horizontal:
        low = siblings[i - 1].coor() if i > 0 else board_rect.top
        high = siblings[i + 1].coor() if i < len(siblings) - 1 else board_rect.bottom
    else:
        low = siblings[i - 1].coor() if i > 0 else board_rect.left
        high = siblings[i + 1].coor() if i < len(siblings) - 1 else board_rect.right
    slider.set_limits(low, high)


class SliderPanel(Movable):
    """Resizable rectangle carrying bounded sliders."""

    kind = "slider_panel"

    def __init__(self, rect: Rect, size_range: tuple[float, float] = (100.0, 500.0),
                 fill: str = "#f0f0f0"):
        super().__init__()
        self.rect = rect.copy()
        self.size_min, self.size_max = size_range
        self.hor_sliders: list[BoundedSlider] = []
        self.ver_sliders: list[BoundedSlider] = []
        self.fill = fill

    def add_slider(self, slider: BoundedSlider) -> None:
        slider.parent_id = self.id
        slider.set_area(self.rect)
        (self.hor_sliders if slider.horizontal else self.ver_sliders).append(slider)

    def members(self) -> list[Movable]:
        return [*self.hor_sliders, *self.ver_sliders]

    def siblings_of(self, slider: BoundedSlider) -> list[BoundedSlider]:
        return self.hor_sliders if slider.horizontal else self.ver_sliders

    def define_cover(self) -> Cover:
        return standard_rect_cover(self.rect, Resizing.ANY)

    def _inform(self) -> None:
        for s in self.members():
            s.set_area(self.rect)

    def move(self, dx: float, dy: float) -> None:
        self.rect.x += dx
        self.rect.y += dy
        self._inform()
        self.update_cover()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if node_id == 8:
            self.move(dx, dy)
            return True
        rc = self.rect
        left = node_id in (0, 3, 7)
        right = node_id in (1, 2, 5)
        top = node_id in (0, 1, 4)
        bottom = node_id in (2, 3, 6)
        done = False
        if left and self.size_min <= rc.w - dx <= self.size_max:
            rc.x += dx
            rc.w -= dx
            done = True
        if right and self.size_min <= rc.w + dx <= self.size_max:
            rc.w += dx
            done = True
        if top and self.size_min <= rc.h - dy <= self.size_max:
            rc.y += dy
            rc.h -= dy
            done = True
        if bottom and self.size_min <= rc.h + dy <= self.size_max:
            rc.h += dy
            done = True
        if done:
            self._inform()
            self.update_cover()
        return done

    def basic_points(self) -> list[Point]:
        return self.rect.corners()

    def bounds(self) -> Rect:
        return self.rect.copy()


class Ball(Movable):
    """Circle whose center lives inside a window kept by its board."""

    kind = "ball"

    def __init__(self, center: Point, radius: float, fill: str = "#d04040"):
        super().__init__()
        self.center = tuple(center)
        self.radius = float(radius)
        self.fill = fill
        self.window = (-INF, INF, -INF, INF)  # cx_left, cx_right, cy_top, cy_bottom

    def define_cover(self) -> Cover:
        return Cover([circle_node(self.center, self.radius,
                                  cursor=CursorHint.SIZE_ALL)])

    def set_area(self, cx_left: float, cx_right: float, cy_top: float,
                 cy_bottom: float) -> None:
        """A shrinking border pushes the center back inside."""
        self.window = (cx_left, cx_right, cy_top, cy_bottom)
        self.center = (min(max(cx_left, self.center[0]), cx_right),
                       min(max(cy_top, self.center[1]), cy_bottom))
        self.update_cover()

    def move(self, dx: float, dy: float) -> None:
        self.center = (self.center[0] + dx, self.center[1] + dy)
        self.update_cover()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        cx_left, cx_right, cy_top, cy_bottom = self.window
        cx_new = self.center[0] + dx
        cy_new = self.center[1] + dy
        done = False
        # each axis is accepted on its own
        if cx_left <= cx_new <= cx_right:
            self.move(dx, 0.0)
            done = True
        if cy_top <= cy_new <= cy_bottom:
            self.move(0.0, dy)
            done = True
        return done

    def basic_points(self) -> list[Point]:
        return [self.center, geo.point_at(self.center, 0.0, self.radius)]


class BoardWithBalls(Movable):
    """Resizable board whose balls never leave it.

    Every geometry change recomputes each ball's window: the board rect
    deflated by radius+1 on the left/top and radius+2 on the right/bottom.
    """

    kind = "ball_board"

    def __init__(self, rect: Rect, size_range: tuple[float, float] = (100.0, 500.0),
                 fill: str = "#e8e0c0"):
        super().__init__()
        self.rect = rect.copy()
        self.size_min, self.size_max = size_range
        self.balls: list[Ball] = []
        self.fill = fill

    def add_ball(self, ball: Ball) -> None:
        ball.parent_id = self.id
        self.balls.append(ball)
        self.set_areas()

    def members(self) -> list[Movable]:
        return list(self.balls)

    def define_cover(self) -> Cover:
        return standard_rect_cover(self.rect, Resizing.ANY)

    def set_areas(self) -> None:
        rc = self.rect
        for ball in self.balls:
            ball.set_area(rc.left + (ball.radius + 1.0),
                          rc.right - (ball.radius + 2.0),
                          rc.top + (ball.radius + 1.0),
                          rc.bottom - (ball.radius + 2.0))

    def move(self, dx: float, dy: float) -> None:
        self.rect.x += dx
        self.rect.y += dy
        for ball in self.balls:
            ball.move(dx, dy)
        self.set_areas()
        self.update_cover()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if node_id == 8:
            self.move(dx, dy)
            return True
        rc = self.rect
        left = node_id in (0, 3, 7)
        right = node_id in (1, 2, 5)
        top = node_id in (0, 1, 4)
        bottom = node_id in (2, 3, 6)
        done = False
        if left and self.size_min <= rc.w - dx <= self.size_max:
            rc.x += dx
            rc.w -= dx
            done = True
        if right and self.size_min <= rc.w + dx <= self.size_max:
            rc.w += dx
            done = True
        if top and self.size_min <= rc.h - dy <= self.size_max:
            rc.y += dy
            rc.h -= dy
            done = True
        if bottom and self.size_min <= rc.h + dy <= self.size_max:
            rc.h += dy
            done = True
        if done:
            self.set_areas()
            self.update_cover()
        return done

    def basic_points(self) -> list[Point]:
        return self.rect.corners()

    def bounds(self) -> Rect:
        return self.rect.copy()


class ColorBall(Ball):
    """Ball that refuses any move bringing it into contact with a
    same-color sibling; different colors pass through freely."""

    kind = "color_ball"

    def __init__(self, center: Point, radius: float, color: str,
                 siblings: list["ColorBall"] | None = None):
        super().__init__(center, radius, fill=color)
        self.color = color
        self.siblings = siblings if siblings is not None else []

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        cx_left, cx_right, cy_top, cy_bottom = self.window
        cx_new = self.center[0] + dx
        cy_new = self.center[1] + dy
        if not (cx_left <= cx_new <= cx_right and cy_top <= cy_new <= cy_bottom):
            return False
        for ball in self.siblings:
            if ball.id == self.id or ball.color != self.color:
                continue
            if geo.distance(ball.center, (cx_new, cy_new)) <= \
                    ball.radius + self.radius:
                return False
        self.move(dx, dy)
        return True


class ColorBallBoard(Movable):
    """Non-resizable board for same-color-overlap experiments."""

    kind = "color_board"

    def __init__(self, rect: Rect, fill: str = "#e0e8e0"):
        super().__init__()
        self.rect = rect.copy()
        self.balls: list[ColorBall] = []
        self.fill = fill

    def add_ball(self, ball: ColorBall) -> None:
        ball.parent_id = self.id
        ball.siblings = self.balls
        self.balls.append(ball)
        rc = self.rect
        ball.set_area(rc.left + (ball.radius + 1.0),
                      rc.right - (ball.radius + 2.0),
                      rc.top + (ball.radius + 1.0),
                      rc.bottom - (ball.radius + 2.0))

    def members(self) -> list[Movable]:
        return list(self.balls)

    def define_cover(self) -> Cover:
        return standard_rect_cover(self.rect, Resizing.NONE)

    def move(self, dx: float, dy: float) -> None:
        self.rect.x += dx
        self.rect.y += dy
        for ball in self.balls:
            ball.move(dx, dy)
            x0, x1, y0, y1 = ball.window
            ball.window = (x0 + dx, x1 + dx, y0 + dy, y1 + dy)
        self.update_cover()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        self.move(dx, dy)
        return True

    def basic_points(self) -> list[Point]:
        return self.rect.corners()

    def bounds(self) -> Rect:
        return self.rect.copy()


class AdheredBall(Movable):
    """Ball whose cursor adheres to the grab point.

    The allowed region is either a convex polygon or a labyrinth. The
    new center always comes from the absolute pointer position minus the
    catch-time offset; an illegal proposal warps the cursor back over
    the last legal pose.
    """

    kind = "adhered_ball"

    def __init__(self, center: Point, radius: float, *,
                 region: list[Point] | None = None,
                 labyrinth: Labyrinth | None = None, fill: str = "#c04080"):
        super().__init__()
        if (region is None) == (labyrinth is None):
            raise ValueError("an adhered ball needs a region or a labyrinth")
        self.center = tuple(center)
        self.radius = float(radius)
        self.region = [tuple(p) for p in region] if region else None
        self.labyrinth = labyrinth
        self.fill = fill
        self._engine: Engine | None = None
        self._aux: GestureAux | None = None

    def define_cover(self) -> Cover:
        return Cover([circle_node(self.center, self.radius,
                                  cursor=CursorHint.SIZE_ALL)])

    def set_region(self, region: list[Point]) -> None:
        self.region = [tuple(p) for p in region]

    def move(self, dx: float, dy: float) -> None:
        self.center = (self.center[0] + dx, self.center[1] + dy)
        self.update_cover()

    def begin_gesture(self, engine, p, button, node_id, node_shape) -> None:
        self._engine = engine
        self.initial_mouse_shift(p)

    def initial_mouse_shift(self, p: Point) -> GestureAux:
        self._aux = GestureAux(mouse_offset=(p[0] - self.center[0],
                                             p[1] - self.center[1]))
        return self._aux

    def _allowed(self, center_new: Point) -> bool:
        if self.region is not None:
            return geo.inside_convex_polygon(center_new, self.region)
        return labyrinth_allow_circle(self.labyrinth, self.center, center_new,
                                      self.radius)

    def _warp_back(self) -> bool:
        if self._engine is not None and self._aux is not None:
            ox, oy = self._aux.mouse_offset
            self._engine.set_traced(False)
            self._engine.warp((self.center[0] + ox, self.center[1] + oy))
            self._engine.set_traced(True)
        return False

    def adhered_move(self, p: Point) -> bool:
        if self._aux is None:
            self.initial_mouse_shift(p)
        ox, oy = self._aux.mouse_offset
        center_new = (p[0] - ox, p[1] - oy)
        if self._allowed(center_new):
            self.center = center_new
            self.update_cover()
            return True
        return self._warp_back()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        return self.adhered_move(p)

    def basic_points(self) -> list[Point]:
        return [self.center, geo.point_at(self.center, 0.0, self.radius)]


class BallBoard(Movable):
    """Regular polygon board carrying one adhered ball.

    The ball's allowed region is the board deflated by the ball radius;
    the board can be moved and rotated and carries the ball rigidly.
    """

    kind = "ball_poly_board"

    def __init__(self, center: Point, radius: float, n: int,
                 angle: float = 0.0, ball_radius: float = 20.0,
                 fill: str = "#60a060", ball_fill: str = "#c04080"):
        super().__init__()
        self.center = tuple(center)
        self.radius = float(radius)
        self.n = int(n)
        self.angle = geo.normalize_angle(angle)
        self.ball = AdheredBall(center, ball_radius, region=[(0, 0)] * 3,
                                fill=ball_fill)
        self.ball.parent_id = self.id
        self._update_region()
        self.fill = fill
        self._aux: GestureAux | None = None

    def _update_region(self) -> None:
        inner = self.radius - self.ball.radius / math.cos(math.pi / self.n)
        inner = max(inner, 1.0)
        self.ball.set_region(geo.regular_polygon_vertices(
            self.center, inner, self.n, self.angle))

    def members(self) -> list[Movable]:
        return [self.ball]

    def vertices(self) -> list[Point]:
        return geo.regular_polygon_vertices(self.center, self.radius, self.n,
                                            self.angle)

    def define_cover(self) -> Cover:
        return Cover([polygon_node(self.vertices(), cursor=CursorHint.SIZE_ALL)])

    def move(self, dx: float, dy: float) -> None:
        self.center = (self.center[0] + dx, self.center[1] + dy)
        self.ball.move(dx, dy)
        self._update_region()
        self.update_cover()

    def begin_gesture(self, engine, p, button, node_id, node_shape) -> None:
        if button is MouseButton.RIGHT:
            mouse = geo.line_angle(self.center, p)
            self._aux = GestureAux(
                compensation=geo.normalize_angle(mouse - self.angle))

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is MouseButton.LEFT:
            self.move(dx, dy)
            return True
        if self._aux is None:
            self.begin_gesture(None, p, MouseButton.RIGHT, node_id, None)
        mouse = geo.line_angle(self.center, p)
        old = self.angle
        self.angle = geo.normalize_angle(mouse - self._aux.compensation)
        # the ball turns rigidly with the board
        r = geo.distance(self.center, self.ball.center)
        if r > 0:
            a = geo.line_angle(self.center, self.ball.center)
            self.ball.center = geo.point_at(self.center,
                                            a + (self.angle - old), r)
            self.ball.update_cover()
        self._update_region()
        self.update_cover()
        return True

    def basic_points(self) -> list[Point]:
        return [self.center] + self.vertices()


class AdheredStrip(NnodeStrip):
    """Rounded strip moving through a labyrinth with an adhered cursor.

    Every pose change (move, rotate, length, width) is checked against
    the walls; the translation check also forbids high-speed tunnelling.
    """

    kind = "adhered_strip"

    def __init__(self, pt_c0: Point, pt_c1: Point, radius: float,
                 labyrinth: Labyrinth, fill: str = "#7070c0"):
        super().__init__(pt_c0, pt_c1, radius, fill=fill)
        self.labyrinth = labyrinth
        self._engine: Engine | None = None

    def begin_gesture(self, engine, p, button, node_id, node_shape) -> None:
        self._engine = engine
        super().begin_gesture(engine, p, button, node_id, node_shape)

    def _pose_ok(self, c0: Point, c1: Point, radius: float) -> bool:
        return labyrinth_allow_capsule(self.labyrinth, c0, c1, radius)

    def _move_ok(self, c0: Point, c1: Point) -> bool:
        return labyrinth_allow_capsule_move(self.labyrinth, self.pt_c0,
                                            self.pt_c1, c0, c1, self.radius)

    def _reject(self) -> bool:
        """Return the cursor to the adhered point over the strip."""
        if self._engine is not None and self._aux is not None:
            center = self._strip_center()
            back = geo.point_at(center, self.angle + self._aux.compensation,
                                self._aux.start_distance)
            self._engine.set_traced(False)
            self._engine.warp(back)
            self._engine.set_traced(True)
        return False
