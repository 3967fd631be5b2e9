"""The movable-object contract shared by every shape, group and widget.

Movables are plain data: exclusively owned while a gesture holds them,
transferable between threads when idle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .. import geometry as geo
from ..cover import Cover
from ..engine import MouseButton
from ..geometry import Point, Rect

_id_counter = itertools.count(1)


def allocate_id() -> int:
    return next(_id_counter)


def ensure_id_floor(n: int) -> None:
    """Advance the allocator past n (used when loading saved scenes)."""
    global _id_counter
    current = next(_id_counter)
    _id_counter = itertools.count(max(current, n + 1))


@dataclass
class GestureAux:
    """Catch-time values held constant until release.

    Which fields a gesture fills depends on the shape: a single
    compensation angle, per-point radii and compensations, scaling
    coefficients, mouse offsets, or angular limits.
    """

    compensation: float | None = None
    compensations: tuple[float, ...] = ()
    radii: tuple[float, ...] = ()
    angles: tuple[float, ...] = ()
    scaling: float | None = None
    scalings: tuple[float, ...] = ()
    start_distance: float | None = None
    mouse_offset: tuple[float, float] | None = None
    limits: tuple[float, float] | None = None
    fractions: tuple[float, ...] = ()
    extra: dict = field(default_factory=dict)


class Movable:
    """Anything the engine can catch: a cover plus move/move_node.

    Subclasses implement define_cover(), move() and move_node(); the
    cached cover is rebuilt through update_cover() whenever basic points
    change (N-node shapes postpone that until release on purpose).
    """

    def __init__(self):
        self.id = allocate_id()
        self.parent_id = 0
        self.visible = True
        self.visible_as_member = True
        self._cover: Cover | None = None

    # -- cover -------------------------------------------------------------

    def define_cover(self) -> Cover:
        raise NotImplementedError

    @property
    def cover(self) -> Cover:
        if self._cover is None:
            self._cover = self.define_cover()
        return self._cover

    def update_cover(self) -> None:
        self._cover = self.define_cover()

    # -- movement -----------------------------------------------------------

    def move(self, dx: float, dy: float) -> None:
        raise NotImplementedError

    def move_node(self, node_id: int, dx: float, dy: float, p: Point,
                  button: MouseButton) -> bool:
        raise NotImplementedError

    # -- structure ------------------------------------------------------------

    def members(self) -> list["Movable"]:
        """Contained objects (visibility propagation targets)."""
        return []

    def children(self) -> list["Movable"]:
        """Members that get their own place in the engine queue."""
        return self.members()

    def into_mover(self, engine, pos: int) -> None:
        """Register self and, recursively, all children ahead of self."""
        engine.insert(pos, self)
        for child in reversed(self.children()):
            child.into_mover(engine, pos)

    # -- visibility (two flags; rendered iff both are true) -----------------

    def set_visible(self, value: bool) -> None:
        self.visible = bool(value)
        self._propagate_visibility()

    def set_visible_as_member(self, value: bool) -> None:
        self.visible_as_member = bool(value)
        self._propagate_visibility()

    def _propagate_visibility(self) -> None:
        to_members = self.visible and self.visible_as_member
        for m in self.members():
            m.set_visible_as_member(to_members)

    def set_visible_all(self) -> None:
        """Restore the direct flag on self and every descendant."""
        for m in self.members():
            m.set_visible_all()
        self.set_visible(True)

    # -- gesture hooks driven by the scene harness ----------------------------

    def begin_gesture(self, engine, p: Point, button: MouseButton,
                      node_id: int, node_shape) -> None:
        """Called right after a successful catch of this object."""

    def on_release(self, node_id: int, node_shape) -> None:
        """Called after release (N-node covers rebuild here)."""

    def should_disappear(self, node_id: int, node_shape) -> bool:
        """Squeeze-to-delete check, run by the scene on release."""
        return False

    # -- reporting -------------------------------------------------------------

    def basic_points(self) -> list[Point]:
        """The points that define the geometry (isometry checks, SVG)."""
        return []

    def bounds(self) -> Rect:
        pts = self.basic_points()
        if not pts:
            return Rect(0.0, 0.0, 0.0, 0.0)
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        return Rect(min(xs), min(ys), max(xs) - min(xs), max(ys) - min(ys))


def single_angle_rotation_start(center: Point, angle: float, p: Point) -> GestureAux:
    """Compensation for shapes whose pose is one angle around a fixed center."""
    mouse = geo.line_angle(center, p)
    return GestureAux(compensation=geo.normalize_angle(mouse - angle))


def multi_point_rotation_start(anchor: Point, pts, p: Point) -> GestureAux:
    """Per-point radii and compensations for independently placed points."""
    mouse = geo.line_angle(anchor, p)
    radii = tuple(geo.distance(anchor, pt) for pt in pts)
    comps = tuple(geo.normalize_angle(mouse - geo.line_angle(anchor, pt))
                  for pt in pts)
    return GestureAux(compensations=comps, radii=radii)


def rotate_points(anchor: Point, aux: GestureAux, p: Point) -> list[Point]:
    mouse = geo.line_angle(anchor, p)
    return [geo.point_at(anchor, mouse - comp, radius)
            for comp, radius in zip(aux.compensations, aux.radii)]
