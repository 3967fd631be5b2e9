"""The mover: a z-ordered queue of movables and the gesture lifecycle.

The engine never looks at object geometry, only at covers. One engine
supervises one scene; the host (or the replay harness) feeds it pointer
events through catch/drag/release. An engine is owned by one thread at a
time and may change hands only between gestures; there is no internal
locking, the host serializes pointer events.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .cover import (Behaviour, CursorHint, HitKind, NodeShape, cover_hit,
                    node_contains)
from .geometry import Point, Rect


class MouseButton(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class ClippingLevel(enum.IntEnum):
    """Pointer clipping while an object is caught; order is the widening order."""
    VISUAL = 0
    SAFE = 1
    UNSAFE = 2


@dataclass
class GestureState:
    object_index: int
    node_id: int
    node_shape: NodeShape
    button: MouseButton
    last_point: Point
    movable: bool


@dataclass
class PointInfo:
    object_index: int = -1
    node_id: int = -1
    shape: NodeShape | None = None
    behaviour: Behaviour | None = None
    cursor: CursorHint | None = None


def _sensible(obj) -> bool:
    # Invisible objects are insensible: skipped by catch and point_info.
    return obj.visible and obj.visible_as_member


class Engine:
    """Catches, drags and releases movables through their covers."""

    def __init__(self, clip_rect: Rect | None = None,
                 warp_sink: Callable[[Point], None] | None = None):
        self.queue: list = []
        self.clip_rect = clip_rect
        self.clipping = ClippingLevel.VISUAL if clip_rect else ClippingLevel.UNSAFE
        self.traced = True
        self.warp_sink = warp_sink
        self.gesture: GestureState | None = None
        self.was_gesture: GestureState | None = None
        self.log: list[tuple] = []

    # -- queue -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.queue)

    def add(self, m) -> None:
        self.queue.append(m)

    def insert(self, pos: int, m) -> None:
        if not 0 <= pos <= len(self.queue):
            raise IndexError(f"insert position {pos} out of range")
        self.queue.insert(pos, m)

    def remove_at(self, pos: int) -> None:
        if not 0 <= pos < len(self.queue):
            raise IndexError(f"remove position {pos} out of range")
        if self.gesture is not None and self.gesture.object_index == pos:
            raise ValueError("cannot remove the caught object mid-gesture")
        del self.queue[pos]
        if self.gesture is not None and pos < self.gesture.object_index:
            self.gesture.object_index -= 1

    def clear(self) -> None:
        if self.gesture is not None:
            raise ValueError("cannot clear the queue mid-gesture")
        self.queue.clear()

    def reverse(self, pos: int, count: int) -> None:
        if pos < 0 or count < 0 or pos + count > len(self.queue):
            raise IndexError("reverse range out of bounds")
        if self.gesture is not None and pos <= self.gesture.object_index < pos + count:
            raise ValueError("cannot reorder the caught object mid-gesture")
        self.queue[pos:pos + count] = reversed(self.queue[pos:pos + count])

    # -- gesture lifecycle ------------------------------------------------

    def catch(self, p: Point, button: MouseButton) -> bool:
        """Scan the queue in pick order and try to catch an object at p."""
        if self.gesture is not None:
            raise ValueError("catch with an active gesture")
        for index, obj in enumerate(self.queue):
            if not _sensible(obj):
                continue
            hit = cover_hit(obj.cover, p)
            if hit.kind in (HitKind.MISS, HitKind.FALLTHROUGH):
                continue
            if hit.kind is HitKind.BLOCKED:
                self.log.append(("blocked", p))
                return False
            movable = hit.kind is HitKind.GRAB
            self.gesture = GestureState(index, hit.node, hit.shape, button, p, movable)
            self.log.append(("catch", index, hit.node, hit.shape, button, p, movable))
            return True
        self.log.append(("miss", p))
        return False

    def _clamp(self, p: Point) -> Point:
        rc = self.clip_rect
        if rc is None or self.clipping is ClippingLevel.UNSAFE:
            return p
        x, y = p
        x = max(x, rc.left)
        y = max(y, rc.top)
        if self.clipping is ClippingLevel.VISUAL:
            x = min(x, rc.right)
            y = min(y, rc.bottom)
        return (x, y)

    def drag(self, p: Point) -> bool:
        """Move the caught object's node toward p (clamped by the clipping)."""
        g = self.gesture
        if g is None or not self.traced or not g.movable:
            return False
        eff = self._clamp(p)
        dx = eff[0] - g.last_point[0]
        dy = eff[1] - g.last_point[1]
        obj = self.queue[g.object_index]
        accepted = bool(obj.move_node(g.node_id, dx, dy, eff, g.button))
        g.last_point = eff
        self.log.append(("move", eff, accepted))
        return accepted

    def release(self) -> tuple[int, int, NodeShape] | None:
        g = self.gesture
        if g is None:
            return None
        self.gesture = None
        self.was_gesture = g
        self.log.append(("release", g.object_index, g.node_id, g.node_shape))
        return (g.object_index, g.node_id, g.node_shape)

    # -- sensing ----------------------------------------------------------

    def point_info(self, p: Point, all: bool = False):
        """Upper node data at p, or the stacked list honoring Transparent skip."""
        infos: list[PointInfo] = []
        for index, obj in enumerate(self.queue):
            if not _sensible(obj):
                continue
            for node in obj.cover:
                if not node_contains(node, p):
                    continue
                if node.behaviour is Behaviour.TRANSPARENT:
                    break  # remaining nodes of this cover are skipped
                info = PointInfo(index, node.id, node.shape, node.behaviour,
                                 node.cursor)
                if not all:
                    return info
                infos.append(info)
                break
        if not all:
            return PointInfo()
        return infos

    # -- knobs --------------------------------------------------------------

    def set_clipping(self, level: ClippingLevel) -> bool:
        """Any level when idle; mid-gesture only widening is accepted."""
        if self.gesture is not None and level < self.clipping:
            return False
        self.clipping = level
        return True

    def set_traced(self, on: bool) -> None:
        self.traced = bool(on)

    def warp(self, p: Point) -> None:
        """Ask the host to relocate the cursor to p (adhered-mouse protocol)."""
        if self.warp_sink is None:
            raise RuntimeError("warp requested but no warp sink is attached")
        self.log.append(("warp", p))
        if self.gesture is not None:
            self.gesture.last_point = p
        self.warp_sink(p)
