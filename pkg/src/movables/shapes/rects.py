"""Rectangle shapes: standard resizable, fixed-ratio, and sliding partitions."""

from __future__ import annotations

from dataclasses import dataclass

from .. import geometry as geo
from ..cover import (Cover, CursorHint, Resizing, polygon_node,
                     standard_rect_cover)
from ..engine import MouseButton
from ..geometry import Point, Rect
from .base import GestureAux, Movable

HARD_MIN_SIZE = 10.0
DISAPPEARANCE_SIZE = 5.0
BIG = 10.0 ** 6


@dataclass
class RectRange:
    w_min: float
    w_max: float
    h_min: float
    h_max: float

    def resizing(self) -> Resizing:
        we = self.w_min < self.w_max
        ns = self.h_min < self.h_max
        if we and ns:
            return Resizing.ANY
        if we:
            return Resizing.WE
        if ns:
            return Resizing.NS
        return Resizing.NONE


class RectShape(Movable):
    """Standard rectangle: moved by any inner point, resized per its range.

    With disappearance enabled the minimum-size protection is dropped;
    releasing a resize node at or below the disappearance size is the
    user's delete command (the scene acts on should_disappear).
    """

    kind = "rect"

    def __init__(self, rect: Rect, rng: RectRange | None = None,
                 corner_radius: float = 6.0, half_strip: float = 3.0,
                 disappearance: bool = False, fill: str = "#7fbfff"):
        super().__init__()
        floor = 1.0 if disappearance else HARD_MIN_SIZE
        rect = Rect(rect.x, rect.y, max(floor, rect.w), max(floor, rect.h))
        if rng is None:
            self.range = RectRange(rect.w, rect.w, rect.h, rect.h)
        else:
            self.range = RectRange(
                max(floor, min(rect.w, rng.w_min)), max(rect.w, rng.w_max),
                max(floor, min(rect.h, rng.h_min)), max(rect.h, rng.h_max))
        self.rect = rect
        self.resizing = self.range.resizing()
        self.corner_radius = corner_radius
        self.half_strip = half_strip
        self.disappearance = disappearance
        self.disappearance_size = DISAPPEARANCE_SIZE
        self.fill = fill

    def define_cover(self) -> Cover:
        return standard_rect_cover(self.rect, self.resizing,
                                   self.corner_radius, self.half_strip)

    def move(self, dx: float, dy: float) -> None:
        self.rect.x += dx
        self.rect.y += dy
        self.update_cover()

    # Border helpers keep the opposite border fixed.
    def _w_ok(self, w: float) -> bool:
        return self.range.w_min <= w <= self.range.w_max

    def _h_ok(self, h: float) -> bool:
        return self.range.h_min <= h <= self.range.h_max

    def _move_left(self, dx: float) -> None:
        self.rect.x += dx
        self.rect.w -= dx

    def _move_top(self, dy: float) -> None:
        self.rect.y += dy
        self.rect.h -= dy

    def move_node(self, node_id: int, dx: float, dy: float, p: Point,
                  button: MouseButton) -> bool:
        if button is not MouseButton.LEFT:
            return False
        done = False
        r = self.resizing
        if r is Resizing.NONE:
            self.move(dx, dy)
            return True
        if r is Resizing.NS:
            if node_id == 0 and self._h_ok(self.rect.h - dy):
                self._move_top(dy)
                done = True
            elif node_id == 1 and self._h_ok(self.rect.h + dy):
                self.rect.h += dy
                done = True
            elif node_id == 2:
                self.move(dx, dy)
                return True
        elif r is Resizing.WE:
            if node_id == 0 and self._w_ok(self.rect.w - dx):
                self._move_left(dx)
                done = True
            elif node_id == 1 and self._w_ok(self.rect.w + dx):
                self.rect.w += dx
                done = True
            elif node_id == 2:
                self.move(dx, dy)
                return True
        else:  # Resizing.ANY: 0..3 corners LT RT RB LB, 4..7 borders T R B L, 8 whole
            if node_id == 8:
                self.move(dx, dy)
                return True
            # corner ids touch two axes; each axis is accepted independently
            left = node_id in (0, 3, 7)
            right = node_id in (1, 2, 5)
            top = node_id in (0, 1, 4)
            bottom = node_id in (2, 3, 6)
            if left and self._w_ok(self.rect.w - dx):
                self._move_left(dx)
                done = True
            if right and self._w_ok(self.rect.w + dx):
                self.rect.w += dx
                done = True
            if top and self._h_ok(self.rect.h - dy):
                self._move_top(dy)
                done = True
            if bottom and self._h_ok(self.rect.h + dy):
                self.rect.h += dy
                done = True
        if done:
            self.update_cover()
        return done

    def should_disappear(self, node_id: int, node_shape) -> bool:
        if not self.disappearance:
            return False
        if node_id == len(self.cover) - 1:
            return False  # plain moves never delete
        return min(self.rect.w, self.rect.h) <= self.disappearance_size

    def basic_points(self) -> list[Point]:
        return self.rect.corners()

    def bounds(self) -> Rect:
        return self.rect.copy()


class FixedRatioRect(Movable):
    """Rectangle whose width/height ratio is fixed at construction.

    Moving a vertical border keeps the top edge in place and adjusts the
    height; moving a horizontal border keeps the left edge and adjusts
    the width. No corner nodes: a corner drag would be ambiguous.
    """

    kind = "fixed_ratio_rect"

    def __init__(self, rect: Rect, w_min: float = HARD_MIN_SIZE,
                 h_min: float = HARD_MIN_SIZE, half_strip: float = 3.0,
                 fill: str = "#ffd27f"):
        super().__init__()
        self.rect = rect.copy()
        self.ratio = rect.w / rect.h
        self.w_min = w_min
        self.h_min = h_min
        self.half_strip = half_strip
        self.fill = fill

    def define_cover(self) -> Cover:
        rc = self.rect
        hs = self.half_strip
        left = polygon_node(Rect(rc.left - hs, rc.top, 2 * hs, rc.h).corners(),
                            cursor=CursorHint.SIZE_WE)
        right = polygon_node(Rect(rc.right - hs, rc.top, 2 * hs, rc.h).corners(),
                             cursor=CursorHint.SIZE_WE)
        top = polygon_node(Rect(rc.left, rc.top - hs, rc.w, 2 * hs).corners(),
                           cursor=CursorHint.SIZE_NS)
        bottom = polygon_node(Rect(rc.left, rc.bottom - hs, rc.w, 2 * hs).corners(),
                              cursor=CursorHint.SIZE_NS)
        whole = polygon_node(rc.corners(), cursor=CursorHint.SIZE_ALL)
        return Cover([left, right, top, bottom, whole])

    def move(self, dx: float, dy: float) -> None:
        self.rect.x += dx
        self.rect.y += dy
        self.update_cover()

    def _apply_width(self, w_new: float, move_left_by: float = 0.0) -> bool:
        h_new = w_new / self.ratio
        if w_new < self.w_min or h_new < self.h_min:
            return False
        self.rect.x += move_left_by
        self.rect.w = w_new
        self.rect.h = h_new  # top edge fixed
        self.update_cover()
        return True

    def _apply_height(self, h_new: float, move_top_by: float = 0.0) -> bool:
        w_new = h_new * self.ratio
        if w_new < self.w_min or h_new < self.h_min:
            return False
        self.rect.y += move_top_by
        self.rect.h = h_new
        self.rect.w = w_new  # left edge fixed
        self.update_cover()
        return True

    def move_node(self, node_id: int, dx: float, dy: float, p: Point,
                  button: MouseButton) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if node_id == 0:
            return self._apply_width(self.rect.w - dx, move_left_by=dx)
        if node_id == 1:
            return self._apply_width(self.rect.w + dx)
        if node_id == 2:
            return self._apply_height(self.rect.h - dy, move_top_by=dy)
        if node_id == 3:
            return self._apply_height(self.rect.h + dy)
        self.move(dx, dy)
        return True

    def basic_points(self) -> list[Point]:
        return self.rect.corners()

    def bounds(self) -> Rect:
        return self.rect.copy()


class PartitionedRect(Movable):
    """Rectangle split by vertical sliding partitions.

    Segment boundaries are stored as offsets from the left edge with the
    last offset pinned to the width, so the segment sizes always sum to
    the width exactly. Node order: the two borders parallel to the
    partitions first, then the partitions, then the orthogonal borders,
    then the whole-area node.
    """

    kind = "partitioned_rect"

    MIN_SIZE = 10.0
    MIN_SEGMENT = 4.0

    def __init__(self, rect: Rect, segments: list[float],
                 half_strip: float = 3.0, fills: list[str] | None = None):
        super().__init__()
        if len(segments) < 2:
            raise ValueError("a partitioned rect needs at least 2 segments")
        # widths and boundaries are integral pixels (the one place this
        # shape snaps), which keeps the segment sum exactly conserved
        self.rect = rect.copy()
        self.rect.w = float(geo.round_half_away(sum(segments)))
        offsets = [0.0]
        for size in segments[:-1]:
            offsets.append(float(geo.round_half_away(offsets[-1] + size)))
        offsets.append(self.rect.w)
        self.offsets = offsets  # boundary offsets, offsets[0]=0, offsets[-1]=w
        self.half_strip = half_strip
        self.fills = fills or ["#d0d0ff"] * len(segments)
        self._aux: GestureAux | None = None

    # -- derived geometry ---------------------------------------------------

    @property
    def segment_sizes(self) -> list[float]:
        return [self.offsets[i + 1] - self.offsets[i]
                for i in range(len(self.offsets) - 1)]

    def partition_count(self) -> int:
        return len(self.offsets) - 2

    def define_cover(self) -> Cover:
        rc = self.rect
        hs = self.half_strip
        nodes = [
            polygon_node(Rect(rc.left - hs, rc.top, 2 * hs, rc.h).corners(),
                         cursor=CursorHint.SIZE_WE),
            polygon_node(Rect(rc.right - hs, rc.top, 2 * hs, rc.h).corners(),
                         cursor=CursorHint.SIZE_WE),
        ]
        for off in self.offsets[1:-1]:
            x = rc.left + off
            nodes.append(polygon_node(
                Rect(x - hs, rc.top, 2 * hs, rc.h).corners(),
                cursor=CursorHint.SIZE_WE))
        nodes.append(polygon_node(
            Rect(rc.left, rc.top - hs, rc.w, 2 * hs).corners(),
            cursor=CursorHint.SIZE_NS))
        nodes.append(polygon_node(
            Rect(rc.left, rc.bottom - hs, rc.w, 2 * hs).corners(),
            cursor=CursorHint.SIZE_NS))
        nodes.append(polygon_node(rc.corners(), cursor=CursorHint.SIZE_ALL))
        return Cover(nodes)

    def move(self, dx: float, dy: float) -> None:
        self.rect.x += dx
        self.rect.y += dy
        self.update_cover()

    def begin_gesture(self, engine, p, button, node_id, node_shape) -> None:
        if button is MouseButton.LEFT and node_id in (0, 1):
            self.distribution()

    def distribution(self) -> GestureAux:
        """Catch-time segment fractions plus the narrowest segment index."""
        sizes = self.segment_sizes
        fractions = tuple(s / self.rect.w for s in sizes)
        i_min = min(range(len(sizes)), key=lambda i: sizes[i])
        self._aux = GestureAux(fractions=fractions, extra={"i_min": i_min})
        return self._aux

    def zoom_with_ratio(self, aux: GestureAux, border_node: int, dx: float) -> bool:
        """Resize by an outer border parallel to the partitions."""
        raw = self.rect.w - dx if border_node == 0 else self.rect.w + dx
        w_new = float(geo.round_half_away(raw))
        fracs = aux.fractions
        if w_new < self.MIN_SIZE:
            return False
        if w_new * fracs[aux.extra["i_min"]] < self.MIN_SEGMENT:
            return False
        candidate = [0.0]
        cum = 0.0
        for frac in fracs[:-1]:
            cum += frac
            candidate.append(float(geo.round_half_away(cum * w_new)))
        candidate.append(w_new)
        if any(candidate[i + 1] - candidate[i] < self.MIN_SEGMENT
               for i in range(len(candidate) - 1)):
            return False  # snapping may shave a hair off the proportion
        if border_node == 0:
            self.rect.x += self.rect.w - w_new
        self.rect.w = w_new
        self.offsets = candidate
        self.update_cover()
        return True

    def partition_move(self, partition: int, dx: float) -> bool:
        """Slide one inner boundary; both touched segments stay >= 4 px."""
        j = partition + 1  # offsets index
        moved = float(geo.round_half_away(self.offsets[j] + dx))
        on_left = moved - self.offsets[j - 1]
        on_right = self.offsets[j + 1] - moved
        if on_left < self.MIN_SEGMENT or on_right < self.MIN_SEGMENT:
            return False
        self.offsets[j] = moved
        self.update_cover()
        return True

    def move_node(self, node_id: int, dx: float, dy: float, p: Point,
                  button: MouseButton) -> bool:
        if button is not MouseButton.LEFT:
            return False
        k = self.partition_count()
        if node_id in (0, 1):
            aux = self._aux or self.distribution()
            return self.zoom_with_ratio(aux, node_id, dx)
        if node_id < 2 + k:
            return self.partition_move(node_id - 2, dx)
        if node_id == 2 + k:  # top border
            if self.rect.h - dy >= self.MIN_SIZE:
                self.rect.y += dy
                self.rect.h -= dy
                self.update_cover()
                return True
            return False
        if node_id == 3 + k:  # bottom border
            if self.rect.h + dy >= self.MIN_SIZE:
                self.rect.h += dy
                self.update_cover()
                return True
            return False
        self.move(dx, dy)
        return True

    def basic_points(self) -> list[Point]:
        pts = self.rect.corners()
        for off in self.offsets[1:-1]:
            pts.append((self.rect.left + off, self.rect.top))
            pts.append((self.rect.left + off, self.rect.bottom))
        return pts

    def bounds(self) -> Rect:
        return self.rect.copy()
