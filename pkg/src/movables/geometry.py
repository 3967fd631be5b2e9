"""Planar primitives in screen coordinates.

Conventions used everywhere in this package:

* coordinates are real-valued pixels, X grows to the right and Y grows
  downward;
* angles are radians and positive counterclockwise *as seen on screen*,
  which means every trigonometric call negates the Y component;
* normalized angles live in the half-open interval (-pi, pi].

Everything here is a pure value-level function, safe from any thread.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Point = tuple[float, float]

TWO_PI = math.tau

# side_of_line results
NEGATIVE = -1
ON = 0
POSITIVE = 1


def round_half_away(x: float) -> int:
    """Round to the nearest integer with ties going away from zero."""
    if x >= 0:
        return int(math.floor(x + 0.5))
    return int(math.ceil(x - 0.5))


def distance(a: Point, b: Point) -> float:
    return math.hypot(b[0] - a[0], b[1] - a[1])


def normalize_angle(a: float) -> float:
    """Map an angle into (-pi, pi]; -pi normalizes to +pi."""
    r = math.remainder(a, TWO_PI)
    if r <= -math.pi:
        r += TWO_PI
    return r


def line_angle(origin: Point, to: Point) -> float:
    """Angle of the vector origin->to as a human sees it (Y negated).

    Coincident points are defined to give 0.
    """
    dx = to[0] - origin[0]
    dy = to[1] - origin[1]
    if dx == 0.0 and dy == 0.0:
        return 0.0
    return normalize_angle(math.atan2(-dy, dx))


def point_at(origin: Point, angle: float, d: float) -> Point:
    """Point at distance d from origin along a screen-CCW angle."""
    return (origin[0] + d * math.cos(angle), origin[1] - d * math.sin(angle))


def point_segment_distance(p: Point, a: Point, b: Point) -> tuple[float, Point]:
    """Minimum distance from p to the closed segment ab and the foot point."""
    ax, ay = a
    bx, by = b
    dx = bx - ax
    dy = by - ay
    den = dx * dx + dy * dy
    if den == 0.0:
        return distance(p, a), a
    t = ((p[0] - ax) * dx + (p[1] - ay) * dy) / den
    t = max(0.0, min(1.0, t))
    foot = (ax + t * dx, ay + t * dy)
    return distance(p, foot), foot


def _cross(a: Point, b: Point, p: Point) -> float:
    return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])


def side_of_line(a: Point, b: Point, p: Point) -> int:
    """Sign of the cross product (b-a) x (p-a): NEGATIVE, ON or POSITIVE."""
    if a == b:
        raise ValueError("degenerate line: a == b")
    c = _cross(a, b, p)
    if c > 0.0:
        return POSITIVE
    if c < 0.0:
        return NEGATIVE
    return ON


def same_side(a: Point, b: Point, p: Point, q: Point) -> bool:
    """True iff p and q are strictly on the same side of line ab."""
    sp = side_of_line(a, b, p)
    sq = side_of_line(a, b, q)
    return sp != ON and sp == sq


def opposite_side(a: Point, b: Point, p: Point, q: Point) -> bool:
    """True iff p and q are strictly on opposite sides of line ab."""
    sp = side_of_line(a, b, p)
    sq = side_of_line(a, b, q)
    return sp != ON and sq != ON and sp != sq


def polygon_signed_area(pts: list[Point] | tuple[Point, ...]) -> float:
    area = 0.0
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        area += x0 * y1 - x1 * y0
    return area / 2.0


def inside_convex_polygon(p: Point, pts: list[Point] | tuple[Point, ...]) -> bool:
    """Containment in a convex polygon, boundary inclusive.

    Zero-area (collinear) vertex lists contain nothing.
    """
    n = len(pts)
    if n < 3:
        raise ValueError("convex polygon needs at least 3 vertices")
    if polygon_signed_area(pts) == 0.0:
        return False
    sign = 0
    for i in range(n):
        a = pts[i]
        b = pts[(i + 1) % n]
        c = _cross(a, b, p)
        if c == 0.0:
            continue
        s = 1 if c > 0.0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return True


def segments_cross(a0: Point, a1: Point, b0: Point, b1: Point) -> Point | None:
    """Intersection point of two closed segments, None when they miss.

    Overlapping collinear segments report one of the shared points.
    """
    r = (a1[0] - a0[0], a1[1] - a0[1])
    s = (b1[0] - b0[0], b1[1] - b0[1])
    denom = r[0] * s[1] - r[1] * s[0]
    qp = (b0[0] - a0[0], b0[1] - a0[1])
    qp_cross_r = qp[0] * r[1] - qp[1] * r[0]
    if denom == 0.0:
        if qp_cross_r != 0.0:
            return None  # parallel, not collinear
        # Collinear: project onto the dominant axis of r (or of s when a is a point).
        d = r if (r[0] != 0.0 or r[1] != 0.0) else s
        if d[0] == 0.0 and d[1] == 0.0:
            return a0 if a0 == b0 else None
        axis = 0 if abs(d[0]) >= abs(d[1]) else 1
        alo, ahi = sorted((a0[axis], a1[axis]))
        blo, bhi = sorted((b0[axis], b1[axis]))
        lo = max(alo, blo)
        hi = min(ahi, bhi)
        if lo > hi:
            return None
        for pt in (a0, a1, b0, b1):
            if lo <= pt[axis] <= hi:
                # verify the point really lies on both segments
                if point_segment_distance(pt, a0, a1)[0] == 0.0 and \
                   point_segment_distance(pt, b0, b1)[0] == 0.0:
                    return pt
        return None
    t = (qp[0] * s[1] - qp[1] * s[0]) / denom
    u = qp_cross_r / denom
    if 0.0 <= t <= 1.0 and 0.0 <= u <= 1.0:
        return (a0[0] + t * r[0], a0[1] + t * r[1])
    return None


def segment_segment_distance(a0: Point, a1: Point, b0: Point, b1: Point) -> float:
    """0 when the closed segments intersect, else the minimum gap."""
    if segments_cross(a0, a1, b0, b1) is not None:
        return 0.0
    return min(
        point_segment_distance(a0, b0, b1)[0],
        point_segment_distance(a1, b0, b1)[0],
        point_segment_distance(b0, a0, a1)[0],
        point_segment_distance(b1, a0, a1)[0],
    )


def coef_by_coor(c0: float, c1: float, c: float) -> float:
    """Linear map with c0 -> 0 and c1 -> 1, extrapolating outside."""
    if c0 >= c1:
        raise ValueError("coef_by_coor requires c0 < c1")
    return (c - c0) / (c1 - c0)


def coor_by_coef(c0: float, c1: float, f: float) -> float:
    if c0 >= c1:
        raise ValueError("coor_by_coef requires c0 < c1")
    return c0 + f * (c1 - c0)


@dataclass
class Rect:
    """Axis-aligned rectangle: top-left corner plus sizes."""

    x: float
    y: float
    w: float
    h: float

    @property
    def left(self) -> float:
        return self.x

    @property
    def top(self) -> float:
        return self.y

    @property
    def right(self) -> float:
        return self.x + self.w

    @property
    def bottom(self) -> float:
        return self.y + self.h

    def corners(self) -> list[Point]:
        """LT, RT, RB, LB."""
        return [
            (self.left, self.top),
            (self.right, self.top),
            (self.right, self.bottom),
            (self.left, self.bottom),
        ]

    def center(self) -> Point:
        return (self.x + self.w / 2.0, self.y + self.h / 2.0)

    def contains(self, p: Point) -> bool:
        return self.left <= p[0] <= self.right and self.top <= p[1] <= self.bottom

    def contains_rect(self, other: "Rect") -> bool:
        return (self.left <= other.left and other.right <= self.right and
                self.top <= other.top and other.bottom <= self.bottom)

    def intersects(self, other: "Rect") -> bool:
        return not (other.right < self.left or self.right < other.left or
                    other.bottom < self.top or self.bottom < other.top)

    def union(self, other: "Rect") -> "Rect":
        x0 = min(self.left, other.left)
        y0 = min(self.top, other.top)
        x1 = max(self.right, other.right)
        y1 = max(self.bottom, other.bottom)
        return Rect(x0, y0, x1 - x0, y1 - y0)

    def translated(self, dx: float, dy: float) -> "Rect":
        return Rect(self.x + dx, self.y + dy, self.w, self.h)

    def copy(self) -> "Rect":
        return Rect(self.x, self.y, self.w, self.h)


def rect_position_coefs(rect: Rect, p: Point) -> tuple[float, float]:
    """Relative position of p against rect, per axis.

    Inside the axis span the value is the [0, 1] fraction; outside it is
    the signed pixel distance to the nearest edge (negative on the
    left/top side, positive on the right/bottom side).
    """
    if rect.w <= 0 or rect.h <= 0:
        raise ValueError("rect_position_coefs requires a positive-size rect")

    def axis(c0: float, c1: float, c: float) -> float:
        if c < c0:
            return c - c0
        if c > c1:
            return c - c1
        return (c - c0) / (c1 - c0)

    return axis(rect.left, rect.right, p[0]), axis(rect.top, rect.bottom, p[1])


def location_by_coefs(rect: Rect, x_coef: float, y_coef: float) -> Point:
    """Inverse of rect_position_coefs."""
    if rect.w <= 0 or rect.h <= 0:
        raise ValueError("location_by_coefs requires a positive-size rect")

    def axis(c0: float, c1: float, f: float) -> float:
        if f < 0.0:
            return c0 + f
        if f > 1.0:
            return c1 + f
        return c0 + f * (c1 - c0)

    return axis(rect.left, rect.right, x_coef), axis(rect.top, rect.bottom, y_coef)


def regular_polygon_vertices(center: Point, radius: float, n: int,
                             angle0: float = 0.0) -> list[Point]:
    """Vertices of a regular n-gon, CCW on screen, vertex k at angle0 + 2*pi*k/n."""
    if n < 3:
        raise ValueError("a regular polygon needs at least 3 vertices")
    if radius <= 0:
        raise ValueError("a regular polygon needs a positive radius")
    return [point_at(center, angle0 + TWO_PI * k / n, radius) for k in range(n)]
