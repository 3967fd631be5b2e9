"""Sensitive-region model: nodes, covers, and per-cover hit resolution.

A cover is the only thing the engine ever sees of an object. It is an
ordered list of nodes of three shapes (circle, strip, convex polygon),
each carrying a behaviour and a cursor hint. Hit resolution scans the
nodes in order; the first node containing the point decides.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from . import geometry as geo
from .geometry import Point, Rect

DEFAULT_NODE_RADIUS = 3.0      # circles and strip half-width
DEFAULT_CORNER_RADIUS = 6.0    # corner circles of standard rect covers
DEFAULT_HALF_STRIP = 3.0       # half width of border nodes


class NodeShape(enum.Enum):
    CIRCLE = "circle"
    POLYGON = "polygon"
    STRIP = "strip"


class Behaviour(enum.Enum):
    NONMOVEABLE = "nonmoveable"
    MOVEABLE = "moveable"
    TRANSPARENT = "transparent"
    FROZEN = "frozen"


class CursorHint(enum.Enum):
    DEFAULT = "default"
    HAND = "hand"
    SIZE_ALL = "size_all"
    SIZE_NS = "size_ns"
    SIZE_WE = "size_we"


class Resizing(enum.Enum):
    NONE = "none"
    NS = "ns"
    WE = "we"
    ANY = "any"


@dataclass(frozen=True)
class CoverNode:
    """One sensitive region. Geometry fields depend on the shape variant.

    Circle: center + radius. Strip: p0, p1 + radius (a capsule). Polygon:
    convex vertex list. The id always equals the node's index in its
    cover; Cover enforces that on construction.
    """

    id: int
    shape: NodeShape
    behaviour: Behaviour
    cursor: CursorHint
    clearance: bool
    center: Point | None = None
    radius: float = 0.0
    p0: Point | None = None
    p1: Point | None = None
    vertices: tuple[Point, ...] | None = None


def circle_node(center: Point, radius: float = DEFAULT_NODE_RADIUS, *,
                behaviour: Behaviour = Behaviour.MOVEABLE,
                cursor: CursorHint = CursorHint.HAND,
                clearance: bool = True) -> CoverNode:
    return CoverNode(0, NodeShape.CIRCLE, behaviour, cursor, clearance,
                     center=center, radius=float(radius))


def strip_node(p0: Point, p1: Point, radius: float = DEFAULT_NODE_RADIUS, *,
               behaviour: Behaviour = Behaviour.MOVEABLE,
               cursor: CursorHint = CursorHint.HAND,
               clearance: bool = True) -> CoverNode:
    return CoverNode(0, NodeShape.STRIP, behaviour, cursor, clearance,
                     p0=p0, p1=p1, radius=float(radius))


def polygon_node(vertices, *,
                 behaviour: Behaviour = Behaviour.MOVEABLE,
                 cursor: CursorHint = CursorHint.SIZE_ALL,
                 clearance: bool = False) -> CoverNode:
    """Polygon node over a convex vertex list.

    Degenerate vertex lists fall back the way the original node model
    does: one point makes a circular node, two points a strip node, both
    keeping the polygon defaults (SIZE_ALL cursor, no clearance).
    """
    pts = tuple(tuple(p) for p in vertices)
    if len(pts) == 1:
        return CoverNode(0, NodeShape.CIRCLE, behaviour, cursor, clearance,
                         center=pts[0], radius=DEFAULT_NODE_RADIUS)
    if len(pts) == 2:
        return CoverNode(0, NodeShape.STRIP, behaviour, cursor, clearance,
                         p0=pts[0], p1=pts[1], radius=DEFAULT_NODE_RADIUS)
    if len(pts) == 0:
        raise ValueError("polygon node needs at least one point")
    return CoverNode(0, NodeShape.POLYGON, behaviour, cursor, clearance,
                     vertices=pts)


def rect_node(rect: Rect, *, behaviour: Behaviour = Behaviour.MOVEABLE,
              cursor: CursorHint = CursorHint.SIZE_ALL,
              clearance: bool = False) -> CoverNode:
    return polygon_node(rect.corners(), behaviour=behaviour, cursor=cursor,
                        clearance=clearance)


def node_contains(node: CoverNode, p: Point) -> bool:
    """Boundary-inclusive containment for all three node shapes."""
    if node.shape is NodeShape.CIRCLE:
        return geo.distance(node.center, p) <= node.radius
    if node.shape is NodeShape.STRIP:
        return geo.point_segment_distance(p, node.p0, node.p1)[0] <= node.radius
    return geo.inside_convex_polygon(p, node.vertices)


class HitKind(enum.Enum):
    MISS = "miss"
    BLOCKED = "blocked"
    FALLTHROUGH = "fallthrough"
    FROZEN = "frozen"
    GRAB = "grab"


@dataclass(frozen=True)
class CoverHit:
    kind: HitKind
    node: int | None = None
    shape: NodeShape | None = None
    cursor: CursorHint | None = None


MISS = CoverHit(HitKind.MISS)
BLOCKED = CoverHit(HitKind.BLOCKED)
FALLTHROUGH = CoverHit(HitKind.FALLTHROUGH)


class Cover:
    """Ordered, immutable node list; node ids are forced to the index."""

    def __init__(self, nodes):
        nodes = list(nodes)
        if not nodes:
            raise ValueError("a cover needs at least one node")
        # direct construction: N-node covers rebuild these by the hundred
        self.nodes: tuple[CoverNode, ...] = tuple(
            n if n.id == i else
            CoverNode(i, n.shape, n.behaviour, n.cursor, n.clearance,
                      n.center, n.radius, n.p0, n.p1, n.vertices)
            for i, n in enumerate(nodes))

    def __len__(self) -> int:
        return len(self.nodes)

    def __getitem__(self, i: int) -> CoverNode:
        return self.nodes[i]

    def __iter__(self):
        return iter(self.nodes)


def cover_hit(cover: Cover, p: Point) -> CoverHit:
    """First containing node decides; Transparent skips the whole cover."""
    for node in cover.nodes:
        if not node_contains(node, p):
            continue
        if node.behaviour is Behaviour.TRANSPARENT:
            return FALLTHROUGH
        if node.behaviour is Behaviour.NONMOVEABLE:
            return BLOCKED
        if node.behaviour is Behaviour.FROZEN:
            return CoverHit(HitKind.FROZEN, node.id, node.shape, node.cursor)
        return CoverHit(HitKind.GRAB, node.id, node.shape, node.cursor)
    return MISS


def standard_rect_cover(rect: Rect, resizing: Resizing,
                        corner_radius: float = DEFAULT_CORNER_RADIUS,
                        half_strip: float = DEFAULT_HALF_STRIP) -> Cover:
    """The stock rectangle cover: 1, 3, 3 or 9 nodes by resizing kind.

    Full resizing puts four corner circles first, then the four border
    rectangles (top, right, bottom, left), then the whole-area node.
    """
    if rect.w <= 0 or rect.h <= 0:
        raise ValueError("standard_rect_cover requires a positive-size rect")
    whole = rect_node(rect, cursor=CursorHint.SIZE_ALL)
    if resizing is Resizing.NONE:
        return Cover([whole])

    hs = half_strip
    top = polygon_node(Rect(rect.left, rect.top - hs, rect.w, 2 * hs).corners(),
                       cursor=CursorHint.SIZE_NS)
    bottom = polygon_node(Rect(rect.left, rect.bottom - hs, rect.w, 2 * hs).corners(),
                          cursor=CursorHint.SIZE_NS)
    left = polygon_node(Rect(rect.left - hs, rect.top, 2 * hs, rect.h).corners(),
                        cursor=CursorHint.SIZE_WE)
    right = polygon_node(Rect(rect.right - hs, rect.top, 2 * hs, rect.h).corners(),
                         cursor=CursorHint.SIZE_WE)

    if resizing is Resizing.NS:
        return Cover([top, bottom, whole])
    if resizing is Resizing.WE:
        return Cover([left, right, whole])

    corners = [circle_node(c, corner_radius) for c in rect.corners()]
    return Cover(corners + [top, right, bottom, left, whole])


def cover_edit(cover: Cover, selector: int | NodeShape | None = None, *,
               behaviour: Behaviour | None = None,
               cursor: CursorHint | None = None,
               clearance: bool | None = None) -> Cover:
    """Return a cover with attributes updated on the selected nodes.

    selector: a node id, a NodeShape (all nodes of that shape), or None
    for every node. Geometry and order are untouched.
    """
    if isinstance(selector, int) and not 0 <= selector < len(cover):
        raise IndexError(f"node id {selector} out of range")

    def matches(node: CoverNode) -> bool:
        if selector is None:
            return True
        if isinstance(selector, NodeShape):
            return node.shape is selector
        return node.id == selector

    updated = []
    for node in cover.nodes:
        if matches(node):
            kwargs = {}
            if behaviour is not None:
                kwargs["behaviour"] = behaviour
            if cursor is not None:
                kwargs["cursor"] = cursor
            if clearance is not None:
                kwargs["clearance"] = clearance
            node = replace(node, **kwargs)
        updated.append(node)
    return Cover(updated)


def cover_primitives(cover: Cover) -> list[dict]:
    """Drawable outline primitives for cover visualization (SVG export)."""
    prims = []
    for node in cover.nodes:
        if node.shape is NodeShape.CIRCLE:
            if node.radius <= 0:
                continue  # degenerate placeholder nodes are not drawn
            prims.append({"kind": "circle", "center": node.center,
                          "radius": node.radius, "fill": node.clearance})
        elif node.shape is NodeShape.STRIP:
            prims.append({"kind": "capsule", "p0": node.p0, "p1": node.p1,
                          "radius": node.radius, "fill": node.clearance})
        else:
            prims.append({"kind": "polygon", "points": list(node.vertices),
                          "fill": node.clearance})
    return prims
