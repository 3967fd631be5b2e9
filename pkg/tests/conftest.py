"""Shared test helpers and independent oracles.

The oracles deliberately use different machinery than the library:
shapely for containment/convexity, plain enumeration for hit order.
"""

from __future__ import annotations

import math
import random

import pytest
from shapely.geometry import LineString, Point as ShPoint, Polygon as ShPolygon

from movables.cover import Behaviour, NodeShape


def oracle_node_contains(node, p) -> bool:
    """Boundary-inclusive containment via shapely."""
    sp = ShPoint(p)
    if node.shape is NodeShape.CIRCLE:
        return sp.distance(ShPoint(node.center)) <= node.radius + 1e-12
    if node.shape is NodeShape.STRIP:
        return LineString([node.p0, node.p1]).distance(sp) <= node.radius + 1e-12
    poly = ShPolygon(node.vertices)
    if poly.area == 0.0:
        return False
    return poly.covers(sp)


def oracle_cover_hit(cover, p):
    """First containing node decides, with the behaviour rules applied.

    Returns one of ("miss",), ("blocked",), ("fallthrough",),
    ("frozen", id), ("grab", id).
    """
    for node in cover:
        if not oracle_node_contains(node, p):
            continue
        if node.behaviour is Behaviour.TRANSPARENT:
            return ("fallthrough",)
        if node.behaviour is Behaviour.NONMOVEABLE:
            return ("blocked",)
        if node.behaviour is Behaviour.FROZEN:
            return ("frozen", node.id)
        return ("grab", node.id)
    return ("miss",)


def oracle_strictly_convex(pts) -> bool:
    """All consecutive turns share one strict sign and the ring is simple."""
    n = len(pts)
    sign = 0
    for i in range(n):
        ax, ay = pts[i]
        bx, by = pts[(i + 1) % n]
        cx, cy = pts[(i + 2) % n]
        cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
        if cross == 0.0:
            return False
        s = 1 if cross > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return ShPolygon(pts).is_valid


def pairwise_distances(pts):
    out = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            out.append(math.dist(pts[i], pts[j]))
    return out


@pytest.fixture
def rng():
    return random.Random(20240809)
