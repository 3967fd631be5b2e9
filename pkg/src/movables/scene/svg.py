"""SVG emitter: back-to-front shape rendering plus the cover overlay.

Cover nodes are drawn as outlines (circles, capsules, polygons) with the
class "cover"; a node's clearance flag wipes its interior. Shape
painting is intentionally plain; the overlay is the part the tests
count.
"""

from __future__ import annotations

import math

from .. import geometry as geo
from ..cover import cover_primitives
from ..geometry import Point, Rect


def _f(x: float) -> str:
    i = int(x)
    return str(i) if x == i else repr(x)


def _poly(points, fill: str, extra: str = "") -> str:
    coords = " ".join(f"{_f(x)},{_f(y)}" for x, y in points)
    return f'<polygon points="{coords}" fill="{fill}"{extra} />'


def _circle(center: Point, r: float, fill: str, extra: str = "") -> str:
    return (f'<circle cx="{_f(center[0])}" cy="{_f(center[1])}" '
            f'r="{_f(r)}" fill="{fill}"{extra} />')


def _line(a: Point, b: Point, stroke: str, width: float = 2.0) -> str:
    return (f'<line x1="{_f(a[0])}" y1="{_f(a[1])}" x2="{_f(b[0])}" '
            f'y2="{_f(b[1])}" stroke="{stroke}" stroke-width="{_f(width)}" />')


def _capsule_path(p0: Point, p1: Point, r: float) -> str:
    a = geo.line_angle(p0, p1)
    up = a + math.pi / 2.0
    down = a - math.pi / 2.0
    s0 = geo.point_at(p0, up, r)
    s1 = geo.point_at(p1, up, r)
    e1 = geo.point_at(p1, down, r)
    e0 = geo.point_at(p0, down, r)
    return (f"M {_f(s0[0])} {_f(s0[1])} L {_f(s1[0])} {_f(s1[1])} "
            f"A {_f(r)} {_f(r)} 0 0 1 {_f(e1[0])} {_f(e1[1])} "
            f"L {_f(e0[0])} {_f(e0[1])} "
            f"A {_f(r)} {_f(r)} 0 0 1 {_f(s0[0])} {_f(s0[1])} Z")


def _capsule(p0: Point, p1: Point, r: float, fill: str, extra: str = "") -> str:
    return f'<path d="{_capsule_path(p0, p1, r)}" fill="{fill}"{extra} />'


def _sector_path(center: Point, r: float, start: float, sweep: float) -> str:
    p0 = geo.point_at(center, start, r)
    p1 = geo.point_at(center, start + sweep, r)
    large = 1 if abs(sweep) > math.pi else 0
    cw = 1 if sweep > 0 else 0  # screen CCW means SVG sweep flag 1
    return (f"M {_f(center[0])} {_f(center[1])} L {_f(p0[0])} {_f(p0[1])} "
            f"A {_f(r)} {_f(r)} 0 {large} {cw} {_f(p1[0])} {_f(p1[1])} Z")


def _rect_el(rc: Rect, fill: str, extra: str = "") -> str:
    return (f'<rect x="{_f(rc.x)}" y="{_f(rc.y)}" width="{_f(rc.w)}" '
            f'height="{_f(rc.h)}" fill="{fill}"{extra} />')


def _draw_shape(obj) -> list[str]:
    kind = getattr(obj, "kind", "")
    out: list[str] = []
    if kind in ("rect", "fixed_ratio_rect", "ball_board", "color_board",
                "slider_panel", "board", "plot_panel"):
        out.append(_rect_el(obj.rect, obj.fill))
        if kind == "board":
            for hole in obj.holes:
                if hole.n == 0:
                    out.append(_circle(hole.center, hole.radius, "#ffffff"))
                else:
                    out.append(_poly(hole.vertices(), "#ffffff"))
    elif kind == "partitioned_rect":
        rc = obj.rect
        for i, size in enumerate(obj.segment_sizes):
            x = rc.left + obj.offsets[i]
            out.append(_rect_el(Rect(x, rc.top, size, rc.h),
                                obj.fills[i % len(obj.fills)]))
    elif kind == "line":
        out.append(_line(obj.pt_a, obj.pt_b, obj.stroke))
    elif kind == "segmented_line":
        for i in range(len(obj.pts) - 1):
            out.append(_line(obj.pts[i], obj.pts[i + 1], obj.stroke))
    elif kind in ("sectored_circle", "partitioned_circle"):
        sweeps = obj.sweeps() if kind == "partitioned_circle" else None
        if sweeps is None:
            total = sum(obj.weights)
            sweeps = [geo.TWO_PI * w / total for w in obj.weights]
        a = obj.angle
        for i, sweep in enumerate(sweeps):
            out.append(f'<path d="{_sector_path(obj.center, obj.radius, a, sweep)}"'
                       f' fill="{obj.fills[i % len(obj.fills)]}" />')
            a += sweep
    elif kind == "nnode_circle":
        out.append(_circle(obj.center, obj.radius, obj.fill))
    elif kind == "nnode_ring":
        out.append(_circle(obj.center, obj.r_outer, obj.fill))
        out.append(_circle(obj.center, obj.r_inner, "#ffffff"))
    elif kind in ("nnode_strip", "adhered_strip"):
        out.append(_capsule(obj.pt_c0, obj.pt_c1, obj.radius, obj.fill))
    elif kind == "regular_poly":
        out.append(_poly(obj.vertices(), obj.fill))
    elif kind in ("convex_poly", "chatoyant_poly"):
        out.append(_poly(obj.pts, obj.fill))
    elif kind == "sector":
        out.append(f'<path d="{_sector_path(obj.center, obj.radius, obj.angle_start, obj.angle_sweep)}"'
                   f' fill="{obj.fill}" />')
        # the end side stays visible even with a zero sweep
        end = geo.point_at(obj.center, obj.angle_start + obj.angle_sweep,
                           obj.radius)
        out.append(_line(obj.center, end, obj.fill, 4.0))
    elif kind == "plug":
        if obj.n == 0:
            out.append(_circle(obj.center, obj.radius, obj.fill))
        else:
            out.append(_poly(geo.regular_polygon_vertices(
                obj.center, obj.radius, obj.n, obj.angle), obj.fill))
    elif kind in ("label", "satellite"):
        out.append(_poly(obj.corners(), "#ffffe0",
                         f' stroke="{obj.color}" stroke-width="1"'))
    elif kind in ("widget", "commented_widget", "subordinate"):
        out.append(_rect_el(obj.rect, obj.fill,
                            ' stroke="#606060" stroke-width="1"'))
    elif kind == "dominant_group":
        out.append(_rect_el(obj.dominant.rect, obj.dominant.fill,
                            ' stroke="#606060" stroke-width="1"'))
    elif kind == "linked_rects":
        for _, rc in obj.rects:
            out.append(_rect_el(rc, obj.fill, ' stroke="#606060"'))
    elif kind == "elastic_group":
        opacity = 1.0 - obj.transparency
        out.append(_rect_el(obj.frame, obj.back_color,
                            f' fill-opacity="{_f(opacity)}"'))
        if obj.show_frame:
            out.append(_rect_el(obj.frame, "none",
                                f' stroke="{obj.frame_color}" stroke-width="1"'))
        if obj.title:
            out.append(_rect_el(obj.title_box(), "#ffffff",
                                f' stroke="{obj.title_color}"'))
    elif kind == "scale_bar":
        area = obj.rect_around()
        ends = ((area.left, obj.line_coor()), (area.right, obj.line_coor())) \
            if obj.horizontal else \
            ((obj.line_coor(), area.top), (obj.line_coor(), area.bottom))
        out.append(_rect_el(area, "none", f' stroke="{obj.color}"'))
        out.append(_line(ends[0], ends[1], obj.color, 1.0))
    elif kind == "slider":
        a, b = obj.ends()
        out.append(_line(a, b, obj.stroke))
    elif kind in ("ball", "color_ball", "adhered_ball"):
        out.append(_circle(obj.center, obj.radius, obj.fill))
    elif kind == "ball_poly_board":
        out.append(_poly(obj.vertices(), obj.fill))
    elif kind == "labyrinth":
        for a, b in obj.walls:
            out.append(_line(a, b, obj.stroke, 2.0))
    return out


def _draw_cover(obj) -> list[str]:
    out: list[str] = []
    style = ' class="cover" stroke="#d02020" stroke-width="1"'
    for prim in cover_primitives(obj.cover):
        fill = "#ffffff" if prim["fill"] else "none"
        if prim["kind"] == "circle":
            out.append(_circle(prim["center"], prim["radius"], fill, style))
        elif prim["kind"] == "capsule":
            out.append(_capsule(prim["p0"], prim["p1"], prim["radius"], fill,
                                style))
        else:
            out.append(_poly(prim["points"], fill, style))
    return out


def export_svg(scene, show_covers: bool = False) -> str:
    """Back-to-front render of the scene, optional cover overlay on top."""
    w = scene.client.w
    h = scene.client.h
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(w)}" '
             f'height="{_f(h)}" viewBox="0 0 {_f(w)} {_f(h)}">']
    ordered = [obj for obj in reversed(scene.engine.queue)
               if obj.visible and obj.visible_as_member]
    for obj in ordered:
        lines.extend(_draw_shape(obj))
    if show_covers:
        for obj in ordered:
            lines.extend(_draw_cover(obj))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
