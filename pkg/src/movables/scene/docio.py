"""Scene document save/load.

The document is canonical JSON: a fixed key order per object kind,
numbers emitted as ints when integral, floats otherwise (repr gives the
shortest round-trip). save(load(doc)) is byte-identical and
load(save(scene)) reproduces the scene exactly, ids included.
"""

from __future__ import annotations

import json

from ..constraints import (AdheredBall, AdheredStrip, Ball, BallBoard,
                           BoardWithBalls, BoundedSlider, ColorBall,
                           ColorBallBoard, Labyrinth, SliderPanel)
from ..cover import Resizing
from ..geometry import Rect
from ..groups import (CommentedElement, DominantGroup, ElasticGroup,
                      LinkedRects, PlotPanelLite, Satellite, ScaleBar,
                      SubordinateProxy, WidgetProxy)
from ..shapes import (ChatoyantPolyShape, ConvexPolyShape, FixedRatioRect,
                      Hole, HoleKind, LabelBox, LineShape, MovementAllowed,
                      NnodeCircle, NnodeRing, NnodeStrip, PartitionedCircle,
                      PartitionedRect, PerforatedBoard, Plug, PolyMode,
                      RectRange, RectShape, RegularPolyShape,
                      SectoredCircle, SectorShape, SegmentedLineShape,
                      TextBasis, ensure_id_floor)

FORMAT_VERSION = 1


class SceneDocError(ValueError):
    """Malformed or unsupported scene document."""


def num(x):
    """Canonical JSON number: int when integral, float otherwise."""
    f = float(x)
    i = int(f)
    return i if f == i and abs(f) < 2 ** 53 else f


def pt(p):
    return [num(p[0]), num(p[1])]


def pts(seq):
    return [pt(p) for p in seq]


def rect(rc: Rect):
    return [num(rc.x), num(rc.y), num(rc.w), num(rc.h)]


def _rect(v) -> Rect:
    return Rect(float(v[0]), float(v[1]), float(v[2]), float(v[3]))


def _common(obj) -> dict:
    return {"kind": obj.kind, "id": obj.id, "parent": obj.parent_id,
            "visible": obj.visible, "member": obj.visible_as_member}


def _apply_common(obj, d: dict) -> None:
    obj.id = int(d["id"])
    obj.parent_id = int(d["parent"])
    obj.visible = bool(d["visible"])
    obj.visible_as_member = bool(d["member"])


# --- per-kind serializers -----------------------------------------------------

def _rect_to(o: RectShape) -> dict:
    d = _common(o)
    d.update(rect=rect(o.rect),
             range=[num(o.range.w_min), num(o.range.w_max),
                    num(o.range.h_min), num(o.range.h_max)],
             resizing=o.resizing.value,
             corner_radius=num(o.corner_radius), half_strip=num(o.half_strip),
             disappearance=o.disappearance, fill=o.fill)
    return d


def _rect_from(d: dict) -> RectShape:
    o = RectShape(_rect(d["rect"]), disappearance=bool(d["disappearance"]),
                  corner_radius=float(d["corner_radius"]),
                  half_strip=float(d["half_strip"]), fill=d["fill"])
    r = d["range"]
    o.range = RectRange(float(r[0]), float(r[1]), float(r[2]), float(r[3]))
    o.resizing = Resizing(d["resizing"])
    o.rect = _rect(d["rect"])
    return o


def _fixed_ratio_to(o: FixedRatioRect) -> dict:
    d = _common(o)
    d.update(rect=rect(o.rect), ratio=num(o.ratio),
             w_min=num(o.w_min), h_min=num(o.h_min), fill=o.fill)
    return d


def _fixed_ratio_from(d: dict) -> FixedRatioRect:
    o = FixedRatioRect(_rect(d["rect"]), float(d["w_min"]), float(d["h_min"]),
                       fill=d["fill"])
    o.ratio = float(d["ratio"])
    return o


def _part_rect_to(o: PartitionedRect) -> dict:
    d = _common(o)
    d.update(rect=rect(o.rect), offsets=[num(v) for v in o.offsets],
             fills=list(o.fills))
    return d


def _part_rect_from(d: dict) -> PartitionedRect:
    offs = [float(v) for v in d["offsets"]]
    sizes = [offs[i + 1] - offs[i] for i in range(len(offs) - 1)]
    o = PartitionedRect(_rect(d["rect"]), sizes, fills=list(d["fills"]))
    o.rect = _rect(d["rect"])
    o.offsets = offs
    return o


def _line_to(o: LineShape) -> dict:
    d = _common(o)
    d.update(a=pt(o.pt_a), b=pt(o.pt_b), stroke=o.stroke)
    return d


def _line_from(d: dict) -> LineShape:
    return LineShape(tuple(d["a"]), tuple(d["b"]), stroke=d["stroke"])


def _segline_to(o: SegmentedLineShape) -> dict:
    d = _common(o)
    d.update(points=pts(o.pts), anchor=pt(o.anchor), stroke=o.stroke)
    return d


def _segline_from(d: dict) -> SegmentedLineShape:
    return SegmentedLineShape([tuple(p) for p in d["points"]],
                              anchor=tuple(d["anchor"]), stroke=d["stroke"])


def _sectored_to(o: SectoredCircle) -> dict:
    d = _common(o)
    d.update(center=pt(o.center), radius=num(o.radius), angle=num(o.angle),
             weights=[num(w) for w in o.weights], fills=list(o.fills))
    return d


def _sectored_from(d: dict) -> SectoredCircle:
    return SectoredCircle(tuple(d["center"]), float(d["radius"]),
                          float(d["angle"]), [float(w) for w in d["weights"]],
                          fills=list(d["fills"]))


def _ncircle_to(o: NnodeCircle) -> dict:
    d = _common(o)
    d.update(center=pt(o.center), radius=num(o.radius),
             min_radius=num(o.min_radius), fill=o.fill)
    return d


def _ncircle_from(d: dict) -> NnodeCircle:
    return NnodeCircle(tuple(d["center"]), float(d["radius"]),
                       float(d["min_radius"]), fill=d["fill"])


def _nring_to(o: NnodeRing) -> dict:
    d = _common(o)
    d.update(center=pt(o.center), r_outer=num(o.r_outer),
             r_inner=num(o.r_inner), min_inner=num(o.min_inner),
             min_width=num(o.min_width), fill=o.fill)
    return d


def _nring_from(d: dict) -> NnodeRing:
    return NnodeRing(tuple(d["center"]), float(d["r_outer"]),
                     float(d["r_inner"]), float(d["min_inner"]),
                     float(d["min_width"]), fill=d["fill"])


def _nstrip_to(o: NnodeStrip) -> dict:
    d = _common(o)
    d.update(c0=pt(o.pt_c0), c1=pt(o.pt_c1), radius=num(o.radius), fill=o.fill)
    return d


def _nstrip_from(d: dict) -> NnodeStrip:
    return NnodeStrip(tuple(d["c0"]), tuple(d["c1"]), float(d["radius"]),
                      fill=d["fill"])


def _part_circle_to(o: PartitionedCircle) -> dict:
    d = _common(o)
    d.update(center=pt(o.center), radius=num(o.radius), angle=num(o.angle),
             values=[num(v) for v in o.values], fills=list(o.fills))
    return d


def _part_circle_from(d: dict) -> PartitionedCircle:
    return PartitionedCircle(tuple(d["center"]), float(d["radius"]),
                             float(d["angle"]),
                             [float(v) for v in d["values"]],
                             fills=list(d["fills"]))


def _regpoly_to(o: RegularPolyShape) -> dict:
    d = _common(o)
    d.update(center=pt(o.center), radius=num(o.radius), n=o.n,
             angle=num(o.angle), mode=o.mode.value, movement=o.movement.value,
             min_radius=num(o.min_radius), disappearance=o.disappearance,
             fill=o.fill)
    return d


def _regpoly_from(d: dict) -> RegularPolyShape:
    o = RegularPolyShape(tuple(d["center"]), float(d["radius"]), int(d["n"]),
                         float(d["angle"]), PolyMode(d["mode"]),
                         MovementAllowed(d["movement"]),
                         disappearance=bool(d["disappearance"]),
                         fill=d["fill"])
    o.min_radius = float(d["min_radius"])
    return o


def _convex_to(o: ConvexPolyShape) -> dict:
    d = _common(o)
    d.update(points=pts(o.pts), min_side=num(o.min_side), fill=o.fill)
    return d


def _convex_from(d: dict) -> ConvexPolyShape:
    return ConvexPolyShape([tuple(p) for p in d["points"]],
                           float(d["min_side"]), fill=d["fill"])


def _chatoyant_to(o: ChatoyantPolyShape) -> dict:
    d = _common(o)
    d.update(points=pts(o.pts), center=pt(o.center), fill=o.fill)
    return d


def _chatoyant_from(d: dict) -> ChatoyantPolyShape:
    return ChatoyantPolyShape([tuple(p) for p in d["points"]],
                              tuple(d["center"]), fill=d["fill"])


def _sector_to(o: SectorShape) -> dict:
    d = _common(o)
    d.update(center=pt(o.center), radius=num(o.radius),
             angle_start=num(o.angle_start), angle_sweep=num(o.angle_sweep),
             arc_resizable=o.arc_resizable,
             end_side_movable=o.end_side_movable,
             start_side_movable=o.start_side_movable,
             min_radius=num(o.min_radius), fill=o.fill)
    return d


def _sector_from(d: dict) -> SectorShape:
    return SectorShape(tuple(d["center"]), float(d["radius"]),
                       float(d["angle_start"]), float(d["angle_sweep"]),
                       arc_resizable=bool(d["arc_resizable"]),
                       end_side_movable=bool(d["end_side_movable"]),
                       start_side_movable=bool(d["start_side_movable"]),
                       min_radius=float(d["min_radius"]), fill=d["fill"])


def _hole_to(h: Hole) -> dict:
    return {"kind": h.kind.value, "center": pt(h.center),
            "radius": num(h.radius), "n": h.n, "angle": num(h.angle)}


def _hole_from(d: dict) -> Hole:
    return Hole(HoleKind(d["kind"]), tuple(d["center"]), float(d["radius"]),
                int(d["n"]), float(d["angle"]))


def _board_to(o: PerforatedBoard) -> dict:
    d = _common(o)
    d.update(rect=rect(o.rect), holes=[_hole_to(h) for h in o.holes],
             fill=o.fill)
    return d


def _board_from(d: dict) -> PerforatedBoard:
    return PerforatedBoard(_rect(d["rect"]),
                           [_hole_from(h) for h in d["holes"]], fill=d["fill"])


def _plug_to(o: Plug) -> dict:
    d = _common(o)
    d.update(center=pt(o.center), radius=num(o.radius), n=o.n,
             angle=num(o.angle), fill=o.fill)
    return d


def _plug_from(d: dict) -> Plug:
    return Plug(tuple(d["center"]), float(d["radius"]), int(d["n"]),
                float(d["angle"]), fill=d["fill"])


def _label_to(o: LabelBox) -> dict:
    d = _common(o)
    d.update(anchor=pt(o.anchor), width=num(o.width), height=num(o.height),
             basis=o.basis.value, angle=num(o.angle), text=o.text,
             color=o.color)
    return d


def _label_from(d: dict) -> LabelBox:
    return LabelBox(tuple(d["anchor"]), float(d["width"]), float(d["height"]),
                    TextBasis(d["basis"]), float(d["angle"]), d["text"],
                    d["color"])


def _satellite_to(o: Satellite) -> dict:
    d = _common(o)
    d.update(parent_rect=rect(o.parent_rect),
             coefs=[num(o.x_coef), num(o.y_coef)], width=num(o.width),
             height=num(o.height), angle=num(o.angle), text=o.text,
             color=o.color)
    return d


def _satellite_from(d: dict) -> Satellite:
    return Satellite(_rect(d["parent_rect"]), float(d["width"]),
                     float(d["height"]),
                     coefs=(float(d["coefs"][0]), float(d["coefs"][1])),
                     angle=float(d["angle"]), text=d["text"], color=d["color"])


def _widget_fields(o: WidgetProxy) -> dict:
    return dict(rect=rect(o.rect),
                min_size=[num(o.w_min), num(o.h_min)],
                max_size=[num(o.w_max), num(o.h_max)],
                movable=o.movable, frame=num(o.frame), handle=num(o.handle),
                resizing_override=(o._resizing_override.value
                                   if o._resizing_override else None),
                label=o.label, fill=o.fill)


def _widget_apply(o: WidgetProxy, d: dict) -> None:
    o.rect = _rect(d["rect"])
    o.w_min, o.h_min = (float(v) for v in d["min_size"])
    o.w_max, o.h_max = (float(v) for v in d["max_size"])
    o.movable = bool(d["movable"])
    o.frame = float(d["frame"])
    o.handle = float(d["handle"])
    o._resizing_override = (Resizing(d["resizing_override"])
                            if d["resizing_override"] else None)


def _widget_to(o: WidgetProxy) -> dict:
    d = _common(o)
    d.update(_widget_fields(o))
    return d


def _widget_from(d: dict) -> WidgetProxy:
    o = WidgetProxy(_rect(d["rect"]), label=d["label"], fill=d["fill"])
    _widget_apply(o, d)
    return o


def _commented_to(o: CommentedElement) -> dict:
    d = _common(o)
    d.update(_widget_fields(o))
    d["comment"] = _satellite_to(o.comment)
    return d


def _commented_from(d: dict) -> CommentedElement:
    o = CommentedElement(_rect(d["rect"]), label=d["label"], fill=d["fill"])
    _widget_apply(o, d)
    o.comment = _satellite_from(d["comment"])
    _apply_common(o.comment, d["comment"])
    return o


def _subordinate_to(o: SubordinateProxy) -> dict:
    d = _common(o)
    d.update(_widget_fields(o))
    d["lt_coefs"] = [num(o.lt_coefs[0]), num(o.lt_coefs[1])]
    return d


def _subordinate_from(d: dict) -> SubordinateProxy:
    o = SubordinateProxy(_rect(d["rect"]), label=d["label"], fill=d["fill"])
    _widget_apply(o, d)
    o.lt_coefs = (float(d["lt_coefs"][0]), float(d["lt_coefs"][1]))
    return o


def _dominant_to(o: DominantGroup) -> dict:
    d = _common(o)
    d.update(dominant=_widget_to(o.dominant),
             subordinates=[_subordinate_to(s) for s in o.subordinates],
             show_prompts=o.show_prompts)
    return d


def _dominant_from(d: dict) -> DominantGroup:
    dominant = _widget_from(d["dominant"])
    _apply_common(dominant, d["dominant"])
    subs = []
    for sd in d["subordinates"]:
        s = _subordinate_from(sd)
        _apply_common(s, sd)
        subs.append(s)
    o = DominantGroup(dominant, subs, show_prompts=bool(d["show_prompts"]))
    for s, sd in zip(o.subordinates, d["subordinates"]):
        s.lt_coefs = (float(sd["lt_coefs"][0]), float(sd["lt_coefs"][1]))
        s.parent_id = int(sd["parent"])
    return o


def _linked_to(o: LinkedRects) -> dict:
    d = _common(o)
    d.update(rects=[{"tag": tag, "rect": rect(rc)} for tag, rc in o.rects],
             fill=o.fill)
    return d


def _linked_from(d: dict) -> LinkedRects:
    return LinkedRects([(r["tag"], _rect(r["rect"])) for r in d["rects"]],
                       fill=d["fill"])


def _elastic_to(o: ElasticGroup) -> dict:
    d = _common(o)
    d.update(elements=[to_doc(e) for e in o.elements], title=o.title,
             title_size=[num(o.title_w), num(o.title_h)],
             side_spaces=[num(s) for s in o.side_spaces],
             alignment_coef=num(o.alignment_coef),
             title_movable=o.title_movable,
             elements_movable=o.elements_movable,
             back_color=o.back_color, transparency=num(o.transparency),
             frame_color=o.frame_color, show_frame=o.show_frame,
             title_color=o.title_color, frame=rect(o.frame))
    return d


def _elastic_from(d: dict) -> ElasticGroup:
    elements = [from_doc(e) for e in d["elements"]]
    o = ElasticGroup(elements, d["title"],
                     (float(d["title_size"][0]), float(d["title_size"][1])),
                     tuple(float(s) for s in d["side_spaces"]),
                     float(d["alignment_coef"]), bool(d["title_movable"]),
                     bool(d["elements_movable"]), d["back_color"],
                     float(d["transparency"]), d["frame_color"],
                     bool(d["show_frame"]), d["title_color"])
    for e, ed in zip(o.elements, d["elements"]):
        e.parent_id = int(ed["parent"])
    o.frame = _rect(d["frame"])
    o.update_cover()
    return o


def _scale_to(o: ScaleBar) -> dict:
    d = _common(o)
    d.update(parent_rect=rect(o.parent_rect), horizontal=o.horizontal,
             pos_coef=num(o.pos_coef), h_half=num(o.h_half), frozen=o.frozen,
             color=o.color, comments=[_satellite_to(c) for c in o.comments])
    return d


def _scale_from(d: dict) -> ScaleBar:
    o = ScaleBar(_rect(d["parent_rect"]), bool(d["horizontal"]),
                 float(d["pos_coef"]), float(d["h_half"]), bool(d["frozen"]),
                 d["color"])
    for cd in d["comments"]:
        c = _satellite_from(cd)
        _apply_common(c, cd)
        o.comments.append(c)
    return o


def _plot_to(o: PlotPanelLite) -> dict:
    d = _common(o)
    d.update(rect=rect(o.rect), scales=[_scale_to(s) for s in o.scales],
             comments=[_satellite_to(c) for c in o.comments], fill=o.fill)
    return d


def _plot_from(d: dict) -> PlotPanelLite:
    o = PlotPanelLite(_rect(d["rect"]), fill=d["fill"])
    for sd in d["scales"]:
        s = _scale_from(sd)
        _apply_common(s, sd)
        o.scales.append(s)
    for cd in d["comments"]:
        c = _satellite_from(cd)
        _apply_common(c, cd)
        o.comments.append(c)
    return o


def _slider_to(o: BoundedSlider) -> dict:
    d = _common(o)
    d.update(parent_rect=rect(o.parent_rect), horizontal=o.horizontal,
             pos_coef=num(o.pos_coef), order_preserving=o.order_preserving,
             stroke=o.stroke)
    return d


def _slider_from(d: dict) -> BoundedSlider:
    return BoundedSlider(_rect(d["parent_rect"]), bool(d["horizontal"]),
                         float(d["pos_coef"]), bool(d["order_preserving"]),
                         stroke=d["stroke"])


def _slider_panel_to(o: SliderPanel) -> dict:
    d = _common(o)
    d.update(rect=rect(o.rect), size_range=[num(o.size_min), num(o.size_max)],
             hor=[_slider_to(s) for s in o.hor_sliders],
             ver=[_slider_to(s) for s in o.ver_sliders], fill=o.fill)
    return d


def _slider_panel_from(d: dict) -> SliderPanel:
    o = SliderPanel(_rect(d["rect"]),
                    (float(d["size_range"][0]), float(d["size_range"][1])),
                    fill=d["fill"])
    for sd in d["hor"] + d["ver"]:
        s = _slider_from(sd)
        _apply_common(s, sd)
        (o.hor_sliders if s.horizontal else o.ver_sliders).append(s)
    return o


def _ball_to(o: Ball) -> dict:
    d = _common(o)
    d.update(center=pt(o.center), radius=num(o.radius), fill=o.fill)
    return d


def _ball_from(d: dict) -> Ball:
    return Ball(tuple(d["center"]), float(d["radius"]), fill=d["fill"])


def _ball_board_to(o: BoardWithBalls) -> dict:
    d = _common(o)
    d.update(rect=rect(o.rect), size_range=[num(o.size_min), num(o.size_max)],
             balls=[_ball_to(b) for b in o.balls], fill=o.fill)
    return d


def _ball_board_from(d: dict) -> BoardWithBalls:
    o = BoardWithBalls(_rect(d["rect"]),
                       (float(d["size_range"][0]), float(d["size_range"][1])),
                       fill=d["fill"])
    for bd in d["balls"]:
        b = _ball_from(bd)
        _apply_common(b, bd)
        o.balls.append(b)
    o.set_areas()
    return o


def _color_ball_to(o: ColorBall) -> dict:
    d = _common(o)
    d.update(center=pt(o.center), radius=num(o.radius), color=o.color)
    return d


def _color_ball_from(d: dict) -> ColorBall:
    # a bare color ball has no siblings until a board adopts it
    return ColorBall(tuple(d["center"]), float(d["radius"]), d["color"])


def _color_board_to(o: ColorBallBoard) -> dict:
    d = _common(o)
    d.update(rect=rect(o.rect), balls=[_color_ball_to(b) for b in o.balls],
             fill=o.fill)
    return d


def _color_board_from(d: dict) -> ColorBallBoard:
    o = ColorBallBoard(_rect(d["rect"]), fill=d["fill"])
    for bd in d["balls"]:
        b = ColorBall(tuple(bd["center"]), float(bd["radius"]), bd["color"])
        o.add_ball(b)
        _apply_common(b, bd)  # after add_ball, which stamps a parent id
    return o


def _labyrinth_to(o: Labyrinth) -> dict:
    d = _common(o)
    d.update(walls=[[pt(a), pt(b)] for a, b in o.walls], stroke=o.stroke)
    return d


def _labyrinth_from(d: dict) -> Labyrinth:
    return Labyrinth([(tuple(a), tuple(b)) for a, b in d["walls"]],
                     stroke=d["stroke"])


def _adhered_ball_to(o: AdheredBall) -> dict:
    d = _common(o)
    d.update(center=pt(o.center), radius=num(o.radius),
             region=pts(o.region) if o.region is not None else None,
             labyrinth=o.labyrinth.id if o.labyrinth is not None else None,
             fill=o.fill)
    return d


def _adhered_ball_from(d: dict) -> AdheredBall:
    if d["region"] is not None:
        return AdheredBall(tuple(d["center"]), float(d["radius"]),
                           region=[tuple(p) for p in d["region"]],
                           fill=d["fill"])
    o = AdheredBall(tuple(d["center"]), float(d["radius"]),
                    region=[(0, 0), (1, 0), (0, 1)], fill=d["fill"])
    o.region = None
    o._pending_labyrinth = int(d["labyrinth"])  # resolved in a post-pass
    return o


def _poly_board_to(o: BallBoard) -> dict:
    d = _common(o)
    d.update(center=pt(o.center), radius=num(o.radius), n=o.n,
             angle=num(o.angle), ball=_adhered_ball_to(o.ball), fill=o.fill)
    return d


def _poly_board_from(d: dict) -> BallBoard:
    o = BallBoard(tuple(d["center"]), float(d["radius"]), int(d["n"]),
                  float(d["angle"]),
                  ball_radius=float(d["ball"]["radius"]), fill=d["fill"])
    _apply_common(o.ball, d["ball"])
    o.ball.center = tuple(d["ball"]["center"])
    o.ball.fill = d["ball"]["fill"]
    o._update_region()
    o.ball.update_cover()
    return o


def _adhered_strip_to(o: AdheredStrip) -> dict:
    d = _common(o)
    d.update(c0=pt(o.pt_c0), c1=pt(o.pt_c1), radius=num(o.radius),
             labyrinth=o.labyrinth.id, fill=o.fill)
    return d


def _adhered_strip_from(d: dict) -> AdheredStrip:
    o = AdheredStrip(tuple(d["c0"]), tuple(d["c1"]), float(d["radius"]),
                     Labyrinth([]), fill=d["fill"])
    o._pending_labyrinth = int(d["labyrinth"])
    return o


_TO = {
    "rect": _rect_to, "fixed_ratio_rect": _fixed_ratio_to,
    "partitioned_rect": _part_rect_to, "line": _line_to,
    "segmented_line": _segline_to, "sectored_circle": _sectored_to,
    "nnode_circle": _ncircle_to, "nnode_ring": _nring_to,
    "nnode_strip": _nstrip_to, "partitioned_circle": _part_circle_to,
    "regular_poly": _regpoly_to, "convex_poly": _convex_to,
    "chatoyant_poly": _chatoyant_to, "sector": _sector_to,
    "board": _board_to, "plug": _plug_to, "label": _label_to,
    "satellite": _satellite_to, "widget": _widget_to,
    "commented_widget": _commented_to, "subordinate": _subordinate_to,
    "dominant_group": _dominant_to, "linked_rects": _linked_to,
    "elastic_group": _elastic_to, "scale_bar": _scale_to,
    "plot_panel": _plot_to, "slider": _slider_to,
    "slider_panel": _slider_panel_to, "ball": _ball_to,
    "ball_board": _ball_board_to, "color_ball": _color_ball_to,
    "color_board": _color_board_to, "labyrinth": _labyrinth_to,
    "adhered_ball": _adhered_ball_to, "ball_poly_board": _poly_board_to,
    "adhered_strip": _adhered_strip_to,
}

_FROM = {
    "rect": _rect_from, "fixed_ratio_rect": _fixed_ratio_from,
    "partitioned_rect": _part_rect_from, "line": _line_from,
    "segmented_line": _segline_from, "sectored_circle": _sectored_from,
    "nnode_circle": _ncircle_from, "nnode_ring": _nring_from,
    "nnode_strip": _nstrip_from, "partitioned_circle": _part_circle_from,
    "regular_poly": _regpoly_from, "convex_poly": _convex_from,
    "chatoyant_poly": _chatoyant_from, "sector": _sector_from,
    "board": _board_from, "plug": _plug_from, "label": _label_from,
    "satellite": _satellite_from, "widget": _widget_from,
    "commented_widget": _commented_from, "subordinate": _subordinate_from,
    "dominant_group": _dominant_from, "linked_rects": _linked_from,
    "elastic_group": _elastic_from, "scale_bar": _scale_from,
    "plot_panel": _plot_from, "slider": _slider_from,
    "slider_panel": _slider_panel_from, "ball": _ball_from,
    "ball_board": _ball_board_from, "color_ball": _color_ball_from,
    "color_board": _color_board_from,
    "labyrinth": _labyrinth_from, "adhered_ball": _adhered_ball_from,
    "ball_poly_board": _poly_board_from, "adhered_strip": _adhered_strip_from,
}


def to_doc(obj) -> dict:
    try:
        return _TO[obj.kind](obj)
    except KeyError:
        raise SceneDocError(f"no serializer for kind {obj.kind!r}") from None


def from_doc(d: dict):
    kind = d.get("kind")
    if kind not in _FROM:
        raise SceneDocError(f"record of unknown kind {kind!r}")
    obj = _FROM[kind](d)
    _apply_common(obj, d)
    return obj


def _max_id(d: dict) -> int:
    best = 0
    if isinstance(d, dict):
        if "id" in d and isinstance(d["id"], int):
            best = d["id"]
        for v in d.values():
            best = max(best, _max_id(v))
    elif isinstance(d, list):
        for v in d:
            best = max(best, _max_id(v))
    return best


def save_scene(scene) -> str:
    doc = {
        "format": FORMAT_VERSION,
        "client": [num(scene.client.w), num(scene.client.h)],
        "objects": [to_doc(o) for o in scene.objects],
    }
    return json.dumps(doc, indent=1) + "\n"


def load_scene(text: str):
    from .scene import Scene
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneDocError(f"not a scene document: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_VERSION:
        raise SceneDocError(f"unsupported format {doc.get('format')!r}")
    scene = Scene(Rect(0, 0, float(doc["client"][0]), float(doc["client"][1])))
    for i, record in enumerate(doc["objects"]):
        try:
            scene.objects.append(from_doc(record))
        except SceneDocError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise SceneDocError(f"objects[{i}]: malformed record: {exc}") from exc
    # resolve labyrinth references and advance the id allocator
    by_id = {o.id: o for o in scene.all_objects()}
    for obj in scene.all_objects():
        pending = getattr(obj, "_pending_labyrinth", None)
        if pending is not None:
            obj.labyrinth = by_id[pending]
            del obj._pending_labyrinth
    ensure_id_floor(_max_id(doc))
    scene.renew()
    return scene
