"""Build the golden replay corpus under tests/golden/.

Each case directory holds scene.json, trace.txt and the frozen
expected.json / expected.log produced by replaying the trace. The
script asserts that the traces actually hit what they aim at, so a
mis-aimed grab fails generation instead of freezing a meaningless
golden.

Regenerate only on intentional behaviour changes:
    python3 tools/make_golden.py
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from movables import geometry as geo
from movables.constraints import (AdheredBall, AdheredStrip, Ball, BallBoard,
                                  BoardWithBalls, BoundedSlider, ColorBall,
                                  ColorBallBoard, Labyrinth, SliderPanel)
from movables.geometry import Rect
from movables.groups import (CommentedElement, DominantGroup, ElasticGroup,
                             LinkedRects, PlotPanelLite, Satellite, ScaleBar,
                             SubordinateProxy, WidgetProxy)
from movables.scene import Scene, load_scene, parse_trace, replay, save_scene
from movables.shapes import (ChatoyantPolyShape, ConvexPolyShape,
                             FixedRatioRect, Hole, HoleKind, LabelBox,
                             LineShape, MovementAllowed, NnodeCircle,
                             NnodeRing, NnodeStrip, PartitionedCircle,
                             PartitionedRect, PerforatedBoard, Plug, PolyMode,
                             RectRange, RectShape, RegularPolyShape,
                             SectoredCircle, SectorShape, SegmentedLineShape)

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

import math


def ipt(p):
    return int(round(p[0])), int(round(p[1]))


def down(p, b="L"):
    x, y = ipt(p)
    return f"DOWN {x} {y} {b}"


def move(p):
    x, y = ipt(p)
    return f"MOVE {x} {y}"


def up(p, b="L"):
    x, y = ipt(p)
    return f"UP {x} {y} {b}"


def drag(p0, p1, b="L", steps=2):
    lines = [down(p0, b)]
    for k in range(1, steps + 1):
        q = (p0[0] + (p1[0] - p0[0]) * k / steps,
             p0[1] + (p1[1] - p0[1]) * k / steps)
        lines.append(move(q))
    lines.append(up(p1, b))
    return lines


def click(p, b="L"):
    return [down(p, b), up(p, b)]


def emit(name: str, scene: Scene, trace_lines: list[str], checks=None):
    case = GOLDEN / name
    case.mkdir(parents=True, exist_ok=True)
    scene_text = save_scene(scene)
    trace_text = "\n".join(trace_lines) + "\n"
    work = load_scene(scene_text)
    log = replay(work, parse_trace(trace_text))
    log_text = "\n".join(log) + "\n"
    if checks:
        checks(work, log_text)
    (case / "scene.json").write_text(scene_text, encoding="utf-8")
    (case / "trace.txt").write_text(trace_text, encoding="utf-8")
    (case / "expected.json").write_text(save_scene(work), encoding="utf-8")
    (case / "expected.log").write_text(log_text, encoding="utf-8")
    print(f"{name}: {len(trace_lines)} events, {len(log)} log lines")


def g01_basic_shapes():
    scene = Scene(Rect(0, 0, 800, 600))
    rect = RectShape(Rect(60, 60, 140, 90), RectRange(20, 400, 20, 300))
    frect = FixedRatioRect(Rect(260, 60, 120, 60))
    line = LineShape((60, 260), (200, 260))
    seg = SegmentedLineShape([(260, 260), (330, 230), (400, 280)])
    circ = SectoredCircle((520, 140), 70)
    label = LabelBox((520, 330), 80, 18, text="hello")
    for obj in (label, circ, seg, line, frect, rect):
        scene.add(obj, topmost=False)

    trace = []
    trace += drag((200, 150), (240, 180))            # rect RB corner out
    trace += drag((130, 105), (150, 120))            # rect whole move
    trace += click((160, 130))                       # pop the rect
    trace += drag((380, 90), (420, 90))              # fixed-ratio right border
    trace += drag((200, 260), (230, 280))            # line endpoint
    mid = (145, 270)                                 # on the moved line
    trace += drag(mid, (145, 220), b="R")            # rotate the line
    trace += drag((330, 230), (340, 210))            # segline joint
    trace += drag((300, 250), (310, 270))            # segline whole (strip)
    trace += drag((540, 140), (520, 90), b="R")      # rotate the circle
    trace += drag((520, 330), (560, 350))            # move the label
    trace += drag((560, 350), (600, 330), b="R")     # rotate the label

    def checks(work, log):
        assert f"CATCH id={rect.id} node=2" in log
        assert f"CATCH id={line.id}" in log
        assert "POP" in log
        got = next(o for o in work.objects if o.id == rect.id)
        assert got.rect.w == 180 and got.rect.h == 120

    emit("g01_basic_shapes", scene, trace, checks)


def g02_curved():
    scene = Scene(Rect(0, 0, 800, 600))
    circle = NnodeCircle((150, 150), 80)
    ring = NnodeRing((420, 150), 90, 45)
    strip = NnodeStrip((120, 420), (280, 420), 22)
    pc = PartitionedCircle((580, 420), 80, 0.0, [1, 1, 1, 1])
    for obj in (circle, ring, strip, pc):
        scene.add(obj, topmost=False)

    trace = []
    trace += drag((230, 150), (210, 150))            # circle border: shrink
    trace += drag((150, 150), (170, 170))            # circle move
    trace += drag((465, 150), (480, 150))            # ring inner border out
    trace += drag((510, 150), (520, 150))            # ring outer border out
    trace += drag((120, 398), (120, 390))            # strip width node 0
    trace += drag((302, 420), (340, 420))            # strip length at c1 cap
    trace += drag((200, 420), (200, 380), b="R")     # rotate strip
    trace += drag((580, 340), (520, 360))            # pc partition at angle pi/2
    trace += drag((660, 420), (650, 420))            # pc border: shrink
    trace += drag((580, 420), (560, 440))            # pc whole move

    def checks(work, log):
        got = next(o for o in work.objects if o.id == circle.id)
        assert got.radius == 60
        assert got.border_nodes == 47  # rebuilt on release
        ring2 = next(o for o in work.objects if o.id == ring.id)
        assert ring2.r_inner == 60 and ring2.r_outer == 100

    emit("g02_curved", scene, trace, checks)


def g03_polygons():
    scene = Scene(Rect(0, 0, 800, 600))
    fixed = RegularPolyShape((130, 140), 70, 6, mode=PolyMode.NON_RESIZABLE)
    byvert = RegularPolyShape((360, 140), 70, 5,
                              mode=PolyMode.ZOOM_BY_VERTICES)
    byborder = RegularPolyShape((600, 140), 70, 3,
                                mode=PolyMode.ZOOM_BY_BORDER,
                                movement=MovementAllowed.HORIZONTAL)
    convex = ConvexPolyShape(geo.regular_polygon_vertices((160, 420), 90, 5))
    chat = ChatoyantPolyShape(geo.regular_polygon_vertices((520, 420), 90, 4),
                              center=(520, 420))
    for obj in (fixed, byvert, byborder, convex, chat):
        scene.add(obj, topmost=False)

    v0 = geo.regular_polygon_vertices((360, 140), 70, 5)[0]
    trace = []
    trace += drag((130, 140), (150, 160))            # move the fixed polygon
    trace += drag((130, 160), (180, 160), b="R")     # and rotate it
    trace += drag(v0, (360 + 90, 140))               # vertex zoom to r=90
    side_mid = ((600 + 70 * math.cos(math.tau / 3 / 2)), 140)
    border_grab = geo.point_at((600, 140), math.tau / 6, 35)
    trace += drag(border_grab, geo.point_at((600, 140), math.tau / 6, 45))
    trace += drag((600, 140), (620, 170))            # horizontal-only move
    cv = convex.pts[0]
    trace += drag(cv, (cv[0] + 25, cv[1]))           # convex vertex out
    trace += drag(convex.pts[2], (160, 420))         # deep push: rejected
    ch_v = chat.pts[0]
    trace += drag(ch_v, (ch_v[0] + 20, ch_v[1] - 10))  # chatoyant vertex
    trace += drag((520, 420), (540, 430))            # chatoyant center node
    edge_mid = ((chat.pts[1][0] + chat.pts[2][0]) / 2,
                (chat.pts[1][1] + chat.pts[2][1]) / 2)
    trace += drag(edge_mid, (520, 420 + 130))        # border strip zoom
    trace += drag((540, 460), (560, 420), b="R")     # rotate

    def checks(work, log):
        moved = next(o for o in work.objects if o.id == fixed.id)
        assert moved.center != (130, 140)
        zoomed = next(o for o in work.objects if o.id == byvert.id)
        assert zoomed.radius == 90
        hmove = next(o for o in work.objects if o.id == byborder.id)
        assert hmove.center[1] == 140  # vertical movement is locked

    emit("g03_polygons", scene, trace, checks)


def g04_sectors_board():
    scene = Scene(Rect(0, 0, 800, 600))
    plain = SectorShape((130, 140), 80, 0.2, 1.2)
    arc = SectorShape((360, 140), 80, 0.0, math.pi / 2, arc_resizable=True)
    oneside = SectorShape((600, 140), 80, 0.3, 1.0, arc_resizable=True,
                          end_side_movable=True)
    full = SectorShape((130, 420), 80, -0.4, 1.4, arc_resizable=True,
                       end_side_movable=True, start_side_movable=True)
    board = PerforatedBoard(Rect(320, 300, 300, 240),
                            [Hole(HoleKind.CIRCLE, (400, 380), 30),
                             Hole(HoleKind.POLYGON, (540, 450), 35, 5, 0.2)])
    plug_fit = Plug((700, 330), 30)
    plug_lost = Plug((700, 480), 28)
    scene.add(board, topmost=False)
    scene.add(plug_fit)
    scene.add(plug_lost)
    for obj in (plain, arc, oneside, full):
        scene.add(obj, topmost=False)

    trace = []
    inside = geo.point_at((130, 140), 0.8, 40)
    trace += drag(inside, (150, 160))                    # move plain sector
    trace += drag((150, 160), (130, 120), b="R")         # rotate it
    arc_pt = geo.point_at((360, 140), math.pi / 4, 80)
    trace += drag(arc_pt, geo.point_at((360, 140), math.pi / 4, 65))
    side_pt = geo.point_at((600, 140), 1.3, 60)
    trace += drag(side_pt, geo.point_at((600, 140), 0.9, 60))
    end_pt = geo.point_at((130, 420), 1.0, 60)
    trace += drag(end_pt, geo.point_at((130, 420), 0.7, 60))
    start_pt = geo.point_at((130, 420), -0.4, 60)
    trace += drag(start_pt, geo.point_at((130, 420), -0.1, 60))
    trace += drag((400, 330), (420, 350))                # move the board a bit
    trace += drag((700, 330), (421, 401))                # plug onto the hole
    trace += drag((700, 480), (900, 480))                # throw the other away
    trace += click((500, 320), b="R")                    # menu on the board

    def checks(work, log):
        assert "FITTED" in log
        assert "GONE" in log
        brd = next(o for o in work.objects if o.id == board.id)
        assert len(brd.holes) == 1
        assert "MENU" in log

    emit("g04_sectors_board", scene, trace, checks)


def g05_partitions_disappear():
    scene = Scene(Rect(0, 0, 800, 600))
    part = PartitionedRect(Rect(100, 100, 0, 80), [60, 50, 40])
    gone_rect = RectShape(Rect(400, 100, 120, 90), RectRange(1, 400, 1, 300),
                          disappearance=True)
    gone_poly = RegularPolyShape((640, 150), 60, 5,
                                 mode=PolyMode.ZOOM_BY_BORDER,
                                 disappearance=True)
    a = RectShape(Rect(100, 300, 90, 70))
    b = RectShape(Rect(150, 330, 90, 70))
    c = RectShape(Rect(200, 360, 90, 70))
    for obj in (part, gone_rect, gone_poly, a, b, c):
        scene.add(obj, topmost=False)

    trace = []
    trace += drag((160, 140), (175, 140))        # slide the first partition
    trace += drag((250, 140), (280, 140))        # zoom by the right border
    trace += drag((150, 100), (150, 80))         # top border up
    trace += drag((130, 130), (140, 150))        # move the whole thing
    trace += drag((520, 145), (404, 145))        # squeeze the rect to 4 px
    border = geo.point_at((640, 150), math.tau / 10, 48)  # on a side strip
    trace += drag(border, (642, 150))            # squeeze the polygon inward
    trace += [f"CMD top {c.id}", f"CMD bottom {c.id}", f"CMD up {c.id}",
              f"CMD down {c.id}", "DCLICK 120 320",
              f"CMD recolor {a.id} #445566"]

    def checks(work, log):
        ids = {o.id for o in work.objects}
        assert gone_rect.id not in ids
        assert gone_poly.id not in ids
        assert log.count("DELETED") == 2
        assert "DCLICK 120 320" in log
        colored = next(o for o in work.objects if o.id == a.id)
        assert colored.fill == "#445566"

    emit("g05_partitions_disappear", scene, trace, checks)


def g06_groups():
    scene = Scene(Rect(0, 0, 900, 700))
    solo = WidgetProxy(Rect(60, 60, 90, 36), min_size=(40, 20),
                       max_size=(200, 90))
    ce = CommentedElement(Rect(240, 60, 160, 80), comment_text="name",
                          comment_size=(50, 14), comment_coefs=(0.5, -0.4))
    dominant = WidgetProxy(Rect(500, 60, 160, 110), min_size=(120, 90),
                           max_size=(400, 300))
    sub1 = SubordinateProxy(Rect(680, 70, 56, 26))
    sub2 = SubordinateProxy(Rect(680, 120, 56, 26))
    group = DominantGroup(dominant, [sub1, sub2])
    linked = LinkedRects([("a", Rect(60, 200, 70, 28)),
                          ("b", Rect(150, 200, 70, 28))])
    e1 = WidgetProxy(Rect(100, 420, 80, 30))
    e2 = WidgetProxy(Rect(220, 420, 80, 30))
    e3 = WidgetProxy(Rect(100, 500, 80, 30))
    elastic = ElasticGroup([e1, e2, e3], title="Tools", title_size=(40, 14))
    loose1 = WidgetProxy(Rect(500, 420, 60, 26))
    loose2 = WidgetProxy(Rect(600, 470, 60, 26))
    for obj in (solo, ce, group, linked, elastic, loose1, loose2):
        scene.add(obj, topmost=False)

    cm = ce.comment.anchor
    title_y = elastic.frame.top
    trace = []
    trace += drag((100, 57), (130, 80))              # move solo by its frame
    trace += drag((150, 60), (180, 60))              # resize by RT corner
    trace += [f"CMD fix {solo.id}"]
    trace += drag((130, 77), (160, 100))             # now frozen: no catch
    trace += [f"CMD unfix {solo.id}"]
    trace += drag(cm, (320, 100))                    # drop comment inside
    trace += drag((560, 57), (560, 80))              # move dominant by frame
    trace += drag((683, 130), (620, 130))            # park sub2 inside
    trace += [f"CMD switch-dominant {group.id} {sub1.id}"]
    trace += drag((100, 200), (120, 215))            # linked rects move
    trace += drag((elastic.title_center_x(), title_y), \
                  (elastic.title_center_x() + 60, title_y))
    trace += drag((140, 417), (140, 380))            # move e1 by its frame
    trace += [f"CMD hide {e2.id}", f"CMD show {e2.id}",
              f"CMD hide {e2.id}", f"CMD show-member {e2.id}",
              f"CMD hide-member {e3.id}", f"CMD visible-all {elastic.id}",
              f"CMD fix {elastic.id}", f"CMD unfix {elastic.id}"]
    trace += [f"CMD group 480 400 700 520"]          # temporary group
    trace += click((90, 60), b="R")                  # menu on a widget

    def checks(work, log):
        assert "CMD switch-dominant" in log and "-> OK" in log
        new_group = next(o for o in work.objects
                         if isinstance(o, DominantGroup))
        assert new_group.dominant.id == sub1.id
        ce2 = next(o for o in work.objects if o.id == ce.id)
        assert not ce2.rect.contains_rect(ce2.comment.bounds())
        assert any(isinstance(o, ElasticGroup) and o.id not in
                   (elastic.id,) for o in work.objects)  # the temporary group

    emit("g06_groups", scene, trace, checks)


def g07_constraints():
    scene = Scene(Rect(0, 0, 900, 700))
    panel = SliderPanel(Rect(60, 60, 240, 180))
    s1 = BoundedSlider(panel.rect, True, 0.3, order_preserving=True)
    s2 = BoundedSlider(panel.rect, True, 0.6, order_preserving=True)
    sv = BoundedSlider(panel.rect, False, 0.5)
    for s in (s1, s2, sv):
        panel.add_slider(s)
    board = BoardWithBalls(Rect(380, 60, 220, 180))
    ball1 = Ball((450, 120), 16)
    ball2 = Ball((540, 160), 12)
    board.add_ball(ball1)
    board.add_ball(ball2)
    colors = ColorBallBoard(Rect(660, 60, 200, 180))
    red1 = ColorBall((700, 120), 15, "#c03030")
    red2 = ColorBall((780, 120), 15, "#c03030")
    blue = ColorBall((740, 180), 15, "#3030c0")
    for ball in (red1, red2, blue):
        colors.add_ball(ball)
    plot = PlotPanelLite(Rect(60, 320, 260, 180))
    scale = ScaleBar(plot.rect, True, 1.15)
    plot.add_scale(scale)
    scale.add_comment(Satellite(scale.rect_around(), 40, 12,
                                coefs=(0.5, 2.2), text="t"))
    frozen = ScaleBar(plot.rect, False, -0.12, frozen=True)
    plot.add_scale(frozen)
    plot.add_comment(Satellite(plot.rect, 44, 12, coefs=(0.5, -0.15),
                               text="plot"))
    lab = Labyrinth([((480, 320), (480, 560)), ((380, 560), (760, 560))])
    ball = AdheredBall((420, 420), 20, labyrinth=lab)
    strip = AdheredStrip((560, 380), (680, 380), 18, lab)
    poly_board = BallBoard((640, 620), 70, 6, ball_radius=14)
    scene.add(lab, topmost=False)
    for obj in (panel, board, colors, plot, ball, strip, poly_board):
        scene.add(obj, topmost=False)

    y1 = s1.coor()
    y2 = s2.coor()
    trace = []
    trace += drag((180, y1), (180, y2 + 40))     # slider stops at its sibling
    trace += drag((300, 150), (340, 150))        # panel right border: sliders follow
    trace += drag((450, 120), (600, 120))        # ball runs into the board wall
    trace += drag((380, 150), (420, 150))        # board left border pushes in
    trace += drag((700, 120), (770, 120))        # red into red: blocked
    trace += drag((740, 180), (700, 124))        # blue passes between
    trace += drag((160, 400), (180, 430))        # move the plot panel
    sc_y = scale.line_coor() + 30  # panel moved down by 30
    trace += drag((180, sc_y), (180, sc_y + 18))  # move the scale bar
    fz = frozen.line_coor() + 20  # panel moved right by 20
    trace += click((fz, 420), b="R")             # menu on the frozen scale
    trace += drag((420, 420), (470, 420))        # adhered ball into the wall
    trace += drag((620, 380), (660, 380))        # adhered strip toward wall
    trace += drag((640, 620), (620, 600))        # move the polygon board
    trace += drag((620, 600), (680, 640), b="R")  # and rotate it

    def checks(work, log):
        sliders = next(o for o in work.objects
                       if isinstance(o, SliderPanel))
        hs = sliders.hor_sliders
        assert hs[0].coor() <= hs[1].coor()
        assert "WARP" in log
        assert "frozen" in log

    emit("g07_constraints", scene, trace, checks)


def main():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    g01_basic_shapes()
    g02_curved()
    g03_polygons()
    g04_sectors_board()
    g05_partitions_disappear()
    g06_groups()
    g07_constraints()
    print("golden corpus written to", GOLDEN)


if __name__ == "__main__":
    main()
