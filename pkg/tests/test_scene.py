import re
import subprocess
import sys

import pytest

from movables.constraints import AdheredBall, Labyrinth
from movables.engine import MouseButton
from movables.geometry import Rect
from movables.groups import (CommentedElement, DominantGroup, ElasticGroup,
                             PlotPanelLite, Satellite, ScaleBar,
                             SubordinateProxy, WidgetProxy)
from movables.scene import (ClickKind, Scene, SceneDocError, ZAction,
                            classify_click, export_svg, load_scene,
                            parse_trace, replay, save_scene)
from movables.scene.trace import format_trace
from movables.shapes import (Hole, HoleKind, NnodeRing, PerforatedBoard, Plug,
                             RectRange, RectShape, SegmentedLineShape)


def simple_scene():
    scene = Scene(Rect(0, 0, 800, 600))
    rect = RectShape(Rect(100, 100, 200, 120), RectRange(10, 700, 10, 500))
    scene.add(rect)
    return scene, rect


# -- trace format ---------------------------------------------------------------

def test_trace_round_trip():
    text = "DOWN 10 20 L\nMOVE 15 25\nUP 15 25 L\nDCLICK 3 4\nCMD hide 7\n"
    events = parse_trace("# comment\n" + text)
    assert [e.kind for e in events] == ["down", "move", "up", "dclick", "cmd"]
    assert format_trace(events) == text
    with pytest.raises(ValueError):
        parse_trace("WIGGLE 1 2")
    with pytest.raises(ValueError):
        parse_trace("DOWN 1 2 X")


# -- renew and z-order -------------------------------------------------------------

def test_renew_is_idempotent_and_counts_children():
    scene, rect = simple_scene()
    panel = PlotPanelLite(Rect(400, 100, 200, 150))
    panel.add_scale(ScaleBar(panel.rect, True, 1.2))
    scene.add(panel)
    count = len(scene.engine)
    scene.renew()
    assert len(scene.engine) == count
    assert count == 1 + 2  # rect + (scale, panel)
    scene.remove(panel.id)
    assert len(scene.engine) == 1


def test_widgets_precede_graphics_in_queue():
    scene, rect = simple_scene()
    widget = WidgetProxy(Rect(600, 400, 80, 30))
    scene.add(widget, topmost=False)  # listed after the rect on purpose
    assert scene.engine.queue[0] is widget  # the queue still picks it first


def test_z_order_actions():
    scene = Scene(Rect(0, 0, 800, 600))
    a = scene.add(RectShape(Rect(0, 0, 50, 50)), topmost=False)
    b = scene.add(RectShape(Rect(20, 20, 50, 50)), topmost=False)
    c = scene.add(RectShape(Rect(40, 40, 50, 50)), topmost=False)
    scene.z_order(c.id, ZAction.TOP)
    assert scene.objects == [c, a, b]
    scene.z_order(c.id, ZAction.DOWN)
    assert scene.objects == [a, c, b]
    scene.z_order(c.id, ZAction.UP)
    assert scene.objects == [c, a, b]
    scene.z_order(c.id, ZAction.UP)  # already on top: no-op
    assert scene.objects == [c, a, b]
    scene.z_order(c.id, ZAction.BOTTOM)
    assert scene.objects == [a, b, c]


# -- click classification ------------------------------------------------------------

def test_classify_click():
    assert classify_click((0, 0), (2, 0), MouseButton.LEFT, 5).kind is \
        ClickKind.LEFT_CLICK
    assert classify_click((0, 0), (2, 2), MouseButton.RIGHT, None).kind is \
        ClickKind.MENU_REQUEST
    assert classify_click((0, 0), (10, 0), MouseButton.LEFT, 5).kind is \
        ClickKind.DRAG


def test_left_click_pops_object():
    scene = Scene(Rect(0, 0, 800, 600))
    bottom = scene.add(RectShape(Rect(100, 100, 200, 120)), topmost=False)
    top = scene.add(RectShape(Rect(150, 150, 200, 120)), topmost=True)
    # click the bottom rect where the top one does not cover it
    log = replay(scene, parse_trace("DOWN 120 110 L\nUP 121 110 L\n"))
    assert scene.objects[0] is bottom
    assert "POP" in log[-1]


def test_resize_node_click_does_not_pop():
    scene = Scene(Rect(0, 0, 800, 600))
    bottom = scene.add(RectShape(Rect(100, 100, 200, 120),
                                 RectRange(10, 700, 10, 500)), topmost=False)
    top = scene.add(RectShape(Rect(400, 100, 100, 100)), topmost=True)
    log = replay(scene, parse_trace("DOWN 100 100 L\nUP 101 101 L\n"))
    assert scene.objects[0] is top  # order unchanged
    assert "POP" not in log[-1]


def test_right_click_menu_request():
    scene, rect = simple_scene()
    log = replay(scene, parse_trace("DOWN 150 150 R\nUP 150 150 R\n"))
    assert f"MENU id={rect.id}" in log[-1]
    log = replay(scene, parse_trace("DOWN 700 500 R\nUP 700 500 R\n"))
    assert "MENU empty" in log[-1]


# -- replay ---------------------------------------------------------------------------

def test_replay_empty_trace():
    scene, rect = simple_scene()
    doc0 = save_scene(scene)
    log = replay(scene, [])
    assert log == []
    assert save_scene(scene) == doc0


def test_replay_corner_resize():
    scene, rect = simple_scene()
    replay(scene, parse_trace(
        "DOWN 300 220 L\nMOVE 320 240 L\nUP 320 240 L\n".replace(" L\nUP",
                                                                 "\nUP")))
    assert (rect.rect.w, rect.rect.h) == (220, 140)
    assert (rect.rect.x, rect.rect.y) == (100, 100)


def test_replay_visual_clipping_limits_travel():
    scene, rect = simple_scene()
    log = replay(scene, parse_trace(
        "DOWN 150 150 L\nMOVE 900 150\nUP 900 150 L\n"))
    assert "EFF 800 150" in log[1]
    assert rect.rect.x == 100 + 650  # movement stopped at the border


def test_replay_determinism_same_trace_twice():
    trace = ("DOWN 150 150 L\nMOVE 300 200\nMOVE 280 260\nUP 280 260 L\n"
             "DOWN 300 220 L\nMOVE 380 300\nUP 380 300 L\n")
    docs = []
    logs = []
    for _ in range(2):
        scene, _rect = simple_scene()
        scene.objects[0].id = 777  # pin the id so both runs match
        scene.renew()
        log = replay(scene, parse_trace(trace))
        docs.append(save_scene(scene))
        logs.append(log)
    assert docs[0] == docs[1]
    assert logs[0] == logs[1]


def test_replay_disappearance_removes_and_renews():
    scene = Scene(Rect(0, 0, 800, 600))
    rect = RectShape(Rect(100, 100, 100, 80), RectRange(1, 700, 1, 500),
                     disappearance=True)
    scene.add(rect)
    assert len(scene.engine) == 1
    log = replay(scene, parse_trace(
        "DOWN 200 140 L\nMOVE 104 140\nUP 104 140 L\n"))
    assert "DELETED" in log[-1]
    assert scene.objects == []
    assert len(scene.engine) == 0


def test_replay_move_release_never_deletes():
    scene = Scene(Rect(0, 0, 800, 600))
    # narrow node geometry keeps the whole-area node of a 4 px rect reachable
    rect = RectShape(Rect(100, 100, 100, 4), RectRange(1, 700, 1, 500),
                     corner_radius=2.0, half_strip=1.0, disappearance=True)
    scene.add(rect)
    log = replay(scene, parse_trace(
        "DOWN 150 102 L\nMOVE 300 300\nUP 300 300 L\n"))
    assert "node=8" in log[0]  # caught by the whole-area node
    assert scene.objects == [rect]  # a plain move never deletes


def test_replay_plug_fit_annihilates():
    scene = Scene(Rect(0, 0, 800, 600))
    board = PerforatedBoard(Rect(100, 100, 300, 300),
                            [Hole(HoleKind.CIRCLE, (200, 200), 30)])
    plug = Plug((500, 200), 30)
    scene.add(board, topmost=False)
    scene.add(plug)
    # drag the plug onto the hole by its whole-body node
    log = replay(scene, parse_trace(
        "DOWN 500 200 L\nMOVE 203 201\nUP 203 201 L\n"))
    assert "FITTED" in log[-1]
    assert board.holes == []
    assert all(not isinstance(o, Plug) for o in scene.objects)


def test_replay_plug_clipping_unsafe_and_gone():
    scene = Scene(Rect(0, 0, 800, 600))
    plug = Plug((500, 200), 30)
    scene.add(plug)
    log = replay(scene, parse_trace(
        "DOWN 500 200 L\nMOVE 1100 200\nMOVE 1500 200\nUP 1500 200 L\n"))
    assert "EFF 1100 200" in log[1]  # unsafe clipping per the plug rule
    assert "GONE" in log[-1]
    assert scene.objects == []
    # and the clipping is back to visual for the next catch
    rect = scene.add(RectShape(Rect(100, 100, 100, 100)))
    log = replay(scene, parse_trace(
        "DOWN 150 150 L\nMOVE 1100 150\nUP 1100 150 L\n"))
    assert "EFF 800 150" in log[1]


def test_replay_warp_offsets_following_moves():
    scene = Scene(Rect(0, 0, 800, 600))
    lab = Labyrinth([((300, 0), (300, 600))])
    ball = AdheredBall((200, 200), 20, labyrinth=lab)
    scene.add(lab, topmost=False)
    scene.add(ball)
    log = replay(scene, parse_trace(
        "DOWN 200 200 L\n"
        "MOVE 260 200\n"   # legal
        "MOVE 500 200\n"   # slams into the wall: warp back to 260 200
        "MOVE 515 200\n"   # interpreted relative to the warp: 275 200
        "UP 515 200 L\n"))
    warp_lines = [l for l in log if l.startswith("WARP")]
    assert warp_lines == ["WARP 260 200"]
    assert "EFF 275 200" in log[4]  # the warp line precedes its MOVE line
    assert ball.center == (275, 200)  # the post-warp move landed legally


def test_replay_cmd_vocabulary():
    scene = Scene(Rect(0, 0, 800, 600))
    a = scene.add(RectShape(Rect(0, 0, 50, 50)), topmost=False)
    b = scene.add(RectShape(Rect(100, 0, 50, 50)), topmost=False)
    log = replay(scene, parse_trace(
        f"CMD top {b.id}\nCMD hide {a.id}\nCMD show {a.id}\n"
        f"CMD recolor {b.id} #123456\nCMD nonsense 5\n"))
    assert log[0].endswith("OK")
    assert scene.objects[0] is b
    assert log[1].endswith("OK") and log[2].endswith("OK")
    assert b.fill == "#123456"
    assert "ERR" in log[4]


def test_cmd_fix_and_switch_dominant():
    scene = Scene(Rect(0, 0, 800, 600))
    widget = WidgetProxy(Rect(100, 100, 80, 30))
    scene.add(widget)
    dominant = WidgetProxy(Rect(300, 100, 150, 100), min_size=(100, 80),
                           max_size=(300, 200))
    sub = SubordinateProxy(Rect(470, 100, 60, 30))
    group = DominantGroup(dominant, [sub])
    scene.add(group)
    log = replay(scene, parse_trace(
        f"CMD fix {widget.id}\nCMD switch-dominant {group.id} {sub.id}\n"))
    assert log[0].endswith("OK")
    assert widget.movable is False
    assert log[1].endswith("OK")
    new_group = next(o for o in scene.objects if isinstance(o, DominantGroup))
    assert new_group.dominant.id == sub.id


# -- persistence ----------------------------------------------------------------------

def build_rich_scene():
    scene = Scene(Rect(0, 0, 800, 600))
    rect = RectShape(Rect(100, 100, 200, 120), RectRange(10, 700, 10, 500))
    scene.add(rect, topmost=False)
    ring = NnodeRing((500, 200), 80, 40)
    scene.add(ring, topmost=False)
    panel = PlotPanelLite(Rect(100, 300, 250, 180))
    scale = ScaleBar(panel.rect, True, 1.1)
    panel.add_scale(scale)
    scale.add_comment(Satellite(scale.rect_around(), 40, 12, coefs=(0.5, 2.0),
                                text="x"))
    panel.add_comment(Satellite(panel.rect, 40, 12, coefs=(0.5, -0.2),
                                text="plot"))
    scene.add(panel, topmost=False)
    group = ElasticGroup([CommentedElement(Rect(500, 400, 80, 30),
                                           comment_text="name"),
                          WidgetProxy(Rect(600, 450, 80, 30))],
                         title="Tools", title_size=(40, 14))
    scene.add(group, topmost=False)
    dom = DominantGroup(WidgetProxy(Rect(20, 450, 120, 90)),
                        [SubordinateProxy(Rect(160, 450, 50, 24))])
    scene.add(dom, topmost=False)
    seg = SegmentedLineShape([(600, 100), (650, 150), (700, 90)])
    scene.add(seg, topmost=False)
    return scene


def test_save_load_save_byte_identical():
    scene = build_rich_scene()
    doc1 = save_scene(scene)
    scene2 = load_scene(doc1)
    doc2 = save_scene(scene2)
    assert doc1 == doc2


def test_load_restores_ids_and_parent_links():
    scene = build_rich_scene()
    panel = next(o for o in scene.objects if isinstance(o, PlotPanelLite))
    comment = panel.scales[0].comments[0]
    doc = save_scene(scene)
    scene2 = load_scene(doc)
    panel2 = next(o for o in scene2.objects if isinstance(o, PlotPanelLite))
    assert panel2.id == panel.id
    comment2 = panel2.scales[0].comments[0]
    assert comment2.id == comment.id
    chain = scene2.parent_chain(comment2.id)
    assert chain == [comment2.id, panel2.scales[0].id, panel2.id]


def test_load_rejects_malformed_documents():
    with pytest.raises(SceneDocError):
        load_scene("not json at all")
    with pytest.raises(SceneDocError):
        load_scene('{"format": 99, "client": [10, 10], "objects": []}')
    scene = build_rich_scene()
    doc = save_scene(scene)
    truncated = doc.replace('"kind": "rect"', '"kind": "wobble"', 1)
    with pytest.raises(SceneDocError) as err:
        load_scene(truncated)
    assert "wobble" in str(err.value)


def test_find_and_parent_chain():
    scene = build_rich_scene()
    group = next(o for o in scene.objects if isinstance(o, ElasticGroup))
    ce = group.elements[0]
    assert scene.find(ce.comment.id) is ce.comment
    assert scene.parent_chain(ce.comment.id) == [ce.comment.id, ce.id, group.id]
    assert scene.find(999_999) is None
    assert scene.root_of(ce.comment) is group


# -- svg ---------------------------------------------------------------------------------

def test_svg_cover_overlay_counts():
    scene = Scene(Rect(0, 0, 800, 600))
    scene.add(RectShape(Rect(100, 100, 200, 120), RectRange(10, 700, 10, 500)))
    svg = export_svg(scene, show_covers=True)
    cover_circles = re.findall(r'<circle[^>]*class="cover"', svg)
    cover_polys = re.findall(r'<polygon[^>]*class="cover"', svg)
    assert len(cover_circles) == 4
    assert len(cover_polys) == 5
    plain = export_svg(scene, show_covers=False)
    assert 'class="cover"' not in plain


def test_svg_paint_order_is_reverse_queue():
    scene = Scene(Rect(0, 0, 800, 600))
    a = scene.add(RectShape(Rect(0, 0, 50, 50), fill="#aaaaaa"), topmost=False)
    b = scene.add(RectShape(Rect(20, 20, 50, 50), fill="#bbbbbb"),
                  topmost=False)
    svg = export_svg(scene)
    assert svg.index("#bbbbbb") < svg.index("#aaaaaa")  # b painted first (below)
    scene.z_order(b.id, ZAction.TOP)
    svg = export_svg(scene)
    assert svg.index("#aaaaaa") < svg.index("#bbbbbb")


def test_svg_hidden_objects_not_painted():
    scene = Scene(Rect(0, 0, 800, 600))
    rect = scene.add(RectShape(Rect(0, 0, 50, 50), fill="#abcdef"))
    rect.set_visible(False)
    assert "#abcdef" not in export_svg(scene)


# -- command line -------------------------------------------------------------------------

def test_cli_replay_and_diff(tmp_path):
    scene = build_rich_scene()
    scene_path = tmp_path / "in.json"
    scene_path.write_text(save_scene(scene), encoding="utf-8")
    trace_path = tmp_path / "moves.trace"
    trace_path.write_text("DOWN 150 150 L\nMOVE 180 170\nUP 180 170 L\n",
                          encoding="utf-8")
    out1 = tmp_path / "out1.json"
    out2 = tmp_path / "out2.json"
    svg_path = tmp_path / "out.svg"
    log_path = tmp_path / "run.log"
    for out in (out1, out2):
        result = subprocess.run(
            [sys.executable, "-m", "movables.cli", "replay",
             "--scene", str(scene_path), "--trace", str(trace_path),
             "--out", str(out), "--log", str(log_path),
             "--svg", str(svg_path), "--covers"],
            capture_output=True, text=True)
        assert result.returncode == 0, result.stderr
    assert out1.read_bytes() == out2.read_bytes()
    assert 'class="cover"' in svg_path.read_text(encoding="utf-8")
    assert "CATCH" in log_path.read_text(encoding="utf-8")
    same = subprocess.run(
        [sys.executable, "-m", "movables.cli", "diff",
         "--a", str(out1), "--b", str(out2)], capture_output=True, text=True)
    assert same.returncode == 0
    diff = subprocess.run(
        [sys.executable, "-m", "movables.cli", "diff",
         "--a", str(scene_path), "--b", str(out1)],
        capture_output=True, text=True)
    assert diff.returncode == 1
