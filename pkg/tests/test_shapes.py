import math

import pytest

from conftest import oracle_strictly_convex, pairwise_distances
from movables import geometry as geo
from movables.cover import HitKind, NodeShape, cover_hit
from movables.engine import MouseButton
from movables.geometry import Rect
from movables.shapes import (ChatoyantPolyShape, ConvexPolyShape, nodes_on_arc,
                             FitTolerance, FixedRatioRect, Hole, HoleKind,
                             LabelBox, LineShape, MovementAllowed,
                             NnodeCircle, NnodeRing, NnodeStrip,
                             PartitionedCircle, PartitionedRect,
                             PerforatedBoard, Plug, PolyMode, RectRange,
                             RectShape, RegularPolyShape, SectoredCircle,
                             SectorShape, SegmentedLineShape, plug_fits)

L = MouseButton.LEFT
R = MouseButton.RIGHT


# -- rectangles ---------------------------------------------------------------

def test_rect_any_resizing_by_corner():
    r = RectShape(Rect(0, 0, 100, 50), RectRange(10, 1000, 10, 1000))
    assert r.move_node(0, -10, -5, (-10, -5), L)  # LT corner outward
    assert (r.rect.x, r.rect.y, r.rect.w, r.rect.h) == (-10, -5, 110, 55)
    assert r.move_node(2, 15, 20, (125, 75), L)   # RB corner outward
    assert (r.rect.w, r.rect.h) == (125, 75)


def test_rect_range_is_inviolable():
    r = RectShape(Rect(0, 0, 100, 50), RectRange(80, 120, 40, 60))
    assert not r.move_node(5, 30, 0, (130, 25), L)   # width would pass 120
    assert r.rect.w == 100
    assert not r.move_node(5, -30, 0, (70, 25), L)   # width would pass 80
    assert r.rect.w == 100
    assert r.move_node(5, 15, 0, (115, 25), L)
    assert r.rect.w == 115


def test_rect_corner_accepts_each_axis_independently():
    r = RectShape(Rect(0, 0, 100, 50), RectRange(80, 120, 10, 300))
    # the width change violates its range, the height change does not
    assert r.move_node(2, 50, 20, (150, 70), L)
    assert r.rect.w == 100 and r.rect.h == 70


def test_rect_move_by_whole_node_and_one_axis_covers():
    ns = RectShape(Rect(0, 0, 100, 50), RectRange(100, 100, 20, 300))
    assert len(ns.cover) == 3
    assert ns.move_node(0, 0, -5, (50, -5), L)
    assert ns.rect.y == -5 and ns.rect.h == 55
    assert ns.move_node(2, 7, 9, (50, 25), L)
    assert ns.rect.x == 7


def test_rect_disappearance_check():
    r = RectShape(Rect(0, 0, 100, 80), RectRange(1, 1000, 1, 1000),
                  disappearance=True)
    assert r.move_node(5, -96, 0, (2, 40), L)  # squeeze via the right border
    assert r.rect.w == 4
    assert r.should_disappear(5, NodeShape.POLYGON)
    assert not r.should_disappear(8, NodeShape.POLYGON)  # whole-area move
    protected = RectShape(Rect(0, 0, 100, 80))
    assert not protected.should_disappear(5, NodeShape.POLYGON)


def test_fixed_ratio_rect_moves():
    r = FixedRatioRect(Rect(0, 0, 200, 100))
    assert r.ratio == 2
    assert r.move_node(0, -50, 0, (-50, 50), L)   # left edge out by 50
    assert (r.rect.w, r.rect.h) == (250, 125)
    assert r.rect.y == 0                          # top fixed
    r2 = FixedRatioRect(Rect(0, 0, 200, 100))
    assert r2.move_node(3, 0, 40, (100, 140), L)  # bottom edge down by 40
    assert (r2.rect.w, r2.rect.h) == (280, 140)
    assert r2.rect.x == 0                         # left fixed
    r3 = FixedRatioRect(Rect(0, 0, 200, 100), w_min=150, h_min=10)
    assert not r3.move_node(1, -60, 0, (140, 50), L)
    assert r3.rect.w == 200


def test_fixed_ratio_invariant_over_random_drags(rng):
    r = FixedRatioRect(Rect(0, 0, 200, 100))
    for _ in range(300):
        node = rng.randrange(5)
        r.move_node(node, rng.uniform(-15, 15), rng.uniform(-15, 15),
                    (0, 0), L)
        assert r.rect.w / r.rect.h == pytest.approx(r.ratio, abs=1e-9)


# -- lines ------------------------------------------------------------------------

def test_line_min_length():
    line = LineShape((0, 0), (100, 0))
    assert not line.move_node(1, -85, 0, (15, 0), L)  # would drop below 20
    assert line.pt_b == (100, 0)
    assert line.move_node(1, -75, 0, (25, 0), L)
    assert line.pt_b == (25, 0)
    short = LineShape((0, 0), (5, 0))  # constructor stretches to the minimum
    assert geo.distance(short.pt_a, short.pt_b) == pytest.approx(20)


def test_line_rotation_is_isometric():
    line = LineShape((0, 0), (100, 0))
    aux = line.begin_rotation((50, 0))
    mid = aux.extra["anchor"]
    assert mid == (50, 0)
    line.rotation_update(aux, (50, -80))  # quarter turn CCW about the middle
    assert line.pt_a == pytest.approx((50, 50), abs=1e-9)
    assert line.pt_b == pytest.approx((50, -50), abs=1e-9)
    assert geo.distance(line.pt_a, line.pt_b) == pytest.approx(100, abs=1e-9)


def test_segmented_line_rotation_arrays():
    pts = [(0.0, 0.0), (30.0, 0.0), (30.0, 40.0)]
    anchor = (10.0, 10.0)
    seg = SegmentedLineShape(pts, anchor=anchor)
    mouse = (50.0, 10.0)
    aux = seg.begin_rotation(mouse)
    # oracle: radii and compensations straight from the definitions
    expected_radii = [geo.distance(anchor, p) for p in pts]
    mouse_angle = geo.line_angle(anchor, mouse)
    expected_comps = [geo.normalize_angle(mouse_angle - geo.line_angle(anchor, p))
                      for p in pts]
    assert list(aux.radii) == pytest.approx(expected_radii)
    assert list(aux.compensations) == pytest.approx(expected_comps)
    before = pairwise_distances(seg.pts + [anchor])
    seg.rotation_update(aux, (10.0, -40.0))  # orbit 90 degrees CCW
    after = pairwise_distances(seg.pts + [anchor])
    assert after == pytest.approx(before, abs=1e-9)
    seg.rotation_update(aux, mouse)  # back to the start point
    for got, want in zip(seg.pts, pts):
        assert got == pytest.approx(want, abs=1e-9)


def test_segmented_line_cover_layout():
    seg = SegmentedLineShape([(0, 0), (30, 0), (30, 40)])
    cover = seg.cover
    assert len(cover) == 5  # 3 joints + 2 strips
    assert all(n.shape is NodeShape.CIRCLE for n in cover.nodes[:3])
    assert all(n.shape is NodeShape.STRIP for n in cover.nodes[3:])
    assert seg.move_node(1, 5, 5, (35, 5), L)
    assert seg.pts[1] == (35, 5)
    assert seg.pts[0] == (0, 0)


# -- rotation compensation on circles ---------------------------------------------

def test_circle_rotation_compensation():
    c = SectoredCircle((100, 100), 50, angle=0.0)
    assert c.begin_rotation((110, 100)).compensation == pytest.approx(0)
    assert c.begin_rotation((100, 60)).compensation == pytest.approx(math.pi / 2)


def test_circle_rotation_quarter_orbit():
    c = SectoredCircle((100, 100), 50, angle=0.0)
    aux = c.begin_rotation((150, 100))
    c.rotation_update(aux, (100, 50))  # mouse went 90 degrees CCW
    assert c.angle == pytest.approx(math.pi / 2, abs=1e-9)
    c.rotation_update(aux, (150, 100))  # and back
    assert c.angle == pytest.approx(0, abs=1e-9)


def test_label_box_rotation_keeps_diagonal():
    label = LabelBox((100, 100), 60, 40)
    corners0 = label.corners()
    diag0 = geo.distance(corners0[0], corners0[2])
    aux = label.begin_rotation((130, 90))
    for step in range(1, 13):
        angle = step * math.tau / 12
        label.rotation_update(aux, geo.point_at((100, 100), angle, 40))
        corners = label.corners()
        assert geo.distance(corners[0], corners[2]) == pytest.approx(diag0,
                                                                     abs=1e-6)
    assert label.anchor == (100, 100)  # rotation center is the basis point


# -- regular polygons ----------------------------------------------------------------

def test_regular_polygon_scaling_coefficient():
    poly = RegularPolyShape((0, 0), 100, 3, mode=PolyMode.ZOOM_BY_BORDER)
    aux = poly.begin_border_scaling((80, 0))
    assert aux.scaling == pytest.approx(1.25)
    aux2 = poly.begin_border_scaling((100, 0))
    assert aux2.scaling == pytest.approx(1.0)
    assert poly.scale_update(aux, (60, 0))
    assert abs(poly.radius - 75) <= 1
    # grab-point ratio invariant: re-deriving the coefficient gives it back
    assert poly.radius / geo.distance((0, 0), (60, 0)) == pytest.approx(
        aux.scaling, abs=0.02)


def test_regular_polygon_minimum_radius():
    poly = RegularPolyShape((0, 0), 100, 5, mode=PolyMode.ZOOM_BY_BORDER,
                            min_radius=30)
    aux = poly.begin_border_scaling((100, 0))
    assert not poly.scale_update(aux, (20, 0))
    assert poly.radius == 100


def test_regular_polygon_modes_and_cover():
    fixed = RegularPolyShape((0, 0), 50, 6, mode=PolyMode.NON_RESIZABLE)
    assert len(fixed.cover) == 1
    verts = RegularPolyShape((0, 0), 50, 6, mode=PolyMode.ZOOM_BY_VERTICES)
    assert len(verts.cover) == 7
    assert all(n.shape is NodeShape.CIRCLE for n in verts.cover.nodes[:6])
    border = RegularPolyShape((0, 0), 50, 6, mode=PolyMode.ZOOM_BY_BORDER)
    assert all(n.shape is NodeShape.STRIP for n in border.cover.nodes[:6])


def test_regular_polygon_movement_restriction():
    poly = RegularPolyShape((0, 0), 50, 4, movement=MovementAllowed.HORIZONTAL)
    poly.move(10, 20)
    assert poly.center == (10, 0)
    poly.movement = MovementAllowed.VERTICAL
    poly.move(10, 20)
    assert poly.center == (10, 20)


def test_regular_polygon_disappearance():
    poly = RegularPolyShape((0, 0), 100, 5, mode=PolyMode.ZOOM_BY_BORDER,
                            disappearance=True)
    aux = poly.begin_border_scaling((100, 0))
    assert poly.scale_update(aux, (4, 0))
    assert poly.radius < 5
    assert poly.should_disappear(0, NodeShape.STRIP)
    assert not poly.should_disappear(5, NodeShape.POLYGON)
    big = RegularPolyShape((0, 0), 6, 5, mode=PolyMode.ZOOM_BY_BORDER,
                           disappearance=True)
    assert not big.should_disappear(0, NodeShape.STRIP)


def test_regular_polygon_rotation():
    poly = RegularPolyShape((0, 0), 50, 5, angle=0.2)
    aux = poly.begin_rotation((40, -10))
    before = pairwise_distances(poly.vertices())
    poly.rotation_update(aux, (-13, 37))
    assert pairwise_distances(poly.vertices()) == pytest.approx(before,
                                                                abs=1e-6)


# -- N-node covers ----------------------------------------------------------------------

def test_nnode_circle_counts():
    c = NnodeCircle((0, 0), 100)
    assert c.border_nodes == 79  # round(2*pi*100/8)
    assert len(c.cover) == 80
    assert NnodeCircle((0, 0), 50).border_nodes == 39


def test_nnode_count_frozen_until_release():
    c = NnodeCircle((0, 0), 100)
    assert c.border_nodes == 79
    assert c.move_node(0, 0, 0, (50, 0), L)  # squeeze to radius 50 mid-gesture
    assert c.radius == 50
    assert c.border_nodes == 79              # frozen during the gesture
    c.on_release(0, NodeShape.CIRCLE)
    assert c.border_nodes == 39
    assert len(c.cover) == 40


def test_nnode_circle_translation_keeps_count():
    c = NnodeCircle((0, 0), 100)
    c.move_node(c.border_nodes, 10, 5, (10, 5), L)
    c.on_release(c.border_nodes, NodeShape.CIRCLE)
    assert c.border_nodes == 79


def test_nnode_ring_border_rules():
    ring = NnodeRing((0, 0), 80, 40, min_inner=10, min_width=10)
    inner_id = ring.outer_nodes  # first inner-border node
    # inner border obeys min_inner <= new <= r_outer - min_width
    assert not ring.move_node(inner_id, 0, 0, (75, 0), L)
    assert ring.r_inner == 40
    assert ring.move_node(inner_id, 0, 0, (60, 0), L)
    assert ring.r_inner == 60
    assert not ring.move_node(0, 0, 0, (65, 0), L)  # outer < inner + width
    assert ring.move_node(0, 0, 0, (90, 0), L)
    assert ring.r_outer == 90
    assert not ring.move_node(inner_id, 0, 0, (5, 0), L)


def test_nnode_ring_cover_structure():
    ring = NnodeRing((0, 0), 80, 40)
    cover = ring.cover
    assert len(cover) == ring.outer_nodes + ring.inner_nodes + 2
    hole = cover[ring.outer_nodes + ring.inner_nodes]
    from movables.cover import Behaviour
    assert hole.behaviour is Behaviour.TRANSPARENT
    assert cover_hit(cover, (0, 0)).kind is HitKind.FALLTHROUGH


def test_nnode_strip_minima():
    strip = NnodeStrip((0, 0), (100, 0), 20)
    strip.initial_catch((50, -20))
    # width below 12 is refused
    assert not strip._change_width(0, (50, -8))
    assert strip.radius == 20
    assert strip._change_width(0, (50, -14))
    assert strip.radius == pytest.approx(14)
    # length below 20 is refused; the c0 fan surrounds the left end
    strip2 = NnodeStrip((0, 0), (100, 0), 15)
    strip2.initial_catch((-2, 0))
    strip2.start_length_change((-2, 0), 2)
    assert strip2._aux.extra["moving_end"] == 0
    assert not strip2._change_length((95, 0))
    assert strip2.straight_len == pytest.approx(100)
    assert strip2._change_length((30, 0))
    assert strip2.straight_len == pytest.approx(68, abs=1e-6)
    assert strip2.pt_c1 == (100, 0)  # the far end never moves


def test_nnode_strip_width_nodes_keep_ids():
    strip = NnodeStrip((0, 0), (100, 0), 20)
    n_before = strip.fan_count()
    strip.initial_catch((50, -22))
    assert strip._change_width(0, (50, -40))  # width rebuild happens inline
    assert strip.radius == pytest.approx(40)
    assert strip.fan_count() != n_before
    assert strip.cover[0].shape is NodeShape.STRIP
    assert strip.cover[1].shape is NodeShape.STRIP


def test_nnode_strip_rotation():
    strip = NnodeStrip((0, 0), (100, 0), 20)
    strip.initial_catch((50, 0))
    before = strip.straight_len
    assert strip._rotate((50, -80))
    assert strip.straight_len == pytest.approx(before, abs=1e-9)
    assert strip.angle == pytest.approx(math.pi / 2, abs=1e-9)


# -- sectors -----------------------------------------------------------------------------

def test_sector_arc_node_formula():
    s = SectorShape((0, 0), 100, 0, math.pi / 2, arc_resizable=True)
    assert s.arc_node_count() == 21  # max(round(pi/2*100/8)+1, 2)
    tiny = SectorShape((0, 0), 100, 0, 0.01, arc_resizable=True)
    assert tiny.arc_node_count() == 2


def test_sector_sweep_limit():
    with pytest.raises(ValueError):
        SectorShape((0, 0), 100, 0, 3.5)


def test_sector_cover_variants():
    plain = SectorShape((0, 0), 100, 0, 1.0)
    assert len(plain.cover) == 3  # two transparent rects + the circle
    arc = SectorShape((0, 0), 100, 0, 1.0, arc_resizable=True)
    assert len(arc.cover) == arc.arc_node_count() + 3
    full = SectorShape((0, 0), 100, 0, 1.0, arc_resizable=True,
                       end_side_movable=True, start_side_movable=True)
    assert full.cover[0].shape is NodeShape.STRIP  # end side first
    assert full.cover[1].shape is NodeShape.STRIP
    assert len(full.cover) == full.arc_node_count() + 5


def test_sector_arc_count_frozen_until_release():
    s = SectorShape((0, 0), 100, 0, math.pi / 2, arc_resizable=True)
    count0 = len(s.cover)
    assert s.arc_resize(geo.point_at((0, 0), math.pi / 4, 40))
    assert s.radius == 40
    assert len(s.cover) == count0          # frozen mid-gesture
    s.on_release(2, NodeShape.CIRCLE)
    assert len(s.cover) == s.arc_node_count() + 3
    assert s.arc_node_count() == nodes_on_arc(math.pi / 2, 40)


def test_sector_side_move_by_thirty_degrees():
    s = SectorShape((0, 0), 100, 0, math.pi / 3, end_side_movable=True)
    grab = geo.point_at((0, 0), math.pi / 3, 80)
    s.start_resectoring(0, grab)
    target = geo.point_at((0, 0), math.pi / 3 + math.pi / 6, 80)
    assert s.side_move(s._aux, 0, target)
    assert s.angle_sweep == pytest.approx(math.pi / 2, abs=1e-9)


def test_sector_side_cannot_cross_diameter():
    s = SectorShape((0, 0), 100, 0, math.pi / 2, end_side_movable=True)
    s.start_resectoring(0, geo.point_at((0, 0), math.pi / 2, 80))
    # open to the full half turn: allowed
    assert s.side_move(s._aux, 0, geo.point_at((0, 0), math.pi, 80))
    assert abs(s.angle_sweep) == pytest.approx(math.pi)
    # past the diameter: rejected, sweep unchanged
    assert not s.side_move(s._aux, 0, geo.point_at((0, 0), -math.pi + 0.1, 80))
    assert abs(s.angle_sweep) == pytest.approx(math.pi)


def test_sector_close_to_zero_and_reopen():
    s = SectorShape((0, 0), 100, 0, math.pi / 2, end_side_movable=True)
    s.start_resectoring(0, geo.point_at((0, 0), math.pi / 2, 80))
    assert s.side_move(s._aux, 0, geo.point_at((0, 0), 0.0, 80))
    assert s.angle_sweep == pytest.approx(0, abs=1e-12)
    assert s.side_move(s._aux, 0, geo.point_at((0, 0), 1.0, 80))
    assert s.angle_sweep == pytest.approx(1.0)


def test_sector_start_side_move_keeps_end_fixed():
    s = SectorShape((0, 0), 100, 0.3, 1.0, start_side_movable=True)
    end_angle = s.angle_start + s.angle_sweep
    grab = geo.point_at((0, 0), 0.3, 80)
    s.start_resectoring(1, grab)
    assert s.side_move(s._aux, 1, geo.point_at((0, 0), 0.1, 80))
    assert s.angle_start == pytest.approx(0.1, abs=1e-9)
    assert s.angle_start + s.angle_sweep == pytest.approx(end_angle, abs=1e-9)


def test_sector_grab_offset_compensation():
    # grabbing slightly off the side must not jump the side to the mouse
    s = SectorShape((0, 0), 100, 0, math.pi / 3, end_side_movable=True)
    grab = geo.point_at((0, 0), math.pi / 3 + 0.02, 80)
    s.start_resectoring(0, grab)
    assert s._aux.compensation == pytest.approx(0.02, abs=1e-9)
    assert s.side_move(s._aux, 0, geo.point_at((0, 0), math.pi / 2 + 0.02, 80))
    assert s.angle_sweep == pytest.approx(math.pi / 2, abs=1e-9)


def test_sector_transparent_rects_clip_the_circle():
    s = SectorShape((0, 0), 100, 0, math.pi / 2)
    inside = geo.point_at((0, 0), math.pi / 4, 50)
    outside = geo.point_at((0, 0), -math.pi / 2, 50)
    assert cover_hit(s.cover, inside).kind is HitKind.GRAB
    assert cover_hit(s.cover, outside).kind is HitKind.FALLTHROUGH


# -- sliding partitions ------------------------------------------------------------------

def test_partitioned_rect_partition_move():
    pr = PartitionedRect(Rect(0, 0, 60, 40), [30, 30])
    assert pr.partition_move(0, 10)
    assert pr.segment_sizes == [40, 20]
    pr2 = PartitionedRect(Rect(0, 0, 35, 40), [30, 5])
    assert not pr2.partition_move(0, 2)  # right side would drop to 3
    assert pr2.segment_sizes == [30, 5]


def test_partitioned_rect_zoom_keeps_fractions():
    pr = PartitionedRect(Rect(0, 0, 100, 40), [50, 50])
    aux = pr.distribution()
    assert pr.zoom_with_ratio(aux, 1, 20)  # widen right border to 120
    assert pr.segment_sizes == [60, 60]
    fracs = [s / pr.rect.w for s in pr.segment_sizes]
    assert fracs == pytest.approx(list(aux.fractions), abs=1e-9)
    # shrink until the narrowest would fall under 4 px
    pr3 = PartitionedRect(Rect(0, 0, 100, 40), [8, 92])
    aux3 = pr3.distribution()
    assert not pr3.zoom_with_ratio(aux3, 0, 100 - 48)  # 8% of 48 = 3.84 < 4
    assert pr3.rect.w == 100
    assert pr3.zoom_with_ratio(aux3, 0, 100 - 75)
    assert pr3.rect.w == 75


def test_partitioned_rect_conservation_exact(rng):
    pr = PartitionedRect(Rect(0, 0, 120, 40), [30, 50, 40])
    aux = pr.distribution()
    for _ in range(500):
        choice = rng.randrange(3)
        if choice == 0:
            pr.partition_move(rng.randrange(2), rng.uniform(-9, 9))
        elif choice == 1:
            pr.zoom_with_ratio(aux, rng.randrange(2), rng.uniform(-9, 9))
            aux = pr.distribution()
        else:
            pr.move_node(8, rng.uniform(-5, 5), rng.uniform(-5, 5), (0, 0), L)
        assert sum(pr.segment_sizes) == pr.rect.w  # exactly, not approximately
        assert all(s >= 4 for s in pr.segment_sizes)


def test_partitioned_circle_quarter_turn():
    pc = PartitionedCircle((0, 0), 100, 0.0, [1, 1, 1, 1])
    node = pc.border_nodes + 1  # partition between sector 0 and sector 1
    pc.start_resectoring(node)
    target = geo.point_at((0, 0), 3 * math.pi / 4, 100)
    assert pc.partition_move(pc._aux, target)
    sweeps = pc.sweeps()
    assert sweeps[0] == pytest.approx(3 * math.pi / 4, abs=1e-9)
    assert sweeps[1] == pytest.approx(math.pi / 4, abs=1e-9)
    assert sum(sweeps) == pytest.approx(math.tau, abs=1e-9)


def test_partitioned_circle_min_sector():
    pc = PartitionedCircle((0, 0), 100, 0.0, [1, 1, 1, 1])
    node = pc.border_nodes + 1
    pc.start_resectoring(node)
    # try to swallow the neighbour completely
    target = geo.point_at((0, 0), math.pi - 0.01, 100)
    assert not pc.partition_move(pc._aux, target)
    assert pc.sweeps()[1] == pytest.approx(math.pi / 2)
    assert all(s >= 0.05 for s in pc.sweeps())


def test_partitioned_circle_first_partition_moves_angle():
    pc = PartitionedCircle((0, 0), 100, 0.0, [1, 1, 1])
    node = pc.border_nodes + 0
    pc.start_resectoring(node)
    target = geo.point_at((0, 0), 0.3, 100)
    assert pc.partition_move(pc._aux, target)
    assert pc.angle == pytest.approx(0.3, abs=1e-9)
    assert sum(pc.sweeps()) == pytest.approx(math.tau, abs=1e-9)


def test_partitioned_circle_minimum_radius():
    pc = PartitionedCircle((0, 0), 100, 0.0, [1, 1])
    assert not pc.move_node(0, 0, 0, (10, 0), L)
    assert pc.radius == 100
    assert pc.move_node(0, 0, 0, (50, 0), L)
    assert pc.radius == 50
    with pytest.raises(ValueError):
        PartitionedCircle((0, 0), 10, 0.0, [1, 1])


# -- always-convex polygons -----------------------------------------------------------------

def test_convex_vertex_move_examples():
    square = ConvexPolyShape([(0, 0), (100, 0), (100, 100), (0, 100)],
                             min_side=10)
    assert square.vertex_move(0, -20, -20)  # pull a corner outward
    assert oracle_strictly_convex(square.pts)
    # push the corner far past the opposite diagonal
    assert not square.vertex_move(0, 160, 160)
    near = ConvexPolyShape([(0, 0), (100, 0), (100, 100), (0, 100)],
                           min_side=10)
    assert not near.vertex_move(0, 95, 0)  # too close to the next vertex


def test_convex_vertex_moves_match_brute_force(rng):
    poly = ConvexPolyShape(
        geo.regular_polygon_vertices((0, 0), 100, 6), min_side=10)
    agreements = 0
    for _ in range(1000):
        i = rng.randrange(6)
        dx = rng.uniform(-60, 60)
        dy = rng.uniform(-60, 60)
        proposal = list(poly.pts)
        proposal[i] = (proposal[i][0] + dx, proposal[i][1] + dy)
        n = len(proposal)
        ok_side = (geo.distance(proposal[(i - 1) % n], proposal[i]) > 10 and
                   geo.distance(proposal[(i + 1) % n], proposal[i]) > 10)
        expected = ok_side and oracle_strictly_convex(proposal)
        accepted = poly.vertex_move(i, dx, dy)
        assert accepted == expected
        assert oracle_strictly_convex(poly.pts)
        agreements += 1
    assert agreements == 1000


# -- chatoyant polygons -------------------------------------------------------------------------

def test_chatoyant_cover_size_3n_plus_1():
    for n in range(3, 13):
        poly = ChatoyantPolyShape(geo.regular_polygon_vertices((0, 0), 80, n))
        assert len(poly.cover) == 3 * n + 1


def test_chatoyant_scalings_per_vertex():
    poly = ChatoyantPolyShape([(50, 0), (0, -100), (-50, 0), (0, 100)],
                              center=(0, 0))
    aux = poly.begin_border_scaling((80, 0))
    assert aux.scalings[0] == pytest.approx(0.625)   # radius 50 vertex
    assert aux.scalings[1] == pytest.approx(1.25)    # radius 100 vertex
    assert poly.scale_update(aux, (40, 0))
    assert geo.distance((0, 0), poly.pts[0]) == pytest.approx(25)
    assert geo.distance((0, 0), poly.pts[1]) == pytest.approx(50)


def test_chatoyant_zoom_guard_distance():
    poly = ChatoyantPolyShape(geo.regular_polygon_vertices((0, 0), 80, 4))
    aux = poly.begin_border_scaling((60, 0))
    assert not poly.scale_update(aux, (10, 0))  # inside the 25 px guard


def test_chatoyant_rotation_keeps_distances():
    poly = ChatoyantPolyShape(geo.regular_polygon_vertices((10, 20), 80, 5),
                              center=(10, 20))
    aux = poly.begin_rotation((70, 20))
    before = pairwise_distances(poly.pts + [poly.center])
    poly.rotation_update(aux, (10, 90))
    assert pairwise_distances(poly.pts + [poly.center]) == pytest.approx(
        before, abs=1e-6)


def test_chatoyant_degenerate_has_no_body():
    # all area nodes collapse: only points and strips stay sensitive
    poly = ChatoyantPolyShape([(0, 0), (50, 0), (100, 0)], center=(25, 0))
    hit = cover_hit(poly.cover, (75, 20))
    assert hit.kind is HitKind.MISS
    on_line = cover_hit(poly.cover, (75, 0))
    assert on_line.kind is HitKind.GRAB
    assert on_line.shape in (NodeShape.CIRCLE, NodeShape.STRIP)


# -- perforated boards and plugs --------------------------------------------------------------------

def test_plug_fits_examples():
    hole = Hole(HoleKind.CIRCLE, (100, 100), 30)
    assert plug_fits(hole, Plug((100, 100), 30))
    assert not plug_fits(hole, Plug((100, 100), 30, n=4))
    tri_hole = Hole(HoleKind.POLYGON, (0, 0), 30, 3, 0.0)
    assert not plug_fits(tri_hole, Plug((0, 0), 30, n=4))
    assert not plug_fits(hole, Plug((110, 100), 30))  # 10 px off center
    assert not plug_fits(hole, Plug((100, 100), 40))  # radius 10 off


def test_plug_fits_rotational_symmetry():
    hole = Hole(HoleKind.POLYGON, (0, 0), 30, 5, 0.3)
    for k in range(5):
        angle = 0.3 + k * math.tau / 5
        assert plug_fits(hole, Plug((0, 0), 30, n=5, angle=angle))
    # half a step off never fits
    assert not plug_fits(hole, Plug((0, 0), 30, n=5, angle=0.3 + math.pi / 5))


def test_plug_fit_tolerances_are_inclusive():
    hole = Hole(HoleKind.CIRCLE, (0, 0), 30)
    tol = FitTolerance()
    assert plug_fits(hole, Plug((tol.center, 0), 30))
    assert plug_fits(hole, Plug((0, 0), 30 + tol.radius))
    assert not plug_fits(hole, Plug((tol.center + 0.001, 0), 30))


def test_board_cover_is_transparent_on_holes():
    board = PerforatedBoard(Rect(0, 0, 200, 200),
                            [Hole(HoleKind.CIRCLE, (50, 50), 20),
                             Hole(HoleKind.POLYGON, (140, 140), 25, 4, 0.0)])
    assert len(board.cover) == 3
    assert cover_hit(board.cover, (50, 50)).kind is HitKind.FALLTHROUGH
    assert cover_hit(board.cover, (140, 140)).kind is HitKind.FALLTHROUGH
    assert cover_hit(board.cover, (100, 20)).kind is HitKind.GRAB
    board.remove_hole(board.holes[0])
    assert len(board.cover) == 2


# -- contract-wide properties -------------------------------------------------------------------------

def all_shape_samples():
    return [
        RectShape(Rect(0, 0, 100, 60), RectRange(10, 500, 10, 500)),
        FixedRatioRect(Rect(0, 0, 200, 100)),
        PartitionedRect(Rect(0, 0, 90, 40), [30, 30, 30]),
        LineShape((0, 0), (100, 0)),
        SegmentedLineShape([(0, 0), (40, 10), (90, -20)]),
        SectoredCircle((50, 50), 40),
        NnodeCircle((0, 0), 60),
        NnodeRing((0, 0), 80, 40),
        NnodeStrip((0, 0), (100, 0), 20),
        PartitionedCircle((0, 0), 60, 0.0, [1, 2, 1]),
        RegularPolyShape((0, 0), 60, 5),
        ConvexPolyShape(geo.regular_polygon_vertices((0, 0), 60, 5)),
        ChatoyantPolyShape(geo.regular_polygon_vertices((0, 0), 60, 4)),
        SectorShape((0, 0), 80, 0.2, 1.2, arc_resizable=True,
                    end_side_movable=True),
        PerforatedBoard(Rect(0, 0, 150, 150),
                        [Hole(HoleKind.CIRCLE, (60, 60), 20)]),
        Plug((0, 0), 30),
        Plug((0, 0), 30, n=5, angle=0.1),
        LabelBox((10, 10), 60, 14),
    ]


def test_translation_exactness_for_every_kind():
    for shape in all_shape_samples():
        before = shape.basic_points()
        shape.move(17.0, -8.0)
        after = shape.basic_points()
        assert len(before) == len(after)
        for (x0, y0), (x1, y1) in zip(before, after):
            assert x1 - x0 == pytest.approx(17.0, abs=1e-9)
            assert y1 - y0 == pytest.approx(-8.0, abs=1e-9)


def test_unique_ids():
    samples = all_shape_samples()
    ids = [s.id for s in samples]
    assert len(set(ids)) == len(ids)
    assert all(isinstance(i, int) and i > 0 for i in ids)
