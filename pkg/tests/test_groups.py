import itertools

import pytest

from movables.cover import Behaviour, CursorHint, HitKind, Resizing, cover_hit
from movables.engine import Engine, MouseButton
from movables.geometry import Rect
from movables.groups import (CommentedElement, DominantGroup, ElasticGroup,
                             LinkedRects, PlotPanelLite, Satellite, ScaleBar,
                             SubordinateProxy, WidgetProxy, set_visibility,
                             temporary_group)

L = MouseButton.LEFT


# -- satellites -----------------------------------------------------------------

def test_satellite_follows_parent_center():
    parent = Rect(0, 0, 100, 100)
    sat = Satellite(parent, 40, 14, coefs=(0.5, 0.5))
    assert sat.anchor == (50, 50)
    sat.set_parent_rect(Rect(0, 0, 200, 200))
    assert sat.anchor == (100, 100)


def test_satellite_keeps_outside_distance():
    parent = Rect(0, 0, 100, 100)
    sat = Satellite(parent, 40, 14, coefs=(-7, 0.5))
    assert sat.anchor == (-7, 50)
    sat.set_parent_rect(Rect(100, 0, 100, 100))  # parent moved right by 100
    assert sat.anchor == (93, 50)  # still 7 px left of the edge


def test_satellite_own_move_updates_coefs():
    parent = Rect(0, 0, 100, 100)
    sat = Satellite(parent, 40, 14, coefs=(0.5, 0.5))
    sat.move(25, 0)
    assert (sat.x_coef, sat.y_coef) == (0.75, 0.5)
    assert sat.parent_rect == parent  # the parent is untouched


# -- widget proxies --------------------------------------------------------------

def test_widget_resizing_derivation():
    fixed = WidgetProxy(Rect(0, 0, 100, 40))
    assert fixed.resizing is Resizing.NONE
    we = WidgetProxy(Rect(0, 0, 100, 40), min_size=(60, 40), max_size=(200, 40))
    assert we.resizing is Resizing.WE
    ns = WidgetProxy(Rect(0, 0, 100, 40), min_size=(100, 20), max_size=(100, 90))
    assert ns.resizing is Resizing.NS
    both = WidgetProxy(Rect(0, 0, 100, 40), min_size=(60, 20),
                       max_size=(200, 90))
    assert both.resizing is Resizing.ANY


def test_widget_explicit_resizing_only_narrows():
    both = WidgetProxy(Rect(0, 0, 100, 40), min_size=(60, 20),
                       max_size=(200, 90))
    both.set_resizing(Resizing.NS)
    assert both.resizing is Resizing.NS
    we_only = WidgetProxy(Rect(0, 0, 100, 40), min_size=(60, 40),
                          max_size=(200, 40))
    we_only.set_resizing(Resizing.NS)  # wider than derived: no effect
    assert we_only.resizing is Resizing.NONE or we_only.resizing is Resizing.WE
    we_only.set_resizing(None)
    assert we_only.resizing is Resizing.WE


def test_widget_sixteen_pixel_floor():
    w = WidgetProxy(Rect(0, 0, 100, 40), min_size=(1, 1), max_size=(200, 90))
    assert w.w_min == 16 and w.h_min == 16
    # squeeze with the right mid-handle until the floor stops it
    for _ in range(30):
        w.resize_by_node(3, -5, 0)
    assert w.rect.w == 20  # the next -5 would land at 15: rejected
    assert w.resize_by_node(3, -4, 0)
    assert w.rect.w == 16
    assert not w.resize_by_node(3, -1, 0)


def test_widget_cover_layout_and_move():
    w = WidgetProxy(Rect(100, 100, 100, 40), min_size=(60, 20),
                    max_size=(200, 90))
    assert len(w.cover) == 12  # 8 handles + 4 frame strips
    # a frame point away from every handle grabs the whole widget
    hit = cover_hit(w.cover, (120, 97))
    assert hit.kind is HitKind.GRAB and hit.node >= 8
    assert cover_hit(w.cover, (150, 120)).kind is HitKind.MISS  # body not covered
    # the top mid-handle sits on the border, ahead of the frame
    mid = cover_hit(w.cover, (150, 100))
    assert mid.node == 1 and mid.cursor is CursorHint.SIZE_NS
    assert w.move_node(hit.node, 10, 5, (130, 102), L)
    assert (w.rect.x, w.rect.y) == (110, 105)


def test_widget_fixed_is_frozen_not_movable():
    w = WidgetProxy(Rect(100, 100, 100, 40), movable=False)
    hit = cover_hit(w.cover, (150, 97))
    assert hit.kind is HitKind.FROZEN


def test_widget_narrowed_handles_are_inert():
    ns = WidgetProxy(Rect(100, 100, 100, 40), min_size=(100, 20),
                     max_size=(100, 90))
    # the left mid-handle spot falls through to the frame strip behind it
    hit = cover_hit(ns.cover, (100, 120))
    assert hit.node >= 8
    # the top mid-handle stays active
    hit = cover_hit(ns.cover, (150, 100))
    assert hit.node == 1 and hit.cursor is CursorHint.SIZE_NS


# -- commented elements -------------------------------------------------------------

def test_comment_follows_element():
    ce = CommentedElement(Rect(0, 0, 100, 40), comment_text="name",
                          comment_coefs=(0.5, 1.5))
    start = ce.comment.anchor
    ce.move(30, 10)
    assert ce.comment.anchor == (start[0] + 30, start[1] + 10)


def test_enforced_relocation_fixpoint():
    ce = CommentedElement(Rect(0, 0, 200, 100), comment_size=(40, 10),
                          comment_coefs=(0.5, 0.5))
    assert ce.rect.contains_rect(ce.comment.bounds())
    assert ce.enforced_relocation()
    assert not ce.rect.contains_rect(ce.comment.bounds())  # one step suffices
    assert not ce.enforced_relocation()  # second application is a no-op


def test_relocation_spares_comment_just_outside():
    ce = CommentedElement(Rect(0, 0, 200, 100), comment_size=(40, 10),
                          comment_coefs=(1.0, 0.5))
    # anchor on the right edge: half the comment sticks out
    assert not ce.enforced_relocation()
    before = ce.comment.anchor
    ce.on_release(11, None)
    assert ce.comment.anchor == before


# -- dominant groups -------------------------------------------------------------------

def make_dominant():
    dominant = WidgetProxy(Rect(100, 100, 200, 150), min_size=(100, 80),
                           max_size=(400, 300))
    subs = [SubordinateProxy(Rect(320, 100, 60, 30)),
            SubordinateProxy(Rect(320, 150, 60, 30))]
    return DominantGroup(dominant, subs)


def test_dominant_move_carries_subordinates():
    g = make_dominant()
    g.move(10, 20)
    assert g.dominant.rect.x == 110
    assert g.subordinates[0].rect.x == 330
    assert g.subordinates[0].rect.y == 120


def test_dominant_resize_repositions_by_coefs():
    g = make_dominant()
    # subordinate top-left is 20 px right of the dominant's right edge
    assert g.subordinates[0].lt_coefs[0] == 20
    assert g.move_node(3, 50, 0, (0, 0), L)  # widen via the right mid-handle
    assert g.dominant.rect.w == 250
    assert g.subordinates[0].rect.x == 370  # still 20 px beyond the edge


def test_dominant_relocates_swallowed_subordinate():
    g = make_dominant()
    sub = g.subordinates[0]
    sub.move(-100, 30)  # park it fully inside the dominant
    assert g.dominant.rect.contains_rect(sub.rect)
    assert g.after_member_release(sub)
    assert not g.dominant.rect.contains_rect(sub.rect)
    assert sub.rect.x == g.dominant.rect.right + 4


def test_switch_dominant():
    g = make_dominant()
    sub = g.subordinates[0]
    rebuilt = g.switch_dominant(sub)
    assert rebuilt is not None
    assert rebuilt.dominant.id == sub.id
    member_ids = {rebuilt.dominant.id} | {s.id for s in rebuilt.subordinates}
    old_ids = {g.dominant.id} | {s.id for s in g.subordinates}
    assert member_ids == old_ids
    assert g.switch_dominant(g.dominant) is None
    foreign = WidgetProxy(Rect(0, 0, 50, 50))
    assert g.switch_dominant(foreign) is None


# -- linked rectangles --------------------------------------------------------------------

def test_linked_rects_move_as_one():
    lr = LinkedRects([("a", Rect(0, 0, 50, 20)), ("b", Rect(100, 0, 50, 20))])
    assert len(lr.cover) == 2
    assert lr.move_node(1, 5, 7, (0, 0), L)
    assert lr.rects[0][1].x == 5 and lr.rects[1][1].x == 105
    assert lr.rects[0][1].y == 7


# -- elastic groups ------------------------------------------------------------------------

def make_group(title="Group"):
    elems = [WidgetProxy(Rect(100, 100, 80, 30)),
             WidgetProxy(Rect(200, 100, 80, 30)),
             WidgetProxy(Rect(100, 160, 80, 30))]
    return ElasticGroup(elems, title=title, title_size=(40, 14)), elems


def expected_frame(group):
    union = None
    for e in group.elements:
        if not (e.visible and e.visible_as_member):
            continue
        rc = e.bounds()
        union = rc if union is None else union.union(rc)
    sp = group.side_spaces
    top_extra = sp[1] + (group.title_h / 2.0 if group.title else 0.0)
    return Rect(union.left - sp[0], union.top - top_extra,
                union.w + sp[0] + sp[2], union.h + top_extra + sp[3])


def test_elastic_frame_formula():
    group, elems = make_group()
    assert group.frame == expected_frame(group)
    elems[1].move(50, 0)
    group.update()
    assert group.frame == expected_frame(group)
    elems[2].move(0, 80)
    group.update()
    assert group.frame == expected_frame(group)


def test_elastic_frame_shrinks_when_member_hidden():
    group, elems = make_group()
    wide = group.frame.copy()
    set_visibility(elems[1], "direct", False)
    group.update()
    assert group.frame.right < wide.right
    assert group.frame == expected_frame(group)


def test_elastic_untitled_top_expansion():
    group, _ = make_group(title="")
    union_top = min(e.bounds().top for e in group.elements)
    assert group.frame.top == union_top - group.side_spaces[1]


def test_title_drag_clamps_coef():
    group, _ = make_group()
    group.alignment_coef = 0.25
    group.title_drag(10_000)
    assert group.alignment_coef == 1.0
    group.title_drag(-10_000)
    assert group.alignment_coef == 0.0
    group.title_movable = False
    group.title_drag(50)
    assert group.alignment_coef == 0.0


def test_title_position_is_lerp_of_frame():
    group, elems = make_group()
    group.alignment_coef = 0.25
    lo = group.frame.left + group.title_margin
    hi = group.frame.right - group.title_margin
    assert group.title_center_x() == pytest.approx(lo + 0.25 * (hi - lo))
    elems[1].move(100, 0)
    group.update()
    lo = group.frame.left + group.title_margin
    hi = group.frame.right - group.title_margin
    assert group.title_center_x() == pytest.approx(lo + 0.25 * (hi - lo))


def test_group_move_carries_all_members():
    group, elems = make_group()
    frame0 = group.frame.copy()
    group.move(15, -5)
    assert elems[0].rect.x == 115
    assert group.frame.x == frame0.x + 15
    assert group.frame == expected_frame(group)


def test_elements_movable_switch():
    group, elems = make_group()
    assert group.children() == elems
    group.elements_movable = False
    assert group.children() == []
    assert group.members() == elems  # visibility still propagates


def test_element_wide_color_hooks():
    inner = ElasticGroup([WidgetProxy(Rect(0, 0, 40, 20))], title="")
    ce = CommentedElement(Rect(60, 0, 60, 24), comment_text="x")
    outer = ElasticGroup([inner, ce], title="")
    outer.set_elements_fill("#112233")
    assert inner.elements[0].fill == "#112233"
    assert ce.fill == "#112233"
    outer.set_comments_color("#445566")
    assert ce.comment.color == "#445566"


# -- two-flag visibility ----------------------------------------------------------------------

def test_hide_member_hide_group_show_group():
    group, elems = make_group()
    member = elems[1]
    set_visibility(member, "direct", False)
    set_visibility(group, "direct", False)
    assert member.visible_as_member is False
    set_visibility(group, "direct", True)
    assert member.visible_as_member is True
    assert member.visible is False  # the member stays hidden
    rendered = member.visible and member.visible_as_member
    assert rendered is False


def test_visible_all_restores_members():
    group, elems = make_group()
    set_visibility(elems[0], "direct", False)
    set_visibility(elems[2], "direct", False)
    group.set_visible_all()
    assert all(e.visible and e.visible_as_member for e in elems)


def test_visibility_algebra_three_levels():
    def build():
        inner = ElasticGroup([WidgetProxy(Rect(0, 0, 40, 20))], title="")
        middle = ElasticGroup([inner, WidgetProxy(Rect(60, 0, 40, 20))],
                              title="")
        outer = ElasticGroup([middle, WidgetProxy(Rect(120, 0, 40, 20))],
                             title="")
        return outer

    for flags in itertools.product([True, False], repeat=3):
        outer = build()
        middle = outer.elements[0]
        inner = middle.elements[0]
        set_visibility(inner, "direct", flags[0])
        set_visibility(middle, "direct", flags[1])
        set_visibility(outer, "direct", flags[2])
        # rendered = direct AND as-member at every level
        assert outer.visible_as_member is True
        assert middle.visible_as_member == (outer.visible and
                                            outer.visible_as_member)
        assert inner.visible_as_member == (middle.visible and
                                           middle.visible_as_member)
        leaf = inner.elements[0]
        assert leaf.visible_as_member == (inner.visible and
                                          inner.visible_as_member)


# -- into_mover ordering -------------------------------------------------------------------------

def test_into_mover_children_precede_parent():
    group, elems = make_group()
    eng = Engine()
    group.into_mover(eng, 0)
    assert eng.queue == elems + [group]


def test_into_mover_recursive_order():
    inner = ElasticGroup([WidgetProxy(Rect(0, 0, 40, 20)),
                          WidgetProxy(Rect(50, 0, 40, 20))], title="")
    top_widget = WidgetProxy(Rect(120, 0, 40, 20))
    outer = ElasticGroup([inner, top_widget], title="")
    eng = Engine()
    outer.into_mover(eng, 0)
    assert eng.queue == [*inner.elements, inner, top_widget, outer]
    # every child index precedes its parent index
    index = {obj: i for i, obj in enumerate(eng.queue)}
    for parent in (inner, outer):
        for child in parent.members():
            assert index[child] < index[parent]


def test_plot_panel_chain_and_order():
    panel = PlotPanelLite(Rect(100, 100, 300, 200))
    scale = ScaleBar(panel.rect, horizontal=True, pos_coef=1.1)
    panel.add_scale(scale)
    scale_comment = Satellite(scale.rect_around(), 30, 10, coefs=(0.5, 2.0))
    scale.add_comment(scale_comment)
    rect_comment = Satellite(panel.rect, 30, 10, coefs=(0.5, 0.5))
    panel.add_comment(rect_comment)
    eng = Engine()
    panel.into_mover(eng, 0)
    assert eng.queue == [scale_comment, scale, rect_comment, panel]
    # the chain: panel -> scale -> comment
    y0 = scale.line_coor()
    c0 = scale_comment.anchor
    panel.move_node(8, 0, 50, (0, 0), L)  # move the panel down
    assert scale.line_coor() == y0 + 50
    assert scale_comment.anchor[1] == pytest.approx(c0[1] + 50)


def test_frozen_scale_cover_and_follow():
    panel = PlotPanelLite(Rect(100, 100, 300, 200))
    scale = ScaleBar(panel.rect, horizontal=True, pos_coef=0.5, frozen=True)
    panel.add_scale(scale)
    assert len(scale.cover) == 1
    assert scale.cover[0].behaviour is Behaviour.FROZEN
    y0 = scale.line_coor()
    panel.move(0, 40)
    assert scale.line_coor() == y0 + 40  # frozen still follows its parent
    assert not scale.move_node(0, 0, 10, (0, 0), L)


def test_parent_chain_ids():
    panel = PlotPanelLite(Rect(100, 100, 300, 200))
    scale = ScaleBar(panel.rect, horizontal=True)
    panel.add_scale(scale)
    comment = Satellite(scale.rect_around(), 30, 10, coefs=(0.5, 0.5))
    scale.add_comment(comment)
    assert comment.parent_id == scale.id
    assert scale.parent_id == panel.id


# -- temporary groups -------------------------------------------------------------------------------

def test_temporary_group_selection():
    proxies = [WidgetProxy(Rect(10 + 60 * i, 10, 40, 20)) for i in range(5)]
    group, members = temporary_group(proxies, (0, 0), (180, 60))
    assert group is not None
    assert len(members) == 3  # the first three are fully inside
    none_group, none_members = temporary_group(proxies, (0, 0), (55, 60))
    assert none_group is None and none_members == []  # single member: no group
    zero, _ = temporary_group(proxies, (20, 20), (20, 80))
    assert zero is None  # degenerate frame
