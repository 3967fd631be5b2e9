"""Complex objects: satellites with positioning coefficients, widget
proxies, commented elements, dominant groups, elastic groups, linked
rectangles, and the three-level plot panel demo.

Widget proxies stand in for native controls: rectangular, moved by a
sensitive frame around the body, resized by eight handles whose active
set derives from the allowed size ranges.
"""

from __future__ import annotations

from . import geometry as geo
from .cover import (Behaviour, Cover, CursorHint, Resizing, circle_node,
                    polygon_node, rect_node, strip_node)
from .engine import MouseButton
from .geometry import Point, Rect
from .shapes.base import Movable
from .shapes.labels import LabelBox, TextBasis

MIN_WIDGET_SIZE = 16.0
DEFAULT_FRAME = 6.0
DEFAULT_HANDLE = 9.0
RELOCATION_GAP = 4.0


class Satellite(LabelBox):
    """Label that keeps its relative position against a parent rectangle.

    The anchor's position is a coefficient pair: a [0, 1] fraction while
    inside the parent's span, a signed pixel distance outside it. Moving
    the satellite recomputes the coefficients; moving or resizing the
    parent replays the stored ones.
    """

    kind = "satellite"

    def __init__(self, parent_rect: Rect, width: float, height: float, *,
                 coefs: tuple[float, float] | None = None,
                 location: Point | None = None, angle: float = 0.0,
                 text: str = "", color: str = "#202020"):
        if coefs is None:
            if location is None:
                raise ValueError("a satellite needs coefs or a location")
            coefs = geo.rect_position_coefs(parent_rect, location)
        anchor = geo.location_by_coefs(parent_rect, *coefs)
        super().__init__(anchor, width, height, TextBasis.M, angle, text, color)
        self.parent_rect = parent_rect.copy()
        self.x_coef, self.y_coef = coefs

    def set_parent_rect(self, rect: Rect) -> None:
        """Parent moved or resized: replay the stored coefficients."""
        self.parent_rect = rect.copy()
        self.anchor = geo.location_by_coefs(rect, self.x_coef, self.y_coef)
        self.update_cover()

    def move(self, dx: float, dy: float) -> None:
        super().move(dx, dy)
        self.x_coef, self.y_coef = geo.rect_position_coefs(self.parent_rect,
                                                           self.anchor)

    def relocate_outside(self, parent: Rect) -> None:
        """Enforced relocation next to the parent's upper-right corner."""
        self.angle = 0.0
        self.anchor = (parent.right + RELOCATION_GAP + self.width / 2.0,
                       parent.top)
        self.x_coef, self.y_coef = geo.rect_position_coefs(self.parent_rect,
                                                           self.anchor)
        self.update_cover()


class WidgetProxy(Movable):
    """Rectangular widget stand-in, moved by its frame, resized by
    handles.

    Eight resize handles sit on the frame, numbered clockwise from the
    top-left corner; handles a narrowed resizing disables stay in the
    cover as inert far-away nodes so the ids never change. Neither
    dimension ever drops below 16 px.
    """

    kind = "widget"

    def __init__(self, bounds: Rect, *,
                 min_size: tuple[float, float] | None = None,
                 max_size: tuple[float, float] | None = None,
                 movable: bool = True, frame: float = DEFAULT_FRAME,
                 handle: float = DEFAULT_HANDLE, label: str = "",
                 fill: str = "#e8e8e8"):
        super().__init__()
        self.rect = bounds.copy()
        w_min = max(MIN_WIDGET_SIZE, (min_size or (bounds.w, bounds.h))[0])
        h_min = max(MIN_WIDGET_SIZE, (min_size or (bounds.w, bounds.h))[1])
        w_max, h_max = max_size or (bounds.w, bounds.h)
        self.w_min, self.w_max = min(w_min, bounds.w), max(w_max, bounds.w)
        self.h_min, self.h_max = min(h_min, bounds.h), max(h_max, bounds.h)
        self.w_min = max(MIN_WIDGET_SIZE, self.w_min)
        self.h_min = max(MIN_WIDGET_SIZE, self.h_min)
        self.movable = movable
        self.frame = max(2.0, frame)
        self.handle = handle
        self.label = label
        self.fill = fill
        self._resizing_override: Resizing | None = None

    # -- resizing derivation ---------------------------------------------------

    def resizing_from_ranges(self) -> Resizing:
        we = self.w_min < self.w_max
        ns = self.h_min < self.h_max
        if we and ns:
            return Resizing.ANY
        if we:
            return Resizing.WE
        if ns:
            return Resizing.NS
        return Resizing.NONE

    @property
    def resizing(self) -> Resizing:
        derived = self.resizing_from_ranges()
        override = self._resizing_override
        if override is None:
            return derived
        # an explicit resizing may only narrow the derived one
        if override is Resizing.NONE:
            return Resizing.NONE
        if derived is Resizing.ANY:
            return override
        if override is derived or override is Resizing.ANY:
            return derived
        return Resizing.NONE

    def set_resizing(self, resizing: Resizing | None) -> None:
        self._resizing_override = resizing
        self.update_cover()

    # -- cover -------------------------------------------------------------------

    def _handle_nodes(self):
        rc = self.rect
        resizing = self.resizing
        h = self.handle
        s = h / 2.0
        mid_len = max(h, min(rc.w, rc.h) / 3.0)
        cx, cy = rc.center()
        corner_cursor = {Resizing.ANY: CursorHint.HAND,
                         Resizing.NS: CursorHint.SIZE_NS,
                         Resizing.WE: CursorHint.SIZE_WE,
                         Resizing.NONE: CursorHint.DEFAULT}[resizing]
        active_mids = {Resizing.ANY: (True, True, True, True),
                       Resizing.NS: (True, False, True, False),
                       Resizing.WE: (False, True, False, True),
                       Resizing.NONE: (False, False, False, False)}[resizing]
        corners_active = resizing is not Resizing.NONE

        def square(center: Point):
            return polygon_node(Rect(center[0] - s, center[1] - s, h, h).corners(),
                                cursor=corner_cursor)

        def h_bar(center: Point):
            return polygon_node(
                Rect(center[0] - mid_len / 2.0, center[1] - s, mid_len, h).corners(),
                cursor=CursorHint.SIZE_NS)

        def v_bar(center: Point):
            return polygon_node(
                Rect(center[0] - s, center[1] - mid_len / 2.0, h, mid_len).corners(),
                cursor=CursorHint.SIZE_WE)

        inert = circle_node((-1.0e9, -1.0e9), 0.0, cursor=CursorHint.DEFAULT)
        lt, rt, rb, lb = rc.corners()
        specs = [
            (corners_active, square(lt)),
            (active_mids[0], h_bar((cx, rc.top))),
            (corners_active, square(rt)),
            (active_mids[1], v_bar((rc.right, cy))),
            (corners_active, square(rb)),
            (active_mids[2], h_bar((cx, rc.bottom))),
            (corners_active, square(lb)),
            (active_mids[3], v_bar((rc.left, cy))),
        ]
        return [node if active else inert for active, node in specs]

    def _frame_nodes(self):
        rc = self.rect
        f = self.frame
        behaviour = Behaviour.MOVEABLE if self.movable else Behaviour.FROZEN
        cursor = CursorHint.SIZE_ALL if self.movable else CursorHint.HAND
        return [
            polygon_node(Rect(rc.left - f, rc.top - f, rc.w + 2 * f, f).corners(),
                         behaviour=behaviour, cursor=cursor),
            polygon_node(Rect(rc.right, rc.top - f, f, rc.h + 2 * f).corners(),
                         behaviour=behaviour, cursor=cursor),
            polygon_node(Rect(rc.left - f, rc.bottom, rc.w + 2 * f, f).corners(),
                         behaviour=behaviour, cursor=cursor),
            polygon_node(Rect(rc.left - f, rc.top - f, f, rc.h + 2 * f).corners(),
                         behaviour=behaviour, cursor=cursor),
        ]

    def define_cover(self) -> Cover:
        return Cover(self._handle_nodes() + self._frame_nodes())

    # -- movement ------------------------------------------------------------------

    def _geometry_changed(self) -> None:
        """Hook for subclasses with satellites."""
        self.update_cover()

    def move(self, dx: float, dy: float) -> None:
        self.rect.x += dx
        self.rect.y += dy
        self._geometry_changed()

    def set_top_left(self, p: Point) -> None:
        self.rect.x, self.rect.y = p
        self._geometry_changed()

    def resize_by_node(self, node_id: int, dx: float, dy: float) -> bool:
        """Resize math shared with groups that delegate to a proxy cover."""
        rc = self.rect
        left = node_id in (0, 6, 7)
        right = node_id in (2, 3, 4)
        top = node_id in (0, 1, 2)
        bottom = node_id in (4, 5, 6)
        if node_id in (1, 5):
            left = right = False
        if node_id in (3, 7):
            top = bottom = False
        done = False
        if left and self.w_min <= rc.w - dx <= self.w_max:
            rc.x += dx
            rc.w -= dx
            done = True
        if right and self.w_min <= rc.w + dx <= self.w_max:
            rc.w += dx
            done = True
        if top and self.h_min <= rc.h - dy <= self.h_max:
            rc.y += dy
            rc.h -= dy
            done = True
        if bottom and self.h_min <= rc.h + dy <= self.h_max:
            rc.h += dy
            done = True
        if done:
            self._geometry_changed()
        return done

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if node_id >= 8:
            if not self.movable:
                return False
            self.move(dx, dy)
            return True
        return self.resize_by_node(node_id, dx, dy)

    def basic_points(self) -> list[Point]:
        return self.rect.corners()

    def bounds(self) -> Rect:
        return self.rect.copy()


class CommentedElement(WidgetProxy):
    """Widget proxy plus a rotatable comment satellite.

    The comment follows the element's rectangle by its coefficients and
    may be placed anywhere except fully under its own element: a release
    there triggers the enforced relocation.
    """

    kind = "commented_widget"

    def __init__(self, bounds: Rect, comment_text: str = "",
                 comment_size: tuple[float, float] = (60.0, 14.0),
                 comment_coefs: tuple[float, float] = (0.5, 1.5), **kwargs):
        super().__init__(bounds, **kwargs)
        self.comment = Satellite(self.rect, comment_size[0], comment_size[1],
                                 coefs=comment_coefs, text=comment_text)
        self.comment.parent_id = self.id

    def members(self) -> list[Movable]:
        return [self.comment]

    def _geometry_changed(self) -> None:
        super()._geometry_changed()
        self.comment.set_parent_rect(self.rect)

    def enforced_relocation(self) -> bool:
        """Pull the comment out when its own element fully covers it."""
        if not self.rect.contains_rect(self.comment.bounds()):
            return False
        self.comment.relocate_outside(self.rect)
        return True

    def after_member_release(self, member: Movable) -> bool:
        if member is self.comment:
            return self.enforced_relocation()
        return False

    def on_release(self, node_id, node_shape) -> None:
        self.enforced_relocation()

    def bounds(self) -> Rect:
        return self.rect.union(self.comment.bounds())


class SubordinateProxy(WidgetProxy):
    """Group member whose top-left corner is tied to the dominant rect."""

    kind = "subordinate"

    def __init__(self, bounds: Rect, **kwargs):
        super().__init__(bounds, **kwargs)
        self.lt_coefs = (0.0, 0.0)
        self._group: "DominantGroup | None" = None
        self._repositioning = False

    def _geometry_changed(self) -> None:
        super()._geometry_changed()
        if self._group is not None and not self._repositioning:
            self.lt_coefs = geo.rect_position_coefs(
                self._group.dominant.rect, (self.rect.left, self.rect.top))

    def reposition(self, dominant_rect: Rect) -> None:
        self._repositioning = True
        try:
            self.set_top_left(geo.location_by_coefs(dominant_rect,
                                                    *self.lt_coefs))
        finally:
            self._repositioning = False


class DominantGroup(Movable):
    """Group ruled by one dominant widget.

    Moving the dominant carries every subordinate along; resizing it
    repositions them by their fixed corner coefficients; a subordinate
    released fully inside the dominant is relocated to its upper-right
    corner.
    """

    kind = "dominant_group"

    def __init__(self, dominant: WidgetProxy,
                 subordinates: list[SubordinateProxy],
                 show_prompts: bool = False):
        super().__init__()
        self.dominant = dominant
        self.subordinates = list(subordinates)
        self.show_prompts = show_prompts
        for sub in self.subordinates:
            sub.parent_id = self.id
            sub._group = self
            sub.lt_coefs = geo.rect_position_coefs(
                dominant.rect, (sub.rect.left, sub.rect.top))

    def members(self) -> list[Movable]:
        return list(self.subordinates)

    def define_cover(self) -> Cover:
        return self.dominant.define_cover()

    def move(self, dx: float, dy: float) -> None:
        self.dominant.move(dx, dy)
        for sub in self.subordinates:
            sub.reposition(self.dominant.rect)
        self.update_cover()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if node_id >= 8:
            if not self.dominant.movable:
                return False
            self.move(dx, dy)
            return True
        if self.dominant.resize_by_node(node_id, dx, dy):
            for sub in self.subordinates:
                sub.reposition(self.dominant.rect)
            self.update_cover()
            return True
        return False

    def check_subordinates(self) -> bool:
        """Enforced relocation after the dominant grew over a member."""
        relocated = False
        for sub in self.subordinates:
            if self.dominant.rect.contains_rect(sub.rect):
                self._relocate(sub)
                relocated = True
        return relocated

    def _relocate(self, sub: SubordinateProxy) -> None:
        sub.set_top_left((self.dominant.rect.right + RELOCATION_GAP,
                          self.dominant.rect.top))

    def after_member_release(self, member: Movable) -> bool:
        if member in self.subordinates and \
                self.dominant.rect.contains_rect(member.rect):
            self._relocate(member)
            return True
        return False

    def on_release(self, node_id, node_shape) -> None:
        self.check_subordinates()

    def switch_dominant(self, proxy: WidgetProxy) -> "DominantGroup | None":
        """Rebuilt group with proxy dominant; None for the dominant itself
        or a foreign widget."""
        if proxy is self.dominant or proxy not in self.subordinates:
            return None
        new_subs = [s for s in self.subordinates if s is not proxy]
        old = self.dominant
        demoted = SubordinateProxy(old.rect,
                                   min_size=(old.w_min, old.h_min),
                                   max_size=(old.w_max, old.h_max),
                                   movable=old.movable, frame=old.frame,
                                   handle=old.handle, label=old.label,
                                   fill=old.fill)
        demoted.id = old.id
        promoted = WidgetProxy(proxy.rect,
                               min_size=(proxy.w_min, proxy.h_min),
                               max_size=(proxy.w_max, proxy.h_max),
                               movable=proxy.movable, frame=proxy.frame,
                               handle=proxy.handle, label=proxy.label,
                               fill=proxy.fill)
        promoted.id = proxy.id
        group = DominantGroup(promoted, new_subs + [demoted])
        return group

    def basic_points(self) -> list[Point]:
        pts = self.dominant.rect.corners()
        for sub in self.subordinates:
            pts += sub.rect.corners()
        return pts

    def bounds(self) -> Rect:
        rc = self.dominant.rect.copy()
        for sub in self.subordinates:
            rc = rc.union(sub.rect)
        return rc


class LinkedRects(Movable):
    """Non-resizable bundle of tagged rectangles moved as one body."""

    kind = "linked_rects"

    def __init__(self, rects: list[tuple[str, Rect]], fill: str = "#d8d8c0"):
        super().__init__()
        if not rects:
            raise ValueError("linked rectangles need at least one member")
        self.rects = [(tag, rc.copy()) for tag, rc in rects]
        self.fill = fill

    def define_cover(self) -> Cover:
        return Cover([rect_node(rc) for _, rc in self.rects])

    def move(self, dx: float, dy: float) -> None:
        for _, rc in self.rects:
            rc.x += dx
            rc.y += dy
        self.update_cover()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        self.move(dx, dy)
        return True

    def basic_points(self) -> list[Point]:
        pts = []
        for _, rc in self.rects:
            pts += rc.corners()
        return pts

    def bounds(self) -> Rect:
        rc = self.rects[0][1].copy()
        for _, other in self.rects[1:]:
            rc = rc.union(other)
        return rc


class ElasticGroup(Movable):
    """Group whose frame continuously surrounds its movable members.

    The frame is recomputed from the union of visible member bounds,
    expanded by the side spaces (the top also by half the title height).
    The title slides along the top frame line between the corners.
    """

    kind = "elastic_group"

    def __init__(self, elements: list[Movable], title: str = "",
                 title_size: tuple[float, float] | None = None,
                 side_spaces: tuple[float, float, float, float] = (12.0, 6.0, 12.0, 12.0),
                 alignment_coef: float = 0.5, title_movable: bool = True,
                 elements_movable: bool = True, back_color: str = "#f4f4f4",
                 transparency: float = 0.0, frame_color: str = "#808080",
                 show_frame: bool = True, title_color: str = "#404080"):
        super().__init__()
        if not elements:
            raise ValueError("an elastic group needs at least one element")
        self.elements = list(elements)
        for elem in self.elements:
            elem.parent_id = self.id
        self.title = title
        if title_size is None:
            title_size = (7.0 * len(title), 14.0) if title else (0.0, 0.0)
        self.title_w, self.title_h = title_size
        self.side_spaces = tuple(float(s) for s in side_spaces)
        self.alignment_coef = min(1.0, max(0.0, alignment_coef))
        self.title_movable = title_movable
        self.elements_movable = elements_movable
        self.back_color = back_color
        self.transparency = min(1.0, max(0.0, transparency))
        self.frame_color = frame_color
        self.show_frame = show_frame
        self.title_color = title_color
        self.title_side_space = 4.0
        self.frame = Rect(0.0, 0.0, 0.0, 0.0)
        self.update()

    def members(self) -> list[Movable]:
        return list(self.elements)

    def children(self) -> list[Movable]:
        return list(self.elements) if self.elements_movable else []

    # -- frame geometry -------------------------------------------------------

    def _visible_member_union(self) -> Rect | None:
        union = None
        for elem in self.elements:
            if not (elem.visible and elem.visible_as_member):
                continue
            rc = elem.bounds()
            union = rc if union is None else union.union(rc)
        return union

    def update(self) -> None:
        """Recompute the frame; call after any member move/resize/visibility."""
        union = self._visible_member_union()
        if union is None:
            return  # nothing visible: the frame keeps its last geometry
        sp = self.side_spaces
        top_extra = sp[1] + (self.title_h / 2.0 if self.title else 0.0)
        self.frame = Rect(union.left - sp[0], union.top - top_extra,
                          union.w + sp[0] + sp[2],
                          union.h + top_extra + sp[3])
        self.update_cover()

    @property
    def title_margin(self) -> float:
        return self.title_w / 2.0 + self.title_side_space

    def title_center_x(self) -> float:
        lo = self.frame.left + self.title_margin
        hi = self.frame.right - self.title_margin
        if hi < lo:
            return self.frame.center()[0]
        return lo + self.alignment_coef * (hi - lo)

    def title_box(self) -> Rect:
        cx = self.title_center_x()
        return Rect(cx - self.title_w / 2.0, self.frame.top - self.title_h / 2.0,
                    self.title_w, self.title_h)

    def define_cover(self) -> Cover:
        nodes = []
        if self.title:
            nodes.append(rect_node(self.title_box(), cursor=CursorHint.HAND))
        nodes.append(rect_node(self.frame, cursor=CursorHint.SIZE_ALL))
        return Cover(nodes)

    # -- movement -----------------------------------------------------------------

    def move(self, dx: float, dy: float) -> None:
        for elem in self.elements:
            elem.move(dx, dy)
        self.frame.x += dx
        self.frame.y += dy
        self.update_cover()

    def set_elements_fill(self, color: str) -> None:
        """Element-wide color hook: recolor every widget inside, recursively."""
        for elem in self.elements:
            if isinstance(elem, ElasticGroup):
                elem.set_elements_fill(color)
            elif isinstance(elem, DominantGroup):
                elem.dominant.fill = color
                for sub in elem.subordinates:
                    sub.fill = color
            elif isinstance(elem, WidgetProxy):
                elem.fill = color

    def set_comments_color(self, color: str) -> None:
        """Element-wide hook for the comment satellites, recursively."""
        for elem in self.elements:
            if isinstance(elem, ElasticGroup):
                elem.set_comments_color(color)
            elif isinstance(elem, CommentedElement):
                elem.comment.color = color

    def title_drag(self, dx: float) -> None:
        """Slide the title along the top frame line; the coef clamps to [0, 1]."""
        if not self.title_movable:
            return
        lo = self.frame.left + self.title_margin
        hi = self.frame.right - self.title_margin
        if hi <= lo:
            return
        cx = min(hi, max(lo, self.title_center_x() + dx))
        self.alignment_coef = (cx - lo) / (hi - lo)
        self.update_cover()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if self.title and node_id == 0:
            if not self.title_movable:
                return False
            self.title_drag(dx)
            return True
        self.move(dx, dy)
        return True

    def basic_points(self) -> list[Point]:
        return self.frame.corners()

    def bounds(self) -> Rect:
        if self.title:
            return self.frame.union(self.title_box())
        return self.frame.copy()


class ScaleBar(Movable):
    """One-axis satellite bar of a plot panel, optionally frozen.

    A horizontal bar keeps its ends glued to the panel's vertical
    borders; its cross position is the coefficient against the panel
    rect. Frozen bars get a single Frozen node: recognized, not
    draggable, still carried by the parent.
    """

    kind = "scale_bar"

    MIN_HALF = 2.0

    def __init__(self, parent_rect: Rect, horizontal: bool = True,
                 pos_coef: float = 0.5, h_half: float = 6.0,
                 frozen: bool = False, color: str = "#404040"):
        super().__init__()
        self.parent_rect = parent_rect.copy()
        self.horizontal = horizontal
        self.pos_coef = pos_coef
        self.h_half = h_half
        self.frozen = frozen
        self.color = color
        self.comments: list[Satellite] = []

    def add_comment(self, comment: Satellite) -> None:
        comment.parent_id = self.id
        self.comments.append(comment)

    def members(self) -> list[Movable]:
        return list(self.comments)

    def line_coor(self) -> float:
        rc = self.parent_rect
        if self.horizontal:
            return geo.coor_by_coef(rc.top, rc.bottom, self.pos_coef)
        return geo.coor_by_coef(rc.left, rc.right, self.pos_coef)

    def rect_around(self) -> Rect:
        rc = self.parent_rect
        c = self.line_coor()
        if self.horizontal:
            return Rect(rc.left, c - self.h_half, rc.w, 2.0 * self.h_half)
        return Rect(c - self.h_half, rc.top, 2.0 * self.h_half, rc.h)

    def define_cover(self) -> Cover:
        area = self.rect_around()
        if self.frozen:
            return Cover([rect_node(area, behaviour=Behaviour.FROZEN,
                                    cursor=CursorHint.HAND)])
        if self.horizontal:
            edge0 = strip_node((area.left, area.top), (area.right, area.top))
            edge1 = strip_node((area.left, area.bottom), (area.right, area.bottom))
            cursor = CursorHint.SIZE_NS
        else:
            edge0 = strip_node((area.left, area.top), (area.left, area.bottom))
            edge1 = strip_node((area.right, area.top), (area.right, area.bottom))
            cursor = CursorHint.SIZE_WE
        return Cover([edge0, edge1, rect_node(area, cursor=cursor)])

    def set_frozen(self, frozen: bool) -> None:
        self.frozen = frozen
        self.update_cover()

    def _notify_comments(self) -> None:
        area = self.rect_around()
        for comment in self.comments:
            comment.set_parent_rect(area)

    def set_parent_rect(self, rect: Rect) -> None:
        self.parent_rect = rect.copy()
        self._notify_comments()
        self.update_cover()

    def move(self, dx: float, dy: float) -> None:
        rc = self.parent_rect
        if self.horizontal:
            c = self.line_coor() + dy
            self.pos_coef = geo.coef_by_coor(rc.top, rc.bottom, c)
        else:
            c = self.line_coor() + dx
            self.pos_coef = geo.coef_by_coor(rc.left, rc.right, c)
        self._notify_comments()
        self.update_cover()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT or self.frozen:
            return False
        if node_id in (0, 1):
            c = self.line_coor()
            half = abs((p[1] if self.horizontal else p[0]) - c)
            if half < self.MIN_HALF:
                return False
            self.h_half = half
            self._notify_comments()
            self.update_cover()
            return True
        self.move(dx, dy)
        return True

    def basic_points(self) -> list[Point]:
        return self.rect_around().corners()

    def bounds(self) -> Rect:
        return self.rect_around()


class PlotPanelLite(Movable):
    """Three-level chain demo: panel -> scale bars -> comments.

    The panel is a standard fully-resizable rectangle; every geometry
    change flows down the chain through the stored coefficients.
    """

    kind = "plot_panel"

    MIN_SIZE = 40.0

    def __init__(self, rect: Rect, fill: str = "#c8e8f8"):
        super().__init__()
        self.rect = rect.copy()
        self.scales: list[ScaleBar] = []
        self.comments: list[Satellite] = []
        self.fill = fill

    def add_scale(self, scale: ScaleBar) -> None:
        scale.parent_id = self.id
        scale.set_parent_rect(self.rect)
        self.scales.append(scale)

    def add_comment(self, comment: Satellite) -> None:
        comment.parent_id = self.id
        self.comments.append(comment)

    def members(self) -> list[Movable]:
        return [*self.scales, *self.comments]

    def children(self) -> list[Movable]:
        ver = [s for s in self.scales if not s.horizontal]
        hor = [s for s in self.scales if s.horizontal]
        return [*ver, *hor, *self.comments]

    def define_cover(self) -> Cover:
        from .cover import standard_rect_cover
        return standard_rect_cover(self.rect, Resizing.ANY)

    def _inform_related(self) -> None:
        for comment in self.comments:
            comment.set_parent_rect(self.rect)
        for scale in self.scales:
            scale.set_parent_rect(self.rect)

    def move(self, dx: float, dy: float) -> None:
        self.rect.x += dx
        self.rect.y += dy
        self._inform_related()
        self.update_cover()

    def move_node(self, node_id, dx, dy, p, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if node_id == 8:
            self.move(dx, dy)
            return True
        rc = self.rect
        left = node_id in (0, 3, 7)
        right = node_id in (1, 2, 5)
        top = node_id in (0, 1, 4)
        bottom = node_id in (2, 3, 6)
        done = False
        if left and rc.w - dx >= self.MIN_SIZE:
            rc.x += dx
            rc.w -= dx
            done = True
        if right and rc.w + dx >= self.MIN_SIZE:
            rc.w += dx
            done = True
        if top and rc.h - dy >= self.MIN_SIZE:
            rc.y += dy
            rc.h -= dy
            done = True
        if bottom and rc.h + dy >= self.MIN_SIZE:
            rc.h += dy
            done = True
        if done:
            self._inform_related()
            self.update_cover()
        return done

    def basic_points(self) -> list[Point]:
        return self.rect.corners()

    def bounds(self) -> Rect:
        return self.rect.copy()


def set_visibility(obj: Movable, which: str, value: bool) -> None:
    """Flip one of the two visibility flags; containers propagate into
    their members' as-member flags."""
    if which == "direct":
        obj.set_visible(value)
    elif which == "as_member":
        obj.set_visible_as_member(value)
    else:
        raise ValueError(f"unknown visibility flag {which!r}")


def temporary_group(objects: list[Movable], corner0: Point,
                    corner1: Point) -> tuple[ElasticGroup | None, list[Movable]]:
    """Frame two corners and group the widget proxies fully inside.

    Returns (group, members); groups of fewer than two members are not
    formed. The caller rebuilds its object list with the group first.
    """
    frame = Rect(min(corner0[0], corner1[0]), min(corner0[1], corner1[1]),
                 abs(corner1[0] - corner0[0]), abs(corner1[1] - corner0[1]))
    if frame.w <= 0 or frame.h <= 0:
        return None, []
    caught = [obj for obj in objects
              if isinstance(obj, WidgetProxy) and frame.contains_rect(obj.bounds())]
    if len(caught) < 2:
        return None, []
    group = ElasticGroup(caught, back_color="#ffffc0", transparency=0.3)
    return group, caught
