"""Scene assembly: z-ordered object list, queue rebuilding, lookups, and
the command vocabulary the context menus and the CLI share.

A scene is single-threaded; parallelism happens across processes (the
CLI replays independent scenes side by side), never inside one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .. import geometry as geo
from ..engine import ClippingLevel, Engine
from ..geometry import Point, Rect
from ..groups import (DominantGroup, ElasticGroup, WidgetProxy,
                      set_visibility, temporary_group)
from ..shapes.base import Movable, ensure_id_floor

CLICK_THRESHOLD = 3.0  # px between Down and Up that still counts as a click


class ZAction(enum.Enum):
    TOP = "top"
    BOTTOM = "bottom"
    UP = "up"
    DOWN = "down"


class ClickKind(enum.Enum):
    DRAG = "drag"
    LEFT_CLICK = "left_click"
    MENU_REQUEST = "menu_request"


@dataclass(frozen=True)
class ClickOutcome:
    kind: ClickKind
    object_id: int = 0  # 0 = empty space (menu on background)


def classify_click(down: Point, up: Point, button, released_id: int | None):
    """Less than the threshold apart: a click; otherwise a plain drag."""
    from ..engine import MouseButton
    if geo.distance(down, up) > CLICK_THRESHOLD:
        return ClickOutcome(ClickKind.DRAG, released_id or 0)
    if button is MouseButton.RIGHT:
        return ClickOutcome(ClickKind.MENU_REQUEST, released_id or 0)
    return ClickOutcome(ClickKind.LEFT_CLICK, released_id or 0)


def _is_widget_like(obj: Movable) -> bool:
    return isinstance(obj, (WidgetProxy, DominantGroup, ElasticGroup))


class Scene:
    """Ordered top-level objects (index 0 = topmost) plus their engine.

    The engine queue is always rebuilt from the object list through
    renew(); drawing order is defined as the queue reversed.
    """

    def __init__(self, client: Rect):
        self.client = client.copy()
        self.objects: list[Movable] = []
        self.engine = Engine(clip_rect=self.client)
        self.default_clipping = ClippingLevel.VISUAL

    # -- queue ------------------------------------------------------------------

    def add(self, obj: Movable, topmost: bool = True) -> Movable:
        if topmost:
            self.objects.insert(0, obj)
        else:
            self.objects.append(obj)
        self.renew()
        return obj

    def renew(self) -> None:
        """Rebuild the engine queue: widget-like objects precede graphics,
        children precede parents, list order is pick order."""
        self.engine.clear()
        widgets = [o for o in self.objects if _is_widget_like(o)]
        graphics = [o for o in self.objects if not _is_widget_like(o)]
        for obj in widgets + graphics:
            obj.into_mover(self.engine, len(self.engine))

    def remove(self, object_id: int) -> bool:
        for i, obj in enumerate(self.objects):
            if obj.id == object_id:
                del self.objects[i]
                self.renew()
                return True
        return False

    # -- lookup --------------------------------------------------------------------

    def all_objects(self) -> list[Movable]:
        found: list[Movable] = []

        def walk(obj: Movable) -> None:
            found.append(obj)
            for m in obj.members():
                walk(m)

        for obj in self.objects:
            walk(obj)
        return found

    def find(self, object_id: int) -> Movable | None:
        for obj in self.all_objects():
            if obj.id == object_id:
                return obj
        return None

    def parent_chain(self, object_id: int) -> list[int]:
        """Ids from the object up to its root, following parent links."""
        by_id = {o.id: o for o in self.all_objects()}
        chain: list[int] = []
        current = by_id.get(object_id)
        while current is not None:
            chain.append(current.id)
            current = by_id.get(current.parent_id)
        return chain

    def root_of(self, obj: Movable) -> Movable:
        chain = self.parent_chain(obj.id)
        return self.find(chain[-1]) if chain else obj

    def top_level_index(self, object_id: int) -> int | None:
        root_id = self.parent_chain(object_id)[-1] if \
            self.parent_chain(object_id) else object_id
        for i, obj in enumerate(self.objects):
            if obj.id == root_id:
                return i
        return None

    # -- z-order -------------------------------------------------------------------

    def z_order(self, object_id: int, action: ZAction) -> bool:
        i = self.top_level_index(object_id)
        if i is None:
            return False
        obj = self.objects[i]
        if action is ZAction.TOP:
            self.objects.insert(0, self.objects.pop(i))
        elif action is ZAction.BOTTOM:
            self.objects.append(self.objects.pop(i))
        elif action is ZAction.UP and i > 0:
            self.objects[i - 1], self.objects[i] = obj, self.objects[i - 1]
        elif action is ZAction.DOWN and i < len(self.objects) - 1:
            self.objects[i + 1], self.objects[i] = obj, self.objects[i + 1]
        self.renew()
        return True

    # -- group upkeep -----------------------------------------------------------------

    def update_groups(self) -> None:
        for obj in self.all_objects():
            if isinstance(obj, ElasticGroup):
                obj.update()

    # -- command vocabulary --------------------------------------------------------------

    def command(self, verb: str, args: tuple[str, ...]) -> str:
        """Menu-driven actions as headless commands; returns OK or ERR ..."""
        try:
            if verb in ("top", "bottom", "up", "down"):
                if not self.z_order(int(args[0]), ZAction(verb)):
                    return f"ERR no object {args[0]}"
                return "OK"
            if verb in ("hide", "show"):
                obj = self.find(int(args[0]))
                if obj is None:
                    return f"ERR no object {args[0]}"
                set_visibility(obj, "direct", verb == "show")
                self.update_groups()
                self.renew()
                return "OK"
            if verb in ("hide-member", "show-member"):
                obj = self.find(int(args[0]))
                if obj is None:
                    return f"ERR no object {args[0]}"
                set_visibility(obj, "as_member", verb == "show-member")
                self.update_groups()
                self.renew()
                return "OK"
            if verb == "visible-all":
                obj = self.find(int(args[0]))
                if obj is None:
                    return f"ERR no object {args[0]}"
                obj.set_visible_all()
                self.update_groups()
                self.renew()
                return "OK"
            if verb in ("fix", "unfix"):
                obj = self.find(int(args[0]))
                if obj is None:
                    return f"ERR no object {args[0]}"
                movable = verb == "unfix"
                if isinstance(obj, WidgetProxy):
                    obj.movable = movable
                    obj.update_cover()
                elif isinstance(obj, ElasticGroup):
                    obj.elements_movable = movable
                else:
                    return f"ERR cannot fix kind {obj.kind}"
                self.renew()
                return "OK"
            if verb == "switch-dominant":
                group = self.find(int(args[0]))
                proxy = self.find(int(args[1]))
                if not isinstance(group, DominantGroup) or proxy is None:
                    return "ERR bad switch-dominant target"
                rebuilt = group.switch_dominant(proxy)
                if rebuilt is None:
                    return "ERR not a subordinate"
                rebuilt.show_prompts = group.show_prompts
                rebuilt.id = group.id          # the group keeps its identity
                rebuilt.parent_id = group.parent_id
                for sub in rebuilt.subordinates:
                    sub.parent_id = rebuilt.id
                for i, obj in enumerate(self.objects):
                    if obj is group:
                        self.objects[i] = rebuilt
                        break
                self.renew()
                return "OK"
            if verb == "recolor":
                obj = self.find(int(args[0]))
                if obj is None:
                    return f"ERR no object {args[0]}"
                if isinstance(obj, ElasticGroup):
                    obj.back_color = args[1]
                    return "OK"
                for attr in ("fill", "stroke", "color"):
                    if hasattr(obj, attr):
                        setattr(obj, attr, args[1])
                        return "OK"
                return f"ERR kind {obj.kind} has no color"
            if verb == "group":
                corners = [float(v) for v in args]
                # the new id derives from the scene so replay is reproducible
                new_id = max((o.id for o in self.all_objects()), default=0) + 1
                group, members = temporary_group(
                    self.objects, (corners[0], corners[1]),
                    (corners[2], corners[3]))
                if group is None:
                    return "ERR no group formed"
                group.id = new_id
                for member in group.elements:
                    member.parent_id = new_id
                ensure_id_floor(new_id)
                self.objects = [o for o in self.objects if o not in members]
                self.objects.insert(0, group)
                self.renew()
                return "OK"
            return f"ERR unknown command {verb}"
        except (ValueError, IndexError) as exc:
            return f"ERR {exc}"
