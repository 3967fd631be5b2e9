"""Deterministic trace replay.

Feeds pointer events through the engine exactly as an interactive host
would, wiring the per-shape begin/release hooks, the click rules, the
disappearance and plug-fit checks, and the group upkeep. Replaying the
same trace on the same scene twice produces identical scenes and logs.

Warp handling: a warp is authoritative. The offset between the warp
target and the trace point that produced it is applied to every later
MOVE/UP of the gesture, which reproduces the adhered-cursor loop without
a real cursor.
"""

from __future__ import annotations

from .. import geometry as geo
from ..engine import ClippingLevel, MouseButton
from ..geometry import Point
from ..shapes import PerforatedBoard, Plug, plug_fits
from ..constraints import BoundedSlider, SliderPanel, slider_limits_at_catch
from .scene import ClickKind, Scene, ZAction, classify_click
from .trace import TraceEvent


def _fnum(x: float) -> str:
    i = int(x)
    return str(i) if x == i else repr(x)


def _fpt(p: Point) -> str:
    return f"{_fnum(p[0])} {_fnum(p[1])}"


class _Replayer:
    def __init__(self, scene: Scene):
        self.scene = scene
        self.log: list[str] = []
        self.down_point: Point | None = None
        self.down_button: MouseButton | None = None
        self.warp_offset = (0.0, 0.0)
        self._warp_target: Point | None = None
        self._trace_point: Point | None = None
        scene.engine.warp_sink = self._on_warp

    # -- warp channel -------------------------------------------------------

    def _on_warp(self, p: Point) -> None:
        self._warp_target = p
        self.log.append(f"WARP {_fpt(p)}")

    def _absorb_warp(self) -> None:
        if self._warp_target is not None and self._trace_point is not None:
            self.warp_offset = (self._warp_target[0] - self._trace_point[0],
                                self._warp_target[1] - self._trace_point[1])
        self._warp_target = None

    def _effective(self, x: int, y: int) -> Point:
        return (x + self.warp_offset[0], y + self.warp_offset[1])

    # -- events -------------------------------------------------------------

    def handle(self, event: TraceEvent) -> None:
        if event.kind == "down":
            self._down(event)
        elif event.kind == "move":
            self._move(event)
        elif event.kind == "up":
            self._up(event)
        elif event.kind == "dclick":
            # double clicks are routed to the host; the core only reports
            info = self.scene.engine.point_info((event.x, event.y))
            target = 0
            if info.object_index >= 0:
                target = self.scene.engine.queue[info.object_index].id
            self.log.append(f"DCLICK {event.x} {event.y} -> id={target}")
        elif event.kind == "cmd":
            result = self.scene.command(event.command[0],
                                        tuple(event.command[1:]))
            self.log.append("CMD " + " ".join(event.command) + f" -> {result}")
        self.scene.update_groups()

    def _down(self, event: TraceEvent) -> None:
        engine = self.scene.engine
        p = (float(event.x), float(event.y))
        self.warp_offset = (0.0, 0.0)
        self.down_point = p
        self.down_button = event.button
        caught = engine.catch(p, event.button)
        if not caught:
            self.log.append(f"DOWN {event.x} {event.y} "
                            f"{'L' if event.button is MouseButton.LEFT else 'R'}"
                            " -> MISS")
            return
        g = engine.gesture
        obj = engine.queue[g.object_index]
        if isinstance(obj, Plug):
            engine.set_clipping(ClippingLevel.UNSAFE)
        if isinstance(obj, BoundedSlider) and obj.order_preserving:
            panel = self.scene.find(obj.parent_id)
            if isinstance(panel, SliderPanel):
                slider_limits_at_catch(obj, panel.siblings_of(obj), panel.rect)
        obj.begin_gesture(engine, p, event.button, g.node_id, g.node_shape)
        self.log.append(
            f"DOWN {event.x} {event.y} "
            f"{'L' if event.button is MouseButton.LEFT else 'R'}"
            f" -> CATCH id={obj.id} node={g.node_id}"
            f" shape={g.node_shape.value}{'' if g.movable else ' frozen'}")

    def _move(self, event: TraceEvent) -> None:
        engine = self.scene.engine
        self._trace_point = (float(event.x), float(event.y))
        p = self._effective(event.x, event.y)
        accepted = engine.drag(p)
        self._absorb_warp()
        if engine.gesture is None:
            self.log.append(f"MOVE {event.x} {event.y} -> IDLE")
            return
        eff = engine.gesture.last_point
        self.log.append(f"MOVE {event.x} {event.y} -> EFF {_fpt(eff)} "
                        f"{'OK' if accepted else 'REJECT'}")

    def _up(self, event: TraceEvent) -> None:
        engine = self.scene.engine
        self._trace_point = (float(event.x), float(event.y))
        p = self._effective(event.x, event.y)
        descriptor = engine.release()
        button = "L" if event.button is MouseButton.LEFT else "R"
        if descriptor is None:
            outcome = classify_click(self.down_point or p, p, event.button, None)
            if outcome.kind is ClickKind.MENU_REQUEST:
                self.log.append(f"UP {event.x} {event.y} {button} -> MENU empty")
            else:
                self.log.append(f"UP {event.x} {event.y} {button} -> IDLE")
            return
        index, node_id, node_shape = descriptor
        obj = engine.queue[index]
        engine.set_clipping(self.scene.default_clipping)
        obj.on_release(node_id, node_shape)
        root = self.scene.root_of(obj)
        if root is not obj and hasattr(root, "after_member_release"):
            root.after_member_release(obj)

        outcome = classify_click(self.down_point or p, p, event.button, obj.id)
        note = ""
        if outcome.kind is ClickKind.LEFT_CLICK:
            note = self._left_click(obj, node_id)
        elif outcome.kind is ClickKind.MENU_REQUEST:
            note = f" MENU id={obj.id}"
        if obj.should_disappear(node_id, node_shape):
            self.scene.remove(root.id)
            note += " DELETED"
        elif isinstance(obj, Plug):
            note += self._plug_release(obj)
        self.log.append(f"UP {event.x} {event.y} {button} -> "
                        f"RELEASE id={obj.id} node={node_id}"
                        f" shape={node_shape.value}{note}")

    def _left_click(self, obj, node_id: int) -> str:
        # a click pops a top-level object, but not via its resize nodes
        if self.scene.top_level_index(obj.id) is None:
            return " CLICK"
        if obj not in self.scene.objects:
            return " CLICK"
        if not self._pops(obj, node_id):
            return " CLICK"
        self.scene.z_order(obj.id, ZAction.TOP)
        return " CLICK POP"

    @staticmethod
    def _pops(obj, node_id: int) -> bool:
        from ..groups import LinkedRects, WidgetProxy
        if isinstance(obj, LinkedRects):
            return True
        if isinstance(obj, WidgetProxy):
            return node_id >= 8
        return node_id == len(obj.cover) - 1

    def _plug_release(self, plug: Plug) -> str:
        # plugs dropped beyond the client area are garbage-collected
        if not plug.bounds().intersects(self.scene.client):
            self.scene.remove(plug.id)
            return " GONE"
        for board in self.scene.objects:
            if not isinstance(board, PerforatedBoard):
                continue
            for hole in list(board.holes):
                if plug_fits(hole, plug):
                    board.remove_hole(hole)
                    self.scene.remove(plug.id)
                    return " FITTED"
        return ""


def replay(scene: Scene, events: list[TraceEvent]) -> list[str]:
    """Run the trace against the scene; returns the gesture log lines."""
    player = _Replayer(scene)
    for event in events:
        player.handle(event)
    return player.log
