"""Pointer-event trace files.

UTF-8 lines, integer coordinates:

    DOWN x y L|R
    MOVE x y
    UP x y L|R
    DCLICK x y
    CMD <verb> <args...>
    # comment

WARP records appear only in output logs, never in input traces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..engine import MouseButton

_BUTTONS = {"L": MouseButton.LEFT, "R": MouseButton.RIGHT}
_BUTTON_NAMES = {MouseButton.LEFT: "L", MouseButton.RIGHT: "R"}


@dataclass(frozen=True)
class TraceEvent:
    kind: str                    # down | move | up | dclick | cmd
    x: int = 0
    y: int = 0
    button: MouseButton | None = None
    command: tuple[str, ...] = field(default_factory=tuple)


def parse_trace(text: str) -> list[TraceEvent]:
    events: list[TraceEvent] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        word = parts[0].upper()
        try:
            if word == "DOWN":
                events.append(TraceEvent("down", int(parts[1]), int(parts[2]),
                                         _BUTTONS[parts[3].upper()]))
            elif word == "MOVE":
                events.append(TraceEvent("move", int(parts[1]), int(parts[2])))
            elif word == "UP":
                events.append(TraceEvent("up", int(parts[1]), int(parts[2]),
                                         _BUTTONS[parts[3].upper()]))
            elif word == "DCLICK":
                events.append(TraceEvent("dclick", int(parts[1]), int(parts[2])))
            elif word == "CMD":
                events.append(TraceEvent("cmd", command=tuple(parts[1:])))
            else:
                raise ValueError(f"unknown event {word!r}")
        except (IndexError, KeyError, ValueError) as exc:
            raise ValueError(f"trace line {lineno}: {raw!r}: {exc}") from exc
    return events


def format_event(event: TraceEvent) -> str:
    if event.kind == "down":
        return f"DOWN {event.x} {event.y} {_BUTTON_NAMES[event.button]}"
    if event.kind == "move":
        return f"MOVE {event.x} {event.y}"
    if event.kind == "up":
        return f"UP {event.x} {event.y} {_BUTTON_NAMES[event.button]}"
    if event.kind == "dclick":
        return f"DCLICK {event.x} {event.y}"
    if event.kind == "cmd":
        return "CMD " + " ".join(event.command)
    raise ValueError(f"unknown event kind {event.kind!r}")


def format_trace(events: list[TraceEvent]) -> str:
    return "\n".join(format_event(e) for e in events) + "\n"
