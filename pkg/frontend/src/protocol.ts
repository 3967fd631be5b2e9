/**
 * Pure protocol helpers shared by the app and the tests: trace-line
 * construction, click classification, and the cursor-token mapping.
 * Nothing in here touches the DOM or the network.
 */

export type Button = "L" | "R";

export interface HintResponse {
  cursor: string;
  id: number;
}

export interface MenuResponse {
  id: number;
  root: number;
  commands: string[];
}

export interface EventResponse {
  log: string[];
  warped: [number, number] | null;
}

export const CLICK_THRESHOLD = 3;

/** Core cursor tokens to CSS cursors. */
const CURSOR_MAP: Record<string, string> = {
  default: "default",
  hand: "pointer",
  size_all: "move",
  size_ns: "ns-resize",
  size_we: "ew-resize",
};

export function cssCursorFor(token: string): string {
  return CURSOR_MAP[token] ?? "default";
}

export interface ElementLike {
  style: { cursor: string };
}

/** Write the mapped cursor onto an element (the canvas in the app). */
export function applyCursor(el: ElementLike, token: string): void {
  el.style.cursor = cssCursorFor(token);
}

export function downLine(x: number, y: number, button: Button): string {
  return `DOWN ${Math.round(x)} ${Math.round(y)} ${button}`;
}

export function moveLine(x: number, y: number): string {
  return `MOVE ${Math.round(x)} ${Math.round(y)}`;
}

export function upLine(x: number, y: number, button: Button): string {
  return `UP ${Math.round(x)} ${Math.round(y)} ${button}`;
}

export function dclickLine(x: number, y: number): string {
  return `DCLICK ${Math.round(x)} ${Math.round(y)}`;
}

export function commandLine(verb: string, args: (string | number)[]): string {
  return ["CMD", verb, ...args.map(String)].join(" ");
}

export function isClick(
  downX: number, downY: number, upX: number, upY: number,
): boolean {
  const dx = upX - downX;
  const dy = upY - downY;
  return Math.hypot(dx, dy) <= CLICK_THRESHOLD;
}

/** 0 = left button, 2 = right button; anything else is ignored. */
export function buttonFromPointerEvent(domButton: number): Button | null {
  if (domButton === 0) return "L";
  if (domButton === 2) return "R";
  return null;
}
