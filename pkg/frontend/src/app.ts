/**
 * The canvas view binding: a pure event pump over the core bridge.
 *
 * Every pointer event is forwarded before any local handling; painting
 * always happens from the core's own render (SVG drawn onto the
 * canvas), so hit-testing and geometry stay 100% core-owned. The whole
 * session is recorded as a trace for headless replay.
 */

import { BridgeClient } from "./bridge.js";
import {
  applyCursor, buttonFromPointerEvent, commandLine, dclickLine, downLine,
  isClick, moveLine, upLine,
} from "./protocol.js";

const AUTOSAVE_KEY = "movables.autosave";

interface GestureTracking {
  button: "L" | "R";
  downX: number;
  downY: number;
}

export class CanvasApp {
  readonly trace: string[] = [];
  private gesture: GestureTracking | null = null;
  private covers = false;
  private ghostCursor: [number, number] | null = null;
  private menuEl: HTMLElement | null = null;

  constructor(
    private readonly bridge: BridgeClient,
    private readonly canvas: HTMLCanvasElement,
    private readonly status: HTMLElement,
  ) {}

  attach(): void {
    const c = this.canvas;
    c.addEventListener("pointerdown", (ev) => this.onDown(ev));
    c.addEventListener("pointermove", (ev) => this.onMove(ev));
    c.addEventListener("pointerup", (ev) => this.onUp(ev));
    c.addEventListener("dblclick", (ev) => this.onDoubleClick(ev));
    c.addEventListener("contextmenu", (ev) => ev.preventDefault());
    window.addEventListener("beforeunload", () => this.autosave());
  }

  private toScene(ev: MouseEvent): [number, number] {
    const rect = this.canvas.getBoundingClientRect();
    return [ev.clientX - rect.left, ev.clientY - rect.top];
  }

  // -- pointer pump ---------------------------------------------------------

  private async onDown(ev: PointerEvent): Promise<void> {
    this.closeMenu();
    const button = buttonFromPointerEvent(ev.button);
    if (!button) return;
    ev.preventDefault();
    this.canvas.setPointerCapture(ev.pointerId);
    const [x, y] = this.toScene(ev);
    this.gesture = { button, downX: x, downY: y };
    await this.forward(downLine(x, y, button));
  }

  private async onMove(ev: PointerEvent): Promise<void> {
    const [x, y] = this.toScene(ev);
    if (!this.gesture) {
      const hint = await this.bridge.hint(x, y);
      applyCursor(this.canvas, hint.cursor);
      return;
    }
    await this.forward(moveLine(x, y));
  }

  private async onUp(ev: PointerEvent): Promise<void> {
    const button = buttonFromPointerEvent(ev.button);
    if (!button || !this.gesture) return;
    const [x, y] = this.toScene(ev);
    const g = this.gesture;
    this.gesture = null;
    this.ghostCursor = null;
    await this.forward(upLine(x, y, button));
    if (button === "R" && isClick(g.downX, g.downY, x, y)) {
      await this.openMenu(x, y);
    }
  }

  private async onDoubleClick(ev: MouseEvent): Promise<void> {
    const [x, y] = this.toScene(ev);
    await this.forward(dclickLine(x, y));
  }

  /** Forward one event line, record it, absorb warps, repaint. */
  private async forward(line: string): Promise<void> {
    this.trace.push(line);
    const res = await this.bridge.sendEvent(line);
    if (res.warped) {
      // browsers cannot relocate the pointer: show the adhered point and
      // flag the divergence in the session log instead
      this.ghostCursor = res.warped;
      this.status.textContent =
        `adhered at ${res.warped[0]},${res.warped[1]} (cursor detached)`;
    }
    await this.repaint();
  }

  // -- painting -------------------------------------------------------------

  async repaint(): Promise<void> {
    const svg = await this.bridge.svg(this.covers);
    const blob = new Blob([svg], { type: "image/svg+xml" });
    const url = URL.createObjectURL(blob);
    try {
      const image = new Image();
      await new Promise<void>((resolve, reject) => {
        image.onload = () => resolve();
        image.onerror = () => reject(new Error("svg render failed"));
        image.src = url;
      });
      const ctx = this.canvas.getContext("2d")!;
      ctx.clearRect(0, 0, this.canvas.width, this.canvas.height);
      ctx.drawImage(image, 0, 0);
      if (this.ghostCursor) {
        const [gx, gy] = this.ghostCursor;
        ctx.beginPath();
        ctx.arc(gx, gy, 5, 0, Math.PI * 2);
        ctx.strokeStyle = "#d02020";
        ctx.stroke();
      }
    } finally {
      URL.revokeObjectURL(url);
    }
  }

  setCovers(on: boolean): void {
    this.covers = on;
    void this.repaint();
  }

  // -- menus ------------------------------------------------------------------

  private async openMenu(x: number, y: number): Promise<void> {
    const menu = await this.bridge.menu(x, y);
    if (!menu.commands.length) return;
    const el = document.createElement("div");
    el.className = "menu";
    el.style.left = `${x + 8}px`;
    el.style.top = `${y + 8}px`;
    for (const verb of menu.commands) {
      const item = document.createElement("button");
      item.textContent = verb;
      item.addEventListener("click", () => {
        void this.runCommand(verb, menu);
        this.closeMenu();
      });
      el.appendChild(item);
    }
    this.canvas.parentElement!.appendChild(el);
    this.menuEl = el;
  }

  private closeMenu(): void {
    this.menuEl?.remove();
    this.menuEl = null;
  }

  async runCommand(verb: string, target: { id: number; root: number }):
      Promise<void> {
    // commands run on the root object; switch-dominant names both
    const args = verb === "switch-dominant"
      ? [target.root, target.id]
      : verb === "recolor"
        ? [target.root, randomColor()]
        : [target.root];
    this.trace.push(commandLine(verb, args));
    const result = await this.bridge.command(verb, args);
    this.status.textContent = `${verb}: ${result}`;
    await this.repaint();
  }

  // -- persistence ----------------------------------------------------------------

  async saveSceneFile(): Promise<void> {
    download("scene.json", await this.bridge.saveScene());
  }

  saveTraceFile(): void {
    download("session.trace", this.trace.join("\n") + "\n");
  }

  async loadSceneText(doc: string): Promise<void> {
    try {
      await this.bridge.loadScene(doc);
      this.trace.length = 0;
      this.status.textContent = "scene loaded";
    } catch (err) {
      this.status.textContent = `load failed: ${(err as Error).message}`;
      return; // the current scene stays untouched
    }
    await this.repaint();
  }

  private autosave(): void {
    // fire-and-forget: grab the latest doc we can and stash it locally
    void this.bridge.saveScene().then((doc) => {
      localStorage.setItem(AUTOSAVE_KEY, doc);
    });
  }

  async restoreAutosave(): Promise<boolean> {
    const doc = localStorage.getItem(AUTOSAVE_KEY);
    if (!doc) return false;
    await this.loadSceneText(doc);
    return true;
  }
}

function download(name: string, text: string): void {
  const blob = new Blob([text], { type: "text/plain" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = name;
  a.click();
  URL.revokeObjectURL(a.href);
}

function randomColor(): string {
  const hue = Math.floor(Math.random() * 360);
  return `hsl(${hue} 60% 60%)`;
}
