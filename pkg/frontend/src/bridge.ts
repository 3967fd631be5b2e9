/**
 * Typed client for the core's HTTP bridge. The UI never mutates
 * geometry itself: every pointer event and every command goes through
 * here, in order, and the canvas repaints from what comes back.
 */

import type { EventResponse, HintResponse, MenuResponse } from "./protocol.js";

export class BridgeClient {
  constructor(readonly baseUrl: string) {}

  private async post(path: string, body: string): Promise<Response> {
    const res = await fetch(this.baseUrl + path, { method: "POST", body });
    if (!res.ok) {
      const detail = await res.text();
      throw new Error(`${path} failed: ${res.status} ${detail}`);
    }
    return res;
  }

  async loadScene(doc: string): Promise<void> {
    await this.post("/load", doc);
  }

  async saveScene(): Promise<string> {
    const res = await fetch(this.baseUrl + "/doc");
    return res.text();
  }

  /** Forward one trace line (DOWN/MOVE/UP/DCLICK). */
  async sendEvent(line: string): Promise<EventResponse> {
    const res = await this.post("/event", line);
    return res.json() as Promise<EventResponse>;
  }

  /** Replay a whole trace on the current scene (headless path). */
  async sendTrace(trace: string): Promise<{ log: string[] }> {
    const res = await this.post("/trace", trace);
    return res.json() as Promise<{ log: string[] }>;
  }

  async command(verb: string, args: (string | number)[]): Promise<string> {
    const res = await this.post(
      "/command", JSON.stringify({ verb, args: args.map(String) }));
    const data = await res.json() as { result: string };
    return data.result;
  }

  async hint(x: number, y: number): Promise<HintResponse> {
    const res = await fetch(`${this.baseUrl}/hint?x=${x}&y=${y}`);
    return res.json() as Promise<HintResponse>;
  }

  async menu(x: number, y: number): Promise<MenuResponse> {
    const res = await fetch(`${this.baseUrl}/menu?x=${x}&y=${y}`);
    return res.json() as Promise<MenuResponse>;
  }

  async svg(covers: boolean): Promise<string> {
    const res = await fetch(`${this.baseUrl}/svg?covers=${covers ? 1 : 0}`);
    return res.text();
  }
}
