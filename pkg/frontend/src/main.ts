import { CanvasApp } from "./app.js";
import { BridgeClient } from "./bridge.js";

const DEFAULT_BRIDGE = "http://127.0.0.1:8787";

async function boot(): Promise<void> {
  const params = new URLSearchParams(location.search);
  const bridge = new BridgeClient(params.get("bridge") ?? DEFAULT_BRIDGE);
  const canvas = document.getElementById("scene") as HTMLCanvasElement;
  const status = document.getElementById("status")!;
  const app = new CanvasApp(bridge, canvas, status);
  app.attach();

  document.getElementById("save")!.addEventListener("click", () => {
    void app.saveSceneFile();
  });
  document.getElementById("save-trace")!.addEventListener("click", () => {
    app.saveTraceFile();
  });
  const coversBox = document.getElementById("covers") as HTMLInputElement;
  coversBox.addEventListener("change", () => app.setCovers(coversBox.checked));
  const fileInput = document.getElementById("load") as HTMLInputElement;
  fileInput.addEventListener("change", async () => {
    const file = fileInput.files?.[0];
    if (file) {
      await app.loadSceneText(await file.text());
    }
  });

  const restored = await app.restoreAutosave();
  status.textContent = restored ? "autosaved scene restored" : "connected";
  await app.repaint();
}

void boot().catch((err) => {
  document.getElementById("status")!.textContent =
    `bridge unreachable: ${err.message} (movables serve --port 8787)`;
});
