import { HttpClient, ServiceError } from "./api.js";
import { computeRedZones, zoneGradient } from "./redzones.js";
import { renderScene, sceneViewport } from "./render.js";
import { StudioState, StudioSnapshot } from "./state.js";
import { screenToWorld, worldToScreen } from "./transform.js";
import { CurveJson, SweepEntry, ValidatePayload } from "./types.js";

const H_MIN = -3.3;
const H_MAX = 3.3;
const SWEEP_POINTS = 512;

const DEFAULT_CURVE: CurveJson = {
    family: { kind: "trig" },
    n: 3,
    h: 0.2,
    interval: [0.1, 1.3],
    controls: [
        [0.0, 0.0],
        [0.4, 1.0],
        [0.9, -0.2],
        [1.2, 0.6],
    ],
};

export class Studio {
    private state: StudioState;
    private api: HttpClient;
    private canvas: HTMLElement;
    private status: HTMLElement;
    private slider: HTMLInputElement;
    private dragIndex: number | null = null;
    private sweepCache = new Map<string, SweepEntry[]>();
    private snapshot: StudioSnapshot | null = null;

    constructor(root: HTMLElement, baseUrl: string) {
        this.api = new HttpClient(baseUrl);
        this.state = new StudioState(this.api, DEFAULT_CURVE);
        root.innerHTML = `
          <div class="toolbar">
            <select id="family">
              <option value="trig" selected>trig</option>
              <option value="polynomial">polynomial</option>
              <option value="hyperbolic">hyperbolic</option>
              <option value="trig_discrete">trig_discrete (d=0.5)</option>
              <option value="hyperbolic_discrete">hyperbolic_discrete (d=0.5)</option>
            </select>
            <label>h <input id="h" type="range" min="${H_MIN}" max="${H_MAX}" step="0.001" value="0.2"></label>
            <span id="hval">0.200</span>
            <button id="subdivide">split at midpoint</button>
            <label>depth <input id="depth" type="range" min="0" max="6" step="1" value="0"></label>
            <button id="elevate">elevate</button>
            <button id="interp">interpolation mode</button>
          </div>
          <div id="status"></div>
          <div id="canvas"></div>`;
        this.canvas = root.querySelector("#canvas")!;
        this.status = root.querySelector("#status")!;
        this.slider = root.querySelector("#h")!;
        this.wire(root);
    }

    private show(snapshot: StudioSnapshot) {
        this.snapshot = snapshot;
        this.canvas.innerHTML = renderScene(snapshot.scene);
        this.status.textContent = snapshot.valid
            ? ""
            : snapshot.guards.map((g) => g.message).join(" | ");
        this.attachDragHandlers();
    }

    private run(action: Promise<StudioSnapshot>) {
        action
            .then((snap) => this.show(snap))
            .catch((err) => {
                this.status.textContent =
                    err instanceof ServiceError ? err.message : String(err);
            });
    }

    private wire(root: HTMLElement) {
        const familySelect = root.querySelector<HTMLSelectElement>("#family")!;
        familySelect.addEventListener("change", () => {
            const kind = familySelect.value;
            const family = kind.endsWith("_discrete")
                ? { kind, d: 0.5 }
                : { kind };
            this.run(this.state.setFamily(family));
            void this.paintRedZones(family, DEFAULT_CURVE.n);
        });
        const hval = root.querySelector<HTMLElement>("#hval")!;
        this.slider.addEventListener("input", () => {
            const h = parseFloat(this.slider.value);
            hval.textContent = h.toFixed(3);
            this.run(this.state.setShift(h));
        });
        root.querySelector("#subdivide")!.addEventListener("click", () => {
            const snap = this.snapshot;
            if (!snap) return;
            const [a, b] = snap.curve.interval;
            this.run(this.state.subdivideAt((a + b) / 2));
        });
        const depth = root.querySelector<HTMLInputElement>("#depth")!;
        depth.addEventListener("input", () => {
            this.run(this.state.midpointDepth(parseInt(depth.value, 10)));
        });
        root.querySelector("#elevate")!.addEventListener("click", () => {
            this.run(this.state.elevate());
        });
        root.querySelector("#interp")!.addEventListener("click", () => {
            this.run(this.state.enterInterpolationMode());
        });
    }

    private attachDragHandlers() {
        const svg = this.canvas.querySelector("svg");
        if (!svg) return;
        svg.querySelectorAll<SVGCircleElement>("circle.control").forEach((circle) => {
            circle.addEventListener("pointerdown", (ev) => {
                this.dragIndex = parseInt(circle.dataset.index ?? "0", 10);
                ev.preventDefault();
            });
        });
        svg.addEventListener("pointermove", (ev) => {
            if (this.dragIndex === null || !this.snapshot) return;
            const rect = svg.getBoundingClientRect();
            const sx = ((ev.clientX - rect.left) / rect.width) * 800;
            const sy = ((ev.clientY - rect.top) / rect.height) * 600;
            const vp = sceneViewport(this.snapshot.scene);
            const world = screenToWorld(vp, [sx, sy]);
            this.run(this.state.dragControl(this.dragIndex, world));
        });
        svg.addEventListener("pointerup", () => {
            this.dragIndex = null;
        });
    }

    private async paintRedZones(family: CurveJson["family"], n: number) {
        const key = `${JSON.stringify(family)}|${n}`;
        let sweep = this.sweepCache.get(key);
        if (!sweep) {
            sweep = [];
            for (let i = 0; i < SWEEP_POINTS; i++) {
                const h = H_MIN + (i * (H_MAX - H_MIN)) / (SWEEP_POINTS - 1);
                const payload = await this.api.post<ValidatePayload>("/validate", {
                    family,
                    n,
                    h,
                });
                sweep.push({
                    h,
                    verdict: payload.verdict,
                    dependence_margin: payload.dependence_margin,
                });
            }
            this.sweepCache.set(key, sweep);
        }
        const zones = computeRedZones(sweep);
        this.slider.style.background = zoneGradient(zones, H_MIN, H_MAX);
    }

    async start() {
        this.run(this.state.refresh());
        await this.paintRedZones(DEFAULT_CURVE.family, DEFAULT_CURVE.n);
    }
}

export { worldToScreen };
