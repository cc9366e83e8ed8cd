import {
    ApiClient,
    CurveJson,
    GuardJson,
    SamplePayload,
    ValidatePayload,
} from "./types.js";
import { Scene } from "./render.js";

export const SAMPLES = 256;

export interface StudioSnapshot {
    scene: Scene;
    valid: boolean;
    guards: GuardJson[];
    curve: CurveJson;
    interpolation: boolean;
}

// State machine behind the studio: every mutation revalidates before
// re-rendering; stale in-flight renders are discarded (last write wins);
// an invalid state keeps showing the previous valid curve, dimmed, with
// the service's guard list verbatim.
export class StudioState {
    private curve: CurveJson;
    private lastValidSample: SamplePayload | null = null;
    private lastValidCurve: CurveJson | null = null;
    private guards: GuardJson[] = [];
    private valid = true;
    private seq = 0;
    private interpolation = false;
    private markers: number[][] | null = null;
    overlays: number[][][] = [];

    constructor(private api: ApiClient, initial: CurveJson) {
        this.curve = structuredClone(initial);
    }

    snapshot(): StudioSnapshot {
        const sample = this.lastValidSample;
        const curveForScene = this.lastValidCurve ?? this.curve;
        const scene: Scene = {
            samplePoints: sample ? sample.points : [],
            controls: curveForScene.controls,
            markers: this.interpolation && this.markers ? this.markers : undefined,
            overlays: this.overlays.length ? this.overlays : undefined,
            dimmed: !this.valid,
            guards: this.valid ? [] : this.guards,
        };
        return {
            scene,
            valid: this.valid,
            guards: this.guards,
            curve: structuredClone(this.curve),
            interpolation: this.interpolation,
        };
    }

    private validateBody() {
        return {
            family: this.curve.family,
            n: this.curve.n,
            h: this.curve.h,
            a: this.curve.interval[0],
            b: this.curve.interval[1],
        };
    }

    // Revalidate, then (if valid) fetch a fresh sample; stale responses
    // are dropped by sequence number.
    async refresh(): Promise<StudioSnapshot> {
        const ticket = ++this.seq;
        const validation = await this.api.post<ValidatePayload>(
            "/validate",
            this.validateBody(),
        );
        if (ticket !== this.seq) return this.snapshot();
        if (!validation.valid) {
            this.valid = false;
            this.guards = validation.guards;
            return this.snapshot();
        }
        const sample = await this.api.post<SamplePayload>("/curve/sample", {
            curve: this.curve,
            samples: SAMPLES,
        });
        if (ticket !== this.seq) return this.snapshot();
        this.valid = true;
        this.guards = [];
        this.lastValidSample = sample;
        this.lastValidCurve = structuredClone(this.curve);
        return this.snapshot();
    }

    async dragControl(index: number, position: [number, number]): Promise<StudioSnapshot> {
        this.curve.controls[index] = [position[0], position[1]];
        if (this.interpolation && this.markers) {
            this.markers[index] = [position[0], position[1]];
        }
        return this.refresh();
    }

    async setShift(h: number): Promise<StudioSnapshot> {
        this.curve.h = h;
        return this.refresh();
    }

    async setFamily(family: CurveJson["family"]): Promise<StudioSnapshot> {
        this.curve.family = family;
        return this.refresh();
    }

    // Interpolation mode: rebuild the curve through the current control
    // positions over [a, a-nh] (the service does the construction).
    async enterInterpolationMode(): Promise<StudioSnapshot> {
        const points = this.curve.controls.map((c) => [...c]);
        const built = await this.api.post<{ curve: CurveJson }>(
            "/curve/interpolate",
            {
                family: this.curve.family,
                n: this.curve.n,
                h: this.curve.h,
                a: this.curve.interval[0],
                points,
            },
        );
        this.curve = built.curve;
        this.interpolation = true;
        this.markers = points;
        return this.refresh();
    }

    async subdivideAt(t: number): Promise<StudioSnapshot> {
        const result = await this.api.post<{ left: CurveJson; right: CurveJson }>(
            "/curve/subdivide",
            { curve: this.curve, t },
        );
        this.overlays = [result.left.controls, result.right.controls];
        return this.refresh();
    }

    async midpointDepth(depth: number): Promise<StudioSnapshot> {
        const result = await this.api.post<{ segments: CurveJson[] }>(
            "/curve/midpoint",
            { curve: this.curve, depth },
        );
        this.overlays = result.segments.map((s) => s.controls);
        return this.refresh();
    }

    async elevate(): Promise<StudioSnapshot> {
        const result = await this.api.post<{ curve: CurveJson }>(
            "/curve/elevate",
            { curve: this.curve },
        );
        this.curve = result.curve;
        return this.refresh();
    }
}
