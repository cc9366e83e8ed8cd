// JSON contracts of the curvectl service; the studio computes no
// mathematics itself, it only displays what these payloads carry.

export interface FamilyJson {
    kind: string;
    d?: number;
    inner?: FamilyJson;
}

export interface CurveJson {
    family: FamilyJson;
    n: number;
    h: number;
    interval: [number, number];
    controls: number[][];
    valid?: boolean;
}

export interface GuardJson {
    kind: string;
    message: string;
    i?: number;
    j?: number;
    k?: number;
    value?: number;
}

export interface ValidatePayload {
    verdict: "independent" | "dependent" | "borderline";
    dependence_margin: number | null;
    guards: GuardJson[];
    valid: boolean;
    det: number;
}

export interface SamplePayload {
    x: number[];
    points: number[][];
}

export interface SweepEntry {
    h: number;
    verdict: string;
    dependence_margin: number | null;
}

export interface ApiError {
    error: string;
    detail: string;
    guards: GuardJson[];
}

export interface ApiClient {
    post<T>(path: string, body: unknown): Promise<T>;
    get<T>(path: string): Promise<T>;
}
