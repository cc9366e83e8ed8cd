import { SweepEntry } from "./types.js";

// Display threshold: a slider position is marked red when the service
// reports a dependence margin below this (or an outright non-independent
// verdict).  Pure presentation; the margin itself comes from the backend.
export const RED_MARGIN = 0.02;

export interface RedZone {
    lo: number;
    hi: number;
}

export function isRed(entry: SweepEntry, threshold = RED_MARGIN): boolean {
    if (entry.verdict !== "independent") return true;
    return entry.dependence_margin !== null && entry.dependence_margin < threshold;
}

// Merge consecutive red sweep points into contiguous zones.
export function computeRedZones(sweep: SweepEntry[], threshold = RED_MARGIN): RedZone[] {
    const zones: RedZone[] = [];
    let current: RedZone | null = null;
    const ordered = [...sweep].sort((a, b) => a.h - b.h);
    for (const entry of ordered) {
        if (isRed(entry, threshold)) {
            if (current === null) {
                current = { lo: entry.h, hi: entry.h };
            } else {
                current.hi = entry.h;
            }
        } else if (current !== null) {
            zones.push(current);
            current = null;
        }
    }
    if (current !== null) zones.push(current);
    return zones;
}

// CSS linear-gradient stops painting the zones onto a slider track.
export function zoneGradient(zones: RedZone[], hMin: number, hMax: number): string {
    if (zones.length === 0) return "#ddd";
    const stops: string[] = ["#ddd 0%"];
    for (const z of zones) {
        const lo = (100 * (z.lo - hMin)) / (hMax - hMin);
        const hi = Math.max((100 * (z.hi - hMin)) / (hMax - hMin), lo + 0.4);
        stops.push(`#ddd ${lo.toFixed(2)}%`);
        stops.push(`#e33 ${lo.toFixed(2)}%`);
        stops.push(`#e33 ${hi.toFixed(2)}%`);
        stops.push(`#ddd ${hi.toFixed(2)}%`);
    }
    stops.push("#ddd 100%");
    return `linear-gradient(to right, ${stops.join(", ")})`;
}
