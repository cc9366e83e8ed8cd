import { fitViewport, worldToScreen, Viewport, WIDTH, HEIGHT } from "./transform.js";
import { GuardJson } from "./types.js";

export interface Scene {
    samplePoints: number[][];      // server-sampled curve points
    controls: number[][];          // control polygon vertices
    markers?: number[][];          // interpolation targets
    overlays?: number[][][];       // extra polygons (subdivision, elevation)
    dimmed?: boolean;              // render last-valid state greyed out
    guards?: GuardJson[];          // violations shown verbatim
}

function fmt(v: number): string {
    return v.toFixed(2);
}

function polyline(vp: Viewport, pts: number[][], stroke: string, width: number, dash?: string): string {
    const coords = pts
        .map((p) => worldToScreen(vp, p))
        .map(([x, y]) => `${fmt(x)},${fmt(y)}`)
        .join(" ");
    const dashAttr = dash ? ` stroke-dasharray="${dash}"` : "";
    return `<polyline fill="none" stroke="${stroke}" stroke-width="${width}"${dashAttr} points="${coords}"/>`;
}

export function sceneViewport(scene: Scene): Viewport {
    const all = [
        ...scene.samplePoints,
        ...scene.controls,
        ...(scene.markers ?? []),
        ...(scene.overlays ?? []).flat(),
    ];
    return fitViewport(all);
}

// Build the full studio picture as one SVG string.
export function renderScene(scene: Scene): string {
    const vp = sceneViewport(scene);
    const parts: string[] = [];
    const alpha = scene.dimmed ? ' opacity="0.35"' : "";
    parts.push(
        `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${WIDTH} ${HEIGHT}" width="${WIDTH}" height="${HEIGHT}">`,
    );
    parts.push('<rect width="100%" height="100%" fill="white"/>');
    parts.push(`<g${alpha}>`);
    for (const overlay of scene.overlays ?? []) {
        parts.push(polyline(vp, overlay, "#2ca02c", 1, "3,3"));
    }
    parts.push(polyline(vp, scene.controls, "#999999", 1.5, "6,4"));
    parts.push(polyline(vp, scene.samplePoints, "#1f77b4", 2.5));
    scene.controls.forEach((c, idx) => {
        const [x, y] = worldToScreen(vp, c);
        parts.push(
            `<circle class="control" data-index="${idx}" cx="${fmt(x)}" cy="${fmt(y)}" r="6" fill="#d62728"/>`,
        );
    });
    (scene.markers ?? []).forEach((m, idx) => {
        const [x, y] = worldToScreen(vp, m);
        parts.push(
            `<rect class="marker" data-index="${idx}" x="${fmt(x - 5)}" y="${fmt(y - 5)}" width="10" height="10" fill="none" stroke="#2ca02c" stroke-width="2"/>`,
        );
    });
    parts.push("</g>");
    (scene.guards ?? []).forEach((g, idx) => {
        parts.push(
            `<text x="12" y="${20 + 16 * idx}" font-family="sans-serif" font-size="13" fill="#b00">${g.message}</text>`,
        );
    });
    parts.push("</svg>");
    return parts.join("\n");
}
