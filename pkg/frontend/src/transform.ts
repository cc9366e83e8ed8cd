// World-to-screen mapping for the fixed 800x600 studio canvas.

export const WIDTH = 800;
export const HEIGHT = 600;
export const MARGIN = 40;

export interface Viewport {
    x0: number;
    x1: number;
    y0: number;
    y1: number;
}

export function fitViewport(points: number[][], pad = 0.08): Viewport {
    let x0 = Infinity, x1 = -Infinity, y0 = Infinity, y1 = -Infinity;
    for (const p of points) {
        x0 = Math.min(x0, p[0]);
        x1 = Math.max(x1, p[0]);
        y0 = Math.min(y0, p[1]);
        y1 = Math.max(y1, p[1]);
    }
    if (!isFinite(x0)) {
        return { x0: -1, x1: 1, y0: -1, y1: 1 };
    }
    if (x1 === x0) x1 = x0 + 1;
    if (y1 === y0) y1 = y0 + 1;
    const px = pad * (x1 - x0);
    const py = pad * (y1 - y0);
    return { x0: x0 - px, x1: x1 + px, y0: y0 - py, y1: y1 + py };
}

export function worldToScreen(vp: Viewport, p: number[]): [number, number] {
    const sx = MARGIN + ((p[0] - vp.x0) / (vp.x1 - vp.x0)) * (WIDTH - 2 * MARGIN);
    const sy = HEIGHT - MARGIN - ((p[1] - vp.y0) / (vp.y1 - vp.y0)) * (HEIGHT - 2 * MARGIN);
    return [sx, sy];
}

export function screenToWorld(vp: Viewport, s: [number, number]): [number, number] {
    const wx = vp.x0 + ((s[0] - MARGIN) / (WIDTH - 2 * MARGIN)) * (vp.x1 - vp.x0);
    const wy = vp.y0 + ((HEIGHT - MARGIN - s[1]) / (HEIGHT - 2 * MARGIN)) * (vp.y1 - vp.y0);
    return [wx, wy];
}

export function screenDistance(a: [number, number], b: [number, number]): number {
    return Math.hypot(a[0] - b[0], a[1] - b[1]);
}

function pointToSegment(p: [number, number], a: [number, number], b: [number, number]): number {
    const vx = b[0] - a[0];
    const vy = b[1] - a[1];
    const len2 = vx * vx + vy * vy;
    let t = len2 === 0 ? 0 : ((p[0] - a[0]) * vx + (p[1] - a[1]) * vy) / len2;
    t = Math.max(0, Math.min(1, t));
    return Math.hypot(p[0] - (a[0] + t * vx), p[1] - (a[1] + t * vy));
}

export function pointToPolylineDistance(p: [number, number], pts: [number, number][]): number {
    let best = Infinity;
    for (let i = 0; i + 1 < pts.length; i++) {
        best = Math.min(best, pointToSegment(p, pts[i], pts[i + 1]));
    }
    return best;
}
