"""Deterministic SVG charts: basis function plots and curve views.

Fixed 800x600 viewbox, no raster dependencies; curves sampled at 256
points.  Coordinates are written with fixed precision so outputs are
diffable.
"""

import numpy as np

WIDTH, HEIGHT = 800, 600
MARGIN = 50
CURVE_SAMPLES = 256
PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def _fmt(v):
    return f"{v:.3f}"


class _Frame:
    """Affine map from data space to the plot area."""

    def __init__(self, xs, ys):
        self.x0, self.x1 = float(np.min(xs)), float(np.max(xs))
        self.y0, self.y1 = float(np.min(ys)), float(np.max(ys))
        if self.x1 == self.x0:
            self.x1 = self.x0 + 1.0
        if self.y1 == self.y0:
            self.y1 = self.y0 + 1.0
        pad_x = 0.05 * (self.x1 - self.x0)
        pad_y = 0.05 * (self.y1 - self.y0)
        self.x0 -= pad_x
        self.x1 += pad_x
        self.y0 -= pad_y
        self.y1 += pad_y

    def px(self, x):
        return MARGIN + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - 2 * MARGIN)

    def py(self, y):
        return HEIGHT - MARGIN - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - 2 * MARGIN)

    def polyline(self, xs, ys, color, width=2.0, dash=None):
        pts = " ".join(f"{_fmt(self.px(x))},{_fmt(self.py(y))}" for x, y in zip(xs, ys))
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        return (
            f'<polyline fill="none" stroke="{color}" stroke-width="{width}"'
            f'{dash_attr} points="{pts}"/>'
        )


def _document(body):
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" '
        f'width="{WIDTH}" height="{HEIGHT}">\n'
        '<rect width="100%" height="100%" fill="white"/>\n'
        + "\n".join(body)
        + "\n</svg>\n"
    )


def _axes(frame, title):
    parts = [
        f'<line x1="{MARGIN}" y1="{HEIGHT - MARGIN}" x2="{WIDTH - MARGIN}" '
        f'y2="{HEIGHT - MARGIN}" stroke="black" stroke-width="1"/>',
        f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" '
        f'y2="{HEIGHT - MARGIN}" stroke="black" stroke-width="1"/>',
        f'<text x="{WIDTH // 2}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{title}</text>',
        f'<text x="{MARGIN}" y="{HEIGHT - MARGIN + 30}" font-family="sans-serif" '
        f'font-size="12">{_fmt(frame.x0)}</text>',
        f'<text x="{WIDTH - MARGIN}" y="{HEIGHT - MARGIN + 30}" text-anchor="end" '
        f'font-family="sans-serif" font-size="12">{_fmt(frame.x1)}</text>',
        f'<text x="{MARGIN - 6}" y="{HEIGHT - MARGIN}" text-anchor="end" '
        f'font-family="sans-serif" font-size="12">{_fmt(frame.y0)}</text>',
        f'<text x="{MARGIN - 6}" y="{MARGIN + 4}" text-anchor="end" '
        f'font-family="sans-serif" font-size="12">{_fmt(frame.y1)}</text>',
    ]
    return parts


def basis_chart(xs, table, title="basis functions"):
    """One polyline per basis function; table rows align with xs."""
    table = np.asarray(table)
    frame = _Frame(xs, table)
    body = _axes(frame, title)
    n_funcs = table.shape[1]
    for k in range(n_funcs):
        color = PALETTE[k % len(PALETTE)]
        body.append(frame.polyline(xs, table[:, k], color))
        body.append(
            f'<text x="{WIDTH - MARGIN + 6}" y="{MARGIN + 18 * k + 12}" '
            f'font-family="sans-serif" font-size="12" fill="{color}">B{k}</text>'
        )
    return _document(body)


def curve_chart(curve, polygons=None, title="curve"):
    """Curve polyline, its control polygon, and optional extra polygons.

    Scalar curves are drawn as (x, value); planar curves use their own
    coordinates.  polygons is a list of (n_pts, dim) arrays drawn dashed.
    """
    xs, pts = curve.sample(CURVE_SAMPLES)
    pts = np.asarray(pts)
    planar = pts.shape[1] >= 2
    if planar:
        cx, cy = pts[:, 0], pts[:, 1]
        px, py = curve.controls[:, 0], curve.controls[:, 1]
    else:
        cx, cy = xs, pts[:, 0]
        px = np.linspace(xs[0], xs[-1], curve.n + 1)
        py = curve.controls[:, 0]
    extras = []
    for poly in polygons or []:
        poly = np.asarray(poly)
        if planar:
            extras.append((poly[:, 0], poly[:, 1]))
        else:
            extras.append((np.linspace(xs[0], xs[-1], len(poly)), poly[:, 0]))
    all_x = np.concatenate([cx, px] + [e[0] for e in extras])
    all_y = np.concatenate([cy, py] + [e[1] for e in extras])
    frame = _Frame(all_x, all_y)
    body = _axes(frame, title)
    body.append(frame.polyline(px, py, "#999999", width=1.5, dash="6,4"))
    for i, (ex, ey) in enumerate(extras):
        body.append(frame.polyline(ex, ey, PALETTE[(i + 1) % len(PALETTE)], width=1.0, dash="3,3"))
    body.append(frame.polyline(cx, cy, PALETTE[0], width=2.5))
    for x, y in zip(px, py):
        body.append(
            f'<circle cx="{_fmt(frame.px(x))}" cy="{_fmt(frame.py(y))}" r="4" '
            'fill="#d62728"/>'
        )
    return _document(body)
