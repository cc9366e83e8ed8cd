"""Stateless JSON service over the library (the studio backend).

Every handler is a pure function of its request body; identical requests
yield identical responses.  Mathematical rejections come back as HTTP 422
with {"error": code, "detail": ..., "guards": [...]}; malformed requests
as HTTP 400.
"""

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import numpy as np

from . import blossom as bl
from .bernstein import BasisQuery, basis_all, degree_elevate, unity_controls
from .curves import HGammaCurve, make_interpolating_curve, midpoint_subdivision, subdivide
from .errors import HGammaError
from .families import DISCRETE_KINDS, KINDS, FamilySpec
from .independence import independence_check, validate_curve_params


class BadRequest(Exception):
    pass


def _field(body, key, kind=None, required=True, default=None):
    if key not in body:
        if required:
            raise BadRequest(f"missing field {key!r}")
        return default
    value = body[key]
    if kind is not None:
        try:
            value = kind(value)
        except (TypeError, ValueError) as exc:
            raise BadRequest(f"field {key!r}: {exc}") from None
    return value


def _family(body, key="family"):
    try:
        return FamilySpec.from_json(_field(body, key))
    except ValueError as exc:
        raise BadRequest(str(exc)) from None


def _curve(body, key="curve"):
    try:
        return HGammaCurve.from_json(_field(body, key))
    except (ValueError, TypeError, KeyError, IndexError) as exc:
        raise BadRequest(f"bad curve JSON: {exc}") from None


def handle_families(_body=None):
    entries = []
    for kind in KINDS:
        entry = {"kind": kind}
        if kind in DISCRETE_KINDS:
            entry["requires"] = ["d"]
        if kind == "exp_weighted":
            entry["requires"] = ["inner"]
            entry["optional"] = ["d"]
        entries.append(entry)
    return {"families": entries}


def validation_payload(family, n, h, a=None, b=None):
    report = independence_check(family, n, h)
    payload = report.to_json()
    guards = []
    if a is not None and b is not None:
        guards = [v.to_json() for v in validate_curve_params(family, n, h, a, b)]
    else:
        if report.verdict != "independent":
            guards = [
                {
                    "kind": "independence",
                    "message": f"basis verdict {report.verdict} at h={h}",
                }
            ]
    payload["guards"] = guards
    payload["valid"] = report.verdict == "independent" and not guards
    return payload


def handle_validate(body):
    family = _family(body)
    n = _field(body, "n", int)
    h = _field(body, "h", float)
    a = _field(body, "a", float, required=False)
    b = _field(body, "b", float, required=False)
    if n < 1:
        raise BadRequest("n must be >= 1")
    return validation_payload(family, n, h, a, b)


def basis_table(family, n, h, a, b, samples, unity=False):
    xs = np.linspace(a, b, samples)
    rows = [
        basis_all(BasisQuery(family=family, n=n, h=h, a=a, b=b, x=float(x)))
        for x in xs
    ]
    table = {"x": [float(x) for x in xs], "B": [[float(v) for v in row] for row in rows]}
    if unity:
        weights = unity_controls(family, n, h, a, b)
        table["unity_controls"] = [float(w) for w in weights]
        table["unity_sum"] = [float(np.dot(weights, row)) for row in rows]
    return table


def handle_basis_sample(body):
    family = _family(body)
    n = _field(body, "n", int)
    h = _field(body, "h", float)
    interval = _field(body, "interval")
    if not isinstance(interval, (list, tuple)) or len(interval) != 2:
        raise BadRequest("interval must be [a, b]")
    samples = _field(body, "samples", int, required=False, default=64)
    if samples < 2:
        raise BadRequest("samples must be >= 2")
    unity = bool(_field(body, "unity", required=False, default=False))
    return basis_table(family, n, h, float(interval[0]), float(interval[1]), samples, unity)


def handle_curve_eval(body):
    curve = _curve(body)
    x = _field(body, "x", float)
    return {"x": x, "point": [float(v) for v in curve.eval(x)]}


def handle_curve_sample(body):
    curve = _curve(body)
    samples = _field(body, "samples", int, required=False, default=64)
    if samples < 2:
        raise BadRequest("samples must be >= 2")
    xs, pts = curve.sample(samples)
    return {
        "x": [float(x) for x in xs],
        "points": [[float(v) for v in p] for p in pts],
    }


def handle_curve_subdivide(body):
    curve = _curve(body)
    t = _field(body, "t", float)
    left, right = subdivide(curve, t)
    return {"left": left.to_json(), "right": right.to_json()}


def handle_curve_midpoint(body):
    curve = _curve(body)
    depth = _field(body, "depth", int)
    if not 0 <= depth <= 20:
        raise BadRequest("depth must be in 0..20")
    return midpoint_subdivision(curve, depth).to_json()


def handle_curve_elevate(body):
    return {"curve": degree_elevate(_curve(body)).to_json()}


def handle_curve_interpolate(body):
    family = _family(body)
    n = _field(body, "n", int)
    h = _field(body, "h", float)
    a = _field(body, "a", float)
    points = _field(body, "points")
    curve = make_interpolating_curve(family, n, h, a, points)
    return {"curve": curve.to_json()}


def handle_blossom_eval(body):
    curve = _curve(body)
    raw_args = _field(body, "args")
    if not isinstance(raw_args, list):
        raise BadRequest("args must be a list")
    args = []
    for item in raw_args:
        if not isinstance(item, dict):
            raise BadRequest("each blossom argument is {'t': ...} or {'u':..., 'v':...}")
        if "t" in item:
            args.append(bl.OnCurve(float(item["t"])))
        elif "u" in item and "v" in item:
            args.append(bl.Raw(float(item["u"]), float(item["v"])))
        else:
            raise BadRequest(f"bad blossom argument {item!r}")
    value = bl.blossom_from_controls(curve, args)
    return {"value": [float(v) for v in np.atleast_1d(value)]}


POST_ROUTES = {
    "/validate": handle_validate,
    "/basis/sample": handle_basis_sample,
    "/curve/eval": handle_curve_eval,
    "/curve/sample": handle_curve_sample,
    "/curve/subdivide": handle_curve_subdivide,
    "/curve/midpoint": handle_curve_midpoint,
    "/curve/elevate": handle_curve_elevate,
    "/curve/interpolate": handle_curve_interpolate,
    "/blossom/eval": handle_blossom_eval,
}

GET_ROUTES = {"/families": handle_families}


def dispatch(method, path, body=None):
    """Route a request to its handler; returns (status, payload)."""
    if method == "GET":
        handler = GET_ROUTES.get(path)
        if handler is None:
            return 404, {"error": "NotFound", "detail": path, "guards": []}
        return 200, handler()
    if method != "POST":
        return 405, {"error": "MethodNotAllowed", "detail": method, "guards": []}
    handler = POST_ROUTES.get(path)
    if handler is None:
        return 404, {"error": "NotFound", "detail": path, "guards": []}
    try:
        return 200, handler(body if body is not None else {})
    except BadRequest as exc:
        return 400, {"error": "BadRequest", "detail": str(exc), "guards": []}
    except HGammaError as exc:
        return 422, {
            "error": exc.code,
            "detail": str(exc),
            "guards": [v.to_json() for v in exc.violations],
        }
    except (ValueError, TypeError, KeyError) as exc:
        return 400, {"error": "BadRequest", "detail": str(exc), "guards": []}


class _Handler(BaseHTTPRequestHandler):
    server_version = "curvectl"

    def log_message(self, *args):
        pass

    def _reply(self, status, payload):
        data = json.dumps(payload, sort_keys=True).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self):
        status, payload = dispatch("GET", self.path)
        self._reply(status, payload)

    def do_POST(self):
        length = int(self.headers.get("Content-Length", 0))
        raw = self.rfile.read(length) if length else b""
        try:
            body = json.loads(raw.decode() or "{}")
            if not isinstance(body, dict):
                raise ValueError("request body must be a JSON object")
        except (ValueError, UnicodeDecodeError) as exc:
            self._reply(400, {"error": "BadRequest", "detail": f"malformed JSON: {exc}", "guards": []})
            return
        status, payload = dispatch("POST", self.path, body)
        self._reply(status, payload)


def make_server(port=0):
    """A ThreadingHTTPServer bound to localhost:port (0 picks a free port)."""
    return ThreadingHTTPServer(("127.0.0.1", port), _Handler)


def serve(port):
    server = make_server(port)
    host, actual_port = server.server_address
    print(f"curvectl service on http://{host}:{actual_port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
