"""Record real backend responses as frontend test fixtures.

Run from the repository root after installing the Python package:

    python3 frontend/scripts/gen_fixtures.py

The studio's tests replay these instead of spawning the service, so the
UI layer is tested against genuine backend payloads.
"""

import json
from pathlib import Path

import numpy as np

from hgamma.service import dispatch

OUT = Path(__file__).parent.parent / "tests" / "fixtures"

BASE_CURVE = {
    "family": {"kind": "trig"},
    "n": 3,
    "h": 0.2,
    "interval": [0.1, 1.3],
    "controls": [[0.0, 0.0], [0.4, 1.0], [0.9, -0.2], [1.2, 0.6]],
}
DRAGGED_CURVE = dict(BASE_CURVE, controls=[[-0.2, 0.35]] + BASE_CURVE["controls"][1:])
INTERP_REQUEST = {
    "family": {"kind": "trig"},
    "n": 3,
    "h": 0.2,
    "a": BASE_CURVE["interval"][0],
    "points": BASE_CURVE["controls"],
}


def must(status, payload):
    assert status == 200, (status, payload)
    return payload


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    sweep = []
    for h in np.linspace(-3.3, 3.3, 512):
        payload = must(*dispatch("POST", "/validate",
                                 {"family": {"kind": "trig"}, "n": 2, "h": float(h)}))
        sweep.append({
            "h": float(h),
            "verdict": payload["verdict"],
            "dependence_margin": payload["dependence_margin"],
        })
    (OUT / "validate_sweep_trig_n2.json").write_text(json.dumps(sweep))

    sample = must(*dispatch("POST", "/curve/sample",
                            {"curve": BASE_CURVE, "samples": 256}))
    (OUT / "curve_sample_base.json").write_text(
        json.dumps({"curve": BASE_CURVE, "response": sample}))

    dragged = must(*dispatch("POST", "/curve/sample",
                             {"curve": DRAGGED_CURVE, "samples": 256}))
    (OUT / "curve_sample_dragged.json").write_text(
        json.dumps({"curve": DRAGGED_CURVE, "response": dragged}))

    built = must(*dispatch("POST", "/curve/interpolate", INTERP_REQUEST))
    interp_sample = must(*dispatch("POST", "/curve/sample",
                                   {"curve": built["curve"], "samples": 256}))
    (OUT / "interpolation.json").write_text(json.dumps({
        "request": INTERP_REQUEST,
        "curve": built["curve"],
        "response": interp_sample,
    }))

    invalid = dispatch("POST", "/curve/eval",
                       {"curve": dict(BASE_CURVE, n=2,
                                      controls=BASE_CURVE["controls"][:3],
                                      h=1.5707963), "x": 0.5})
    (OUT / "invalid_curve_error.json").write_text(json.dumps({
        "status": invalid[0], "body": invalid[1]}))

    # validate payloads the state machine requests before each render
    validations = {
        "validate_n3_base": {"family": {"kind": "trig"}, "n": 3, "h": 0.2,
                             "a": 0.1, "b": 1.3},
        "validate_n3_interp": {"family": {"kind": "trig"}, "n": 3, "h": 0.2,
                               "a": 0.1, "b": 0.1 - 3 * 0.2},
        "validate_n2_base": {"family": {"kind": "trig"}, "n": 2, "h": 0.2,
                             "a": 0.1, "b": 1.3},
        "validate_n2_dependent": {"family": {"kind": "trig"}, "n": 2,
                                  "h": 1.5707963, "a": 0.1, "b": 1.3},
    }
    for name, req in validations.items():
        payload = dispatch("POST", "/validate", req)[1]
        (OUT / f"{name}.json").write_text(json.dumps(
            {"request": req, "response": payload}))

    n2_curve = dict(BASE_CURVE, n=2, controls=BASE_CURVE["controls"][:3])
    n2_sample = must(*dispatch("POST", "/curve/sample",
                               {"curve": n2_curve, "samples": 256}))
    (OUT / "curve_sample_n2.json").write_text(
        json.dumps({"curve": n2_curve, "response": n2_sample}))

    print(f"fixtures written to {OUT}")


if __name__ == "__main__":
    main()
