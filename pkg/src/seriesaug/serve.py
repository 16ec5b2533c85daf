"""Line-delimited JSON worker used by out-of-process bindings.

One request per line on stdin, one response per line on stdout.  A
request is {"id", "op", ...op fields}; a response is {"id", "ok": true,
"result": ...} or {"id", "ok": false, "error": {"type", "message"}}.
Floats cross the boundary as JSON numbers in shortest round-trip form,
so values survive the hop bitwise; all arrays are plain nested lists.

Supported ops: version, augment_batch, dct_forward, dct_inverse,
fft_forward, fft_inverse, roundtrip_check, dtw_distance, dtw_similarity.
There is deliberately no pipeline op: callers chain augment_batch with
their own stage indices.
"""

from __future__ import annotations

import json
import sys

import numpy as np

from . import __version__
from .core import Batch
from .dtw import dtw_distance
from .errors import InvalidInputError
from .freqtransform import (
    DctBatch,
    SpectrumBatch,
    dct_forward,
    dct_inverse,
    fft_forward,
    fft_inverse,
    roundtrip_check,
)
from .pipeline import stage_from_dict


def _rows(arr: np.ndarray) -> list:
    return [[float(v) for v in row] for row in arr]


def _batch_from(req, key: str = "values") -> Batch:
    if key not in req:
        raise InvalidInputError(f"request is missing {key!r}")
    return Batch.from_sequences(req[key])


def _require(req, *keys):
    for k in keys:
        if k not in req:
            raise InvalidInputError(f"request is missing {k!r}")


def _op_version(req) -> dict:
    return {"version": __version__}


def _op_augment_batch(req) -> dict:
    _require(req, "stage", "seed")
    stage = stage_from_dict(req["stage"])
    out = stage.augment_batch(
        _batch_from(req),
        req["seed"],
        parallel=bool(req.get("parallel", False)),
        augmenter_index=int(req.get("augmenter_index", 0)),
    )
    return {"values": _rows(out.values)}


def _op_dct_forward(req) -> dict:
    return {"coeffs": _rows(dct_forward(_batch_from(req)).coeffs)}


def _op_dct_inverse(req) -> dict:
    _require(req, "coeffs")
    return {"values": _rows(dct_inverse(DctBatch(np.array(req["coeffs"]))).values)}


def _op_fft_forward(req) -> dict:
    spec = fft_forward(_batch_from(req))
    return {"re": _rows(spec.re), "im": _rows(spec.im), "original_len": spec.original_len}


def _op_fft_inverse(req) -> dict:
    _require(req, "re", "im", "original_len")
    spec = SpectrumBatch(np.array(req["re"]), np.array(req["im"]), int(req["original_len"]))
    return {"values": _rows(fft_inverse(spec).values)}


def _op_roundtrip_check(req) -> dict:
    _require(req, "transform")
    return {"max_abs_error": roundtrip_check(_batch_from(req), req["transform"])}


def _op_dtw_distance(req) -> dict:
    _require(req, "a", "b")
    res = dtw_distance(req["a"], req["b"])
    return {
        "distance": res.distance,
        "similarity": res.similarity,
        "path": [[i, j] for i, j in res.path],
    }


def _op_dtw_similarity(req) -> dict:
    _require(req, "a", "b")
    return {"similarity": dtw_distance(req["a"], req["b"]).similarity}


_OPS = {
    "version": _op_version,
    "augment_batch": _op_augment_batch,
    "dct_forward": _op_dct_forward,
    "dct_inverse": _op_dct_inverse,
    "fft_forward": _op_fft_forward,
    "fft_inverse": _op_fft_inverse,
    "roundtrip_check": _op_roundtrip_check,
    "dtw_distance": _op_dtw_distance,
    "dtw_similarity": _op_dtw_similarity,
}


def handle_line(line: str) -> str:
    req_id = None
    try:
        req = json.loads(line)
        if not isinstance(req, dict):
            raise InvalidInputError("request must be a JSON object")
        req_id = req.get("id")
        op = req.get("op")
        handler = _OPS.get(op)
        if handler is None:
            raise InvalidInputError(
                f"unknown op {op!r}, expected one of {sorted(_OPS)}"
            )
        return json.dumps({"id": req_id, "ok": True, "result": handler(req)})
    except Exception as exc:  # every fault becomes a structured response
        return json.dumps(
            {
                "id": req_id,
                "ok": False,
                "error": {"type": type(exc).__name__, "message": str(exc)},
            }
        )


def serve_forever(stdin, stdout) -> int:
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        stdout.write(handle_line(line) + "\n")
        stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(serve_forever(sys.stdin, sys.stdout))
