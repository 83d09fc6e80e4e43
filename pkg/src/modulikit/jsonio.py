"""JSON wire formats.

Complex scalars travel as ``[re, im]`` pairs; matrices as
``{"rows": N, "cols": M, "entries": [[re, im], ...]}`` in row-major
order.  Reports are serialized with sorted keys so a fixed seed yields
byte-identical output.
"""

from __future__ import annotations

import json

import numpy as np

from .connection import ConnectionData, FrameTuple
from .quiver import Arrow, DoubleQuiver, DoubleQuiverRep
from .weights import WeightData, decompose


def complex_to_json(z: complex) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def matrix_to_json(m) -> dict:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "entries": [complex_to_json(z) for z in m.reshape(-1)],
    }


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def matrix_from_json(obj) -> np.ndarray:
    _require(isinstance(obj, dict), "matrix must be a JSON object")
    _require(
        set(obj) >= {"rows", "cols", "entries"},
        "matrix object needs rows, cols, entries",
    )
    rows, cols = int(obj["rows"]), int(obj["cols"])
    _require(rows >= 0 and cols >= 0, "rows and cols must be nonnegative")
    entries = obj["entries"]
    _require(isinstance(entries, list), "entries must be a list")
    _require(len(entries) == rows * cols, f"expected {rows * cols} entries, got {len(entries)}")
    flat = np.zeros(rows * cols, dtype=complex)
    for k, pair in enumerate(entries):
        _require(
            isinstance(pair, (list, tuple)) and len(pair) == 2,
            f"entry {k} must be a [re, im] pair",
        )
        flat[k] = complex(float(pair[0]), float(pair[1]))
    _require(bool(np.all(np.isfinite(flat))), "matrix entries must be finite")
    return flat.reshape(rows, cols)


def weight_data_to_json(w: WeightData) -> dict:
    return {"rank": w.rank, "weights": [list(vec) for vec in w.weights]}


def weight_data_from_json(obj) -> WeightData:
    _require(isinstance(obj, dict), "weight data must be a JSON object")
    _require(set(obj) >= {"rank", "weights"}, "weight data needs rank and weights")
    rank = int(obj["rank"])
    ws = obj["weights"]
    _require(isinstance(ws, list) and ws, "weights must be a nonempty list")
    return WeightData(rank=rank, weights=tuple(tuple(int(c) for c in np.atleast_1d(w)) for w in ws))


def connection_to_json(c: ConnectionData) -> dict:
    w = WeightData(
        rank=1,
        weights=tuple((int(m),) for m in c.decomposition.index_weights()[:, 0]),
    )
    return {
        "weights": weight_data_to_json(w),
        "A": matrix_to_json(c.a),
        "B": matrix_to_json(c.b),
    }


def connection_from_json(obj) -> ConnectionData:
    _require(isinstance(obj, dict), "connection data must be a JSON object")
    _require(set(obj) >= {"weights", "A", "B"}, "connection data needs weights, A, B")
    w = weight_data_from_json(obj["weights"])
    return ConnectionData(
        decomposition=decompose(w),
        a=matrix_from_json(obj["A"]),
        b=matrix_from_json(obj["B"]),
    )


def frame_tuple_to_json(t: FrameTuple) -> dict:
    out = {
        "rank": t.rank,
        "A_list": [matrix_to_json(a) for a in t.a_list],
        "B_list": [matrix_to_json(b) for b in t.b_list],
    }
    if t.weights is not None:
        out["weights"] = weight_data_to_json(t.weights)
    return out


def frame_tuple_from_json(obj) -> FrameTuple:
    _require(isinstance(obj, dict), "frame tuple must be a JSON object")
    _require(set(obj) >= {"rank", "A_list"}, "frame tuple needs rank and A_list")
    a_list = tuple(matrix_from_json(m) for m in obj["A_list"])
    _require(len(a_list) == int(obj["rank"]), "rank must equal the length of A_list")
    b_list = None
    if obj.get("B_list") is not None:
        b_list = tuple(matrix_from_json(m) for m in obj["B_list"])
    weights = None
    if obj.get("weights") is not None:
        weights = weight_data_from_json(obj["weights"])
    return FrameTuple(a_list=a_list, b_list=b_list, weights=weights)


def rep_to_json(rep: DoubleQuiverRep) -> dict:
    return {
        "vertices": list(rep.quiver.dims),
        "arrows": [
            {"tail": a.tail, "head": a.head, "label": a.label} for a in rep.quiver.arrows
        ],
        "matrices": {label: matrix_to_json(m) for label, m in sorted(rep.matrices.items())},
    }


def rep_from_json(obj) -> DoubleQuiverRep:
    """Load a double-quiver representation.

    Arrows labeled ``A<k>`` pair with ``B<k>``; every arrow must belong
    to exactly one such orientation-reversed pair.
    """
    _require(isinstance(obj, dict), "representation must be a JSON object")
    _require(
        set(obj) >= {"vertices", "arrows", "matrices"},
        "representation needs vertices, arrows, matrices",
    )
    dims = tuple(int(d) for d in obj["vertices"])
    arrows = []
    for k, entry in enumerate(obj["arrows"]):
        _require(
            isinstance(entry, dict) and set(entry) >= {"tail", "head", "label"},
            f"arrow {k} needs tail, head, label",
        )
        arrows.append(Arrow(tail=int(entry["tail"]), head=int(entry["head"]), label=str(entry["label"])))
    by_label = {a.label: a for a in arrows}
    _require(len(by_label) == len(arrows), "arrow labels must be unique")
    pairs = []
    for a in arrows:
        if a.label.startswith("A"):
            opp = "B" + a.label[1:]
            _require(opp in by_label, f"arrow {a.label} has no opposite {opp}")
            rev = by_label[opp]
            _require(
                rev.tail == a.head and rev.head == a.tail,
                f"arrows {a.label} and {opp} are not orientation reversed",
            )
            pairs.append((a.label, opp))
    paired = {lab for pair in pairs for lab in pair}
    _require(paired == set(by_label), "every arrow must belong to an A/B pair")
    quiver = DoubleQuiver(dims=dims, arrows=tuple(arrows), pairs=tuple(pairs))
    mats = obj["matrices"]
    _require(isinstance(mats, dict), "matrices must be a JSON object")
    matrices = {label: matrix_from_json(m) for label, m in mats.items()}
    return DoubleQuiverRep(quiver=quiver, matrices=matrices)


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, no NaN/Inf, deterministic bytes."""
    return json.dumps(obj, sort_keys=True, allow_nan=False)


def loads_path(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
