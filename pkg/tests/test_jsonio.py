"""Wire-format round trips and malformed-input rejection."""

from __future__ import annotations

import json

import numpy as np
import pytest

from modulikit import connection, jsonio, quiver, weights


def _decomp(vals):
    return weights.decompose(weights.WeightData.of(vals))


def test_complex_scalar_pairs():
    assert jsonio.complex_to_json(1.5 - 2j) == [1.5, -2.0]
    assert jsonio.complex_to_json(3) == [3.0, 0.0]


def test_matrix_round_trip():
    rng = np.random.default_rng(11)
    m = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))
    obj = jsonio.matrix_to_json(m)
    assert (obj["rows"], obj["cols"]) == (3, 2)
    assert len(obj["entries"]) == 6
    back = jsonio.matrix_from_json(obj)
    assert np.array_equal(back, m)


def test_matrix_row_major_order():
    obj = jsonio.matrix_to_json(np.array([[1.0, 2.0], [3.0, 4.0]]))
    assert [e[0] for e in obj["entries"]] == [1.0, 2.0, 3.0, 4.0]


def test_matrix_rejects_malformed():
    good = jsonio.matrix_to_json(np.eye(2))
    for mutate in (
        lambda o: o.pop("rows"),
        lambda o: o["entries"].pop(),
        lambda o: o["entries"].__setitem__(0, [1.0]),
        lambda o: o["entries"].__setitem__(0, [float("nan"), 0.0]),
        lambda o: o.__setitem__("rows", -1),
    ):
        obj = json.loads(json.dumps(good))
        mutate(obj)
        with pytest.raises(ValueError):
            jsonio.matrix_from_json(obj)
    with pytest.raises(ValueError):
        jsonio.matrix_from_json([[1.0, 0.0]])


def test_weight_data_round_trip():
    w = weights.WeightData(rank=2, weights=((0, 1), (2, -1)))
    assert jsonio.weight_data_from_json(jsonio.weight_data_to_json(w)) == w
    flat = jsonio.weight_data_to_json(weights.WeightData.of([0, 0, 3]))
    assert flat == {"rank": 1, "weights": [[0], [0], [3]]}


def test_weight_data_accepts_bare_integers():
    w = jsonio.weight_data_from_json({"rank": 1, "weights": [0, 1, 3]})
    assert w == weights.WeightData.of([0, 1, 3])


def test_weight_data_rejects_malformed():
    with pytest.raises(ValueError):
        jsonio.weight_data_from_json({"rank": 1})
    with pytest.raises(ValueError):
        jsonio.weight_data_from_json({"rank": 1, "weights": []})
    with pytest.raises(ValueError):
        jsonio.weight_data_from_json("nope")


def test_connection_round_trip():
    rng = np.random.default_rng(12)
    d = _decomp([0, 1, 1, 2])
    w = d.index_weights()[:, 0]
    mask_up = (w[:, None] - w[None, :]) == 1
    a = np.where(mask_up, rng.standard_normal((4, 4)), 0.0).astype(complex)
    b = np.where(mask_up.T, rng.standard_normal((4, 4)), 0.0).astype(complex)
    c = connection.ConnectionData(decomposition=d, a=a, b=b)
    back = jsonio.connection_from_json(json.loads(jsonio.dumps(jsonio.connection_to_json(c))))
    assert np.array_equal(back.a, c.a)
    assert np.array_equal(back.b, c.b)
    assert back.decomposition.blocks == c.decomposition.blocks


def test_connection_rejects_missing_field():
    obj = jsonio.connection_to_json(
        connection.ConnectionData(
            decomposition=_decomp([0, 1]), a=np.zeros((2, 2)), b=np.zeros((2, 2))
        )
    )
    del obj["B"]
    with pytest.raises(ValueError):
        jsonio.connection_from_json(obj)


def test_frame_tuple_round_trip_with_weights():
    rng = np.random.default_rng(13)
    w = weights.WeightData(rank=2, weights=((0, 0), (1, 0), (0, 1)))
    t = connection.FrameTuple(
        a_list=(rng.standard_normal((3, 3)), rng.standard_normal((3, 3))),
        weights=w,
    )
    back = jsonio.frame_tuple_from_json(jsonio.frame_tuple_to_json(t))
    assert back.rank == 2
    assert back.weights == w
    for m1, m2 in zip(back.a_list, t.a_list):
        assert np.array_equal(m1, m2)
    for b in back.b_list:
        assert np.count_nonzero(b) == 0


def test_frame_tuple_rank_must_match():
    obj = {"rank": 2, "A_list": [jsonio.matrix_to_json(np.eye(2))]}
    with pytest.raises(ValueError):
        jsonio.frame_tuple_from_json(obj)


def test_rep_round_trip():
    d = weights.chains(_decomp([0, 0, 1]))
    dq = quiver.double(quiver.chain_quiver(d))
    rng = np.random.default_rng(14)
    rep = quiver.DoubleQuiverRep(
        quiver=dq,
        matrices={
            "A1": rng.standard_normal((1, 2)),
            "B1": rng.standard_normal((2, 1)),
        },
    )
    back = jsonio.rep_from_json(json.loads(jsonio.dumps(jsonio.rep_to_json(rep))))
    assert quiver.same_quiver(back.quiver, rep.quiver)
    for label in rep.matrices:
        assert np.array_equal(back.matrices[label], rep.matrices[label])


def test_rep_requires_paired_labels():
    base = {
        "vertices": [1, 1],
        "arrows": [
            {"tail": 0, "head": 1, "label": "A1"},
            {"tail": 1, "head": 0, "label": "B1"},
        ],
        "matrices": {
            "A1": jsonio.matrix_to_json(np.eye(1)),
            "B1": jsonio.matrix_to_json(np.eye(1)),
        },
    }
    assert jsonio.rep_from_json(json.loads(json.dumps(base))).quiver.pairs == (("A1", "B1"),)

    missing = json.loads(json.dumps(base))
    missing["arrows"] = missing["arrows"][:1]
    del missing["matrices"]["B1"]
    with pytest.raises(ValueError):
        jsonio.rep_from_json(missing)

    not_reversed = json.loads(json.dumps(base))
    not_reversed["arrows"][1]["tail"] = 0
    not_reversed["arrows"][1]["head"] = 1
    with pytest.raises(ValueError):
        jsonio.rep_from_json(not_reversed)

    unpaired = json.loads(json.dumps(base))
    unpaired["arrows"].append({"tail": 0, "head": 0, "label": "C1"})
    unpaired["matrices"]["C1"] = jsonio.matrix_to_json(np.eye(1))
    with pytest.raises(ValueError):
        jsonio.rep_from_json(unpaired)


def test_dumps_is_canonical():
    assert jsonio.dumps({"b": 1, "a": [1.5, -2.0]}) == '{"a": [1.5, -2.0], "b": 1}'
    with pytest.raises(ValueError):
        jsonio.dumps({"x": float("inf")})


def test_loads_path(tmp_path):
    p = tmp_path / "m.json"
    p.write_text(jsonio.dumps(jsonio.matrix_to_json(np.eye(2))), encoding="utf-8")
    m = jsonio.matrix_from_json(jsonio.loads_path(str(p)))
    assert np.array_equal(m, np.eye(2))
