import io
import json
import subprocess
import sys

import pytest

from multiehrhart.cli import run


def write(tmp_path, vertices, name="p.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"vertices": vertices}))
    return str(path)


def call(*argv):
    out = io.StringIO()
    status = run(list(argv), out)
    return status, out.getvalue()


def call_json(*argv):
    status, text = call(*argv)
    return status, json.loads(text)


SQUARE = [[0, 0], [1, 0], [0, 1], [1, 1]]
SIMPLEX2 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_series_of_standard_simplex(tmp_path):
    status, doc = call_json("series", write(tmp_path, SIMPLEX2))
    assert status == 0
    assert doc["numerator"] == [[[0, 0, 0, 0], "1"]]
    assert doc["denominator_vertices"] == SIMPLEX2


def test_delta_of_square(tmp_path):
    status, doc = call_json("delta", write(tmp_path, SQUARE))
    assert status == 0
    assert doc["delta"] == [[[[0, 0], "1"]], [], [[[1, 1], "-1"]], []]


def test_poly_of_square(tmp_path):
    status, doc = call_json("poly", write(tmp_path, SQUARE))
    assert status == 0
    assert doc["total_degree"] == 2
    assert [c[0] for c in doc["coefficients"]] == [[0, 0], [0, 1], [1, 0], [1, 1]]


def test_eval_at_zero_is_one(tmp_path):
    status, doc = call_json("eval", write(tmp_path, SQUARE), "--n", "0")
    assert status == 0
    value = doc["value"]
    # numerator equals the denominator: (1 - q1)(1 - q2)
    assert value["numerator"] == [
        [[0, 0], "1"], [[0, 1], "-1"], [[1, 0], "-1"], [[1, 1], "1"]
    ]
    assert doc["oracle_agrees"] is None


def test_eval_with_interior(tmp_path):
    status, doc = call_json("eval", write(tmp_path, SQUARE), "--n", "2", "--interior")
    assert status == 0
    assert doc["oracle_agrees"] is True
    assert doc["interior_transform"] == [[[1, 1], "1"]]


def test_reciprocity(tmp_path):
    status, doc = call_json("reciprocity", write(tmp_path, SQUARE), "--n", "2")
    assert status == 0 and doc["holds"] is True


def test_specialize_classical_counts(tmp_path):
    status, doc = call_json("specialize", write(tmp_path, SQUARE))
    assert status == 0
    assert doc["kind"] == "classical"
    assert doc["counts"] == [1, 4, 9, 16, 25, 36]


def test_specialize_q_ehrhart(tmp_path):
    status, doc = call_json("specialize", write(tmp_path, SQUARE), "--lambda", "1,2")
    assert status == 0
    assert doc["kind"] == "q-ehrhart" and doc["lambda"] == [1, 2]


def test_verify_square(tmp_path):
    status, doc = call_json("verify", write(tmp_path, SQUARE), "--bound", "3")
    assert status == 0
    assert doc["all_passed"] is True
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_verify_outside_orthant_skips(tmp_path):
    status, doc = call_json("verify", write(tmp_path, [[-1, 0], [1, 0], [0, 1]]), "--bound", "2")
    assert status == 0
    statuses = {c["check"]: c["status"] for c in doc["checks"]}
    assert statuses["brion"] == "pass"
    assert statuses["polynomial_oracle"] == "skipped"


def test_pretty_output(tmp_path):
    status, text = call("series", write(tmp_path, SQUARE), "--format", "pretty")
    assert status == 0
    assert text.strip() == "(-q1*q2*t^2 + 1) / ((1 - t)(1 - q1*t)(1 - q2*t)(1 - q1*q2*t))"


def test_output_is_deterministic(tmp_path):
    path = write(tmp_path, [[0, 0, 0], [2, 1, 0], [0, 1, 2], [1, 2, 1]])
    for cmd in ("series", "delta", "poly"):
        assert call(cmd, path) == call(cmd, path)


# -- errors


def error_of(*argv):
    status, doc = call_json(*argv)
    assert status == 2
    return doc["error"]


def test_missing_file(tmp_path):
    err = error_of("series", str(tmp_path / "nope.json"))
    assert err["code"] == "invalid_input"


def test_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{vertices: ")
    assert error_of("series", str(path))["code"] == "invalid_input"


@pytest.mark.parametrize("doc", [[], {"vertices": [[0.5, 1]]}, {"vertices": [[True]]}, {}])
def test_wrong_shape(tmp_path, doc):
    path = tmp_path / "shape.json"
    path.write_text(json.dumps(doc))
    assert error_of("series", str(path))["code"] == "invalid_input"


def test_not_a_vertex(tmp_path):
    err = error_of("series", write(tmp_path, [[0, 0], [2, 0], [1, 0], [0, 1]]))
    assert err["code"] == "not_a_vertex"
    assert err["datum"] == {"index": 2, "point": [1, 0]}


def test_mixed_arity(tmp_path):
    assert error_of("series", write(tmp_path, [[0, 0], [1]]))["code"] == "dimension_mismatch"


def test_missing_n(tmp_path):
    assert error_of("eval", write(tmp_path, SQUARE))["code"] == "invalid_parameter"


def test_reciprocity_needs_positive_n(tmp_path):
    err = error_of("reciprocity", write(tmp_path, SQUARE), "--n", "0")
    assert err["code"] == "invalid_parameter"


def test_non_generic_lambda(tmp_path):
    err = error_of("specialize", write(tmp_path, SQUARE), "--lambda", "0,0")
    assert err["code"] == "non_generic_linear_form"


def test_lambda_length(tmp_path):
    err = error_of("specialize", write(tmp_path, SQUARE), "--lambda", "1,2,3")
    assert err["code"] == "invalid_parameter"


def test_poly_outside_orthant(tmp_path):
    err = error_of("poly", write(tmp_path, [[-1, 0], [1, 0], [0, 1]]))
    assert err["code"] == "negative_orthant_violation"


def test_console_entry_point(tmp_path):
    path = write(tmp_path, [[0], [2]])
    proc = subprocess.run(
        [sys.executable, "-m", "multiehrhart", "series", path], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["denominator_vertices"] == [[0], [2]]
