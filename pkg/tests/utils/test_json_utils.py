"""Tests for JSON utilities."""

import json

import numpy as np

from sqwalk.utils.json_utils import format_json, to_jsonable, write_json


class TestToJsonable:
    """Test to_jsonable function."""

    def test_converts_numpy_scalars(self):
        """Test numpy scalars become Python numbers."""
        result = to_jsonable({"x": np.float64(0.5), "n": np.int64(3)})
        assert result == {"x": 0.5, "n": 3}
        assert type(result["n"]) is int

    def test_converts_arrays_and_tuples(self):
        """Test arrays and tuples become lists."""
        assert to_jsonable((np.arange(3), (1, 2))) == [[0, 1, 2], [1, 2]]

    def test_converts_complex_numbers(self):
        """Test complex values become re/im objects."""
        assert to_jsonable(complex(1.0, -2.0)) == {"re": 1.0, "im": -2.0}

    def test_stringifies_keys(self):
        """Test non-string keys are stringified."""
        assert to_jsonable({1: "a"}) == {"1": "a"}


class TestFormatJson:
    """Test format_json and write_json."""

    def test_sorts_keys(self):
        """Test output is key-sorted and indented."""
        text = format_json({"b": 1, "a": 2})
        assert text.index('"a"') < text.index('"b"')
        assert text.startswith("{\n  ")

    def test_write_json_round_trips(self, tmp_path):
        """Test written file parses back to the same payload."""
        path = tmp_path / "report.json"
        write_json(path, {"slope": np.float64(0.56), "n": [10, 20]})
        assert json.loads(path.read_text(encoding="utf-8")) == {"slope": 0.56, "n": [10, 20]}
        assert path.read_text(encoding="utf-8").endswith("\n")
