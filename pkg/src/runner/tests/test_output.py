import json

import numpy as np
import pytest

from ..output import Table, write_outputs, write_summary


@pytest.fixture
def table():
    return Table("trajectory", ("t", "P_1"), np.array([[0.0, 1.0], [0.5, 0.25]]))


def test_rows_follow_headers():
    """Flat rows are reshaped to the header width."""
    table = Table("flat", ("a", "b"), [1, 2, 3, 4])

    assert table.rows.shape == (2, 2)
    np.testing.assert_array_equal(table.column("b"), [2, 4])


def test_csv_layout(tmp_path, table):
    """One CSV per table with a plain header line, plus summary.json."""
    paths = write_outputs("run", [table], {"answer": 42}, tmp_path)

    assert [p.name for p in paths] == ["trajectory.csv", "summary.json"]
    lines = (tmp_path / "run" / "trajectory.csv").read_text().splitlines()
    assert lines[0] == "t,P_1"
    assert len(lines) == 3
    assert [float(x) for x in lines[2].split(",")] == [0.5, 0.25]


def test_outputs_are_deterministic(tmp_path, table):
    """The same results write byte-identical files."""
    first = write_outputs("a", [table], {"b": 1.0, "a": [1, 2]}, tmp_path)
    second = write_outputs("b", [table], {"a": [1, 2], "b": 1.0}, tmp_path)

    for x, y in zip(first, second):
        assert x.read_bytes() == y.read_bytes()


def test_summary_serializes_numpy_and_complex(tmp_path):
    """Complex numbers become [re, im]; numpy scalars and arrays become JSON."""
    path = write_summary({"c": 1 + 2j, "x": np.float64(0.5), "v": np.arange(3)}, tmp_path)

    data = json.loads(path.read_text())
    assert data == {"c": [1.0, 2.0], "x": 0.5, "v": [0, 1, 2]}


def test_header_only_table(tmp_path):
    """An empty table still writes its header."""
    empty = Table("sweep", ("value", "P_1"), np.empty((0, 2)))

    write_outputs("empty", [empty], {}, tmp_path)

    assert (tmp_path / "empty" / "sweep.csv").read_text().strip() == "value,P_1"


def test_format_uses_headers(table):
    """Console tables show the headers."""
    text = table.format()

    assert "P_1" in text
    assert "0.25" in text
