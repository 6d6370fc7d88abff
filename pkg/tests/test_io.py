# coding: utf-8
"""Tests for stpm module. File input and output."""
from pathlib import Path

import pytest

from .const import WORKED_ROWS
from stpm.exceptions import StpmConfigError
from stpm.exceptions import StpmDataError
from stpm.io import load_config
from stpm.io import load_plants
from stpm.io import read_csv_table
from stpm.io import read_json
from stpm.io import symbolic_database_from_table
from stpm.io import write_json
from stpm.io import write_raw_csv
from stpm.io import write_symbolic_csv
from stpm.model.symbols import SymbolicDatabase


def write(path: Path, text: str) -> Path:
    """Write a text file and return its path."""
    path.write_text(text, "utf-8")
    return path


def test_read_csv_table(tmp_path: Path) -> None:
    """Test numeric columns without timestamps."""
    table = read_csv_table(write(tmp_path / "in.csv", "C, D\n1.5, 2\n0,-3e2\n"))

    assert table.columns == {"C": [1.5, 0.0], "D": [2.0, -300.0]}
    assert table.timestamps is None


def test_read_csv_table_timestamps(tmp_path: Path) -> None:
    """Test naive timestamps are localized in the configured timezone."""
    path = write(
        tmp_path / "in.csv",
        "timestamp,C\n2024-03-01 00:00,1\n2024-03-01 01:00,2\n",
    )
    table = read_csv_table(path, tz_name="Europe/Paris")

    assert list(table.columns) == ["C"]
    assert table.timestamps is not None
    assert str(table.timestamps.tz) == "Europe/Paris"
    assert table.timestamps[1].hour == 1


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("C,D\n1,2\n,3\n", 3, "C"),
        ("C,D\n1,2\n3,x\n", 3, "D"),
        ("C,D\n1,2\n3,inf\n", 3, "D"),
        ("timestamp,C\n2024-01-01,1\nsoon,2\n", 3, "timestamp"),
        ("timestamp,C\n2024-01-02,1\n2024-01-01,2\n", 3, "timestamp"),
        ("timestamp,C\n2024-01-01,1\n2024-01-01,2\n", 3, "timestamp"),
    ],
)
def test_read_csv_table_errors(
    tmp_path: Path, text: str, line: int, column: str
) -> None:
    """Test malformed cells are reported with their line and column."""
    with pytest.raises(StpmDataError) as err:
        read_csv_table(write(tmp_path / "in.csv", text))

    assert err.value.line == line
    assert err.value.column == column


def test_read_csv_table_bad_files(tmp_path: Path) -> None:
    """Test missing, empty and series-less files."""
    with pytest.raises(StpmConfigError):
        read_csv_table(tmp_path / "missing.csv")
    with pytest.raises(StpmDataError):
        read_csv_table(write(tmp_path / "empty.csv", ""))
    with pytest.raises(StpmDataError):
        read_csv_table(write(tmp_path / "stamps.csv", "timestamp\n2024-01-01\n"))


def test_symbolic_round_trip(tmp_path: Path, worked_symbolic: SymbolicDatabase) -> None:
    """Test a symbolic database is read back from the CSV it was written to."""
    path = tmp_path / "out" / "worked.csv"
    write_symbolic_csv(worked_symbolic, path, start="2024-01-01")
    table = read_csv_table(path, symbolic=True)
    db = symbolic_database_from_table(table)

    assert db.series_ids == list(WORKED_ROWS)
    for series_id, row in WORKED_ROWS.items():
        assert "".join(db[series_id].labels()) == row
    assert table.timestamps is not None
    assert len(table.timestamps) == 42
    assert str(table.timestamps[-1]) == "2024-01-02 17:00:00+00:00"


def test_write_raw_csv(tmp_path: Path) -> None:
    """Test raw columns are written without timestamps by default."""
    path = tmp_path / "raw.csv"
    write_raw_csv({"A": [0.25, 1.0], "B": [3.0, -1.5]}, path)

    assert path.read_text("utf-8").splitlines() == ["A,B", "0.25,3.0", "1.0,-1.5"]
    assert read_csv_table(path).columns == {"A": [0.25, 1.0], "B": [3.0, -1.5]}


def test_load_config(tmp_path: Path) -> None:
    """Test YAML configuration files."""
    path = write(
        tmp_path / "run.yaml",
        "input: data.csv\nfactor_m: 3\nseason:\n  max_period: 2\n",
    )

    assert load_config(path) == {
        "input": "data.csv",
        "factor_m": 3,
        "season": {"max_period": 2},
    }
    assert load_config(write(tmp_path / "empty.yaml", "")) == {}


def test_load_config_errors(tmp_path: Path) -> None:
    """Test missing, invalid and non-mapping configuration files."""
    with pytest.raises(StpmConfigError):
        load_config(tmp_path / "missing.yaml")
    with pytest.raises(StpmConfigError) as err:
        load_config(write(tmp_path / "bad.yaml", "season:\n  max_period: [2\n"))
    assert "line" in str(err.value)
    with pytest.raises(StpmConfigError):
        load_config(write(tmp_path / "list.yaml", "- 1\n- 2\n"))


def test_load_plants(tmp_path: Path) -> None:
    """Test plants are read from a YAML list."""
    path = write(
        tmp_path / "plants.yaml",
        "- events:\n"
        "    - {series: S1, symbol: '1', start: 1, end: 2}\n"
        "    - {series: S2, symbol: '1', start: 3, end: 3}\n"
        "  season_count: 2\n"
        "  season_density: 3\n"
        "  intra_period: 1\n"
        "  inter_distance: 6\n",
    )
    plants = load_plants(path)

    assert len(plants) == 1
    assert plants[0].series == ["S1", "S2"]
    assert plants[0].granules() == [1, 2, 3, 9, 10, 11]
    with pytest.raises(StpmConfigError):
        load_plants(write(tmp_path / "one.yaml", "season_count: 2\n"))


def test_json_files(tmp_path: Path) -> None:
    """Test the stable JSON layout and invalid documents."""
    path = tmp_path / "out" / "doc.json"
    write_json(path, {"b": [1, 2], "a": "é"})

    assert path.read_text("utf-8").splitlines() == [
        "{",
        '  "b": [',
        "    1,",
        "    2",
        "  ],",
        '  "a": "é"',
        "}",
    ]
    assert path.read_text("utf-8").endswith("}\n")
    assert read_json(path) == {"b": [1, 2], "a": "é"}
    with pytest.raises(StpmDataError) as err:
        read_json(write(tmp_path / "bad.json", '{\n  "a": \n}'))
    assert err.value.line == 3
