import json
from pathlib import Path

from fliess_prelie.census import census_rows, dimension_rows, load_table, persist_table


def test_dimension_rows():
    rows = dimension_rows(6)
    assert [r["dim_V"] for r in rows] == [1, 1, 2, 3, 5, 8]
    assert [r["dim_H"] for r in rows] == [1, 2, 4, 8, 15, 30]
    assert all(r["dim_V"] == r["dim_V_series"] == r["admissible"] for r in rows)
    assert all(r["dim_H"] == r["dim_H_series"] for r in rows)
    assert [r["ptrees"] for r in rows] == [1, 2, 5, 14, 42, 134]


def test_census_rows():
    rows = census_rows(4, 2)
    assert [r["enumerated"] for r in rows] == [2, 7, 32, 167]
    assert all(r["enumerated"] == r["series"] for r in rows)
    assert rows[0]["single_root"] == 2


def test_persist_and_load(tmp_path, capsys):
    rows = census_rows(3, 1)
    saved = persist_table(rows, tmp_path / "tables", "census")
    assert saved is not None
    assert saved.endswith((".parquet", ".json"))
    assert "[census] Table saved at:" in capsys.readouterr().out
    assert load_table(Path(saved)) == rows


def test_empty_table_is_written_as_json(tmp_path):
    saved = persist_table([], tmp_path, "empty")
    assert saved.endswith("empty.json")
    assert json.loads((tmp_path / "empty.json").read_text(encoding="utf-8")) == []
