import csv

import pytest

from conjmeasure import csvio
from conjmeasure.characters import build_table
from conjmeasure.errors import DomainError
from conjmeasure.measures import conjugacy
from conjmeasure.moments import convergence_report


def read(path):
    with open(path, encoding="utf-8", newline="") as fh:
        return list(csv.reader(fh))


def test_measure_csv_has_three_rows(tmp_path):
    path = tmp_path / "m.csv"
    csvio.emit_csv(csvio.measure_rows(conjugacy(3)), "measure", str(path))
    rows = read(path)
    assert rows[0] == ["lambda", "mass_num", "mass_den", "mass_float"]
    assert rows[1:] == [["3", "1", "2", "0.5"], ["2+1", "1", "3", "0.3333333333333333"], ["1+1+1", "1", "6", "0.16666666666666666"]]


def test_empty_report_is_header_only(tmp_path):
    path = tmp_path / "r.csv"
    csvio.emit_csv([], "moments", str(path))
    assert path.read_bytes() == (",".join(csvio.SCHEMAS["moments"]) + "\n").encode()


def test_chartab_csv_n3():
    text = csvio.emit_csv(csvio.chartab_rows(build_table(3)), "chartab", None)
    lines = text.split("\n")
    assert lines[0] == "lambda,mu,chi" and lines[-1] == ""
    assert len(lines) - 2 == 9
    assert "2+1,3,-1" in lines
    assert "\r" not in text


def test_report_rows_split_rationals():
    (row,) = csvio.report_rows(convergence_report([3], "conjugacy", [((2,), 1)]))
    assert row[:6] == (3, "conjugacy", "2^1", 1, 3, 2)
    assert row[7:9] == (0, 1)


def test_unknown_schema():
    with pytest.raises(DomainError):
        csvio.emit_csv([], "nope", None)


def test_unwritable_path(tmp_path):
    with pytest.raises(OSError):
        csvio.emit_csv([], "chartab", str(tmp_path / "missing" / "x.csv"))
