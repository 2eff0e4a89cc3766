import io

import pytest

from pyteach.core import class_from_json, read_class, read_csv, read_json, to_frame, write_csv, write_json
from pyteach.types import ValidationError


class TestCsv:
    def test_named_rows(self):
        cls = read_csv(io.StringIO(",a,b\nf,1,0\ng,0,1\n"))
        assert cls.instance_names == ("a", "b")
        assert cls.hypothesis_names == ("f", "g")
        assert cls.rows == [(1, 0), (0, 1)]

    def test_named_rows_without_leading_header_field(self):
        cls = read_csv(io.StringIO("a,b\nf,1,0\ng,0,1\n"))
        assert cls.instance_names == ("a", "b")
        assert cls.hypothesis_names == ("f", "g")

    def test_unnamed_rows(self):
        cls = read_csv(io.StringIO("a,b,c\n1,0,0\n0,1,1\n"))
        assert cls.hypothesis_names == ("h1", "h2")
        assert cls.rows == [(1, 0, 0), (0, 1, 1)]

    def test_errors(self):
        with pytest.raises(ValidationError):
            read_csv(io.StringIO("a,b\n"))
        with pytest.raises(ValidationError):
            read_csv(io.StringIO("a,b\n1,0\n1\n"))
        with pytest.raises(ValidationError):
            read_csv(io.StringIO("a,b\n1,2\n"))
        with pytest.raises(ValidationError):
            read_csv(io.StringIO("a,b\n1,0\n1,0\n"))

    def test_write_then_read(self, warmuth):
        cls = read_csv(io.StringIO(write_csv(warmuth)))
        assert cls.rows == warmuth.rows
        assert cls.hypothesis_names == warmuth.hypothesis_names
        assert cls.instance_names == warmuth.instance_names

    def test_read_class_dispatches_on_extension(self, tmp_path, appendix):
        path = tmp_path / "appendix.csv"
        write_csv(appendix, path)
        assert read_class(path).rows == appendix.rows

        path = tmp_path / "appendix.json"
        write_json(appendix, path)
        assert read_class(path).hypothesis_names == appendix.hypothesis_names

        with pytest.raises(ValidationError):
            read_class(tmp_path / "appendix.txt")


class TestJson:
    def test_read_json(self):
        data = {
            "instances": ["a", "b"],
            "hypotheses": [{"name": "f", "labels": [1, 0]}, {"name": "g", "labels": [0, 1]}],
        }
        cls = class_from_json(data)
        assert cls.hypothesis_names == ("f", "g")
        assert cls.rows == [(1, 0), (0, 1)]

    def test_missing_names_use_defaults(self):
        cls = class_from_json({"hypotheses": [{"labels": [1]}, {"labels": [0]}]})
        assert cls.hypothesis_names == ("h1", "h2")
        assert cls.instance_names == ("x1",)

    def test_malformed(self):
        with pytest.raises(ValidationError):
            read_json(io.StringIO("{"))
        with pytest.raises(ValidationError):
            read_json(io.StringIO('{"instances": []}'))

    def test_frame(self, warmuth):
        df = to_frame(warmuth)
        assert list(df.columns) == ["x1", "x2", "x3", "x4", "x5"]
        assert df.loc["h6"].tolist() == [1, 1, 0, 1, 0]
