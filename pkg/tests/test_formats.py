"""Interchange format tests: config documents, code-set files, reports."""

import re

import numpy as np
import pytest

from zcacs import (
    CodesetFormatError,
    ConfigError,
    build_codeset,
    config_to_document,
    load_codeset,
    load_config,
    parse_config_document,
    report_to_text,
    write_codeset,
)
from zcacs.formats import (
    BINARY_MAGIC,
    REPORT_MAGIC,
    TEXT_MAGIC,
    parse_report_text,
    write_codeset_binary,
    write_codeset_text,
)
from zcacs.generator import CodeSet


MINIMAL_DOC = {
    "row_blocks": [[2, 1, 1]],
    "col_blocks": [[3, 1, 1]],
}


class TestConfigDocuments:
    def test_bundled_configs_all_parse(self, config_dir):
        for path in sorted(config_dir.glob("*.json")):
            cfg = load_config(path)
            assert cfg.params.spec.col_span >= 1

    def test_defaults_fill_in(self):
        cfg = parse_config_document(MINIMAL_DOC)
        assert cfg.row_perms == ((1,),)
        assert cfg.row_linear == ((0,),)
        assert cfg.theta_offsets == (0,) * 6

    def test_document_round_trip_is_lossless(self, config_dir):
        for path in sorted(config_dir.glob("*.json")):
            cfg = load_config(path)
            doc = config_to_document(cfg)
            assert parse_config_document(doc) == cfg
            # every field is explicit in the normalized form
            assert set(doc) == {
                "row_blocks",
                "col_blocks",
                "row_primed",
                "col_primed",
                "row_perms",
                "col_perms",
                "row_linear",
                "col_linear",
                "theta_offsets",
            }

    @pytest.mark.parametrize(
        "mutate, fragment",
        [
            (lambda d: d.pop("col_blocks"), "col_blocks"),
            (lambda d: d.update(surprise=[1]), "surprise"),
            (lambda d: d.update(row_blocks=[[2, 1]]), "row_blocks[0]"),
            (lambda d: d.update(row_blocks="nope"), "row_blocks"),
            (lambda d: d.update(row_blocks=[[2, 1, True]]), "row_blocks[0]"),
            (lambda d: d.update(row_primed=[2.5]), "row_primed"),
            (lambda d: d.update(theta_offsets=[0]), "theta_offsets"),
        ],
    )
    def test_field_errors_name_the_field(self, mutate, fragment):
        doc = {"row_blocks": [[2, 1, 1]], "col_blocks": [[3, 1, 1]]}
        mutate(doc)
        with pytest.raises(ConfigError, match=re.escape(fragment)):
            parse_config_document(doc)

    def test_non_object_document_rejected(self):
        with pytest.raises(ConfigError):
            parse_config_document([1, 2, 3])

    def test_structural_violations_become_config_errors(self):
        with pytest.raises(ConfigError):
            parse_config_document({"row_blocks": [[4, 1, 1]], "col_blocks": [[3, 1, 1]]})
        with pytest.raises(ConfigError):
            parse_config_document(
                {"row_blocks": [[2, 1, 2]], "col_blocks": [[3, 1, 1]]}
            )  # exponent above digit count
        with pytest.raises(ConfigError):
            parse_config_document(
                dict(MINIMAL_DOC, row_perms=[[2, 1]])
            )  # not a permutation of one digit

    def test_invalid_json_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ConfigError, match="JSON"):
            load_config(path)


@pytest.fixture(scope="module")
def small_codeset(config_dir):
    return build_codeset(load_config(config_dir / "ccc_6x2x3.json"))


class TestCodesetFiles:
    @pytest.mark.parametrize("form", ["text", "binary"])
    def test_round_trip_is_bit_identical(self, small_codeset, tmp_path, form):
        path = tmp_path / f"family.{form}"
        write_codeset(small_codeset, path, form)
        loaded = load_codeset(path)
        assert loaded == small_codeset
        assert loaded.meta == small_codeset.meta
        assert loaded.provenance == small_codeset.provenance
        for g1, g2 in zip(loaded.family, small_codeset.family):
            for a1, a2 in zip(g1, g2):
                assert np.array_equal(a1.entries, a2.entries)

    def test_round_trip_of_the_large_example(self, example1_codeset, tmp_path):
        path = tmp_path / "ex1.txt"
        write_codeset_text(example1_codeset, path)
        assert load_codeset(path) == example1_codeset

    def test_binary_is_smaller_than_text(self, small_codeset, tmp_path):
        t = tmp_path / "f.txt"
        b = tmp_path / "f.bin"
        write_codeset_text(small_codeset, t)
        write_codeset_binary(small_codeset, b)
        assert b.stat().st_size < t.stat().st_size

    def test_unknown_form_rejected(self, small_codeset, tmp_path):
        with pytest.raises(ConfigError):
            write_codeset(small_codeset, tmp_path / "x", "yaml")

    def test_files_without_provenance_round_trip(self, small_codeset, tmp_path):
        bare = CodeSet(small_codeset.family, small_codeset.meta, None)
        path = tmp_path / "bare.txt"
        write_codeset_text(bare, path)
        loaded = load_codeset(path)
        assert loaded.provenance is None
        assert loaded == bare

    def test_text_magic_checked(self, tmp_path):
        path = tmp_path / "junk.txt"
        path.write_text("hello\n")
        with pytest.raises(CodesetFormatError, match=TEXT_MAGIC):
            load_codeset(path)

    def test_truncated_binary_rejected(self, small_codeset, tmp_path):
        path = tmp_path / "f.bin"
        write_codeset_binary(small_codeset, path)
        blob = path.read_bytes()
        for cut in (len(BINARY_MAGIC) + 2, len(blob) - 3):
            path.write_bytes(blob[:cut])
            with pytest.raises(CodesetFormatError):
                load_codeset(path)

    def test_binary_header_must_be_json(self, tmp_path):
        blob = BINARY_MAGIC + (5).to_bytes(4, "little") + b"{nope"
        path = tmp_path / "f.bin"
        path.write_bytes(blob)
        with pytest.raises(CodesetFormatError, match="JSON"):
            load_codeset(path)

    def test_missing_header_field_rejected(self, small_codeset, tmp_path):
        path = tmp_path / "f.txt"
        write_codeset_text(small_codeset, path)
        lines = [l for l in path.read_text().splitlines() if not l.startswith("modulus:")]
        path.write_text("\n".join(lines) + "\n")
        with pytest.raises(CodesetFormatError, match="modulus"):
            load_codeset(path)

    def test_header_must_agree_with_embedded_config(self, small_codeset, tmp_path):
        path = tmp_path / "f.txt"
        write_codeset_text(small_codeset, path)
        text = path.read_text().replace("sets: 6", "sets: 7")
        path.write_text(text)
        with pytest.raises(CodesetFormatError, match="config"):
            load_codeset(path)

    def test_entry_out_of_range_rejected(self, small_codeset, tmp_path):
        path = tmp_path / "f.txt"
        write_codeset_text(small_codeset, path)
        lines = path.read_text().splitlines()
        # first body line after end-header that is not a comment
        for i, line in enumerate(lines):
            if line == "end-header":
                body = i + 2  # skip the "# set 0" comment
                break
        lines[body + 1] = lines[body + 1].replace("0", "9", 1)
        path.write_text("\n".join(lines) + "\n")
        with pytest.raises(CodesetFormatError, match="entries must lie"):
            load_codeset(path)

    def test_non_integer_entry_rejected(self, small_codeset, tmp_path):
        path = tmp_path / "f.txt"
        write_codeset_text(small_codeset, path)
        path.write_text(path.read_text().replace("\n0 ", "\nx ", 1))
        with pytest.raises(CodesetFormatError, match="bad entry"):
            load_codeset(path)

    def test_wrong_entry_count_rejected(self, small_codeset, tmp_path):
        path = tmp_path / "f.txt"
        write_codeset_text(small_codeset, path)
        lines = path.read_text().splitlines()
        path.write_text("\n".join(lines[:-1]) + "\n")  # drop the last row
        with pytest.raises(CodesetFormatError, match="expected"):
            load_codeset(path)

    def test_missing_end_header_rejected(self, small_codeset, tmp_path):
        path = tmp_path / "f.txt"
        write_codeset_text(small_codeset, path)
        path.write_text(path.read_text().replace("end-header\n", ""))
        # the first data row is reported as a malformed header line
        with pytest.raises(CodesetFormatError, match="header"):
            load_codeset(path)


class TestReports:
    def test_report_text_round_trip(self, small_codeset):
        from zcacs import verify_ccc

        report = verify_ccc(small_codeset)
        text = report_to_text(report)
        assert text.startswith(REPORT_MAGIC)
        fields = parse_report_text(text)
        assert fields["verdict"] == "pass"
        assert fields["sets"] == "6"
        assert fields["exact"] == "false"
        assert fields["peak_expected"] == "36"

    def test_report_lists_violations(self, small_codeset):
        import dataclasses

        from zcacs import verify_ccc

        lying = CodeSet(
            small_codeset.family, dataclasses.replace(small_codeset.meta, sets=5), None
        )
        text = report_to_text(verify_ccc(lying))
        fields = parse_report_text(text)
        assert fields["verdict"] == "fail"
        assert any("declared 5 sets" in e for e in fields["_extras"])

    def test_report_magic_enforced(self):
        with pytest.raises(CodesetFormatError):
            parse_report_text("not a report\n")
