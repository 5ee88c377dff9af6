import json
import os
import subprocess
import sys

import jsonschema
import pytest

from tanisaki import cli

SCHEMA = json.load(
    open(os.path.join(os.path.dirname(cli.__file__), "report_schema.json"))
)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc


class TestExitCodes:
    def test_pass_is_zero(self, capsys):
        code, _ = run_json(capsys, "rank-lemma", "--partition", "2,1")
        assert code == 0

    def test_usage_errors_are_two(self, capsys):
        assert cli.main(["presentation", "--partition", "1,2"]) == 2
        capsys.readouterr()
        assert cli.main(["verify", "--partition", "2,1,1,1,1,1"]) == 2  # n=7 heavy
        capsys.readouterr()
        assert cli.main(["sweep", "--n", "9"]) == 2
        capsys.readouterr()
        assert cli.main(["gamma", "--partition", "2,1", "--subset", "a,b", "--d", "1"]) == 2
        capsys.readouterr()
        assert cli.main(["presentation"]) == 2  # no partitions at all
        capsys.readouterr()

    def test_verification_failure_is_one(self, capsys, monkeypatch):
        def broken(p, cfg):
            return {"partition": list(p.parts), "ok": False, "failures": [{"s": 1}]}

        monkeypatch.setitem(cli._SUITE_FN, "rank-lemma", broken)
        code, out = run_cli(
            capsys, "verify", "--partition", "2,1", "--suite", "rank-lemma"
        )
        assert code == 1

    def test_gamma_below_claimed_range_still_passes(self, capsys):
        code, doc = run_json(
            capsys, "gamma", "--partition", "2,1", "--subset", "1,2", "--d", "0"
        )
        assert code == 0
        r = doc["results"][0]
        assert r["gamma_polynomial"] == "1" and not r["claimed"]


class TestReports:
    def test_presentation_json_schema_and_content(self, capsys):
        code, doc = run_json(
            capsys, "presentation", "--partition", "2,1", "--flavor", "both"
        )
        assert code == 0
        res = doc["results"][0]
        assert res["rank"] == 3
        assert res["p_dual"] == [0, 1, 3]
        flavors = {blk["flavor"]: blk for blk in res["presentations"]}
        assert flavors["cohomology"]["hilbert_series"] == [1, 2]
        assert flavors["cohomology"]["quotient_rank"] == 3
        assert flavors["ktheory"]["quotient_rank"] == 3

    def test_verify_report_embeds_config_and_partition_data(self, capsys):
        code, doc = run_json(
            capsys, "verify", "--partition", "2,1", "--suite", "rank-lemma",
            "--suite", "gamma",
        )
        assert code == 0
        assert doc["config"]["suites"] == ["rank-lemma", "gamma"]
        res = doc["results"][0]
        assert set(res["suites"]) == {"rank-lemma", "gamma"}
        assert res["dual"] == [2, 1]

    def test_sweep_rows(self, capsys):
        code, doc = run_json(capsys, "sweep", "--n", "3")
        assert code == 0
        assert [r["rank"] for r in doc["results"]] == [1, 3, 6]
        assert [r["partition"] for r in doc["results"]] == [[3], [2, 1], [1, 1, 1]]

    def test_sweep_n1(self, capsys):
        code, doc = run_json(capsys, "sweep", "--n", "1")
        assert code == 0
        assert len(doc["results"]) == 1 and doc["results"][0]["rank"] == 1

    def test_csv_columns_fixed(self, capsys):
        code, out = run_cli(capsys, "sweep", "--n", "2", "--format", "csv")
        assert code == 0
        header = out.splitlines()[0].split(",")
        assert header == cli._CSV_COLUMNS["sweep"]

        code, out = run_cli(
            capsys, "verify", "--partition", "2,1", "--suite", "rank-lemma",
            "--format", "csv",
        )
        assert code == 0
        assert out.splitlines()[0].split(",") == cli._CSV_COLUMNS["verify"]

    def test_text_format(self, capsys):
        code, out = run_cli(capsys, "rank-lemma", "--partition", "3,1", "--format", "text")
        assert code == 0
        assert "overall: pass" in out


class TestDeterminism:
    def test_verify_byte_identical(self, capsys):
        args = ("verify", "--partition", "2,1", "--suite", "gamma", "--suite", "truncation")
        _, a = run_cli(capsys, *args)
        _, b = run_cli(capsys, *args)
        assert a == b

    def test_sweep_deterministic_modulo_timings(self, capsys):
        _, a = run_json(capsys, "sweep", "--n", "3")
        _, b = run_json(capsys, "sweep", "--n", "3")
        for doc in (a, b):
            for row in doc["results"]:
                row.pop("time_ms")
        assert a == b

    def test_presentation_byte_identical(self, capsys):
        args = ("presentation", "--partition", "2,2", "--flavor", "ktheory")
        _, a = run_cli(capsys, *args)
        _, b = run_cli(capsys, *args)
        assert a == b


class TestCacheIntegration:
    def test_corrupted_cache_recomputed(self, capsys, tmp_path):
        cache = str(tmp_path)
        args = ("presentation", "--partition", "2,1", "--flavor", "ktheory",
                "--cache-dir", cache)
        _, a = run_cli(capsys, *args)
        files = [f for f in os.listdir(cache) if f.endswith(".json")]
        assert files
        victim = os.path.join(cache, files[0])
        with open(victim, "w") as fh:
            fh.write("{not json")
        _, b = run_cli(capsys, *args)
        assert a == b
        assert json.load(open(victim))  # rewritten as valid JSON

    def test_cache_hit_reuses_file(self, capsys, tmp_path):
        cache = str(tmp_path)
        args = ("presentation", "--partition", "3,1", "--flavor", "ktheory",
                "--cache-dir", cache)
        run_cli(capsys, *args)
        files = {f: os.path.getmtime(os.path.join(cache, f)) for f in os.listdir(cache)}
        run_cli(capsys, *args)
        after = {f: os.path.getmtime(os.path.join(cache, f)) for f in os.listdir(cache)}
        assert files == after


class TestParallel:
    def test_jobs_match_serial(self, capsys):
        serial = ("verify", "--n", "3", "--suite", "rank-lemma", "--suite", "freeness")
        _, a = run_cli(capsys, *serial)
        _, b = run_cli(capsys, *serial, "--jobs", "3")
        da, db = json.loads(a), json.loads(b)
        assert da["results"] == db["results"]


def test_console_script_end_to_end():
    proc = subprocess.run(
        [sys.executable, "-m", "tanisaki.cli", "rank-lemma", "--partition",
         "5,4,4,2,2,2,1", "--format", "json"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, SCHEMA)
    assert doc["results"][0]["ok"] is True
