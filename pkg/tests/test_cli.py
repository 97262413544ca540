import json

import pytest

from hypotest.cli import main
from hypotest.network import network_from_json

from .conftest import MINI_CORPUS


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ingest_then_test_json(tmp_path, capsys, carvedilol_corpus_file):
    data_dir = str(tmp_path / "data")
    code, out, _ = run(capsys, "--data-dir", data_dir, "ingest",
                       str(carvedilol_corpus_file))
    assert code == 0
    assert "ingested 25 documents" in out

    code, out, _ = run(capsys, "--data-dir", data_dir, "test",
                       "--hypothesis", "Carvedilol not causes Weight Gain",
                       "--expected", "15", "--json")
    assert code == 0
    result = json.loads(out)
    assert result["observed"] == 18
    assert result["chi2"] == pytest.approx(0.6, abs=1e-9)
    assert result["decision"] == "Accepted"


def test_pretty_output(tmp_path, capsys, carvedilol_corpus_file):
    data_dir = str(tmp_path / "data")
    run(capsys, "--data-dir", data_dir, "ingest", str(carvedilol_corpus_file))
    code, out, _ = run(capsys, "--data-dir", data_dir, "test",
                       "--hypothesis", "Carvedilol not causes Weight Gain",
                       "--expected", "15")
    assert code == 0
    assert "observed (o): 18 of 25 papers" in out
    assert "decision: Accepted" in out


def test_network_json_and_dot(tmp_path, capsys, carvedilol_corpus_file):
    data_dir = str(tmp_path / "data")
    run(capsys, "--data-dir", data_dir, "ingest", str(carvedilol_corpus_file))
    code, out, _ = run(capsys, "--data-dir", data_dir, "network",
                       "--entity", "carvedilol", "--entity", "weight_gain")
    assert code == 0
    network = network_from_json(out)
    assert {"carvedilol", "weight_gain"} <= {n.id for n in network.nodes}

    dot_file = tmp_path / "network.dot"
    code, out, _ = run(capsys, "--data-dir", data_dir, "network",
                       "--entity", "carvedilol", "--format", "dot",
                       "--output", str(dot_file))
    assert code == 0
    assert dot_file.read_text().startswith("graph secondary_network {")


def test_relations_export(tmp_path, capsys):
    data_dir = str(tmp_path / "data")
    run(capsys, "--data-dir", data_dir, "ingest", str(MINI_CORPUS))
    code, out, _ = run(capsys, "--data-dir", data_dir, "relations", "export",
                       "--format", "jsonl")
    assert code == 0
    lines = [line for line in out.splitlines() if line.strip()]
    assert lines
    for line in lines:
        record = json.loads(line)
        assert {"subject", "object", "predicate", "polarity", "doc_id",
                "sentence_index", "evidence"} <= set(record)


def test_error_exit_code(tmp_path, capsys):
    code, _, err = run(capsys, "--data-dir", str(tmp_path / "data"),
                       "ingest", str(tmp_path / "missing.jsonl"))
    assert code == 1
    assert "error:" in err


def test_unknown_entity_error(tmp_path, capsys):
    code, _, err = run(capsys, "--data-dir", str(tmp_path / "data"),
                       "network", "--entity", "unobtainium")
    assert code == 1
    assert "unobtainium" in err


def test_config_file_and_env_override(tmp_path, capsys, monkeypatch,
                                      carvedilol_corpus_file):
    config_dir = tmp_path / "from_config"
    env_dir = tmp_path / "from_env"
    config_path = tmp_path / "hypotest.toml"
    config_path.write_text(f'data_dir = "{config_dir}"\n')

    code, _, _ = run(capsys, "--config", str(config_path), "ingest",
                     str(carvedilol_corpus_file))
    assert code == 0
    assert (config_dir / "corpus.jsonl").exists()

    monkeypatch.setenv("HYPOTEST_DATA_DIR", str(env_dir))
    code, _, _ = run(capsys, "--config", str(config_path), "ingest",
                     str(carvedilol_corpus_file))
    assert code == 0
    assert (env_dir / "corpus.jsonl").exists()


def test_report_writes_files(tmp_path, capsys, carvedilol_corpus_file):
    data_dir = str(tmp_path / "data")
    run(capsys, "--data-dir", data_dir, "ingest", str(carvedilol_corpus_file))
    outdir = tmp_path / "report"
    code, out, _ = run(capsys, "--data-dir", data_dir, "report",
                       "--hypothesis", "Carvedilol not causes Weight Gain",
                       "--expected", "15", "--outdir", str(outdir))
    assert code == 0
    for name in ("result.csv", "evidence.csv", "network.json",
                 "network.png", "chi_square.png"):
        assert (outdir / name).exists(), name
