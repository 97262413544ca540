import csv

from hypotest.engine import Engine
from hypotest.report import write_report


def test_report_contents(tmp_path, carvedilol_corpus_file):
    engine = Engine(tmp_path / "data")
    engine.ingest_file(carvedilol_corpus_file)
    result = engine.test("Carvedilol not causes Weight Gain", expected=15)
    network = engine.network_for(result.hypothesis)
    outdir = tmp_path / "report"
    written = write_report(result, network, outdir,
                           evidence=engine.evidence_for(result))
    assert len(written) == 5

    with (outdir / "result.csv").open() as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 1
    row = rows[0]
    assert row["observed"] == "18"
    assert row["total"] == "25"
    assert row["chi2"] == "0.600000"
    assert row["decision"] == "Accepted"

    with (outdir / "evidence.csv").open() as fh:
        evidence_rows = list(csv.DictReader(fh))
    assert len(evidence_rows) == 18
    assert all(r["doc_id"].startswith("s") for r in evidence_rows)

    # figures are real PNGs
    for name in ("network.png", "chi_square.png"):
        header = (outdir / name).read_bytes()[:8]
        assert header == b"\x89PNG\r\n\x1a\n"


def test_report_with_empty_network(tmp_path):
    engine = Engine(tmp_path / "data")
    engine.ingest_records([{"id": "d1", "title": "",
                            "text": "Carvedilol was administered."}])
    result = engine.test("Carvedilol not causes Weight Gain", expected=5)
    network = engine.network_for(result.hypothesis)
    assert network.no_evidence
    written = write_report(result, network, tmp_path / "report")
    assert all(path.exists() for path in written)
