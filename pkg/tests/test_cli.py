"""CLI integration: subcommand flows and the exit-code contract."""

import json

import pytest

from redactset.cli import main

DOC = "alpha\nbravo\ncharlie\ndelta\n"


@pytest.fixture(autouse=True)
def test_mode(monkeypatch):
    monkeypatch.setenv("REDACTSET_TEST_MODE", "1")


@pytest.fixture
def workspace(tmp_path):
    doc = tmp_path / "doc.txt"
    doc.write_text(DOC)
    assert main(["--seed", "5", "keygen", "--ell", "8",
                 "--out-prefix", str(tmp_path / "key")]) == 0
    return tmp_path


def _sign(ws):
    rc = main(["--seed", "6", "sign", "--doc", str(ws / "doc.txt"),
               "--key", str(ws / "key.rssk"), "--out", str(ws / "doc.rssig")])
    assert rc == 0


def test_sign_verify_flow(workspace, capsys):
    _sign(workspace)
    rc = main(["verify", "--doc", str(workspace / "doc.txt"),
               "--sig", str(workspace / "doc.rssig"),
               "--pub", str(workspace / "key.rspk")])
    assert rc == 0
    assert "signature valid" in capsys.readouterr().out


def test_tampered_document_rejected(workspace):
    _sign(workspace)
    (workspace / "doc.txt").write_text(DOC.replace("bravo", "bogus"))
    rc = main(["verify", "--doc", str(workspace / "doc.txt"),
               "--sig", str(workspace / "doc.rssig"),
               "--pub", str(workspace / "key.rspk")])
    assert rc == 1


def test_reordered_document_rejected(workspace):
    _sign(workspace)
    lines = DOC.strip().split("\n")
    (workspace / "doc.txt").write_text("\n".join(reversed(lines)) + "\n")
    rc = main(["verify", "--doc", str(workspace / "doc.txt"),
               "--sig", str(workspace / "doc.rssig"),
               "--pub", str(workspace / "key.rspk")])
    assert rc == 1


def test_redact_and_verify_bundle(workspace):
    _sign(workspace)
    bundle = workspace / "kept.json"
    rc = main(["redact", "--doc", str(workspace / "doc.txt"),
               "--sig", str(workspace / "doc.rssig"),
               "--pub", str(workspace / "key.rspk"),
               "--keep", "0,2", "--out", str(bundle)])
    assert rc == 0
    parsed = json.loads(bundle.read_text())
    assert parsed["blocks"] == ["alpha", "charlie"]
    assert parsed["indices"] == [0, 2]
    assert "bravo" not in bundle.read_text()
    rc = main(["verify", "--bundle", str(bundle), "--pub", str(workspace / "key.rspk")])
    assert rc == 0


def test_tampered_bundle_rejected(workspace):
    _sign(workspace)
    bundle = workspace / "kept.json"
    main(["redact", "--doc", str(workspace / "doc.txt"),
          "--sig", str(workspace / "doc.rssig"),
          "--pub", str(workspace / "key.rspk"),
          "--keep", "0,1", "--out", str(bundle)])
    parsed = json.loads(bundle.read_text())
    parsed["blocks"][0] = "evil"
    bundle.write_text(json.dumps(parsed))
    rc = main(["verify", "--bundle", str(bundle), "--pub", str(workspace / "key.rspk")])
    assert rc == 1


def test_redact_non_subset_keep_is_parameter_error(workspace):
    _sign(workspace)
    rc = main(["redact", "--doc", str(workspace / "doc.txt"),
               "--sig", str(workspace / "doc.rssig"),
               "--pub", str(workspace / "key.rspk"),
               "--keep", "0,9", "--out", str(workspace / "kept.json")])
    assert rc == 2


def test_missing_file_is_io_error(workspace):
    rc = main(["verify", "--doc", str(workspace / "missing.txt"),
               "--sig", str(workspace / "doc.rssig"),
               "--pub", str(workspace / "key.rspk")])
    assert rc == 3


def test_bad_arguments_are_parameter_errors(workspace):
    assert main(["verify", "--pub", str(workspace / "key.rspk")]) == 2
    assert main(["keygen", "--ell", "0",
                 "--out-prefix", str(workspace / "k")]) == 2


def test_seed_requires_test_mode(workspace, monkeypatch):
    monkeypatch.delenv("REDACTSET_TEST_MODE")
    rc = main(["--seed", "1", "keygen", "--ell", "2",
               "--out-prefix", str(workspace / "k2")])
    assert rc == 2


def test_seeded_keygen_is_deterministic(workspace):
    main(["--seed", "5", "keygen", "--ell", "8",
          "--out-prefix", str(workspace / "again")])
    assert (workspace / "again.rspk").read_bytes() == (workspace / "key.rspk").read_bytes()
    assert (workspace / "again.rssk").read_bytes() == (workspace / "key.rssk").read_bytes()


def test_inspect(workspace, capsys):
    assert main(["inspect", str(workspace / "key.rspk")]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["kind"] == "public key"
    assert info["max_set_size"] == 8


def test_json_document_flow(workspace, tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text('["one", "two", "three"]')
    sig = tmp_path / "doc.rssig"
    assert main(["--seed", "9", "sign", "--doc", str(doc),
                 "--key", str(workspace / "key.rssk"), "--out", str(sig),
                 "--mode", "set"]) == 0
    assert main(["verify", "--doc", str(doc), "--sig", str(sig),
                 "--pub", str(workspace / "key.rspk"), "--mode", "set"]) == 0
    # SET mode: order does not matter
    doc.write_text('["three", "one", "two"]')
    assert main(["verify", "--doc", str(doc), "--sig", str(sig),
                 "--pub", str(workspace / "key.rspk"), "--mode", "set"]) == 0


def test_bench_size(workspace, capsys):
    rc = main(["--seed", "3", "bench-size", "--ell", "4",
               "--samples", "1,4", "--json"])
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    assert report["constant"] is True
    assert {row["set_size"] for row in report["rows"]} == {1, 4}
