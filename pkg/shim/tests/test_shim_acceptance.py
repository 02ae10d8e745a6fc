"""End-to-end gate for the shim: equivalence with the batch CLI command.

Golden files were produced by `edc transform` on the fixture corpus
(seed 42, 30-epoch schedule) and checked in; the shim must reproduce
their modified texts byte-for-byte through the stdio server.
"""

import json
import subprocess
import sys

import pytest

edc_shim = pytest.importorskip("edc_shim")

from edc_shim import start  # noqa: E402

EPOCHS = (0, 15, 30)


def _report(name: str, failures: list[str]) -> None:
    status = "FAIL" if failures else "PASS"
    print(f"\nACCEPTANCE {name}: {status}")
    assert not failures, f"{name}: " + "; ".join(failures)


def _golden_path(shim_data_dir, epoch):
    return shim_data_dir / f"transform_epoch{epoch}.jsonl"


def test_goldens_still_match_the_cli(shim_data_dir, fixture_corpus_path):
    # the checked-in files must be exactly what the CLI emits today,
    # otherwise the equivalence test below would prove nothing
    failures = []
    for epoch in EPOCHS:
        result = subprocess.run(
            [sys.executable, "-m", "edc", "transform",
             "--input", str(fixture_corpus_path), "--epoch", str(epoch),
             "--max-epoch", "30", "--seed", "42"],
            capture_output=True, timeout=300,
        )
        if result.returncode != 0:
            failures.append(f"epoch {epoch}: transform exited {result.returncode}")
        elif result.stdout != _golden_path(shim_data_dir, epoch).read_bytes():
            failures.append(f"epoch {epoch}: CLI output drifted from golden file")
    _report("shim-golden-freshness", failures)


def test_shim_matches_cli_goldens(shim_data_dir, fixture_records, server_command):
    failures = []
    with start(max_epoch=30, seed=42, command=server_command) as client:
        for epoch in EPOCHS:
            golden = [
                json.loads(line)["modified"]
                for line in _golden_path(shim_data_dir, epoch).read_text(encoding="utf-8").splitlines()
            ]
            client.set_epoch(epoch)
            got = []
            for lo in range(0, len(fixture_records), 250):
                got.extend(client.transform_targets(fixture_records[lo:lo + 250]))
            if len(got) != len(golden):
                failures.append(f"epoch {epoch}: {len(got)} outputs vs {len(golden)} golden")
            else:
                bad = [i for i, (g, w) in enumerate(zip(got, golden)) if g.encode() != w.encode()]
                if bad:
                    failures.append(f"epoch {epoch}: {len(bad)} mismatches, first at ordinal {bad[0]}")
    _report("shim-equivalence", failures)


def test_child_process_lifecycle_is_clean(server_command):
    failures = []
    client = start(max_epoch=30, seed=42, command=server_command)
    process = client._process
    client.set_epoch(0)
    client.transform_targets([("a", 0, "the dog barks")])
    code = client.stop()
    if code != 0:
        failures.append(f"server exited {code}")
    if process.poll() is None:
        failures.append("server still running after stop")
    _report("shim-lifecycle", failures)
