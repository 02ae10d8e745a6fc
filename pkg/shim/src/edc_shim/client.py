"""Client for the `edc serve --stdio` line protocol.

Wraps the server process behind three calls a training loop needs: start
it once, point it at the current epoch, and collate each batch's caption
texts through it. The client never tokenizes; raw text crosses the
boundary and the server owns normalization, so shim output is
byte-identical to the `edc transform` command for the same inputs.

One client per dataloader worker: requests are strictly ordered and a
client must not be shared across threads.
"""

import json
import selectors
import shutil
import subprocess
import sys
from collections.abc import Sequence


class ServerError(RuntimeError):
    """The curriculum server failed to start, crashed, or broke protocol."""


def _default_command() -> list[str]:
    exe = shutil.which("edc")
    if exe:
        return [exe]
    return [sys.executable, "-m", "edc"]


class CurriculumClient:
    """Handle on a running curriculum server; use :func:`start` to create one."""

    def __init__(self, process: subprocess.Popen, command: Sequence[str]):
        self._process = process
        self._command = list(command)
        self._epoch: int | None = None

    @property
    def epoch(self) -> int | None:
        return self._epoch

    def set_epoch(self, epoch: int) -> None:
        """Select the epoch used by subsequent transforms."""
        if not isinstance(epoch, int) or isinstance(epoch, bool) or epoch < 0:
            raise ValueError(f"epoch must be a non-negative integer, got {epoch!r}")
        self._epoch = epoch

    def _dead(self, context: str) -> ServerError:
        self._process.kill()
        _, stderr = self._process.communicate()
        detail = f": {stderr.strip()}" if stderr and stderr.strip() else ""
        return ServerError(
            f"curriculum server {self._command!r} died {context} "
            f"(exit code {self._process.returncode}){detail}"
        )

    def _round_trip(self, request: dict) -> dict:
        if self._process.poll() is not None:
            raise self._dead("before the request was sent")
        try:
            self._process.stdin.write(json.dumps(request) + "\n")
            self._process.stdin.flush()
        except (BrokenPipeError, OSError):
            raise self._dead("while the request was being sent") from None
        line = self._process.stdout.readline()
        if not line:
            raise self._dead("without answering")
        try:
            response = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ServerError(f"unparseable server response {line!r}: {exc}") from None
        if not isinstance(response, dict):
            raise ServerError(f"unexpected server response {response!r}")
        if "error" in response:
            raise ServerError(f"server rejected the request: {response['error']}")
        return response

    def transform_targets(self, records: Sequence[tuple[str, int, str]]) -> list[str]:
        """Transform (id, ordinal, text) records; returns texts in input order."""
        if self._epoch is None:
            raise ServerError("no epoch set: call set_epoch before transforming")
        captions = [
            {"id": ident, "ordinal": ordinal, "text": text}
            for ident, ordinal, text in records
        ]
        response = self._round_trip({"epoch": self._epoch, "captions": captions})
        outputs = response.get("captions")
        if not isinstance(outputs, list) or len(outputs) != len(captions):
            raise ServerError(f"response does not match request shape: {response!r}")
        for sent, got in zip(captions, outputs):
            if got.get("id") != sent["id"] or got.get("ordinal") != sent["ordinal"]:
                raise ServerError(
                    f"response out of order: sent {sent['id']}/{sent['ordinal']}, "
                    f"got {got.get('id')}/{got.get('ordinal')}"
                )
        return [out["modified"] for out in outputs]

    def stop(self, timeout: float = 10.0) -> int:
        """Close the server's stdin and wait for it; returns its exit code."""
        if self._process.poll() is None:
            try:
                self._process.stdin.close()
            except OSError:
                pass
            try:
                self._process.wait(timeout=timeout)
            except subprocess.TimeoutExpired:
                self._process.kill()
                self._process.wait()
        if self._process.stdout is not None:
            self._process.stdout.close()
        if self._process.stderr is not None:
            self._process.stderr.close()
        return self._process.returncode

    def __enter__(self) -> "CurriculumClient":
        return self

    def __exit__(self, *exc_info) -> None:
        self.stop()


def start(
    alpha: float | None = None,
    max_epoch: int | None = None,
    floor: float | None = None,
    seed: int | None = None,
    command: Sequence[str] | None = None,
    handshake_timeout: float = 10.0,
) -> CurriculumClient:
    """Launch the curriculum server and verify it answers.

    The schedule flags mirror the CLI: at least one of ``alpha`` and
    ``max_epoch`` is required. ``command`` overrides how the server binary
    is located (default: ``edc`` on PATH, else the current interpreter's
    installed module). The handshake is an empty-batch round trip.
    """
    if alpha is None and max_epoch is None:
        raise ValueError("one of alpha or max_epoch is required")
    argv = list(command) if command is not None else _default_command()
    argv += ["serve", "--stdio"]
    if alpha is not None:
        argv += ["--alpha", repr(alpha)]
    if max_epoch is not None:
        argv += ["--max-epoch", str(max_epoch)]
    if floor is not None:
        argv += ["--floor", repr(floor)]
    if seed is not None:
        argv += ["--seed", str(seed)]
    try:
        process = subprocess.Popen(
            argv,
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
            text=True,
            encoding="utf-8",
        )
    except OSError as exc:
        raise ServerError(f"failed to launch curriculum server {argv!r}: {exc}") from exc
    client = CurriculumClient(process, argv)
    try:
        _handshake(client, process, handshake_timeout)
    except ServerError:
        client.stop()
        raise
    return client


def _handshake(client: CurriculumClient, process: subprocess.Popen, timeout: float) -> None:
    with selectors.DefaultSelector() as selector:
        selector.register(process.stdout, selectors.EVENT_READ)
        process.stdin.write(json.dumps({"epoch": 0, "captions": []}) + "\n")
        try:
            process.stdin.flush()
        except (BrokenPipeError, OSError):
            raise ServerError(f"curriculum server {client._command!r} exited at startup") from None
        if not selector.select(timeout):
            raise ServerError(f"no handshake response within {timeout} s")
    line = process.stdout.readline()
    if not line:
        raise ServerError(f"curriculum server {client._command!r} exited at startup")
    try:
        response = json.loads(line)
    except json.JSONDecodeError:
        raise ServerError(f"handshake returned non-JSON {line!r}") from None
    if response != {"captions": []}:
        raise ServerError(f"unexpected handshake response {response!r}")


def transform_targets(
    client: CurriculumClient, records: Sequence[tuple[str, int, str]]
) -> list[str]:
    """Module-level alias of :meth:`CurriculumClient.transform_targets`."""
    return client.transform_targets(records)


def set_epoch(client: CurriculumClient, epoch: int) -> None:
    """Module-level alias of :meth:`CurriculumClient.set_epoch`."""
    client.set_epoch(epoch)


def stop(client: CurriculumClient, timeout: float = 10.0) -> int:
    """Module-level alias of :meth:`CurriculumClient.stop`."""
    return client.stop(timeout=timeout)
