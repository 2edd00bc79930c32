"""Run manifests: enough provenance to replay a command and check its outputs."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path


def sha256_file(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def dump_json(path, payload: dict) -> None:
    """Deterministic JSON artifact: sorted keys, stable layout, trailing newline."""
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


@dataclass
class RunManifest:
    command: list[str]
    config: dict
    version: str
    seed: int | None = None
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    wall_clock_s: float = 0.0

    def record_input(self, path) -> None:
        self.inputs[str(path)] = sha256_file(path)

    def record_output(self, path) -> None:
        self.outputs[str(path)] = sha256_file(path)

    def write(self, path) -> None:
        dump_json(
            path,
            {
                "command": self.command,
                "config": self.config,
                "version": self.version,
                "seed": self.seed,
                "inputs": self.inputs,
                "outputs": self.outputs,
                "wall_clock_s": round(self.wall_clock_s, 3),
            },
        )
