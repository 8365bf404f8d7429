"""
Command reports.

A report is plain data: the command echo, a digest of the input files, the
result payload and any diagnostics. JSON output uses sorted keys and carries
no timestamps, so identical inputs give byte-identical reports.
"""
import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Union


def digest_files(paths: Iterable[Union[str, Path]]) -> str:
    """SHA-256 over the concatenated bytes of the given files."""
    sha = hashlib.sha256()
    for path in paths:
        with open(path, 'rb') as f:
            sha.update(f.read())
    return sha.hexdigest()


@dataclass
class Report:
    command: List[str]
    inputs_digest: str
    result: Dict
    diagnostics: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "result": self.result,
            "diagnostics": self.diagnostics,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"command: {' '.join(self.command)}"]
        lines.extend(self.result.get("summary", []))
        lines.extend(f"diagnostic: {d}" for d in self.diagnostics)
        return "\n".join(lines)
