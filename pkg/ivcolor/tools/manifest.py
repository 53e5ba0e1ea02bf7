from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass(frozen=True)
class RunManifest:
    """What a command was asked to do and where it wrote.

    Outputs never depend on the clock or on randomness, so replaying a
    manifest reproduces its files byte for byte.
    """

    command: str
    source: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    outputs: List[str] = field(default_factory=list)
    deterministic: bool = True

    def to_dict(self):
        return {
            "command": self.command,
            "source": self.source,
            "parameters": dict(self.parameters),
            "deterministic": self.deterministic,
            "outputs": list(self.outputs),
        }
