from dataclasses import dataclass
from typing import Any, Dict, Optional


class CorpusEntry:
    def __init__(self):
        self.id = None
        self.name = None
        self.description = None
        self.source = None
        self.document = None

    def goldens(self) -> Dict[str, Any]:
        # 種類ごとの期待値
        raise NotImplementedError()


@dataclass
class GoldenMismatch:
    entryId: str
    kind: str
    expected: str
    got: str
    detail: Optional[str] = None
