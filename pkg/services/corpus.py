import importlib
from pathlib import Path
from typing import Any, Dict, List

from objects import CorpusEntry, GoldenMismatch, Polymatroid, SymFn

from .document import DocumentService
from .invariants import gInvariant, hInvariant, pTable, tutte
from .logger import log
from .render import render
from .special import bjrF

rootDir = Path(__file__).resolve().parent.parent
corpusDir = rootDir / "corpus"


class CorpusService:
    entries: List[CorpusEntry] = []

    @classmethod
    def loadCorpus(cls):
        cls.entries = []
        for file in sorted(corpusDir.glob("*.py")):
            module = importlib.import_module(f"corpus.{file.stem}")

            instances = getattr(module, "corpusInstances", None)
            if not instances:
                log.warning(f'File "{file.name}" has no corpus entries!')
                continue

            for entry in instances:
                if not isinstance(entry, CorpusEntry):
                    log.warning(f'File "{file.name}" holds a non-corpus entry!')
                    continue
                cls.entries.append(entry)
                log.info(f"Corpus entry {entry.name} (ID: {entry.id}) was loaded!")

    @classmethod
    def getEntry(cls, entryId: str) -> CorpusEntry:
        if not cls.entries:
            cls.loadCorpus()
        for entry in cls.entries:
            if entry.id == entryId:
                return entry
        raise NameError(entryId)

    @classmethod
    def loadData(cls, name: str) -> Any:
        return DocumentService.jsonLoads((corpusDir / "data" / name).read_bytes())

    @classmethod
    def polymatroid(cls, entry: CorpusEntry) -> Polymatroid:
        return DocumentService.buildPolymatroid(cls.loadData(entry.document))

    @classmethod
    def check(cls, entry: CorpusEntry) -> List[GoldenMismatch]:
        # 期待値をすべて計算し直して比べる
        pm = cls.polymatroid(entry)
        goldens = entry.goldens()
        mismatches: List[GoldenMismatch] = []

        table = None
        if {"p", "h", "pCoefficients"} & goldens.keys():
            table = pTable(pm)

        for kind, expected in goldens.items():
            if kind == "p":
                got = table[pm.full]
            elif kind == "h":
                got = hInvariant(pm, table=table)
            elif kind == "g":
                got = gInvariant(pm)
            elif kind == "tutte":
                got = tutte(pm)
            elif kind == "f":
                got = bjrF(pm)
            elif kind == "pCoefficients":
                p = table[pm.full]
                got = {lam: p.get(lam) for lam in expected}
            else:
                raise KeyError(kind)

            if got != expected:
                mismatches.append(
                    GoldenMismatch(entry.id, kind, cls._show(expected), cls._show(got))
                )
        return mismatches

    @classmethod
    def _show(cls, value: Any) -> str:
        if isinstance(value, dict):
            return ", ".join(
                f"{render(SymFn.schur(lam))}: {c}" for lam, c in sorted(value.items())
            )
        return render(value)

    @classmethod
    def summary(cls, entry: CorpusEntry) -> Dict[str, Any]:
        return {
            "id": entry.id,
            "name": entry.name,
            "description": entry.description,
            "source": entry.source,
            "goldens": sorted(entry.goldens()),
        }

