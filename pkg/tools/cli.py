import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, List, Optional, TextIO

from pydantic import ValidationError

from objects import Polymatroid, QSymDoc, QSymFn
from services.config import Limits
from services.corpus import CorpusService
from services.document import DocumentService
from services.exception import AxiomViolation, CapExceeded, MalformedInput, PolysymError
from services.invariants import (
    characteristicPoly,
    gInvariant,
    hInvariant,
    nonnegativityReport,
    pInvariant,
    rankGen,
    reesSeries,
    tutte,
)
from services.polymatroid import directSum, dual, emptyPolymatroid, validate
from services.polytope import checkIndicatorRelation, valuativeResidue
from services.render import render, renderQSym, renderWitness
from services.special import bjrF, tau, thetaMap, xi

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_USAGE = 64
EXIT_CAP = 65

commands = [
    "validate",
    "p",
    "h",
    "g",
    "tutte",
    "rankgen",
    "rees",
    "f",
    "tau",
    "xi",
    "theta",
    "dual",
    "sum",
    "decomp-check",
    "examples",
    "charpoly",
    "nonneg",
]


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


@dataclass
class CliResult:
    code: int
    output: str = ""
    error: str = ""


def buildParser() -> Parser:
    parser = Parser(prog="py -m tools.cli", description="Polysym の不変量計算")
    parser.add_argument("command", choices=commands)
    parser.add_argument(
        "--input", dest="inputs", action="append", default=[], help="JSON document, - for stdin"
    )
    parser.add_argument("--json", dest="asJson", action="store_true")
    parser.add_argument("--max-n", dest="maxN", type=int)
    parser.add_argument("--max-chains", dest="maxChains", type=int)
    parser.add_argument("--allow-large", dest="allowLarge", action="store_true")
    parser.add_argument("--grid-denom", dest="gridDenom", type=int)
    parser.add_argument("--truncate", dest="truncate", type=int, help="truncation degree D")
    parser.add_argument("--terms", dest="terms", type=int, help="rees: number of direct powers")
    parser.add_argument("--method", choices=["chains", "subsets"], default="chains")
    parser.add_argument("--verbose", action="store_true")
    return parser


class Session:
    def __init__(self, args: argparse.Namespace, stdin: Optional[TextIO]):
        self.args = args
        self.stdin = stdin
        self.maxN = self._limit("maxN", args.maxN)
        self.maxChains = self._limit("maxChains", args.maxChains)

    def _limit(self, cap: str, requested: Optional[int]) -> int:
        default = getattr(Limits, cap)
        if requested is None:
            return default
        if requested > default and not self.args.allowLarge:
            raise UsageError(f"raising {cap} above {default} needs --allow-large")
        return requested

    def documents(self) -> List[Any]:
        if not self.args.inputs:
            raise UsageError("no --input given")
        loaded = []
        for path in self.args.inputs:
            if path == "-":
                loaded.append(DocumentService.jsonLoads((self.stdin or sys.stdin).read()))
            else:
                try:
                    loaded.append(DocumentService.jsonLoads(Path(path).read_bytes()))
                except OSError as e:
                    raise UsageError(f"cannot read {path}: {e.strerror}")
        return loaded

    def polymatroid(self) -> Polymatroid:
        return DocumentService.buildPolymatroid(self.documents()[0])

    def qsymSource(self) -> QSymFn:
        """A qsym document as given, or G of a polymatroid document."""
        doc = DocumentService.parseInput(self.documents()[0])
        if isinstance(doc, QSymDoc):
            return DocumentService.buildQSym(doc)
        pm = DocumentService.buildPolymatroid(doc)
        return gInvariant(pm, self.maxChains, self.args.method, self.maxN)

    def emit(self, value: Any, code: int = EXIT_OK) -> CliResult:
        if self.args.asJson:
            return CliResult(code, DocumentService.jsonDumps(DocumentService.toJson(value)))
        return CliResult(code, render(value))


def _validate(session: Session) -> CliResult:
    doc = DocumentService.parseInput(session.documents()[0])
    pm = DocumentService.buildUnchecked(doc)
    report = validate(pm)
    code = EXIT_OK if report.ok else EXIT_INVALID
    if session.args.asJson:
        return CliResult(code, DocumentService.jsonDumps(DocumentService.validationJson(report, pm.n)))
    return CliResult(code, report.describe(pm.n))


def _polymatroidOutput(session: Session, pm: Polymatroid) -> CliResult:
    return CliResult(EXIT_OK, DocumentService.jsonDumps(DocumentService.polymatroidDocument(pm)))


def _sum(session: Session) -> CliResult:
    result = emptyPolymatroid()
    for document in session.documents():
        result = directSum(result, DocumentService.buildPolymatroid(document))
    return _polymatroidOutput(session, result)


def _decompositionCheck(session: Session) -> CliResult:
    decomposition = DocumentService.buildDecomposition(session.documents()[0])
    witness = checkIndicatorRelation(decomposition, session.args.gridDenom)
    residue = valuativeResidue(decomposition, session.maxChains)
    code = EXIT_OK if witness.ok and not residue else EXIT_INVALID

    if session.args.asJson:
        payload = {
            "indicator": DocumentService.toJson(witness),
            "valuative": {"ok": not residue, "residue": DocumentService.toJson(residue)},
        }
        return CliResult(code, DocumentService.jsonDumps(payload))

    lines = [f"indicator: {renderWitness(witness)}"]
    lines.append("valuative: ok" if not residue else f"valuative: residue {renderQSym(residue)}")
    return CliResult(code, "\n".join(lines))


def _examples(session: Session) -> CliResult:
    CorpusService.loadCorpus()
    lines, failed = [], False
    for entry in CorpusService.entries:
        mismatches = CorpusService.check(entry)
        if not mismatches:
            lines.append(f"ok   {entry.id}")
            continue
        failed = True
        for mismatch in mismatches:
            lines.append(
                f"FAIL {entry.id} {mismatch.kind}: expected {mismatch.expected}, got {mismatch.got}"
            )
    return CliResult(EXIT_MISMATCH if failed else EXIT_OK, "\n".join(lines))


def dispatch(session: Session) -> CliResult:
    command = session.args.command
    truncate = session.args.truncate

    if command == "validate":
        return _validate(session)
    if command == "sum":
        return _sum(session)
    if command == "decomp-check":
        return _decompositionCheck(session)
    if command == "examples":
        return _examples(session)
    if command in ("tau", "xi", "theta"):
        source = session.qsymSource()
        return session.emit({"tau": tau, "xi": xi, "theta": thetaMap}[command](source))

    pm = session.polymatroid()
    if command == "p":
        return session.emit(pInvariant(pm, session.maxN))
    if command == "h":
        return session.emit(hInvariant(pm, session.maxN))
    if command == "g":
        return session.emit(gInvariant(pm, session.maxChains, session.args.method, session.maxN))
    if command == "tutte":
        return session.emit(tutte(pm))
    if command == "rankgen":
        return session.emit(rankGen(pm))
    if command == "charpoly":
        return session.emit(characteristicPoly(pm))
    if command == "rees":
        k = Limits.reesTerms if session.args.terms is None else session.args.terms
        return session.emit(reesSeries(pm, k, session.maxN))
    if command == "f":
        return session.emit(bjrF(pm, session.maxN))
    if command == "nonneg":
        report = nonnegativityReport(pm, truncate, session.maxN)
        return session.emit(report, EXIT_OK if report.ok else EXIT_INVALID)
    if command == "dual":
        return _polymatroidOutput(session, dual(pm))
    raise UsageError(f"unknown command {command}")


def run(argv: List[str], stdin: Optional[TextIO] = None) -> CliResult:
    try:
        args = buildParser().parse_args(argv)
        return dispatch(Session(args, stdin))
    except UsageError as e:
        return CliResult(EXIT_USAGE, error=f"usage: {e}")
    except ValidationError as e:
        return CliResult(EXIT_USAGE, error=f"malformed document: {e}")
    except MalformedInput as e:
        return CliResult(EXIT_USAGE, error=f"malformed input: {e}")
    except CapExceeded as e:
        return CliResult(EXIT_CAP, error=f"cap exceeded: {e}")
    except AxiomViolation as e:
        return CliResult(EXIT_INVALID, error=f"violation({e.axiom}): {e}")
    except PolysymError as e:
        return CliResult(EXIT_INVALID, error=f"{e.detail}: {e}")


def main() -> int:
    argv = sys.argv[1:]
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if "--verbose" in argv else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    result = run(argv)
    if result.output:
        print(result.output)
    if result.error:
        print(result.error, file=sys.stderr)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
