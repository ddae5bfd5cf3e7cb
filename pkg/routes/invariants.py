from typing import Any, Callable, Dict, Optional

from fastapi import APIRouter, Body, HTTPException, Response
from pydantic import ValidationError

from objects import Polymatroid
from services.corpus import CorpusService
from services.document import DocumentService
from services.exception import CapExceeded, MalformedInput, PolysymError
from services.invariants import (
    characteristicPoly,
    gInvariant,
    hInvariant,
    pInvariant,
    rankGen,
    tutte,
)
from services.polymatroid import validate
from services.polytope import checkIndicatorRelation, valuativeResidue
from services.special import bjrF

router = APIRouter()

kinds: Dict[str, Callable[[Polymatroid], Any]] = {
    "p": pInvariant,
    "h": hInvariant,
    "g": gInvariant,
    "tutte": tutte,
    "rankgen": rankGen,
    "f": bjrF,
    "charpoly": characteristicPoly,
}


def _failure(response: Response, e: Exception) -> Dict[str, Any]:
    if isinstance(e, (MalformedInput, ValidationError)):
        response.status_code = 400
    elif isinstance(e, CapExceeded):
        response.status_code = 413
    else:
        response.status_code = 422

    if isinstance(e, ValidationError):
        return {"detail": "MALFORMED_DOCUMENT", "message": str(e)}
    return {"detail": e.detail, "message": e.message}


@router.post("/api/invariants/{kind:str}")
def invariant(response: Response, kind: str, document: Dict[str, Any] = Body(...)):
    if kind not in kinds:
        raise HTTPException(404)

    try:
        pm = DocumentService.buildPolymatroid(document)
        return DocumentService.toJson(kinds[kind](pm))
    except (PolysymError, ValidationError) as e:
        return _failure(response, e)


@router.post("/api/validate")
def validateDocument(response: Response, document: Dict[str, Any] = Body(...)):
    try:
        doc = DocumentService.parseInput(document)
        pm = DocumentService.buildUnchecked(doc)
    except (PolysymError, ValidationError) as e:
        return _failure(response, e)

    report = validate(pm)
    if not report.ok:
        response.status_code = 422
    return DocumentService.validationJson(report, pm.n)


@router.post("/api/decompositions/check")
def checkDecomposition(
    response: Response,
    document: Dict[str, Any] = Body(...),
    denom: Optional[int] = None,
):
    try:
        decomposition = DocumentService.buildDecomposition(document)
        witness = checkIndicatorRelation(decomposition, denom)
        residue = valuativeResidue(decomposition)
    except (PolysymError, ValidationError) as e:
        return _failure(response, e)

    return {
        "indicator": DocumentService.toJson(witness),
        "valuative": {"ok": not residue, "residue": DocumentService.toJson(residue)},
    }


@router.get("/api/corpus")
def corpus():
    return [CorpusService.summary(entry) for entry in CorpusService.entries]


@router.get("/api/corpus/{entryId:str}")
def corpusEntry(entryId: str):
    try:
        entry = CorpusService.getEntry(entryId)
    except NameError:
        raise HTTPException(404)

    summary = CorpusService.summary(entry)
    summary["document"] = CorpusService.loadData(entry.document)
    return summary

