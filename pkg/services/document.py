from fractions import Fraction
from typing import Any, Dict, List, Union

import orjson
from pydantic import TypeAdapter

from objects import (
    BivariatePoly,
    Coeff,
    DecompositionDoc,
    Graph,
    GraphDoc,
    IndicatorWitness,
    InputDoc,
    OpDoc,
    Polymatroid,
    PolymatroidDoc,
    QSymDoc,
    QSymFn,
    RankTableDoc,
    SignedDecomposition,
    SignReport,
    SymFn,
    SymFnQT,
    UniformDoc,
    ValidationReport,
    VectorConfig,
    VectorsDoc,
    exact,
    maskOf,
)

from .exception import MalformedInput
from .polymatroid import (
    contract,
    delete,
    directSum,
    dual,
    emptyPolymatroid,
    ensureValid,
    fromGraph,
    fromRankTable,
    fromVectors,
    restrict,
    uniform,
)
from .qsym import checkLetters
from .render import coeffText, sortedPoly, sortedQSym, sortedQT, sortedSym

inputTypeAdapter = TypeAdapter(InputDoc)
polymatroidTypeAdapter = TypeAdapter(PolymatroidDoc)


def parseRational(value: Union[int, str, tuple, list]) -> Fraction:
    if isinstance(value, bool):
        raise MalformedInput("RATIONAL", f"{value!r} is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (tuple, list)):
        if len(value) != 2 or value[1] == 0:
            raise MalformedInput("RATIONAL", f"{list(value)} is not [num, den]")
        return Fraction(int(value[0]), int(value[1]))
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise MalformedInput("RATIONAL", f"{value!r} is not a rational")


def _parseSubsetKey(key: str, n: int) -> int:
    if key.strip() == "":
        return 0
    try:
        elements = [int(part) for part in key.split(",")]
    except ValueError:
        raise MalformedInput("RANK_KEY", f"rank key {key!r} is not an element list")
    if any(not 0 <= e < n for e in elements) or len(set(elements)) != len(elements):
        raise MalformedInput("RANK_KEY", f"rank key {key!r} leaves 0..{n - 1}")
    return maskOf(elements)


def _parseSubset(value: Any, n: int) -> int:
    if not isinstance(value, list) or any(
        isinstance(e, bool) or not isinstance(e, int) for e in value
    ):
        raise MalformedInput("SUBSET", f"{value!r} is not a list of elements")
    if any(not 0 <= e < n for e in value):
        raise MalformedInput("ELEMENT_RANGE", f"subset {value} leaves 0..{n - 1}")
    return maskOf(value)


class DocumentService:
    @classmethod
    def jsonDumps(cls, obj: Any) -> str:
        return orjson.dumps(obj, option=orjson.OPT_INDENT_2).decode()

    @classmethod
    def jsonLoads(cls, obj: Union[str, bytes]) -> Any:
        if isinstance(obj, str):
            obj = obj.encode()
        try:
            return orjson.loads(obj)
        except orjson.JSONDecodeError as e:
            raise MalformedInput("JSON", f"not a JSON document: {e}")

    @classmethod
    def parseInput(cls, data: Any):
        return inputTypeAdapter.validate_python(data)

    @classmethod
    def buildPolymatroid(cls, doc) -> Polymatroid:
        if isinstance(doc, dict):
            doc = polymatroidTypeAdapter.validate_python(doc)
        return ensureValid(cls.buildUnchecked(doc))

    @classmethod
    def buildUnchecked(cls, doc) -> Polymatroid:
        if isinstance(doc, RankTableDoc):
            rank: List[int] = [None] * (1 << doc.n)
            for key, value in doc.rank.items():
                mask = _parseSubsetKey(key, doc.n)
                if rank[mask] is not None:
                    raise MalformedInput("RANK_KEY", f"subset {key!r} appears twice")
                try:
                    rank[mask] = int(value)
                except ValueError:
                    raise MalformedInput("RANK_VALUE", f"rank {value!r} is not an integer")
            if any(r is None for r in rank):
                raise MalformedInput(
                    "TABLE_LENGTH",
                    f"rank table has {len(doc.rank)} entries, expected {1 << doc.n}",
                )
            return fromRankTable(doc.n, rank, doc.labels)

        if isinstance(doc, GraphDoc):
            pm = fromGraph(Graph(doc.vertices, tuple(tuple(e) for e in doc.edges)))
            return cls._labelled(pm, doc.labels)

        if isinstance(doc, VectorsDoc):
            config = VectorConfig(
                doc.dim,
                tuple(
                    tuple(tuple(parseRational(c) for c in vector) for vector in generators)
                    for generators in doc.subspaces
                ),
            )
            return cls._labelled(fromVectors(config), doc.labels)

        if isinstance(doc, UniformDoc):
            return uniform(doc.r, doc.n)

        if isinstance(doc, OpDoc):
            return cls._buildOp(doc)

        raise MalformedInput("DOCUMENT", f"{type(doc).__name__} is not a polymatroid document")

    @classmethod
    def _labelled(cls, pm: Polymatroid, labels) -> Polymatroid:
        if labels is None:
            return pm
        return fromRankTable(pm.n, pm.rank, labels)

    @classmethod
    def _buildOp(cls, doc: OpDoc) -> Polymatroid:
        operands = [a for a in doc.args if not isinstance(a, list)]
        subsets = [a for a in doc.args if isinstance(a, list)]
        built = [ensureValid(cls.buildUnchecked(a)) for a in operands]

        if doc.op == "dual":
            if len(built) != 1 or subsets:
                raise MalformedInput("OP_ARGS", "dual takes one polymatroid")
            return dual(built[0])

        if doc.op == "sum":
            if subsets:
                raise MalformedInput("OP_ARGS", "sum takes polymatroids only")
            result = emptyPolymatroid()
            for pm in built:
                result = directSum(result, pm)
            return result

        if len(built) != 1 or len(subsets) != 1:
            raise MalformedInput("OP_ARGS", f"{doc.op} takes a polymatroid and a subset")
        pm = built[0]
        a = _parseSubset(subsets[0], pm.n)
        return {"restrict": restrict, "contract": contract, "delete": delete}[doc.op](pm, a)

    @classmethod
    def buildQSym(cls, doc: QSymDoc) -> QSymFn:
        coeffs: Dict[tuple, Coeff] = {}
        for term in doc.terms:
            word = tuple(term.word)
            coeffs[word] = coeffs.get(word, 0) + parseRational(term.coeff)
        return checkLetters(QSymFn(doc.basis, coeffs))

    @classmethod
    def buildDecomposition(cls, data: Any) -> SignedDecomposition:
        doc = data if isinstance(data, DecompositionDoc) else DecompositionDoc.model_validate(data)
        return SignedDecomposition(
            target=cls.buildPolymatroid(doc.target),
            pieces=tuple(
                (cls.buildPolymatroid(piece.pm), exact(parseRational(piece.coeff)))
                for piece in doc.pieces
            ),
            targetCoeff=exact(parseRational(doc.targetCoeff)),
        )

    @classmethod
    def polymatroidDocument(cls, pm: Polymatroid) -> Dict[str, Any]:
        rank = {
            ",".join(str(i) for i in range(pm.n) if a >> i & 1): pm.rank[a]
            for a in range(1 << pm.n)
        }
        document = {"type": "rank_table", "n": pm.n, "rank": rank}
        if pm.labels is not None:
            document["labels"] = list(pm.labels)
        return document

    @classmethod
    def toJson(cls, value: Any) -> Dict[str, Any]:
        # 正規順の項リスト
        if isinstance(value, SymFn):
            return {
                "kind": "sym",
                "bound": value.bound,
                "terms": [
                    {"partition": list(lam), "coeff": coeffText(c)} for lam, c in sortedSym(value)
                ],
            }
        if isinstance(value, SymFnQT):
            return {
                "kind": "symqt",
                "terms": [
                    {"partition": list(lam), "q": q, "t": t, "coeff": coeffText(c)}
                    for (lam, q, t), c in sortedQT(value)
                ],
            }
        if isinstance(value, QSymFn):
            return {
                "kind": "qsym",
                "basis": value.basis.value,
                "terms": [
                    {"word": list(word), "coeff": coeffText(c)} for word, c in sortedQSym(value)
                ],
            }
        if isinstance(value, BivariatePoly):
            return {
                "kind": "poly",
                "variables": list(value.names),
                "terms": [
                    {"exponents": [i, j], "coeff": coeffText(c)} for (i, j), c in sortedPoly(value)
                ],
            }
        if isinstance(value, list):
            return {"kind": "series", "items": [cls.toJson(item) for item in value]}
        if isinstance(value, SignReport):
            return {
                "kind": "signs",
                "ok": value.ok,
                "offending": [
                    {"check": check, "partition": list(lam), "coeff": coeffText(c)}
                    for check, lam, c in value.offending
                ],
            }
        if isinstance(value, IndicatorWitness):
            return {
                "kind": "indicator",
                "ok": value.ok,
                "point": None if value.point is None else [coeffText(c) for c in value.point],
                "value": coeffText(value.value),
                "checked": value.checked,
            }
        if isinstance(value, Polymatroid):
            return cls.polymatroidDocument(value)
        if isinstance(value, (int, Fraction)):
            return {"kind": "scalar", "value": coeffText(value)}
        raise TypeError(f"nothing serializes {type(value).__name__}")

    @classmethod
    def validationJson(cls, report: ValidationReport, n: int) -> Dict[str, Any]:
        document = {"kind": "validation", "ok": report.ok}
        if not report.ok:
            document["axiom"] = report.axiom
            document["a"] = [i for i in range(n) if report.a >> i & 1]
            document["b"] = [i for i in range(n) if report.b >> i & 1]
        return document

    @classmethod
    def fromJson(cls, data: Dict[str, Any]) -> Any:
        kind = data.get("kind")
        if kind == "sym":
            return SymFn(
                {tuple(term["partition"]): parseRational(term["coeff"]) for term in data["terms"]},
                data.get("bound"),
            )
        if kind == "symqt":
            return SymFnQT(
                {
                    (tuple(term["partition"]), term["q"], term["t"]): parseRational(term["coeff"])
                    for term in data["terms"]
                }
            )
        if kind == "qsym":
            return checkLetters(
                QSymFn(
                    data["basis"],
                    {tuple(term["word"]): parseRational(term["coeff"]) for term in data["terms"]},
                )
            )
        if kind == "poly":
            return BivariatePoly(
                {tuple(term["exponents"]): parseRational(term["coeff"]) for term in data["terms"]},
                tuple(data["variables"]),
            )
        if kind == "series":
            return [cls.fromJson(item) for item in data["items"]]
        if kind == "scalar":
            return exact(parseRational(data["value"]))
        raise MalformedInput("JSON_KIND", f"unknown output kind {kind!r}")
