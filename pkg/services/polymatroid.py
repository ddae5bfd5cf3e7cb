from fractions import Fraction
from math import gcd, lcm
from typing import Iterator, List, Optional, Sequence, Tuple

from objects import Graph, Polymatroid, ValidationReport, VectorConfig

from .exception import AxiomViolation, MalformedInput, NotAMatroid


def fromRankTable(
    n: int, rank: Sequence[int], labels: Optional[Sequence[str]] = None
) -> Polymatroid:
    if n < 0:
        raise MalformedInput("TABLE_LENGTH", f"ground set size {n} is negative")
    if len(rank) != 1 << n:
        raise MalformedInput(
            "TABLE_LENGTH", f"rank table has {len(rank)} entries, expected {1 << n}"
        )
    if labels is not None and len(labels) != n:
        raise MalformedInput("LABELS", f"{len(labels)} labels for {n} elements")
    return Polymatroid(
        n, tuple(int(r) for r in rank), tuple(labels) if labels is not None else None
    )


def emptyPolymatroid() -> Polymatroid:
    return Polymatroid(0, (0,))


def validate(pm: Polymatroid) -> ValidationReport:
    if len(pm.rank) != 1 << pm.n:
        raise MalformedInput(
            "TABLE_LENGTH", f"rank table has {len(pm.rank)} entries, expected {1 << pm.n}"
        )

    report = _checkBasics(pm)
    if not report.ok:
        return report

    rank = pm.rank
    size = 1 << pm.n
    for a in range(size):
        ra = rank[a]
        for b in range(a + 1, size):
            if rank[a | b] + rank[a & b] > ra + rank[b]:
                return ValidationReport(False, "submodular", a, b)
    return ValidationReport(True)


def validateLocal(pm: Polymatroid) -> ValidationReport:
    # validate と同じ判定、A+x, A+y の組だけ見る
    if len(pm.rank) != 1 << pm.n:
        raise MalformedInput(
            "TABLE_LENGTH", f"rank table has {len(pm.rank)} entries, expected {1 << pm.n}"
        )

    report = _checkBasics(pm)
    if not report.ok:
        return report

    rank = pm.rank
    n = pm.n
    for a in range(1 << n):
        outside = [i for i in range(n) if not a >> i & 1]
        for i, x in enumerate(outside):
            ax = a | 1 << x
            for y in outside[i + 1 :]:
                ay = a | 1 << y
                if rank[ax | ay] + rank[a] > rank[ax] + rank[ay]:
                    return ValidationReport(False, "submodular", ax, ay)
    return ValidationReport(True)


def _checkBasics(pm: Polymatroid) -> ValidationReport:
    rank = pm.rank
    if rank[0] != 0:
        return ValidationReport(False, "normalization", 0, 0)

    # 単調性は一要素ずつ足して見れば十分
    for a in range(1 << pm.n):
        for x in range(pm.n):
            if not a >> x & 1 and rank[a] > rank[a | 1 << x]:
                return ValidationReport(False, "monotone", a, a | 1 << x)
    return ValidationReport(True)


def ensureValid(pm: Polymatroid) -> Polymatroid:
    report = validateLocal(pm)
    if not report.ok:
        raise AxiomViolation(report.axiom, report.a, report.b)
    return pm


def isMatroid(pm: Polymatroid) -> bool:
    return all(pm.singleton(x) <= 1 for x in range(pm.n))


def uniform(r: int, n: int) -> Polymatroid:
    if not 0 <= r <= n:
        raise MalformedInput("UNIFORM_RANGE", f"uniform({r}, {n}) needs 0 <= r <= n")
    return Polymatroid(n, tuple(min(r, a.bit_count()) for a in range(1 << n)))


def fromGraph(g: Graph) -> Polymatroid:
    for u, v in g.edges:
        if not (0 <= u < g.vertices and 0 <= v < g.vertices):
            raise MalformedInput(
                "GRAPH_ENDPOINT", f"edge ({u}, {v}) leaves 0..{g.vertices - 1}"
            )

    m = len(g.edges)
    rank = [0] * (1 << m)
    for a in range(1, 1 << m):
        parent = list(range(g.vertices))
        merged = 0
        for e in range(m):
            if a >> e & 1:
                ru = _find(parent, g.edges[e][0])
                rv = _find(parent, g.edges[e][1])
                if ru != rv:
                    parent[ru] = rv
                    merged += 1
        # 頂点数 - 連結成分数 = マージ回数
        rank[a] = merged
    return Polymatroid(m, tuple(rank))


def _find(parent: List[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def fromVectors(cfg: VectorConfig) -> Polymatroid:
    for generators in cfg.subspaces:
        for vector in generators:
            if len(vector) != cfg.dim:
                raise MalformedInput(
                    "VECTOR_LENGTH", f"vector of length {len(vector)} in dimension {cfg.dim}"
                )

    n = len(cfg.subspaces)
    rows = [[_integral(vector) for vector in generators] for generators in cfg.subspaces]

    bases: List[Tuple[Tuple[int, Tuple[int, ...]], ...]] = [()] * (1 << n)
    rank = [0] * (1 << n)
    for a in range(1, 1 << n):
        low = (a & -a).bit_length() - 1
        basis = list(bases[a & (a - 1)])
        for vector in rows[low]:
            _reduceInto(basis, vector)
        bases[a] = tuple(basis)
        rank[a] = len(basis)
    return Polymatroid(n, tuple(rank))


def _integral(vector: Sequence[Fraction]) -> Tuple[int, ...]:
    scale = lcm(*(Fraction(c).denominator for c in vector)) if vector else 1
    return tuple(int(Fraction(c) * scale) for c in vector)


def _reduceInto(basis: List[Tuple[int, Tuple[int, ...]]], vector: Tuple[int, ...]):
    v = list(vector)
    for pivot, row in basis:
        if v[pivot]:
            factor, lead = v[pivot], row[pivot]
            v = [lead * x - factor * y for x, y in zip(v, row)]
            common = gcd(*v)
            if common > 1:
                v = [x // common for x in v]
    for pivot, x in enumerate(v):
        if x:
            basis.append((pivot, tuple(v)))
            return


def _checkSubset(pm: Polymatroid, a: int):
    if a < 0 or a & ~pm.full:
        raise MalformedInput("ELEMENT_RANGE", f"subset {a:#b} leaves 0..{pm.n - 1}")


def _elements(a: int, n: int) -> List[int]:
    return [i for i in range(n) if a >> i & 1]


def _embedding(elements: List[int]) -> List[int]:
    k = len(elements)
    embed = [0] * (1 << k)
    for b in range(1, 1 << k):
        low = (b & -b).bit_length() - 1
        embed[b] = embed[b & (b - 1)] | 1 << elements[low]
    return embed


def _labelsFor(pm: Polymatroid, elements: List[int]) -> Tuple[str, ...]:
    if pm.labels is None:
        return tuple(str(i) for i in elements)
    return tuple(pm.labels[i] for i in elements)


def restrict(pm: Polymatroid, a: int) -> Polymatroid:
    _checkSubset(pm, a)
    elements = _elements(a, pm.n)
    rank = tuple(pm.rank[m] for m in _embedding(elements))
    return Polymatroid(len(elements), rank, _labelsFor(pm, elements))


def delete(pm: Polymatroid, a: int) -> Polymatroid:
    _checkSubset(pm, a)
    return restrict(pm, pm.full ^ a)


def contract(pm: Polymatroid, a: int) -> Polymatroid:
    _checkSubset(pm, a)
    elements = _elements(pm.full ^ a, pm.n)
    base = pm.rank[a]
    rank = tuple(pm.rank[a | m] - base for m in _embedding(elements))
    return Polymatroid(len(elements), rank, _labelsFor(pm, elements))


def directSum(pm1: Polymatroid, pm2: Polymatroid) -> Polymatroid:
    shift = pm1.n
    rank = [0] * (1 << (pm1.n + pm2.n))
    for b in range(1 << pm2.n):
        rb = pm2.rank[b]
        for a in range(1 << pm1.n):
            rank[a | b << shift] = pm1.rank[a] + rb

    labels = None
    if pm1.labels is not None or pm2.labels is not None:
        labels = _labelsFor(pm1, list(range(pm1.n))) + _labelsFor(
            pm2, list(range(pm2.n))
        )
    return Polymatroid(pm1.n + pm2.n, tuple(rank), labels)


def dual(pm: Polymatroid) -> Polymatroid:
    if not isMatroid(pm):
        raise NotAMatroid("dual")
    full, total = pm.full, pm.total
    rank = tuple(
        a.bit_count() - total + pm.rank[full ^ a] for a in range(1 << pm.n)
    )
    return Polymatroid(pm.n, rank, pm.labels)


def relabel(pm: Polymatroid, perm: Sequence[int]) -> Polymatroid:
    # 要素 i を perm[i] へ
    if sorted(perm) != list(range(pm.n)):
        raise MalformedInput("PERMUTATION", f"{list(perm)} is not a permutation of 0..{pm.n - 1}")
    rank = [0] * (1 << pm.n)
    for a in range(1 << pm.n):
        image = 0
        for i in _elements(a, pm.n):
            image |= 1 << perm[i]
        rank[image] = pm.rank[a]

    labels = None
    if pm.labels is not None:
        placed = [""] * pm.n
        for i, label in enumerate(pm.labels):
            placed[perm[i]] = label
        labels = tuple(placed)
    return Polymatroid(pm.n, tuple(rank), labels)


def splittings(pm: Polymatroid) -> Iterator[Tuple[int, Polymatroid, Polymatroid]]:
    for a in range(1 << pm.n):
        yield a, restrict(pm, a), contract(pm, a)
