from math import comb
from typing import Dict, List, Optional, Tuple

from objects import (
    BivariatePoly,
    Coeff,
    Partition,
    Polymatroid,
    QSymFn,
    SignReport,
    SymFn,
    SymFnQT,
    weight,
)

from .config import Limits
from .exception import CapExceeded, MalformedInput
from .logger import log
from .schur import mulQT, mulSigma, mulSigmaPow


def checkCap(cap: str, value: int, limit: Optional[int] = None):
    if limit is None:
        limit = getattr(Limits, cap)
    if value > limit:
        raise CapExceeded(cap, limit, value)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def pTable(pm: Polymatroid, maxN: Optional[int] = None) -> List[SymFn]:
    # A のビットマスクで引く P[X|_A] の表
    checkCap("maxN", pm.n, maxN)
    log.info(f"Filling the P table over {1 << pm.n} subsets (n={pm.n})")

    rank = pm.rank
    table: List[SymFn] = [SymFn.one()] * (1 << pm.n)
    for a in range(1, 1 << pm.n):
        size = a.bit_count()
        D = size - 1
        ra = rank[a]

        # rk(A)-rk(B) ごとにまとめてから σ をかける
        buckets: Dict[int, Dict[Partition, Coeff]] = {}
        sub = (a - 1) & a
        while True:
            k = ra - rank[sub]
            sign = _sign(size - sub.bit_count())
            bucket = buckets.setdefault(k, {})
            for lam, c in table[sub].items():
                if weight(lam) <= D:
                    bucket[lam] = bucket.get(lam, 0) + sign * c
            if sub == 0:
                break
            sub = (sub - 1) & a

        result = SymFn({}, D)
        for k in range(max(buckets), -1, -1):
            result = mulSigma(result, D) + SymFn(buckets.get(k, {}), D)
        table[a] = SymFn((-result).coeffs)
    return table


def pInvariant(pm: Polymatroid, maxN: Optional[int] = None) -> SymFn:
    return pTable(pm, maxN)[pm.full]


def hInvariant(
    pm: Polymatroid, maxN: Optional[int] = None, table: Optional[List[SymFn]] = None
) -> SymFnQT:
    if table is None:
        table = pTable(pm, maxN)
    coeffs: Dict[Tuple[Partition, int, int], Coeff] = {}
    for a, p in enumerate(table):
        ra, size = pm.rank[a], a.bit_count()
        for lam, c in p.items():
            key = (lam, ra, size)
            coeffs[key] = coeffs.get(key, 0) + c
    return SymFnQT(coeffs)


def gInvariant(
    pm: Polymatroid,
    maxChains: Optional[int] = None,
    method: str = "chains",
    maxN: Optional[int] = None,
) -> QSymFn:
    # 極大鎖ごとに U_{r(鎖)} を足す
    if method == "subsets":
        return _gBySubsets(pm, maxN)
    if method != "chains":
        raise ValueError(f"unknown method {method!r}")

    checkCap("maxChains", pm.n, maxChains)
    log.info(f"Enumerating maximal chains (n={pm.n})")

    n, rank = pm.n, pm.rank
    counts: Dict[Tuple[int, ...], int] = {}
    word = [0] * n

    def walk(depth: int, mask: int, previous: int):
        if depth == n:
            key = tuple(word)
            counts[key] = counts.get(key, 0) + 1
            return
        for x in range(n):
            if not mask >> x & 1:
                grown = mask | 1 << x
                word[depth] = rank[grown] - previous
                walk(depth + 1, grown, rank[grown])

    walk(0, 0, 0)
    return QSymFn("U", counts)


def _gBySubsets(pm: Polymatroid, maxN: Optional[int]) -> QSymFn:
    checkCap("maxN", pm.n, maxN)
    log.info(f"Counting chain words over {1 << pm.n} subsets (n={pm.n})")

    n, rank = pm.n, pm.rank
    words: Dict[int, Dict[Tuple[int, ...], int]] = {0: {(): 1}}
    for mask in range(pm.full):
        current = words.pop(mask, None)
        if current is None:
            continue
        for x in range(n):
            if mask >> x & 1:
                continue
            grown = mask | 1 << x
            step = rank[grown] - rank[mask]
            target = words.setdefault(grown, {})
            for word, count in current.items():
                key = word + (step,)
                target[key] = target.get(key, 0) + count
    return QSymFn("U", words.get(pm.full, {(): 1}))


def rankGen(pm: Polymatroid) -> BivariatePoly:
    coeffs: Dict[Tuple[int, int], int] = {}
    for a in range(1 << pm.n):
        key = (pm.rank[a], a.bit_count())
        coeffs[key] = coeffs.get(key, 0) + 1
    return BivariatePoly(coeffs, ("q", "t"))


def _expandShifted(terms: Dict[Tuple[int, int], Coeff]) -> BivariatePoly:
    # u=x-1, v=y-1 を x, y に戻す (指数が許すときだけ)
    if any(i < 0 or j < 0 for i, j in terms):
        log.warning("Tutte invariant has negative exponents, keeping u=x-1, v=y-1")
        return BivariatePoly(terms, ("u", "v"))

    expanded: Dict[Tuple[int, int], Coeff] = {}
    for (i, j), c in terms.items():
        for a in range(i + 1):
            left = comb(i, a) * _sign(i - a)
            for b in range(j + 1):
                key = (a, b)
                expanded[key] = expanded.get(key, 0) + c * left * comb(j, b) * _sign(j - b)
    return BivariatePoly(expanded)


def tutteShifted(pm: Polymatroid) -> Dict[Tuple[int, int], int]:
    total = pm.total
    terms: Dict[Tuple[int, int], int] = {}
    for a in range(1 << pm.n):
        ra = pm.rank[a]
        key = (total - ra, a.bit_count() - ra)
        terms[key] = terms.get(key, 0) + 1
    return terms


def tutte(pm: Polymatroid) -> BivariatePoly:
    return _expandShifted(tutteShifted(pm))


def tutteFromRankGen(rankGenerating: BivariatePoly, total: int) -> BivariatePoly:
    """(x-1)^{rk X}·R((x-1)⁻¹(y-1)⁻¹, y-1)."""
    terms: Dict[Tuple[int, int], Coeff] = {}
    for (r, size), c in rankGenerating.items():
        key = (total - r, size - r)
        terms[key] = terms.get(key, 0) + c
    return _expandShifted(terms)


def characteristicPoly(pm: Polymatroid) -> BivariatePoly:
    # (-1)^{rk X}·T(1-q, 0)
    coeffs: Dict[Tuple[int, int], Coeff] = {}
    for (i, j), c in tutteShifted(pm).items():
        key = (i, 0)
        coeffs[key] = coeffs.get(key, 0) + c * _sign(pm.total + i + j)
    return BivariatePoly(coeffs, ("q", "t"))


def reesSeries(pm: Polymatroid, k: int, maxN: Optional[int] = None) -> List[SymFnQT]:
    # 直和べき X^0..X^k の H
    if k < 0:
        raise MalformedInput("TERMS", f"rees needs k >= 0 powers, got {k}")
    checkCap("maxN", k * pm.n, maxN)
    h = hInvariant(pm, maxN)
    D = max(k * pm.n - 1, 0)

    series = [SymFnQT({((), 0, 0): 1})]
    for _ in range(k):
        series.append(mulQT(series[-1], h, D))
    return series


def hAtSigmaInverse(
    pm: Polymatroid, D: int, maxN: Optional[int] = None, table: Optional[List[SymFn]] = None
) -> SymFn:
    """H[X](σ⁻¹, -1) = Σ_A P[X|_A]·σ^{-rk A}·(-1)^{|A|}, truncated at D."""
    if table is None:
        table = pTable(pm, maxN)

    byRank: Dict[int, SymFn] = {}
    for a, p in enumerate(table):
        ra = pm.rank[a]
        term = p * _sign(a.bit_count())
        byRank[ra] = byRank[ra] + term if ra in byRank else term

    result = SymFn({}, D)
    for ra, grouped in byRank.items():
        result = result + mulSigmaPow(grouped.truncate(D), -ra, D)
    return result


def nonnegativityReport(pm: Polymatroid, D: Optional[int] = None, maxN: Optional[int] = None) -> SignReport:
    """Sign patterns realizable polymatroids satisfy, d = |X|.

    - hilbert: σ^{rk X}·H[X](σ⁻¹, -1) has nonnegative coefficients, all in degree >= d
    - p: P[X] = Σ (-1)^{|λ|} b_λ s_λ with b_λ >= 0
    - hilbertSigned: H[X](σ⁻¹, -1) = Σ (-1)^{|λ|-d} c_λ s_λ with c_λ >= 0,
      |λ| >= d and rk(X)·ℓ(λ) > |λ| - d
    """
    if D is None:
        D = pm.n + 2
    table = pTable(pm, maxN)
    offending = []

    atInverse = hAtSigmaInverse(pm, D, table=table)
    shifted = mulSigmaPow(atInverse, pm.total, D)
    for lam, c in shifted.items():
        if c < 0 or weight(lam) < pm.n:
            offending.append(("hilbert", lam, c))

    for lam, c in table[pm.full].items():
        if c * _sign(weight(lam)) < 0:
            offending.append(("p", lam, c))

    for lam, c in atInverse.items():
        size = weight(lam)
        if c * _sign(size - pm.n) < 0 or size < pm.n or pm.total * len(lam) <= size - pm.n:
            offending.append(("hilbertSigned", lam, c))

    return SignReport(not offending, tuple(offending))

