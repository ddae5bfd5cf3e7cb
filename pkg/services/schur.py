from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from objects import Coeff, Partition, SymFn, SymFnQT, conjugate, weight


def partitions(n: int, largest: Optional[int] = None) -> Iterator[Partition]:
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _horizontalStrips(lam: Partition, budget: int) -> Tuple[Tuple[Partition, int], ...]:
    # μ/λ が高々 budget 箱の水平帯になる μ
    padded = lam + (0,)
    found: List[Tuple[Partition, int]] = []

    def extend(i: int, prefix: Tuple[int, ...], used: int):
        if i == len(padded):
            found.append((tuple(part for part in prefix if part), used))
            return
        low = padded[i]
        high = low + budget - used
        if i > 0:
            high = min(high, padded[i - 1])
        for part in range(low, high + 1):
            extend(i + 1, prefix + (part,), used + part - low)

    extend(0, (), 0)
    return tuple(found)


@lru_cache(maxsize=None)
def _exactStrips(lam: Partition, k: int) -> Tuple[Partition, ...]:
    return tuple(mu for mu, size in _horizontalStrips(lam, k) if size == k)


def _bounded(f: SymFn, D: int) -> Optional[int]:
    return D if f.bound is None else min(f.bound, D)


def mulH(f: SymFn, k: int, D: int) -> SymFn:
    result: Dict[Partition, Coeff] = {}
    for lam, c in f.items():
        if weight(lam) + k > D:
            continue
        for mu in _exactStrips(lam, k):
            result[mu] = result.get(mu, 0) + c
    return SymFn(result, _bounded(f, D))


def mulE(f: SymFn, k: int, D: int) -> SymFn:
    result: Dict[Partition, Coeff] = {}
    for lam, c in f.items():
        if weight(lam) + k > D:
            continue
        for mu in _exactStrips(conjugate(lam), k):
            nu = conjugate(mu)
            result[nu] = result.get(nu, 0) + c
    return SymFn(result, _bounded(f, D))


def mulSigma(f: SymFn, D: int) -> SymFn:
    # σ = Σ h_k
    result: Dict[Partition, Coeff] = {}
    for lam, c in f.items():
        budget = D - weight(lam)
        if budget < 0:
            continue
        for mu, _ in _horizontalStrips(lam, budget):
            result[mu] = result.get(mu, 0) + c
    return SymFn(result, _bounded(f, D))


def mulSigmaInverse(f: SymFn, D: int) -> SymFn:
    # σ⁻¹ = Σ (-1)^k e_k
    result: Dict[Partition, Coeff] = {}
    for lam, c in f.items():
        budget = D - weight(lam)
        if budget < 0:
            continue
        for mu, size in _horizontalStrips(conjugate(lam), budget):
            nu = conjugate(mu)
            result[nu] = result.get(nu, 0) + (-c if size % 2 else c)
    return SymFn(result, _bounded(f, D))


def mulSigmaPow(f: SymFn, k: int, D: int) -> SymFn:
    step = mulSigma if k >= 0 else mulSigmaInverse
    for _ in range(abs(k)):
        f = step(f, D)
    return f.truncate(D)


def sigmaPow(k: int, D: int) -> SymFn:
    return mulSigmaPow(SymFn.one(D), k, D)


def _latticeHolds(previous: Tuple[int, ...], added: Tuple[int, ...]) -> bool:
    # 各行を右から読むので、行ごとに新しい文字が先に来る
    seenPrevious = seenNew = 0
    for row in range(max(len(previous), len(added))):
        seenNew += added[row] if row < len(added) else 0
        if seenNew > seenPrevious:
            return False
        seenPrevious += previous[row] if row < len(previous) else 0
    return True


@lru_cache(maxsize=None)
def littlewoodRichardson(lam: Partition, mu: Partition) -> Tuple[Tuple[Partition, int], ...]:
    """s_λ·s_μ = Σ c^ν_{λμ} s_ν via LR tableaux of shape ν/λ and content μ."""
    states: Dict[Tuple[Partition, Tuple[int, ...]], int] = {(lam, ()): 1}
    for letter, part in enumerate(mu):
        grown: Dict[Tuple[Partition, Tuple[int, ...]], int] = {}
        for (shape, previous), ways in states.items():
            for new in _exactStrips(shape, part):
                added = tuple(
                    new[row] - (shape[row] if row < len(shape) else 0)
                    for row in range(len(new))
                )
                if letter > 0 and not _latticeHolds(previous, added):
                    continue
                key = (new, added)
                grown[key] = grown.get(key, 0) + ways
        states = grown

    coefficients: Dict[Partition, int] = {}
    for (shape, _), ways in states.items():
        coefficients[shape] = coefficients.get(shape, 0) + ways
    return tuple(coefficients.items())


def mul(f: SymFn, g: SymFn, D: int) -> SymFn:
    result: Dict[Partition, Coeff] = {}
    for lam, a in f.items():
        for mu, b in g.items():
            if weight(lam) + weight(mu) > D:
                continue
            big, small = (lam, mu) if weight(mu) <= weight(lam) else (mu, lam)
            for nu, c in littlewoodRichardson(big, small):
                result[nu] = result.get(nu, 0) + a * b * c
    bound = _bounded(f, D)
    if g.bound is not None:
        bound = min(bound, g.bound)
    return SymFn(result, bound)


def mulQT(f: SymFnQT, g: SymFnQT, D: int) -> SymFnQT:
    result: Dict[Tuple[Partition, int, int], Coeff] = {}
    for i, j in f.exponents():
        left = f.part(i, j)
        for k, l in g.exponents():
            product = mul(left, g.part(k, l), D)
            for nu, c in product.items():
                key = (nu, i + k, j + l)
                result[key] = result.get(key, 0) + c
    return SymFnQT(result)


def theta(f: SymFn) -> Coeff:
    return f.get(())


def hk(k: int) -> SymFn:
    return SymFn.schur((k,) if k else ())


def ek(k: int) -> SymFn:
    return SymFn.schur((1,) * k)
