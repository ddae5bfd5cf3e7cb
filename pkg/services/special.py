from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Dict, Optional, Tuple

from objects import Basis, Coeff, Partition, Polymatroid, QSymFn, SymFn, SymFnQT, Word

from .exception import BasisMismatch, NotAMatroid, WordOutOfDomain
from .invariants import checkCap
from .logger import log
from .polymatroid import isMatroid
from .qsym import compositionsOf, pProduct, uShift, uUnshift
from .schur import mulQT, mulSigmaPow


@lru_cache(maxsize=None)
def tauPVector(alpha: Word) -> SymFn:
    """The Sym coefficient P(α) making Σ_i C(d,i)(-1)^i P(α[:i]) σ^{-|α[:i]|} vanish below degree d."""
    d = len(alpha)
    if d == 0:
        return SymFn.one()

    D = d - 1
    total = sum(alpha)
    result = SymFn({}, D)
    for i in range(d):
        prefix = alpha[:i]
        term = tauPVector(prefix).truncate(D) * (comb(d, i) * (-1 if i % 2 else 1))
        result = result + mulSigmaPow(term, total - sum(prefix), D)
    if d % 2 == 0:
        result = -result
    return SymFn(result.coeffs)


def _asU(f: QSymFn) -> QSymFn:
    if f.basis == Basis.U:
        return f
    if f.basis == Basis.P:
        return uUnshift(f)
    raise BasisMismatch("U", f.basis.value)


def tau(f: QSymFn) -> SymFnQT:
    """τ(U_α) = Σ_i P(α[:i]) q^{|α[:i]|} t^i / (i!(d-i)!)."""
    coeffs: Dict[Tuple[Partition, int, int], Coeff] = {}
    for word, c in _asU(f).items():
        d = len(word)
        for i in range(d + 1):
            prefix = word[:i]
            scale = c * Fraction(1, factorial(i) * factorial(d - i))
            q = sum(prefix)
            for lam, p in tauPVector(prefix).items():
                key = (lam, q, i)
                coeffs[key] = coeffs.get(key, 0) + scale * p
    return SymFnQT(coeffs)


def xi(f: QSymFn) -> SymFn:
    # q=1 での t^{ℓ(α)} の係数、0/1 の語だけ
    result = SymFn()
    for word, c in _asU(f).items():
        if any(letter not in (0, 1) for letter in word):
            raise WordOutOfDomain(word, "0/1 words")
        result = result + tauPVector(word) * Fraction(c, factorial(len(word)))
    return result


def zetaMat(pm: Polymatroid) -> int:
    if not isMatroid(pm):
        raise NotAMatroid("zetaMat")
    singles = [pm.singleton(x) for x in range(pm.n)]
    for a in range(1 << pm.n):
        if pm.rank[a] != sum(singles[x] for x in range(pm.n) if a >> x & 1):
            return 0
    return 1


def _minorSplits(pm: Polymatroid, lo: int, hi: int) -> bool:
    # マトロイドなら一元ずつの増分の和と一致すれば十分
    base = pm.rank[lo]
    gained = 0
    rest = hi & ~lo
    while rest:
        bit = rest & -rest
        gained += pm.rank[lo | bit] - base
        rest ^= bit
    return pm.rank[hi] - base == gained


def bjrF(pm: Polymatroid, maxN: Optional[int] = None) -> QSymFn:
    # ζ_α: すべてのマイナーが分解する鎖の数
    if not isMatroid(pm):
        raise NotAMatroid("bjrF")
    checkCap("maxN", pm.n, maxN)
    log.info(f"Counting split chains over {1 << pm.n} subsets (n={pm.n})")

    full = pm.full
    chains: Dict[int, Dict[Word, int]] = {0: {(): 1}}
    for lo in range(full):
        current = chains.pop(lo, None)
        if current is None:
            continue
        free = full & ~lo
        extra = free
        while extra:
            hi = lo | extra
            if _minorSplits(pm, lo, hi):
                size = extra.bit_count()
                target = chains.setdefault(hi, {})
                for word, count in current.items():
                    key = word + (size,)
                    target[key] = target.get(key, 0) + count
            extra = (extra - 1) & free
    return QSymFn(Basis.M, chains.get(full, {(): 1}))


def gammaChar(alpha: Word) -> Fraction:
    # α が弱増加なら 1/(k1!·k2!···)、それ以外は 0
    if any(a > b for a, b in zip(alpha, alpha[1:])):
        return Fraction(0)
    return Fraction(1, prod(factorial(k) for k in Counter(alpha).values()))


def gamma(f: QSymFn) -> Coeff:
    f = uShift(f) if f.basis == Basis.U else f
    if f.basis != Basis.P:
        raise BasisMismatch("P or U", f.basis.value)
    return sum((c * gammaChar(word) for word, c in f.items()), Fraction(0))


def thetaMap(f: QSymFn) -> QSymFn:
    # 普遍射 (QSym₂, γ) -> (QSym, ζ)
    f = uShift(f) if f.basis == Basis.U else f
    if f.basis != Basis.P:
        raise BasisMismatch("P or U", f.basis.value)

    result: Dict[Word, Coeff] = {}
    for word, c in f.items():
        if any(letter not in (1, 2) for letter in word):
            raise WordOutOfDomain(word, "QSym₂")
        for alpha in compositionsOf(len(word)):
            value, start = Fraction(c), 0
            for part in alpha:
                value *= gammaChar(word[start : start + part])
                start += part
                if not value:
                    break
            if value:
                result[alpha] = result.get(alpha, 0) + value
    return QSymFn(Basis.M, result)


def zetaQsym(f: QSymFn) -> Coeff:
    # ζ(M_α) = 1 (ℓ(α) <= 1)
    if f.basis != Basis.M:
        raise BasisMismatch("M", f.basis.value)
    return sum((c for word, c in f.items() if len(word) <= 1), 0)


def checkTauMultiplicative(alpha: Word, beta: Word) -> bool:
    left = tau(pProduct(QSymFn.single(Basis.U, alpha), QSymFn.single(Basis.U, beta)))
    D = max(len(alpha) + len(beta) - 1, 0)
    right = mulQT(
        tau(QSymFn.single(Basis.U, alpha)), tau(QSymFn.single(Basis.U, beta)), D
    )
    if left != right:
        log.warning(f"τ is not multiplicative on U{list(alpha)}·U{list(beta)}")
        return False
    return True
