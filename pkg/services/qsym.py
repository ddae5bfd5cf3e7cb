from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Dict, Iterator, List, Tuple

from objects import Basis, Coeff, QSymFn, QSymTensor, Word

from .exception import BasisMismatch


@lru_cache(maxsize=None)
def shuffles(alpha: Word, beta: Word) -> Tuple[Tuple[Word, int], ...]:
    length = len(alpha) + len(beta)
    counts: Dict[Word, int] = {}
    for positions in combinations(range(length), len(alpha)):
        word = [0] * length
        left = iter(alpha)
        right = iter(beta)
        chosen = set(positions)
        for i in range(length):
            word[i] = next(left) if i in chosen else next(right)
        key = tuple(word)
        counts[key] = counts.get(key, 0) + 1
    return tuple(counts.items())


def compositionsOf(n: int) -> Iterator[Word]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositionsOf(n - first):
            yield (first,) + rest


def cuts(word: Word) -> Iterator[List[Word]]:
    # 連続する空でないブロックへの切り方
    if not word:
        yield []
        return
    inner = len(word) - 1
    for mask in range(1 << inner):
        blocks, start = [], 0
        for i in range(inner):
            if mask >> i & 1:
                blocks.append(word[start : i + 1])
                start = i + 1
        blocks.append(word[start:])
        yield blocks


def checkLetters(f: QSymFn) -> QSymFn:
    low = 0 if f.basis == Basis.U else 1
    for word in f.coeffs:
        if any(letter < low for letter in word):
            raise BasisMismatch(f"{f.basis.value}-basis letters >= {low}", f"word {list(word)}")
    return f


def uShift(f: QSymFn) -> QSymFn:
    # U_(a1..ad) = P_(a1+1..ad+1)
    if f.basis != Basis.U:
        raise BasisMismatch("U", f.basis.value)
    return QSymFn(Basis.P, {tuple(a + 1 for a in w): c for w, c in f.items()})


def uUnshift(f: QSymFn) -> QSymFn:
    if f.basis != Basis.P:
        raise BasisMismatch("P", f.basis.value)
    checkLetters(f)
    return QSymFn(Basis.U, {tuple(a - 1 for a in w): c for w, c in f.items()})


def toP(f: QSymFn) -> QSymFn:
    if f.basis == Basis.U:
        return uShift(f)
    if f.basis == Basis.M:
        return mToP(f)
    return f


def _productBasis(f: QSymFn, g: QSymFn) -> Tuple[Basis, QSymFn, QSymFn]:
    for operand in (f, g):
        if operand.basis == Basis.M:
            raise BasisMismatch("P or U", "M")
    if f.basis == g.basis:
        return f.basis, f, g
    return Basis.P, toP(f), toP(g)


def pProduct(f: QSymFn, g: QSymFn) -> QSymFn:
    # シャッフル積。U 同士なら U のまま
    basis, f, g = _productBasis(f, g)
    result: Dict[Word, Coeff] = {}
    for alpha, a in f.items():
        for beta, b in g.items():
            for gamma, ways in shuffles(alpha, beta):
                result[gamma] = result.get(gamma, 0) + a * b * ways
    return QSymFn(basis, result)


def pCoproduct(f: QSymFn) -> QSymTensor:
    if f.basis == Basis.M:
        raise BasisMismatch("P or U", "M")
    result: Dict[Tuple[Word, Word], Coeff] = {}
    for word, c in f.items():
        for i in range(len(word) + 1):
            key = (word[:i], word[i:])
            result[key] = result.get(key, 0) + c
    return QSymTensor(f.basis, result)


def counit(f: QSymFn) -> Coeff:
    return f.get(())


def pAntipode(f: QSymFn, reverse: bool = False) -> QSymFn:
    # P_α -> (-1)^{ℓ(α)} P_α
    if f.basis == Basis.M:
        raise BasisMismatch("P or U", "M")
    result: Dict[Word, Coeff] = {}
    for word, c in f.items():
        key = word[::-1] if reverse else word
        result[key] = result.get(key, 0) + (-c if len(word) % 2 else c)
    return QSymFn(f.basis, result)


def tensorProduct(x: QSymTensor, y: QSymTensor) -> QSymTensor:
    if x.basis != y.basis:
        raise BasisMismatch(x.basis.value, y.basis.value)
    result: Dict[Tuple[Word, Word], Coeff] = {}
    for (a, b), s in x.items():
        for (c, d), t in y.items():
            for left, m in shuffles(a, c):
                for right, k in shuffles(b, d):
                    key = (left, right)
                    result[key] = result.get(key, 0) + s * t * m * k
    return QSymTensor(x.basis, result)


def multiplyTensor(x: QSymTensor) -> QSymFn:
    result = QSymFn(x.basis)
    for (a, b), c in x.items():
        result = result + pProduct(QSymFn.single(x.basis, a, c), QSymFn.single(x.basis, b))
    return result


def pToM(f: QSymFn) -> QSymFn:
    """P_β = Σ_cuts M_(|β1|,...,|βr|) / ∏ ℓ(βi)!."""
    f = toP(f) if f.basis == Basis.U else f
    if f.basis != Basis.P:
        raise BasisMismatch("P or U", f.basis.value)
    result: Dict[Word, Coeff] = {}
    for word, c in f.items():
        for blocks in cuts(word):
            key = tuple(sum(block) for block in blocks)
            weight = Fraction(1, prod(factorial(len(block)) for block in blocks))
            result[key] = result.get(key, 0) + c * weight
    return QSymFn(Basis.M, result)


def mToP(f: QSymFn) -> QSymFn:
    """M_β = Σ_cuts (-1)^{ℓ(β)-r} P_(|β1|,...,|βr|) / ∏ ℓ(βi)."""
    if f.basis != Basis.M:
        raise BasisMismatch("M", f.basis.value)
    result: Dict[Word, Coeff] = {}
    for word, c in f.items():
        for blocks in cuts(word):
            key = tuple(sum(block) for block in blocks)
            sign = -1 if (len(word) - len(blocks)) % 2 else 1
            weight = Fraction(sign, prod(len(block) for block in blocks))
            result[key] = result.get(key, 0) + c * weight
    return QSymFn(Basis.P, result)
