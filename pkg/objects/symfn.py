from typing import Dict, Optional, Tuple

from .combination import Coeff, Combination

Partition = Tuple[int, ...]


def weight(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def _minBound(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class SymFn(Combination):
    """Schur expansion Σ c_λ s_λ, meaningful up to degree `bound` (None = exact)."""

    __slots__ = ("bound",)

    def __init__(self, coeffs: Optional[Dict[Partition, Coeff]] = None, bound: Optional[int] = None):
        self.bound = bound
        super().__init__(coeffs)

    @classmethod
    def one(cls, bound: Optional[int] = None) -> "SymFn":
        return cls({(): 1}, bound)

    @classmethod
    def schur(cls, lam: Partition, coeff: Coeff = 1, bound: Optional[int] = None) -> "SymFn":
        return cls({tuple(lam): coeff}, bound)

    def _keeps(self, key: Partition) -> bool:
        return self.bound is None or weight(key) <= self.bound

    def _like(self, coeffs, other: "SymFn" = None) -> "SymFn":
        bound = self.bound if other is None else _minBound(self.bound, other.bound)
        return SymFn(coeffs, bound)

    def truncate(self, degree: int) -> "SymFn":
        return SymFn(self.coeffs, _minBound(self.bound, degree))

    def __eq__(self, other) -> bool:
        if isinstance(other, SymFn):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ({(): other} if other else {})
        return NotImplemented


QTKey = Tuple[Partition, int, int]


class SymFnQT(Combination):
    # Σ c · s_λ q^i t^j
    __slots__ = ()

    @classmethod
    def fromSymFn(cls, f: SymFn, q: int = 0, t: int = 0) -> "SymFnQT":
        return cls({(lam, q, t): c for lam, c in f.items()})

    def part(self, q: int, t: int) -> SymFn:
        return SymFn({lam: c for (lam, i, j), c in self.coeffs.items() if i == q and j == t})

    def tPart(self, t: int) -> "SymFnQT":
        return SymFnQT({key: c for key, c in self.coeffs.items() if key[2] == t})

    def exponents(self):
        return sorted({(i, j) for _, i, j in self.coeffs})
