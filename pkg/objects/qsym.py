import enum
from typing import Dict, Optional, Tuple

from .combination import Coeff, Combination

Word = Tuple[int, ...]


class Basis(str, enum.Enum):
    M = "M"
    P = "P"
    U = "U"


class QSymFn(Combination):
    __slots__ = ("basis",)

    def __init__(self, basis: Basis, coeffs: Optional[Dict[Word, Coeff]] = None):
        self.basis = Basis(basis)
        super().__init__(coeffs)

    @classmethod
    def single(cls, basis: Basis, word: Word, coeff: Coeff = 1) -> "QSymFn":
        return cls(basis, {tuple(word): coeff})

    @classmethod
    def one(cls, basis: Basis) -> "QSymFn":
        return cls(basis, {(): 1})

    def _like(self, coeffs, other=None) -> "QSymFn":
        return QSymFn(self.basis, coeffs)

    def _compatible(self, other: "QSymFn"):
        if not isinstance(other, QSymFn):
            raise TypeError(f"cannot combine QSymFn with {type(other).__name__}")
        if other.basis != self.basis:
            raise TypeError(f"cannot add {other.basis.value} terms to {self.basis.value} terms")

    def __eq__(self, other) -> bool:
        if isinstance(other, QSymFn):
            if not self.coeffs and not other.coeffs:
                return True
            return self.basis == other.basis and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        return f"QSymFn({self.basis.value}, {self.coeffs!r})"


class QSymTensor(Combination):
    __slots__ = ("basis",)

    def __init__(self, basis: Basis, coeffs: Optional[Dict[Tuple[Word, Word], Coeff]] = None):
        self.basis = Basis(basis)
        super().__init__(coeffs)

    def _like(self, coeffs, other=None) -> "QSymTensor":
        return QSymTensor(self.basis, coeffs)

    def _compatible(self, other: "QSymTensor"):
        if not isinstance(other, QSymTensor):
            raise TypeError(f"cannot combine QSymTensor with {type(other).__name__}")
        if other.basis != self.basis:
            raise TypeError(f"cannot add {other.basis.value} terms to {self.basis.value} terms")

    def __eq__(self, other) -> bool:
        if isinstance(other, QSymTensor):
            return self.coeffs == other.coeffs and (
                not self.coeffs or self.basis == other.basis
            )
        return NotImplemented
