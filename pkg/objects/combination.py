from fractions import Fraction
from typing import Dict, Hashable, ItemsView, Optional, Union

Coeff = Union[int, Fraction]


def exact(value) -> Coeff:
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


class Combination:
    # 有限台の key -> 有理数。0 の項は持たない
    __slots__ = ("coeffs",)
    __hash__ = None

    def __init__(self, coeffs: Optional[Dict[Hashable, Coeff]] = None):
        self.coeffs: Dict[Hashable, Coeff] = {}
        for key, value in (coeffs or {}).items():
            if value and self._keeps(key):
                self.coeffs[key] = exact(value)

    def _keeps(self, key) -> bool:
        return True

    def _like(self, coeffs: Dict[Hashable, Coeff], other: "Combination" = None):
        return type(self)(coeffs)

    def _compatible(self, other: "Combination"):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def get(self, key) -> Coeff:
        return self.coeffs.get(key, 0)

    def items(self) -> ItemsView:
        return self.coeffs.items()

    def isIntegral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs.values())

    def total(self) -> Coeff:
        return exact(sum(self.coeffs.values(), Fraction(0)))

    def __add__(self, other: "Combination"):
        self._compatible(other)
        merged = dict(self.coeffs)
        for key, value in other.coeffs.items():
            merged[key] = merged.get(key, 0) + value
        return self._like(merged, other)

    def __sub__(self, other: "Combination"):
        return self + -other

    def __neg__(self):
        return self._like({key: -value for key, value in self.coeffs.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, Combination):
            return NotImplemented
        return self._like({key: value * scalar for key, value in self.coeffs.items()})

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if type(other) is type(self):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.coeffs!r})"
