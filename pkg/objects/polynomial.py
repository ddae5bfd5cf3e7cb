from typing import Dict, Optional, Tuple

from .combination import Coeff, Combination

Exponents = Tuple[int, int]


class BivariatePoly(Combination):
    # 2 変数のローラン多項式
    __slots__ = ("names",)

    def __init__(
        self,
        coeffs: Optional[Dict[Exponents, Coeff]] = None,
        names: Tuple[str, str] = ("x", "y"),
    ):
        self.names = tuple(names)
        super().__init__(coeffs)

    def _like(self, coeffs, other=None) -> "BivariatePoly":
        return BivariatePoly(coeffs, self.names)

    def isPolynomial(self) -> bool:
        return all(i >= 0 and j >= 0 for i, j in self.coeffs)

    def swapped(self) -> "BivariatePoly":
        return BivariatePoly({(j, i): c for (i, j), c in self.coeffs.items()}, self.names)

    def __mul__(self, other):
        if not isinstance(other, BivariatePoly):
            return super().__mul__(other)
        product: Dict[Exponents, Coeff] = {}
        for (i, j), a in self.coeffs.items():
            for (k, l), b in other.coeffs.items():
                key = (i + k, j + l)
                product[key] = product.get(key, 0) + a * b
        return BivariatePoly(product, self.names)

    def __rmul__(self, scalar):
        return super().__mul__(scalar)

    def __eq__(self, other) -> bool:
        if isinstance(other, BivariatePoly):
            return self.coeffs == other.coeffs and (
                not self.coeffs or self.names == other.names
            )
        return NotImplemented
