from dataclasses import dataclass, field
from typing import Optional, Tuple

from .combination import Coeff
from .polymatroid import Polymatroid


@dataclass(frozen=True)
class BasePolytope:
    """{v : Σ v = rk(X), Σ_{i∈A} v_i <= rk(A) for all A}, kept as its rank table."""

    pm: Polymatroid


@dataclass(frozen=True)
class SignedDecomposition:
    # targetCoeff·[Q(target)] = Σ coeff_i·[Q(pm_i)]
    target: Polymatroid
    pieces: Tuple[Tuple[Polymatroid, Coeff], ...]
    targetCoeff: Coeff = 1


@dataclass(frozen=True)
class IndicatorWitness:
    ok: bool
    point: Optional[Tuple[Coeff, ...]] = None
    value: Coeff = 0
    checked: int = field(default=0, compare=False)
