from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple


@dataclass(frozen=True)
class Polymatroid:
    # 台集合 0..n-1、ランク表は部分集合のビットマスクで引く
    n: int
    rank: Tuple[int, ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def total(self) -> int:
        return self.rank[self.full]

    def singleton(self, x: int) -> int:
        return self.rank[1 << x]


@dataclass(frozen=True)
class Graph:
    vertices: int
    edges: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class VectorConfig:
    dim: int
    subspaces: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    axiom: Optional[str] = None
    a: Optional[int] = None
    b: Optional[int] = None

    def describe(self, n: int) -> str:
        if self.ok:
            return "ok"
        return f"violation({self.axiom}): A={subsetLabel(self.a, n)} B={subsetLabel(self.b, n)}"


def subsetLabel(mask: int, n: int) -> str:
    return "{" + ",".join(str(i) for i in range(n) if mask >> i & 1) + "}"


def maskOf(elements: List[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


@dataclass(frozen=True)
class SignReport:
    ok: bool
    offending: Tuple[Tuple[str, Tuple[int, ...], object], ...] = ()
