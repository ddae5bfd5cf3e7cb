import random
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, Tuple

import pytest

from objects import Graph, Polymatroid, SymFn, VectorConfig
from services.corpus import CorpusService, corpusDir
from services.document import DocumentService
from services.polymatroid import fromGraph, fromVectors
from services.schur import partitions

dataDir = corpusDir / "data"


def loadPolymatroid(name: str) -> Polymatroid:
    return DocumentService.buildPolymatroid(CorpusService.loadData(f"{name}.json"))


def randomPolymatroid(rng: random.Random, n: int, matroid: bool = False) -> Polymatroid:
    """Subspace arrangement in Q^3 spanned by small integer vectors."""
    subspaces = []
    for _ in range(n):
        count = 1 if matroid else rng.randint(0, 2)
        subspaces.append(
            tuple(tuple(Fraction(rng.randint(-1, 1)) for _ in range(3)) for _ in range(count))
        )
    return fromVectors(VectorConfig(3, tuple(subspaces)))


def randomGraph(rng: random.Random, vertices: int, edges: int) -> Graph:
    return Graph(
        vertices,
        tuple((rng.randrange(vertices), rng.randrange(vertices)) for _ in range(edges)),
    )


def randomGraphic(rng: random.Random, edges: int) -> Polymatroid:
    return fromGraph(randomGraph(rng, rng.randint(1, 4), edges))


def randomSymFn(rng: random.Random, maxDegree: int = 3) -> SymFn:
    shapes = [lam for d in range(maxDegree + 1) for lam in partitions(d)]
    return SymFn({lam: rng.randint(-3, 3) for lam in rng.sample(shapes, 3)})


@lru_cache(maxsize=None)
def schurMonomials(lam: Tuple[int, ...], variables: int) -> Dict[Tuple[int, ...], int]:
    """s_λ(x_1..x_N) as exponent vector -> count of semistandard tableaux."""
    cells = [(row, col) for row, part in enumerate(lam) for col in range(part)]
    counts: Dict[Tuple[int, ...], int] = {}
    filling: Dict[Tuple[int, int], int] = {}

    def fill(index: int):
        if index == len(cells):
            exponents = [0] * variables
            for value in filling.values():
                exponents[value] += 1
            key = tuple(exponents)
            counts[key] = counts.get(key, 0) + 1
            return
        row, col = cells[index]
        low = 0
        if col > 0:
            low = max(low, filling[(row, col - 1)])
        if row > 0:
            low = max(low, filling[(row - 1, col)] + 1)
        for value in range(low, variables):
            filling[(row, col)] = value
            fill(index + 1)
        filling.pop((row, col), None)

    fill(0)
    return counts


def symmetricPart(f: SymFn, variables: int) -> Dict[Tuple[int, ...], int]:
    """Coefficients of f at weakly decreasing exponent vectors."""
    result: Dict[Tuple[int, ...], int] = {}
    for lam, c in f.items():
        for exponents, count in schurMonomials(lam, variables).items():
            if list(exponents) == sorted(exponents, reverse=True):
                result[exponents] = result.get(exponents, 0) + c * count
    return {key: value for key, value in result.items() if value}


def productPart(lam, mu, variables: int) -> Dict[Tuple[int, ...], int]:
    result: Dict[Tuple[int, ...], int] = {}
    left = schurMonomials(lam, variables)
    right = schurMonomials(mu, variables)
    for a, x in left.items():
        for b, y in right.items():
            key = tuple(i + j for i, j in zip(a, b))
            if list(key) == sorted(key, reverse=True):
                result[key] = result.get(key, 0) + x * y
    return result


def chainWords(pm: Polymatroid) -> Dict[Tuple[int, ...], int]:
    counts: Dict[Tuple[int, ...], int] = {}
    for perm in permutations(range(pm.n)):
        mask, word = 0, []
        for x in perm:
            grown = mask | 1 << x
            word.append(pm.rank[grown] - pm.rank[mask])
            mask = grown
        key = tuple(word)
        counts[key] = counts.get(key, 0) + 1
    return counts


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def loop():
    return loadPolymatroid("loop")


@pytest.fixture
def coloop():
    return loadPolymatroid("coloop")
