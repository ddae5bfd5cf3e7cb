from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
from conftest import loadPolymatroid, randomPolymatroid

from objects import BasePolytope, SignedDecomposition
from services.corpus import CorpusService
from services.document import DocumentService
from services.exception import MalformedInput
from services.invariants import gInvariant
from services.polymatroid import directSum, uniform
from services.polytope import (
    checkIndicatorRelation,
    checkValuativeG,
    contains,
    rankSeqMultiplicity,
    rankSequence,
    valuativeResidue,
    vertexOfPermutation,
)


def decomposition(name: str) -> SignedDecomposition:
    return DocumentService.buildDecomposition(CorpusService.loadData(name))


def test_contains():
    u24 = uniform(2, 4)
    assert contains(u24, (1, 1, 0, 0))
    assert contains(BasePolytope(u24), ("1/2", "1/2", "1/2", "1/2"))
    assert not contains(u24, (2, 0, 0, 0))
    assert not contains(u24, (1, 0, 0, 0))
    assert contains(loadPolymatroid("loop"), (0,))


def test_contains_checks_dimension():
    with pytest.raises(MalformedInput):
        contains(uniform(2, 4), (1, 1))


def test_vertex_of_permutation(loop, coloop):
    assert vertexOfPermutation(uniform(2, 4), (0, 1, 2, 3)) == (1, 1, 0, 0)
    assert vertexOfPermutation(uniform(2, 4), (3, 1, 0, 2)) == (0, 1, 0, 1)
    assert vertexOfPermutation(directSum(loop, coloop), (0, 1)) == (0, 1)
    with pytest.raises(MalformedInput):
        vertexOfPermutation(uniform(2, 4), (0, 0, 1, 2))


def test_vertices_are_tight(rng):
    pms = [randomPolymatroid(rng, rng.randint(1, 4)) for _ in range(8)]
    pms.append(loadPolymatroid("mgon4"))
    for pm in pms:
        for perm in permutations(range(pm.n)):
            vertex = vertexOfPermutation(pm, perm)
            assert contains(pm, vertex)
            for j in range(pm.n):
                for k in range(j + 1, pm.n):
                    moved = [Fraction(c) for c in vertex]
                    moved[perm[j]] += Fraction(1, 2)
                    moved[perm[k]] -= Fraction(1, 2)
                    assert not contains(pm, moved)


def test_multiplicities():
    assert rankSeqMultiplicity(loadPolymatroid("points6x"), (1, 1, 0, 1, 0, 0)) == 72
    for m in range(2, 6):
        pm = loadPolymatroid(f"multiedge{m}")
        assert rankSeqMultiplicity(pm, (1,) + (0,) * (m - 1)) == factorial(m)
    assert rankSeqMultiplicity(uniform(2, 4), (1, -1, 1, 1)) == 0


def test_multiplicities_rebuild_g(rng):
    for _ in range(8):
        pm = randomPolymatroid(rng, rng.randint(1, 5))
        sequences = Counter(rankSequence(pm, perm) for perm in permutations(range(pm.n)))
        assert sum(sequences.values()) == factorial(pm.n)
        assert dict(sequences) == gInvariant(pm).coeffs
        for v, count in sequences.items():
            assert rankSeqMultiplicity(pm, v) == count


def test_hypersimplex_split():
    split = decomposition("u24split.json")
    for denom in (2, 3):
        witness = checkIndicatorRelation(split, denom)
        assert witness.ok
        assert witness.checked > 0
    assert checkValuativeG(split)
    assert not valuativeResidue(split)


def test_broken_split_is_refuted():
    broken = decomposition("u24broken.json")
    witness = checkIndicatorRelation(broken, 2)
    assert not witness.ok
    assert witness.value == -1
    assert witness.point[0] + witness.point[1] == 1
    assert sum(witness.point) == 2
    assert not checkValuativeG(broken)
    assert valuativeResidue(broken)


def test_trivial_decomposition():
    u24 = uniform(2, 4)
    trivial = SignedDecomposition(u24, ((u24, 1),))
    assert checkIndicatorRelation(trivial).ok
    assert checkValuativeG(trivial)


def test_grid_denominator_must_be_positive():
    u24 = uniform(2, 4)
    with pytest.raises(MalformedInput):
        checkIndicatorRelation(SignedDecomposition(u24, ()), 0)


def test_pieces_share_ground_set():
    with pytest.raises(MalformedInput):
        checkIndicatorRelation(SignedDecomposition(uniform(2, 4), ((uniform(1, 3), 1),)))
