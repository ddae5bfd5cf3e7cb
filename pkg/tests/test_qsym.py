from fractions import Fraction
from math import comb

import pytest

from objects import QSymFn, QSymTensor
from services.exception import BasisMismatch
from services.qsym import (
    checkLetters,
    compositionsOf,
    counit,
    mToP,
    multiplyTensor,
    pAntipode,
    pCoproduct,
    pProduct,
    pToM,
    tensorProduct,
    uShift,
    uUnshift,
)


def P(*word, coeff=1):
    return QSymFn.single("P", word, coeff)


def U(*word, coeff=1):
    return QSymFn.single("U", word, coeff)


def randomWord(rng, low=1, high=3, longest=3):
    return tuple(rng.randint(low, high) for _ in range(rng.randint(0, longest)))


def randomElement(rng):
    result = QSymFn("P")
    for _ in range(2):
        result = result + P(*randomWord(rng), coeff=rng.randint(-2, 2))
    return result


def test_shuffle_products():
    assert pProduct(P(1), P(2)) == P(1, 2) + P(2, 1)
    assert pProduct(P(1), P(1)) == P(1, 1, coeff=2)
    assert pProduct(U(1), U(1, 0)) == U(1, 1, 0, coeff=2) + U(1, 0, 1)


def test_mixed_bases_multiply_in_p():
    product = pProduct(U(0), P(2))
    assert product.basis.value == "P"
    assert product == P(1, 2) + P(2, 1)


def test_shuffle_mass(rng):
    for _ in range(20):
        alpha, beta = randomWord(rng), randomWord(rng)
        assert pProduct(P(*alpha), P(*beta)).total() == comb(len(alpha) + len(beta), len(alpha))


def test_product_commutative_and_associative(rng):
    for _ in range(15):
        f, g, h = randomElement(rng), randomElement(rng), randomElement(rng)
        assert pProduct(f, g) == pProduct(g, f)
        assert pProduct(pProduct(f, g), h) == pProduct(f, pProduct(g, h))


def test_coproduct_deconcatenates():
    expected = QSymTensor(
        "P", {((), (2, 1)): 1, ((2,), (1,)): 1, ((2, 1), ()): 1}
    )
    assert pCoproduct(P(2, 1)) == expected


def test_counit_is_a_unit_for_coproduct(rng):
    for _ in range(10):
        f = randomElement(rng)
        left = QSymFn("P")
        right = QSymFn("P")
        for (a, b), c in pCoproduct(f).items():
            left = left + QSymFn.single("P", b, c * counit(QSymFn.single("P", a)))
            right = right + QSymFn.single("P", a, c * counit(QSymFn.single("P", b)))
        assert left == f
        assert right == f


def test_coproduct_is_multiplicative(rng):
    for _ in range(10):
        f, g = randomElement(rng), randomElement(rng)
        assert pCoproduct(pProduct(f, g)) == tensorProduct(pCoproduct(f), pCoproduct(g))


def test_antipode_as_printed():
    assert pAntipode(P(3)) == -P(3)
    assert pAntipode(P(1, 2)) == P(1, 2)


def test_antipode_axiom_with_reversal():
    for alpha in (a for size in range(6) for a in compositionsOf(size) if len(a) <= 4):
        twisted = QSymTensor("P")
        for (a, b), c in pCoproduct(P(*alpha)).items():
            left = pAntipode(P(*a, coeff=c), reverse=True)
            twisted = twisted + QSymTensor("P", {(w, b): d for w, d in left.items()})
        expected = QSymFn.one("P") if not alpha else QSymFn("P")
        assert multiplyTensor(twisted) == expected


def test_p_to_m():
    assert pToM(P(1)) == QSymFn.single("M", (1,))
    assert pToM(P(1, 1)) == QSymFn("M", {(1, 1): 1, (2,): Fraction(1, 2)})


def test_m_to_p_inverts_p_to_m():
    for size in range(6):
        for alpha in compositionsOf(size):
            assert mToP(pToM(P(*alpha))) == P(*alpha)
            m = QSymFn.single("M", alpha)
            assert pToM(mToP(m)) == m


def test_shift():
    assert uShift(U(0)) == P(1)
    assert uShift(U(1, 1, 0)) == P(2, 2, 1)
    assert uUnshift(uShift(U(2, 0, 1))) == U(2, 0, 1)


def test_basis_rules():
    with pytest.raises(BasisMismatch):
        checkLetters(QSymFn.single("P", (0,)))
    with pytest.raises(BasisMismatch):
        uUnshift(QSymFn("P", {(0, 1): 1}))
    assert checkLetters(U(0, 2)) == U(0, 2)
    with pytest.raises(BasisMismatch):
        uShift(P(1))
    with pytest.raises(BasisMismatch):
        pProduct(QSymFn.single("M", (1,)), P(1))
    with pytest.raises(TypeError):
        P(1) + U(1)
    with pytest.raises(BasisMismatch):
        mToP(P(1))
