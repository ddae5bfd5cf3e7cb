from fractions import Fraction
from typing import Any, List, Tuple

from objects import (
    BivariatePoly,
    Coeff,
    IndicatorWitness,
    Partition,
    QSymFn,
    SignReport,
    SymFn,
    SymFnQT,
    weight,
)


def coeffText(c: Coeff) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def partitionKey(lam: Partition) -> Tuple:
    # 次数の昇順、同じ次数では辞書式の降順
    return (weight(lam), tuple(-part for part in lam))


def qtKey(key: Tuple[Partition, int, int]) -> Tuple:
    lam, q, t = key
    return (t, q, partitionKey(lam))


def wordKey(word: Tuple[int, ...]) -> Tuple:
    return (len(word), word)


def exponentKey(exponents: Tuple[int, int]) -> Tuple:
    i, j = exponents
    return (-(i + j), -i)


def sortedSym(f: SymFn) -> List[Tuple[Partition, Coeff]]:
    return sorted(f.items(), key=lambda item: partitionKey(item[0]))


def sortedQT(f: SymFnQT) -> List[Tuple[Tuple[Partition, int, int], Coeff]]:
    return sorted(f.items(), key=lambda item: qtKey(item[0]))


def sortedQSym(f: QSymFn) -> List[Tuple[Tuple[int, ...], Coeff]]:
    return sorted(f.items(), key=lambda item: wordKey(item[0]))


def sortedPoly(f: BivariatePoly) -> List[Tuple[Tuple[int, int], Coeff]]:
    return sorted(f.items(), key=lambda item: exponentKey(item[0]))


def _join(terms: List[Tuple[Coeff, str]]) -> str:
    # factor text が "" なら数だけ
    if not terms:
        return "0"
    pieces = []
    for i, (c, factor) in enumerate(terms):
        size = coeffText(abs(c))
        if not factor:
            body = size
        elif size == "1":
            body = factor
        else:
            body = f"{size}*{factor}"

        if i == 0:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(pieces)


def _power(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def _factors(*parts: str) -> str:
    return "*".join(part for part in parts if part)


def schurText(lam: Partition) -> str:
    return "s[" + ",".join(str(part) for part in lam) + "]" if lam else ""


def renderSym(f: SymFn) -> str:
    return _join([(c, schurText(lam)) for lam, c in sortedSym(f)])


def renderSymQT(f: SymFnQT) -> str:
    return _join(
        [
            (c, _factors(schurText(lam), _power("q", q), _power("t", t)))
            for (lam, q, t), c in sortedQT(f)
        ]
    )


def renderQSym(f: QSymFn) -> str:
    letter = f.basis.value
    return _join(
        [
            (c, f"{letter}[" + ",".join(str(a) for a in word) + "]")
            for word, c in sortedQSym(f)
        ]
    )


def renderPoly(f: BivariatePoly) -> str:
    first, second = f.names
    return _join(
        [
            (c, _factors(_power(first, i), _power(second, j)))
            for (i, j), c in sortedPoly(f)
        ]
    )


def renderSigns(report: SignReport) -> str:
    if report.ok:
        return "ok"
    return "\n".join(
        f"{check}: {coeffText(c)} at s[{','.join(str(p) for p in lam)}]"
        for check, lam, c in report.offending
    )


def renderWitness(witness: IndicatorWitness) -> str:
    if witness.ok:
        return f"ok ({witness.checked} grid points)"
    point = ",".join(coeffText(c) for c in witness.point)
    return f"nonzero {coeffText(witness.value)} at ({point})"


def render(value: Any) -> str:
    if isinstance(value, SymFn):
        return renderSym(value)
    if isinstance(value, SymFnQT):
        return renderSymQT(value)
    if isinstance(value, QSymFn):
        return renderQSym(value)
    if isinstance(value, BivariatePoly):
        return renderPoly(value)
    if isinstance(value, SignReport):
        return renderSigns(value)
    if isinstance(value, IndicatorWitness):
        return renderWitness(value)
    if isinstance(value, list):
        return "\n".join(f"[{i}] {render(item)}" for i, item in enumerate(value))
    if isinstance(value, (int, Fraction)):
        return coeffText(value)
    raise TypeError(f"nothing renders {type(value).__name__}")
