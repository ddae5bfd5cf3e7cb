from math import comb, factorial

from objects import BivariatePoly, CorpusEntry, QSymFn, SymFn, SymFnQT


def _row(i: int) -> SymFn:
    """Σ_{j<i} (-1)^j C(i-1, j) s_j, the P of the i-multiedge."""
    return SymFn({((j,) if j else ()): (-1) ** j * comb(i - 1, j) for j in range(i)})


class MultiedgeEntry(CorpusEntry):
    """Two vertices joined by m parallel edges."""

    def __init__(self, m: int):
        super().__init__()

        self.m = m
        self.id = f"multiedge{m}"
        self.name = f"{m} 重辺"
        self.description = f"2 頂点を {m} 本の辺で結んだグラフ。一様マトロイド U(1,{m})。"
        self.source = "m-multiedge example"
        self.document = f"multiedge{m}.json"

    def goldens(self):
        m = self.m

        h = {((), 0, 0): 1}
        for i in range(1, m + 1):
            for lam, c in _row(i).items():
                h[(lam, 1, i)] = comb(m, i) * c

        tutte = {(0, j): 1 for j in range(1, m)}
        tutte[(1, 0)] = 1

        return {
            "p": _row(m),
            "h": SymFnQT(h),
            "g": QSymFn("U", {(1,) + (0,) * (m - 1): factorial(m)}),
            "tutte": BivariatePoly(tutte),
        }


corpusInstances = [MultiedgeEntry(m) for m in range(2, 6)]
