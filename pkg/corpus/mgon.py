from math import comb, factorial

from objects import BivariatePoly, CorpusEntry, QSymFn, SymFn, SymFnQT


class PolygonEntry(CorpusEntry):
    """The cycle graph on m vertices."""

    def __init__(self, m: int):
        super().__init__()

        self.m = m
        self.id = f"mgon{m}"
        self.name = f"{m} 角形"
        self.description = f"{m} 頂点のサイクルグラフ。階数 {m - 1} のマトロイド。"
        self.source = "m-gon example"
        self.document = f"mgon{m}.json"

    def goldens(self):
        m = self.m
        p = SymFn({(1,) * j: (-1) ** j for j in range(m)})

        # (1+qt)^m - (qt)^m + q^{m-1} t^m P
        h = {((), i, i): comb(m, i) for i in range(m)}
        for lam, c in p.items():
            h[(lam, m - 1, m)] = c

        tutte = {(i, 0): 1 for i in range(1, m)}
        tutte[(0, 1)] = 1

        return {
            "p": p,
            "h": SymFnQT(h),
            "g": QSymFn("U", {(1,) * (m - 1) + (0,): factorial(m)}),
            "tutte": BivariatePoly(tutte),
        }


corpusInstances = [PolygonEntry(m) for m in range(3, 7)]
