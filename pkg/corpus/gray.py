from objects import BivariatePoly, CorpusEntry

# Both graphs share this Tutte polynomial
grayTutte = BivariatePoly(
    {
        (0, 5): 1,
        (0, 4): 4,
        (1, 4): 1,
        (2, 3): 1,
        (1, 3): 6,
        (0, 3): 7,
        (3, 2): 1,
        (0, 2): 6,
        (2, 2): 6,
        (1, 2): 13,
        (1, 1): 10,
        (4, 1): 1,
        (2, 1): 13,
        (3, 1): 6,
        (0, 1): 2,
        (1, 0): 2,
        (3, 0): 7,
        (5, 0): 1,
        (4, 0): 4,
        (2, 0): 6,
    }
)


class GrayEntry(CorpusEntry):
    def __init__(self, index: int, s222: int):
        super().__init__()

        self.id = f"gray{index}"
        self.name = f"Gray グラフ G{index}"
        self.description = "同じ Tutte 多項式を持つが P で区別される 6 頂点 10 辺のグラフ。"
        self.source = "Gray graphs example"
        self.document = f"gray{index}.json"
        self.s222 = s222

    def goldens(self):
        return {
            "tutte": grayTutte,
            "pCoefficients": {(2, 2, 2): self.s222},
        }


corpusInstances = [GrayEntry(1, 56), GrayEntry(2, 55)]
