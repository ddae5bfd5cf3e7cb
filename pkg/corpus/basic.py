from objects import BivariatePoly, CorpusEntry, QSymFn, SymFn, SymFnQT


class LoopEntry(CorpusEntry):
    def __init__(self):
        super().__init__()

        self.id = "loop"
        self.name = "ループ"
        self.description = "自己ループ一本のグラフ。階数 0 の一元マトロイド。"
        self.source = "loop/coloop example"
        self.document = "loop.json"

    def goldens(self):
        return {
            "p": SymFn.one(),
            "h": SymFnQT({((), 0, 0): 1, ((), 0, 1): 1}),
            "g": QSymFn("U", {(0,): 1}),
            "tutte": BivariatePoly({(0, 1): 1}),
            "f": QSymFn("M", {(1,): 1}),
        }


class ColoopEntry(CorpusEntry):
    def __init__(self):
        super().__init__()

        self.id = "coloop"
        self.name = "コループ"
        self.description = "辺一本のグラフ。階数 1 の一元マトロイド (isthmus)。"
        self.source = "loop/coloop example"
        self.document = "coloop.json"

    def goldens(self):
        return {
            "p": SymFn.one(),
            "h": SymFnQT({((), 0, 0): 1, ((), 1, 1): 1}),
            "g": QSymFn("U", {(1,): 1}),
            "tutte": BivariatePoly({(1, 0): 1}),
            "f": QSymFn("M", {(1,): 1}),
        }


corpusInstances = [LoopEntry(), ColoopEntry()]
