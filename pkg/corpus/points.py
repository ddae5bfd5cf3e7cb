from objects import CorpusEntry, QSymFn, SymFn

sixPointP = SymFn(
    {
        (): 1,
        (1,): -3,
        (2,): 3,
        (1, 1): 6,
        (3,): -1,
        (2, 1): -8,
        (1, 1, 1): -8,
        (3, 1): 3,
        (2, 2): 6,
        (2, 1, 1): 11,
        (3, 2): -3,
        (3, 1, 1): -4,
        (2, 2, 1): -3,
    }
)
sixPointG = QSymFn("U", {(1, 1, 0, 1, 0, 0): 72, (1, 1, 1, 0, 0, 0): 648})

sevenPointXP = SymFn(
    {
        (): 1,
        (1,): -4,
        (2,): 6,
        (1, 1): 9,
        (3,): -4,
        (2, 1): -17,
        (1, 1, 1): -10,
        (4,): 1,
        (3, 1): 12,
        (2, 2): 13,
        (2, 1, 1): 17,
        (4, 1): -3,
        (3, 2): -10,
        (3, 1, 1): -10,
        (2, 2, 1): -8,
        (4, 2): 2,
        (4, 1, 1): 2,
        (3, 3): 2,
        (3, 2, 1): 3,
        (2, 2, 2): 1,
    }
)
# X と違うのは s22, s32, s221, s42, s321 の 5 項だけ
sevenPointYP = sevenPointXP + SymFn(
    {(2, 2): 1, (3, 2): -2, (2, 2, 1): -2, (4, 2): 1, (3, 2, 1): 1}
)

sevenPointXG = QSymFn(
    "U",
    {
        (1, 1, 1, 0, 0, 0, 0): 3456,
        (1, 1, 0, 1, 0, 0, 0): 1080,
        (1, 1, 0, 0, 1, 0, 0): 264,
        (1, 0, 1, 1, 0, 0, 0): 216,
        (1, 0, 1, 0, 1, 0, 0): 24,
    }
)
sevenPointYG = QSymFn(
    "U",
    {
        (1, 1, 1, 0, 0, 0, 0): 3456,
        (1, 1, 0, 1, 0, 0, 0): 1104,
        (1, 1, 0, 0, 1, 0, 0): 240,
        (1, 0, 1, 1, 0, 0, 0): 192,
        (1, 0, 1, 0, 1, 0, 0): 48,
    }
)


class PointConfigurationEntry(CorpusEntry):
    """Points of the projective plane, each a line through the origin of Q^3."""

    def __init__(self, entryId: str, name: str, description: str, p: SymFn, g: QSymFn):
        super().__init__()

        self.id = entryId
        self.name = name
        self.description = description
        self.source = "point configuration examples"
        self.document = f"{entryId}.json"
        self.p = p
        self.g = g

    def goldens(self):
        return {"p": self.p, "g": self.g}


corpusInstances = [
    PointConfigurationEntry(
        "points6x",
        "6 点配置 X",
        "2 本の平行な直線に 3 点ずつ。Y と P, H, G, F が一致する。",
        sixPointP,
        sixPointG,
    ),
    PointConfigurationEntry(
        "points6y",
        "6 点配置 Y",
        "1 点を共有する 2 本の直線に 3 点ずつ。",
        sixPointP,
        sixPointG,
    ),
    PointConfigurationEntry(
        "points7x",
        "7 点配置 X",
        "重複点を含む 7 点。Y と Tutte 多項式は同じだが G, P, H は異なる。",
        sevenPointXP,
        sevenPointXG,
    ),
    PointConfigurationEntry(
        "points7y",
        "7 点配置 Y",
        "A..F の 6 点と重複した D。",
        sevenPointYP,
        sevenPointYG,
    ),
]
