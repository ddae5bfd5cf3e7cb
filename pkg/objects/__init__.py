from .combination import Coeff, Combination, exact
from .corpus import CorpusEntry, GoldenMismatch
from .documents import (
    DecompositionDoc,
    DecompositionPieceDoc,
    GraphDoc,
    InputDoc,
    OpDoc,
    PolymatroidDoc,
    QSymDoc,
    QSymTermDoc,
    RankTableDoc,
    UniformDoc,
    VectorsDoc,
)
from .polymatroid import (
    Graph,
    Polymatroid,
    SignReport,
    ValidationReport,
    VectorConfig,
    maskOf,
    subsetLabel,
)
from .polynomial import BivariatePoly
from .polytope import BasePolytope, IndicatorWitness, SignedDecomposition
from .qsym import Basis, QSymFn, QSymTensor, Word
from .symfn import Partition, SymFn, SymFnQT, conjugate, weight
