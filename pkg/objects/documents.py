from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field
from pydantic.alias_generators import to_snake

# int, "p/q" or [num, den]
RationalDoc = Union[int, str, Tuple[int, int]]


class RankTableDoc(BaseModel):
    type: Literal["rank_table"]
    n: int = Field(ge=0)
    rank: Dict[str, Union[int, str]]
    labels: Optional[List[str]] = None


class GraphDoc(BaseModel):
    type: Literal["graph"]
    vertices: int = Field(ge=0)
    edges: List[Tuple[int, int]]
    labels: Optional[List[str]] = None


class VectorsDoc(BaseModel):
    type: Literal["vectors"]
    dim: int = Field(ge=0)
    subspaces: List[List[List[RationalDoc]]]
    labels: Optional[List[str]] = None


class UniformDoc(BaseModel):
    type: Literal["uniform"]
    r: int
    n: int


class OpDoc(BaseModel):
    type: Literal["op"]
    op: Literal["dual", "sum", "restrict", "contract", "delete"]
    args: List[Union["PolymatroidDoc", List[int]]]


PolymatroidDoc = Annotated[
    Union[RankTableDoc, GraphDoc, VectorsDoc, UniformDoc, OpDoc],
    Field(discriminator="type"),
]
OpDoc.model_rebuild()


class QSymTermDoc(BaseModel):
    word: List[int]
    coeff: RationalDoc = 1


class QSymDoc(BaseModel):
    type: Literal["qsym"]
    basis: Literal["M", "P", "U"]
    terms: List[QSymTermDoc]


InputDoc = Annotated[
    Union[RankTableDoc, GraphDoc, VectorsDoc, UniformDoc, OpDoc, QSymDoc],
    Field(discriminator="type"),
]


class DecompositionPieceDoc(BaseModel):
    pm: PolymatroidDoc
    coeff: RationalDoc = 1


class DecompositionDoc(BaseModel):
    target: PolymatroidDoc
    pieces: List[DecompositionPieceDoc]
    targetCoeff: RationalDoc = 1

    model_config = ConfigDict(
        alias_generator=to_snake, populate_by_name=True, serialize_by_alias=False
    )
