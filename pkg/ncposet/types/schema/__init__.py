"""
.. _Schema:

JSON wire schemas
=================

Every artifact ncposet reads or writes goes through one of these models. Partitions
are the common currency:

.. code-block:: json

    {"n": 11, "blocks": [[1], [2, 9, 10], [3], [4, 5, 6, 7, 8], [11]]}
"""
from typing import Any, List, Optional, Tuple

from pydantic import BaseModel, Field, validator


class PartitionSchema(BaseModel):
    n: int = Field(..., ge=1)
    blocks: List[List[int]]


class PosetSchema(BaseModel):
    n: int = Field(..., ge=1)
    d: int = Field(..., ge=1)
    elements: List[PartitionSchema]
    covers: List[Tuple[int, int]] = Field(default_factory=list)


class SeriesTermSchema(BaseModel):
    x: int = Field(..., ge=0)
    s: int = Field(0, ge=0)
    t: int = Field(0, ge=0)
    num: int
    den: int = 1

    @validator("den")
    def nonzero_denominator(cls, value: int) -> int:
        if value == 0:
            raise ValueError("Series coefficient denominator cannot be zero.")
        return value


class SeriesSchema(BaseModel):
    order: int = Field(..., ge=0)
    terms: List[SeriesTermSchema] = Field(default_factory=list)


class ParkingFunctionSchema(BaseModel):
    d: int = Field(..., ge=1)
    values: List[int]


class PlaneTreeSchema(BaseModel):
    """
    A plane tree as nested child arrays, with edge labels in preorder when labeled.
    """

    tree: List[Any]
    labels: Optional[List[int]] = None


class ParkingTreeSchema(BaseModel):
    """
    Nodes are :code:`[label, [children...]]`, the root label is :code:`"inf"`
    and every other label is a pair :code:`[i, j]`.
    """

    d: int = Field(..., ge=1)
    k: int = Field(..., ge=0)
    tree: List[Any]


class AntipodeTermSchema(BaseModel):
    sizes: List[int]
    coeff: int
