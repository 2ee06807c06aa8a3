"""
Data types shared across ncposet.

1. :ref:`NoncrossingPartition<NoncrossingPartition>`
2. :ref:`GradedPoset<GradedPoset>`
3. :ref:`TruncatedSeries<TruncatedSeries>`
4. :ref:`PlaneTree<PlaneTree>`
5. :ref:`Parking functions and trees<Parking>`
6. :ref:`Antipode values<Hopf>`

Every type is immutable once built. JSON forms live in :ref:`Schema<Schema>`.
"""
from ncposet.types.hopf import HopfElement, Hypertree
from ncposet.types.parking import (
    DParkingFunction,
    DParkingTree,
    MaximalChain,
    ParkingNode,
    is_d_parking,
)
from ncposet.types.partition import DualAdjacency, NoncrossingPartition
from ncposet.types.poset import GradedPoset, IntervalFactorization
from ncposet.types.schema import (
    AntipodeTermSchema,
    ParkingFunctionSchema,
    ParkingTreeSchema,
    PartitionSchema,
    PlaneTreeSchema,
    PosetSchema,
    SeriesSchema,
    SeriesTermSchema,
)
from ncposet.types.series import TruncatedSeries
from ncposet.types.trees import LabeledPlaneTree, PlaneTree
