"""
Exact enumeration for the posets NC^d_n of d-indivisible noncrossing partitions.

- :ref:`Partitions <Partitions>`: duals, adjacency and d-indivisibility.
- :ref:`Poset <Poset>`: construction, Möbius values and interval factorization.
- :ref:`Series <Series>`: generating functions over truncated power series.
- :ref:`Chains <Chains>` and :ref:`ParkingTrees <ParkingTrees>`: maximal chains,
  d-parking functions and their trees.
- :ref:`Antipode <Antipode>`: chain sums and noncrossing hypertrees.
"""
__version__ = "0.1.0"
