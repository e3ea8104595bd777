"""Two-dimensional constant-weight optical orthogonal codes and their
cyclic packing counterparts.

The interesting case throughout is weight 4 with correlation bound 2,
where codes correspond to strictly column-cyclic 3-designs missing a
small leave.
"""

__version__ = "0.1.0"
