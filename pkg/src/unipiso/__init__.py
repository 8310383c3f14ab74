"""Exact combinatorics for unipotent blocks of GL_n(q^2) and U_n(q).

Partitions and rim hooks, F_{q^2} polynomials under the involution
``Gamma -> Gamma~``, unipotent degrees with their l-adic residues, block
labels, and label-level checkers for the Shintani correspondence.
"""

from .partitions import Partition

__all__ = ["Partition"]
__version__ = "0.1.0"
