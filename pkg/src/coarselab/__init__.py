"""coarselab: desk-scale computations in coarse graph homology, spectral
theory and index theory.

The package is organized around seven areas: graph presentations and
windows (``graphs``), bounded integer chains and their homology
(``homology``), eventually periodic sequence calculus (``sequences``),
a dense/banded spectral toolkit (``spectral``), exact 1-D wave evolution
(``wave``), reflection extensions and torus embedding norms (``sobolev``),
and window-stabilized index computations (``index_theory``).  The ``cli``
module exposes everything with file-based I/O and JSON reports.
"""

__version__ = "0.1.0"
