"""Higher independence complexes of graphs: constructions, decomposability
certificates, homology, and square-free monomial ideal duality."""

__version__ = "0.1.0"
