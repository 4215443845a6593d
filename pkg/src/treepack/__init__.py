"""Spanning-tree packing, essential connectivity and reduction for multigraphs."""
