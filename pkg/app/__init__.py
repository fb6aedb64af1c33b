"""Degree-sequence toolkit for potentially K5-P4 and K5-Y4 graphic sequences."""
