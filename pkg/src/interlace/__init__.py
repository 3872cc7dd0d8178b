"""Interlacing graphs of r-stable polygons."""
