"""Kuga–Satake limits of degenerating K3 type Hodge structures."""

__version__ = "0.1.0"
