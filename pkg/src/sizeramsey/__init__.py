"""Exact tools for size Ramsey numbers of matchings versus paths, path unions and cycles."""
__version__ = "0.1.0"
