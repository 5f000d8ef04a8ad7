"""
Utility modules for pseudoseg_census: logging, formatting, serialization and parallel chunking.
"""
