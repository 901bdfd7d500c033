"""
About pymotif.

The only purpose of this module is to provide a version number for the package.
"""

__version__ = "0.1.0"
