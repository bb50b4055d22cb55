"""
Persistent Phylogeny - reduction solver, tree builder and exhaustive oracle
Version: 0.1.0
"""

__version__ = "0.1.0"
