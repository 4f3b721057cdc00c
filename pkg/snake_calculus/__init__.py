"""
Snake Calculus - snake graphs, band graphs, their resolutions and the Laurent
identities they induce in cluster algebras of unpunctured surfaces.
"""

__version__ = "1.0.0"
__author__ = "Snake Calculus"
