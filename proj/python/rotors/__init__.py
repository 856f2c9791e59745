"""Rotors of convex bodies in triangles and tetrahedra."""

from ._rotors import *  # noqa: F401,F403
from ._rotors import __doc__  # noqa: F401
