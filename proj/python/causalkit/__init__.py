"""Causal structure toolkit: cone arithmetic in Minkowski charts, covering
Cauchy surfaces, compactness certificates, and a 1+1 lattice wave operator
with retarded/advanced inverses."""

from ._causalkit import *  # noqa: F401,F403
from ._causalkit import __doc__  # noqa: F401
