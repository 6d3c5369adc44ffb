# -*- coding: utf-8 -*-
"""Hilbert Space Reduction (HSReduce).

HSReduce reduces the Hilbert space of frustrated two-leg spin-1/2 ladders one
basis state at a time while renormalizing the rung coupling so that the
ground state energy stays fixed.
"""

__version__ = '20261017'
