# -*- coding: utf-8 -*-
"""zero forcing on generalized Johnson, Grassmann and Hamming graphs"""

__version__ = "0.1.0"
__license__ = "LGPL v3"

from .Manager import Manager
from .baseapi import (Error, SizingError, HypothesisError, FieldError,
                      DimensionError, DataReadError, JSONReadError,
                      CapExceededError)
from .FamilySpec import FamilySpec, FamilySpecError, johnson, grassmann, \
    hamming
from .Graph import Graph, GraphError, build_graph
from .Forcing import (closure, is_zero_forcing, zero_forcing_number_exact,
                      greedy_zero_forcing_set, ZeroForcingResult)
from .Grundy import grundy_exact, zf_from_grundy
from .Construction import ConstructionResult, predicted_zf
from .F2Matrix import F2Matrix, build_Bn, kernel_basis
from .Report import Report
