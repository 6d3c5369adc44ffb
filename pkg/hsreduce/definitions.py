# -*- coding: utf-8 -*-
"""The definitions."""

BOUNDARY_OPEN = 'open'
BOUNDARY_PERIODIC = 'periodic'

BOUNDARIES = frozenset([
    BOUNDARY_OPEN,
    BOUNDARY_PERIODIC])

REPRESENTATION_SO4 = 'so4'
REPRESENTATION_SU2 = 'su2'

REPRESENTATIONS = frozenset([
    REPRESENTATION_SO4,
    REPRESENTATION_SU2])

ORDERING_AMPLITUDE_DESCENDING = 'amplitude_descending'
ORDERING_DIAGONAL_ASCENDING = 'diagonal_ascending'

ORDERING_STRATEGIES = frozenset([
    ORDERING_AMPLITUDE_DESCENDING,
    ORDERING_DIAGONAL_ASCENDING])

REORDER_EACH_STEP = 'reorder_each_step'
REORDER_ONCE = 'order_once'

REORDER_POLICIES = frozenset([
    REORDER_EACH_STEP,
    REORDER_ONCE])

ROOT_STATUS_INITIAL = 'initial'
ROOT_STATUS_NO_REAL_ROOT = 'no_real_root'
ROOT_STATUS_ONE_REAL = 'one_real'
ROOT_STATUS_TWO_REAL = 'two_real'
ROOT_STATUS_ZERO_LEADING_COEFFICIENT = 'zero_leading_coefficient'

TERMINATION_INSTABILITY_STOP = 'instability_stop'
TERMINATION_NO_REAL_ROOT_STOP = 'no_real_root_stop'
TERMINATION_REACHED_MINIMUM_DIMENSION = 'reached_min_dim'

EIGENSOLVER_METHOD_DENSE = 'dense'
EIGENSOLVER_METHOD_LANCZOS = 'lanczos'
