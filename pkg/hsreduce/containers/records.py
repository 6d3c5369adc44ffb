# -*- coding: utf-8 -*-
"""Record containers of the result files."""

from hsreduce.containers import interface
from hsreduce.containers import manager


class TrajectoryRow(interface.RecordContainer):
  """Row of a trajectory file, one per reduction step.

  Columns are: step index, dimension n, coupling g, the 4 lowest eigenvalues,
  the 4 energies per site, the 4 percentage deviations p(i), the entropy per
  site, the relevant and irrelevant amplitude counts, |a_1n| of the eliminated
  state, the root status and the enumeration index of the eliminated state.
  """

  CONTAINER_TYPE = 'trajectory_row'

  FORMAT_VERSION = 1

  SCHEMA = {
      'step': 'int',
      'n': 'int',
      'g': 'float',
      'lambda1': 'float',
      'lambda2': 'float',
      'lambda3': 'float',
      'lambda4': 'float',
      'e1': 'float',
      'e2': 'float',
      'e3': 'float',
      'e4': 'float',
      'p1': 'float',
      'p2': 'float',
      'p3': 'float',
      'p4': 'float',
      'entropy': 'float',
      'relevant': 'int',
      'irrelevant': 'int',
      'dropped_amp': 'float',
      'root_status': 'str',
      'eliminated_index': 'int'}


class ComparisonRow(interface.RecordContainer):
  """Row of a representation comparison file, one per dimension."""

  CONTAINER_TYPE = 'comparison_row'

  FORMAT_VERSION = 1

  SCHEMA = {
      'n': 'int',
      'p1_su2': 'float',
      'p1_so4': 'float',
      's_su2': 'float',
      's_so4': 'float',
      'relevant_su2': 'int',
      'irrelevant_su2': 'int',
      'relevant_so4': 'int',
      'irrelevant_so4': 'int',
      'relevant_difference_su2': 'int',
      'relevant_difference_so4': 'int'}


manager.RecordContainersManager.RegisterRecordContainers([
    ComparisonRow, TrajectoryRow])
