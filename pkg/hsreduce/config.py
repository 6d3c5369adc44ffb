# -*- coding: utf-8 -*-
"""Run configuration."""

import math
import os

from hsreduce import definitions
from hsreduce import errors
from hsreduce import hamiltonian
from hsreduce import reduction


class RunConfig(object):
  """Configuration of a run.

  Attribute names are the command line flag names with dashes replaced by
  underscores, the same names are used as keys of configuration files and,
  upper case with the HSREDUCE_ prefix, as environment variables.

  Attributes:
    boundary (str): boundary condition along the legs, either open or
        periodic.
    dense_threshold (int): largest dimension diagonalized densely.
    epsilon (float): relevance threshold of the ground state amplitudes.
    instability_threshold (float): p(1) in percent above which a step is
        unstable.
    jc (float): diagonal coupling J_c.
    jl (float): leg coupling J_l.
    jt (float): rung coupling J_t.
    length (int): ladder length L.
    min_dim (int): dimension N_min at which the reduction stops.
    ordering (str): ordering strategy.
    out (str): path of the output file.
    patience (int): number of consecutive unstable steps that stop the
        reduction.
    reorder_policy (str): reorder policy.
    representation (str): representation of the basis.
    seed (int): seed of the Lanczos start vector.
    strict (bool): True if a step without real root stops the reduction.
    tol (float): maximum residual norm of a converged eigenpair.
    track (int): number of tracked eigenvalues k.
  """

  ENVIRONMENT_PREFIX = 'HSREDUCE_'

  _BOOLEAN_TRUE_VALUES = frozenset(['1', 'on', 'true', 'yes'])
  _BOOLEAN_FALSE_VALUES = frozenset(['', '0', 'false', 'no', 'off'])

  _DEFAULTS = {
      'boundary': definitions.BOUNDARY_OPEN,
      'dense_threshold': 256,
      'epsilon': 1e-2,
      'instability_threshold': 10.0,
      'jc': 3.0,
      'jl': 5.0,
      'jt': 15.0,
      'length': 6,
      'min_dim': 8,
      'ordering': definitions.ORDERING_DIAGONAL_ASCENDING,
      'out': 'trajectory.csv',
      'patience': 5,
      'reorder_policy': definitions.REORDER_ONCE,
      'representation': definitions.REPRESENTATION_SU2,
      'seed': 0,
      'strict': False,
      'tol': 1e-9,
      'track': 4}

  _FIELD_TYPES = {
      'boundary': 'str',
      'dense_threshold': 'int',
      'epsilon': 'float',
      'instability_threshold': 'float',
      'jc': 'float',
      'jl': 'float',
      'jt': 'float',
      'length': 'int',
      'min_dim': 'int',
      'ordering': 'str',
      'out': 'str',
      'patience': 'int',
      'reorder_policy': 'str',
      'representation': 'str',
      'seed': 'int',
      'strict': 'bool',
      'tol': 'float',
      'track': 'int'}

  def __init__(self):
    """Initializes a run configuration with the default values."""
    super(RunConfig, self).__init__()
    for field_name, value in self._DEFAULTS.items():
      setattr(self, field_name, value)

  def _ConvertValue(self, field_name, value):
    """Converts a value to the type of a field.

    Args:
      field_name (str): name of the field.
      value (object): value, either typed or a string.

    Returns:
      object: converted value.

    Raises:
      ConfigurationError: if the value cannot be converted.
    """
    field_type = self._FIELD_TYPES[field_name]

    if field_type == 'bool':
      if isinstance(value, bool):
        return value

      lower_value = str(value).strip().lower()
      if lower_value in self._BOOLEAN_TRUE_VALUES:
        return True
      if lower_value in self._BOOLEAN_FALSE_VALUES:
        return False

      raise errors.ConfigurationError(
          field_name, f'unsupported boolean value: {value!s}')

    if field_type == 'int':
      if isinstance(value, (bool, float)):
        raise errors.ConfigurationError(
            field_name, f'unsupported integer value: {value!s}')
      try:
        return int(value, 10) if isinstance(value, str) else int(value)
      except (TypeError, ValueError):
        raise errors.ConfigurationError(
            field_name, f'unsupported integer value: {value!s}')

    if field_type == 'float':
      if isinstance(value, bool):
        raise errors.ConfigurationError(
            field_name, f'unsupported floating-point value: {value!s}')
      try:
        return float(value)
      except (TypeError, ValueError):
        raise errors.ConfigurationError(
            field_name, f'unsupported floating-point value: {value!s}')

    if not isinstance(value, str):
      raise errors.ConfigurationError(
          field_name, f'unsupported string value: {value!s}')

    return value

  def CopyFromDict(self, values):
    """Copies values from a dictionary, for example a configuration file.

    Args:
      values (dict[str, object]): values per field name. Values set to None
          are ignored.

    Raises:
      ConfigurationError: if a field name is not supported or a value cannot
          be converted.
    """
    for field_name, value in values.items():
      if field_name not in self._FIELD_TYPES:
        raise errors.ConfigurationError(field_name, 'unsupported field')

      if value is not None:
        setattr(self, field_name, self._ConvertValue(field_name, value))

  def CopyFromEnvironment(self, environment=None):
    """Copies values from environment variables.

    Only variables named after a field, such as HSREDUCE_MIN_DIM, are read.

    Args:
      environment (Optional[dict[str, str]]): environment variables, where
          None represents os.environ.

    Raises:
      ConfigurationError: if a value cannot be converted.
    """
    if environment is None:
      environment = os.environ

    for field_name in sorted(self._FIELD_TYPES):
      variable_name = f'{self.ENVIRONMENT_PREFIX:s}{field_name.upper():s}'
      value = environment.get(variable_name, None)
      if value is not None:
        setattr(self, field_name, self._ConvertValue(field_name, value))

  def CopyToDict(self):
    """Copies the configuration to a dictionary.

    Returns:
      dict[str, object]: values per field name.
    """
    return {
        field_name: getattr(self, field_name)
        for field_name in sorted(self._FIELD_TYPES)}

  def GetCouplingSet(self):
    """Retrieves the coupling set.

    Returns:
      CouplingSet: coupling set.
    """
    return hamiltonian.CouplingSet(
        self.jt, self.jl, self.jc, boundary=self.boundary)

  def GetReductionConfig(self):
    """Retrieves the configuration of the reduction.

    Returns:
      ReductionConfig: reduction configuration.
    """
    return reduction.ReductionConfig(
        ordering=self.ordering, reorder_policy=self.reorder_policy,
        minimum_dimension=self.min_dim, number_of_tracked=self.track,
        instability_threshold=self.instability_threshold,
        patience=self.patience, strict=self.strict, epsilon=self.epsilon)

  def Validate(self):
    """Validates the configuration.

    Raises:
      ConfigurationError: if a value is not supported.
    """
    if not 1 <= self.length <= 16:
      raise errors.ConfigurationError(
          'length', f'unsupported ladder length: {self.length:d}')

    if self.boundary not in definitions.BOUNDARIES:
      raise errors.ConfigurationError(
          'boundary', f'unsupported boundary condition: {self.boundary:s}')

    if self.representation not in definitions.REPRESENTATIONS:
      raise errors.ConfigurationError(
          'representation',
          f'unsupported representation: {self.representation:s}')

    for field_name in ('jt', 'jl', 'jc', 'epsilon', 'instability_threshold',
                       'tol'):
      if not math.isfinite(getattr(self, field_name)):
        raise errors.ConfigurationError(field_name, 'value must be finite')

    if self.jt == 0.0:
      raise errors.ConfigurationError('jt', 'rung coupling must be nonzero')

    if self.ordering not in definitions.ORDERING_STRATEGIES:
      raise errors.ConfigurationError(
          'ordering', f'unsupported ordering: {self.ordering:s}')

    if self.reorder_policy not in definitions.REORDER_POLICIES:
      raise errors.ConfigurationError(
          'reorder_policy',
          f'unsupported reorder policy: {self.reorder_policy:s}')

    for field_name in ('epsilon', 'instability_threshold', 'tol'):
      if getattr(self, field_name) <= 0.0:
        raise errors.ConfigurationError(field_name, 'value must be positive')

    for field_name in ('min_dim', 'patience', 'track'):
      if getattr(self, field_name) < 1:
        raise errors.ConfigurationError(
            field_name, 'value must be at least 1')

    for field_name in ('dense_threshold', 'seed'):
      if getattr(self, field_name) < 0:
        raise errors.ConfigurationError(
            field_name, 'value must not be negative')

    if not self.out:
      raise errors.ConfigurationError('out', 'missing output path')
