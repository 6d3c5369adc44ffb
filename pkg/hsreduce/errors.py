# -*- coding: utf-8 -*-
"""The error objects."""


class Error(Exception):
  """The error interface."""


class ParseError(Error):
  """Raised when a parse error occurred."""


class ConfigurationError(Error):
  """Raised when a run configuration value is invalid.

  Attributes:
    field_name (str): name of the offending configuration field.
  """

  def __init__(self, field_name, message):
    """Initializes a configuration error.

    Args:
      field_name (str): name of the offending configuration field.
      message (str): description of the problem.
    """
    super(ConfigurationError, self).__init__(f'{field_name:s}: {message:s}')
    self.field_name = field_name


class ConvergenceError(Error):
  """Raised when the eigensolver does not converge.

  Attributes:
    residuals (numpy.ndarray): best residual norms reached per pair.
  """

  def __init__(self, message, residuals=None):
    """Initializes a convergence error.

    Args:
      message (str): description of the problem.
      residuals (Optional[numpy.ndarray]): best residual norms reached.
    """
    super(ConvergenceError, self).__init__(message)
    self.residuals = residuals


class DegenerateEquationError(Error):
  """Raised when all coefficients of the renormalization equation vanish."""


class DimensionOverflowError(Error):
  """Raised when the ladder length is outside the supported range."""


class NormalizationError(Error):
  """Raised when amplitudes are not normalized."""


class ReductionError(Error):
  """Raised when the reduction loop fails part way.

  Attributes:
    cause (Exception): the underlying error.
    trajectory (ReductionTrajectory): steps recorded before the failure.
  """

  def __init__(self, message, trajectory=None, cause=None):
    """Initializes a reduction error.

    Args:
      message (str): description of the problem.
      trajectory (Optional[ReductionTrajectory]): trajectory so far.
      cause (Optional[Exception]): the underlying error.
    """
    super(ReductionError, self).__init__(message)
    self.cause = cause
    self.trajectory = trajectory


class RepresentationError(Error):
  """Raised when a basis representation does not match the operation."""


class UndefinedDeviationError(Error):
  """Raised when a deviation is requested against a zero reference."""
