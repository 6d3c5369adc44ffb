# -*- coding: utf-8 -*-
"""Hamiltonians of the frustrated two-leg ladder.

The ladder Hamiltonian is written as H = H0 + g H1 with H0 = 0 and g = J_t,
so that H1 holds the rung bonds with weight 1, the leg bonds with weight
gamma_tl = J_l / J_t and the diagonal bonds with weight gamma_c = J_c / J_t.
Legs have open boundaries unless periodic boundaries are requested, in which
case the last rung also couples to the first one.
"""

import numpy
from scipy import sparse

from hsreduce import basis as basis_lib
from hsreduce import definitions
from hsreduce import errors


class CouplingSet(object):
  """Coupling strengths of the ladder.

  The ratios are fixed at construction and never change afterwards, also
  not when the rung coupling is renormalized.

  Attributes:
    boundary (str): boundary condition along the legs, either open or
        periodic.
    cross_coupling (float): diagonal coupling J_c, J_1c = J_2c = J_c.
    leg_coupling (float): leg coupling J_l.
    rung_coupling (float): rung coupling J_t.
  """

  def __init__(
      self, rung_coupling, leg_coupling, cross_coupling,
      boundary=definitions.BOUNDARY_OPEN):
    """Initializes a coupling set.

    Args:
      rung_coupling (float): rung coupling J_t.
      leg_coupling (float): leg coupling J_l.
      cross_coupling (float): diagonal coupling J_c.
      boundary (Optional[str]): boundary condition along the legs.

    Raises:
      ValueError: if the rung coupling is zero or the boundary condition is
          not supported.
    """
    if rung_coupling == 0.0:
      raise ValueError('Rung coupling must be nonzero.')

    if boundary not in definitions.BOUNDARIES:
      raise ValueError(f'Unsupported boundary condition: {boundary!s}')

    super(CouplingSet, self).__init__()
    self.boundary = boundary
    self.cross_coupling = float(cross_coupling)
    self.leg_coupling = float(leg_coupling)
    self.rung_coupling = float(rung_coupling)

    self._cross_ratio = self.cross_coupling / self.rung_coupling
    self._leg_ratio = self.leg_coupling / self.rung_coupling

  @property
  def cross_ratio(self):
    """float: gamma_c = J_c / J_t."""
    return self._cross_ratio

  @property
  def leg_ratio(self):
    """float: gamma_tl = J_l / J_t."""
    return self._leg_ratio

  @property
  def symmetric_coupling(self):
    """float: J_1 = (J_l + J_c) / 2, strength of the S_i S_j terms."""
    return (self.leg_coupling + self.cross_coupling) / 2.0

  @property
  def antisymmetric_coupling(self):
    """float: J_2 = (J_l - J_c) / 2, strength of the R_i R_j terms."""
    return (self.leg_coupling - self.cross_coupling) / 2.0


class HamiltonianPair(object):
  """Pair of sparse symmetric matrices (H0, H1) with H = H0 + g H1.

  Attributes:
    dim (int): dimension of the matrices.
    h0 (scipy.sparse.csr_matrix): coupling independent part.
    h1 (scipy.sparse.csr_matrix): part multiplied by the coupling g.
    representation (str): representation of the basis, either su2 or so4.
  """

  def __init__(self, representation, h0, h1):
    """Initializes a Hamiltonian pair.

    Args:
      representation (str): representation of the basis.
      h0 (scipy.sparse.spmatrix): coupling independent part.
      h1 (scipy.sparse.spmatrix): part multiplied by the coupling g.

    Raises:
      ValueError: if the matrices are not square or of different shapes.
    """
    if h0.shape != h1.shape or h1.shape[0] != h1.shape[1]:
      raise ValueError((
          f'Unsupported matrix shapes: {h0.shape!s} and {h1.shape!s}'))

    super(HamiltonianPair, self).__init__()
    self.dim = h1.shape[0]
    self.h0 = sparse.csr_matrix(h0)
    self.h1 = sparse.csr_matrix(h1)
    self.representation = representation

    self.h0.sort_indices()
    self.h1.sort_indices()

  def GetDiagonal(self, g):
    """Retrieves the diagonal of H0 + g H1.

    Args:
      g (float): coupling strength.

    Returns:
      numpy.ndarray: diagonal matrix elements.
    """
    return self.h0.diagonal() + g * self.h1.diagonal()

  def GetMatrix(self, g):
    """Retrieves H0 + g H1.

    Args:
      g (float): coupling strength.

    Returns:
      scipy.sparse.csr_matrix: Hamiltonian matrix.
    """
    return sparse.csr_matrix(self.h0 + g * self.h1)

  def Permute(self, permutation):
    """Reorders rows and columns.

    Args:
      permutation (numpy.ndarray): new order, where position p of the result
          is position permutation[p] of this pair.

    Returns:
      HamiltonianPair: reordered pair.
    """
    permutation = numpy.asarray(permutation, dtype=int)
    return HamiltonianPair(
        self.representation, self.h0[permutation][:, permutation],
        self.h1[permutation][:, permutation])


def _GetBonds(number_of_rungs, couplings, include_rungs=True):
  """Retrieves the bonds of the ladder as bit positions and weights.

  With periodic boundaries the last rung couples to the first one. Ladders of
  1 or 2 rungs have no such bonds, since for 2 rungs they would duplicate the
  open boundary bonds.

  Args:
    number_of_rungs (int): ladder length L.
    couplings (CouplingSet): coupling strengths.
    include_rungs (Optional[bool]): True if the rung bonds are included.

  Returns:
    list[tuple[int, int, float]]: bit position of both sites and the weight of
        the bond in H1.
  """
  bonds = []
  wrap_around = bool(
      couplings.boundary == definitions.BOUNDARY_PERIODIC and
      number_of_rungs > 2)

  for rung_index in range(number_of_rungs):
    leg1_bit = 2 * rung_index
    leg2_bit = leg1_bit + 1

    if include_rungs:
      bonds.append((leg1_bit, leg2_bit, 1.0))

    next_rung_index = rung_index + 1
    if next_rung_index == number_of_rungs and wrap_around:
      next_rung_index = 0

    if next_rung_index < number_of_rungs:
      next_leg1_bit = 2 * next_rung_index
      next_leg2_bit = next_leg1_bit + 1
      bonds.extend([
          (leg1_bit, next_leg1_bit, couplings.leg_ratio),
          (leg2_bit, next_leg2_bit, couplings.leg_ratio),
          (leg1_bit, next_leg2_bit, couplings.cross_ratio),
          (leg2_bit, next_leg1_bit, couplings.cross_ratio)])

  return [bond for bond in bonds if bond[2] != 0.0]


def _BuildBitVectorMatrix(basis, bonds):
  """Builds the Heisenberg matrix of a set of bonds in an su2 basis.

  Every bond contributes s_a . s_b = s^z_a s^z_b + (s+_a s-_b + s-_a s+_b) / 2.

  Args:
    basis (Basis): su2 basis.
    bonds (list[tuple[int, int, float]]): bonds.

  Returns:
    scipy.sparse.csr_matrix: symmetric matrix.
  """
  rows = []
  columns = []
  values = []
  for row, bit_vector in enumerate(basis.states):
    diagonal_value = 0.0
    for first_bit, second_bit, weight in bonds:
      first_up = (bit_vector >> first_bit) & 1
      second_up = (bit_vector >> second_bit) & 1
      if first_up == second_up:
        diagonal_value += 0.25 * weight
      else:
        diagonal_value -= 0.25 * weight

        flipped = bit_vector ^ ((1 << first_bit) | (1 << second_bit))
        rows.append(row)
        columns.append(basis.GetIndex(flipped))
        values.append(0.5 * weight)

    if diagonal_value != 0.0:
      rows.append(row)
      columns.append(row)
      values.append(diagonal_value)

  dimension = len(basis)
  matrix = sparse.csr_matrix(
      (values, (rows, columns)), shape=(dimension, dimension))
  matrix.sort_indices()
  return matrix


def BuildSU2(basis, couplings):
  """Builds the Hamiltonian pair in the su2 representation.

  Args:
    basis (Basis): su2 basis, in any order.
    couplings (CouplingSet): coupling strengths, g = J_t.

  Returns:
    HamiltonianPair: H0 = 0 and H1 of the ladder.

  Raises:
    RepresentationError: if the basis is not an su2 basis.
  """
  if basis.representation != definitions.REPRESENTATION_SU2:
    raise errors.RepresentationError((
        f'Unsupported basis representation: {basis.representation:s}'))

  bonds = _GetBonds(basis.number_of_rungs, couplings)
  h1 = _BuildBitVectorMatrix(basis, bonds)
  h0 = sparse.csr_matrix(h1.shape)
  return HamiltonianPair(definitions.REPRESENTATION_SU2, h0, h1)


def BuildSO4(basis, couplings, cutoff=1e-14):
  """Builds the Hamiltonian pair in the so4 representation.

  The rung term (S_i^2 - R_i^2) / 4 is diagonal with S_i(S_i+1)/2 - 3/4 per
  rung. The inter-rung terms J_1 S_i S_j + J_2 R_i R_j equal the leg and
  diagonal bonds of the su2 Hamiltonian and are obtained by conjugating these
  with the su2 to so4 change of basis.

  Args:
    basis (Basis): so4 basis, in any order.
    couplings (CouplingSet): coupling strengths, g = J_t.
    cutoff (Optional[float]): magnitude below which conjugated matrix elements
        are cancellation noise and dropped.

  Returns:
    HamiltonianPair: H0 = 0 and H1 = H^(S,R) / J_t.

  Raises:
    RepresentationError: if the basis is not an so4 basis.
  """
  if basis.representation != definitions.REPRESENTATION_SO4:
    raise errors.RepresentationError((
        f'Unsupported basis representation: {basis.representation:s}'))

  number_of_rungs = basis.number_of_rungs
  su2_basis = basis_lib.EnumerateSU2(number_of_rungs)
  so4_basis = basis_lib.EnumerateSO4(number_of_rungs)

  bonds = _GetBonds(number_of_rungs, couplings, include_rungs=False)
  inter_rung = _BuildBitVectorMatrix(su2_basis, bonds)

  transform = basis_lib.SU2ToSO4Matrix(number_of_rungs)
  inter_rung = sparse.csr_matrix(transform.T @ inter_rung @ transform)

  # Keep one value per unordered pair so the stored matrix is exactly
  # symmetric.
  upper = sparse.triu(inter_rung, k=1).tocoo()
  keep = numpy.abs(upper.data) > cutoff
  upper = sparse.coo_matrix(
      (upper.data[keep], (upper.row[keep], upper.col[keep])),
      shape=upper.shape)

  diagonal = inter_rung.diagonal()
  diagonal[numpy.abs(diagonal) <= cutoff] = 0.0
  for position, rung_states in enumerate(so4_basis.states):
    diagonal[position] += sum(
        spin * (spin + 1) / 2.0 - 0.75 for spin, _ in rung_states)

  h1 = sparse.csr_matrix(upper + upper.T + sparse.diags(diagonal))
  h1.eliminate_zeros()

  permutation = [so4_basis.GetIndex(state) for state in basis.states]
  h1 = h1[permutation][:, permutation]

  h0 = sparse.csr_matrix(h1.shape)
  return HamiltonianPair(definitions.REPRESENTATION_SO4, h0, h1)


def MatVec(ham, g, vector):
  """Multiplies a vector by H0 + g H1.

  Args:
    ham (HamiltonianPair): Hamiltonian pair.
    g (float): coupling strength.
    vector (numpy.ndarray): vector of dimension ham.dim.

  Returns:
    numpy.ndarray: (H0 + g H1) vector.

  Raises:
    ValueError: if the dimension of the vector does not match.
  """
  vector = numpy.asarray(vector, dtype=float)
  if vector.shape != (ham.dim, ):
    raise ValueError((
        f'Vector shape: {vector.shape!s} does not match dimension: '
        f'{ham.dim:d}'))

  return ham.h0 @ vector + g * (ham.h1 @ vector)


def Restrict(ham, keep):
  """Restricts a Hamiltonian pair to a subset of the basis.

  Args:
    ham (HamiltonianPair): Hamiltonian pair.
    keep (list[int]): positions to keep, in order.

  Returns:
    HamiltonianPair: pair with the rows and columns of the other positions
        removed.

  Raises:
    IndexError: if a position is out of range.
    ValueError: if keep is empty or contains duplicates.
  """
  keep = numpy.asarray(keep, dtype=int)
  if keep.size == 0:
    raise ValueError('Empty set of positions to keep.')

  if keep.min() < 0 or keep.max() >= ham.dim:
    raise IndexError('Position to keep out of range.')

  if numpy.unique(keep).size != keep.size:
    raise ValueError('Duplicate positions to keep.')

  return HamiltonianPair(
      ham.representation, ham.h0[keep][:, keep], ham.h1[keep][:, keep])


def WriteMatrix(matrix, file_object):
  """Writes the nonzero elements of a sparse matrix.

  Every line contains "row col value", in row-major order with the value
  printed with 17 significant digits.

  Args:
    matrix (scipy.sparse.spmatrix): matrix.
    file_object (file): text file-like object to write to.
  """
  matrix = sparse.csr_matrix(matrix)
  matrix.sort_indices()
  for row in range(matrix.shape[0]):
    for offset in range(matrix.indptr[row], matrix.indptr[row + 1]):
      column = matrix.indices[offset]
      value = matrix.data[offset]
      file_object.write(f'{row:d} {column:d} {value:.17g}\n')
