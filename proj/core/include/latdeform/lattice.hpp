#ifndef LATDEFORM_LATTICE_HPP
#define LATDEFORM_LATTICE_HPP

#include "latdeform/hnf.hpp"
#include "latdeform/matrix.hpp"

namespace latdeform {

// A finite-index sublattice of the rank-n root lattice inside Z^(n+1),
// i.e. of {x : sum(x) = 0}. Stored with a designated ordered basis of n
// rows; basis order is significant because several constructions express
// points in basis coordinates.
class Lattice {
 public:
  // An empty lattice; usable only as a target for assignment.
  Lattice() = default;

  // basis: n x (n+1) rows, each summing to zero, linearly independent.
  // Throws NotFiniteIndex when the rows span a proper sublattice of rank
  // < n, SchemaError when a row does not sum to zero.
  static Lattice from_basis(const IntMat& basis);

  // Accepts any number of generator rows; reduces them to a canonical
  // Hermite basis. Throws NotFiniteIndex when the span has rank < n.
  static Lattice from_generators(const IntMat& gens);

  int ambient_dim() const { return ambient_; }
  int rank() const { return ambient_ - 1; }
  const IntMat& basis() const { return basis_; }
  const IntMat& projected_basis() const { return proj_; }

  // Index in the ambient root lattice.
  const Int& index() const { return index_; }

  // Canonical fingerprint: Hermite form of the projected basis. Two
  // Lattice values describe the same sublattice iff these agree.
  const IntMat& canonical_form() const { return proj_hnf_; }

  bool member(const IntVec& v) const;

  // Coefficients c with c * basis == v. Throws Error when v is not a
  // member.
  IntVec solve_in_basis(const IntVec& v) const;

  // All lattice points b with b <= m componentwise, sorted lex. Finite
  // because members sum to zero. Points are enumerated through an exact
  // coefficient box derived from the basis inverse.
  std::vector<IntVec> points_dominated(const IntVec& m) const;

  // Nonzero points whose basis coefficients lie in [-radius, radius]^n,
  // sorted lex.
  std::vector<IntVec> points_in_coeff_box(const Int& radius) const;

  IntVec from_coeffs(const IntVec& c) const;

 private:
  int ambient_ = 0;
  IntMat basis_;      // n x (n+1)
  IntMat proj_;       // n x n, coordinate 0 dropped
  IntMat proj_hnf_;   // canonical form of proj_
  IntMat hnf_u_;      // unimodular, hnf_u_ * proj_ == proj_hnf_
  RatMat proj_inv_;   // inverse of proj_
  Int index_;
};

}  // namespace latdeform

#endif
