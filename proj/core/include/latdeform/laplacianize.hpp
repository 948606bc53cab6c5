#ifndef LATDEFORM_LAPLACIANIZE_HPP
#define LATDEFORM_LAPLACIANIZE_HPP

#include "latdeform/digraph.hpp"
#include "latdeform/lattice.hpp"

namespace latdeform {

// Positive integer vector s with s^T m having all entries >= 0 equal to
// the row-sum recombination used to close off a Laplacian: for an
// M-matrix m (positive diagonal, nonpositive off-diagonal, nonnegative
// row sums, nonsingular) this returns the primitive vector proportional
// to diag(m)^T m^{-1}. Throws Error when m is not such a matrix.
IntVec script_vector(const IntMat& m);

struct LaplacianPresentation {
  IntMat q;       // (n+1) x (n+1) integer Laplacian; rows generate L
  IntVec sigma;   // primitive positive left kernel, sigma[0] == 1
  IntMat reduced_basis;  // rows 1..n of q with coordinate 0 dropped
  std::vector<WeightedEdge> edges;
};

// Produces a strongly connected weighted digraph whose Laplacian rows
// generate the given lattice, with the distinguished vertex's kernel
// coordinate normalized to 1. Deterministic: candidate rows are chosen
// by a lexicographic search over an integer box that grows by doubling.
LaplacianPresentation laplacianize(const Lattice& l);

}  // namespace latdeform

#endif
