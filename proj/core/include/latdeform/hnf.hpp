#ifndef LATDEFORM_HNF_HPP
#define LATDEFORM_HNF_HPP

#include "latdeform/matrix.hpp"

namespace latdeform {

// Row-style Hermite normal form. Pivots are positive, entries above a pivot
// lie in (-pivot, 0], rows below the rank are zero, and u * input == h with
// u unimodular. This form is the canonical fingerprint used for row-lattice
// equality throughout the library.
struct HnfResult {
  IntMat h;
  IntMat u;
  int rank;
};

HnfResult hnf(const IntMat& m);

// Nonzero rows of the Hermite form: a canonical basis of the row lattice.
IntMat hnf_basis(const IntMat& m);

bool same_row_lattice(const IntMat& a, const IntMat& b);

}  // namespace latdeform

#endif
