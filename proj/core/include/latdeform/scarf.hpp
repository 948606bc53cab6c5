#ifndef LATDEFORM_SCARF_HPP
#define LATDEFORM_SCARF_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "latdeform/lattice.hpp"
#include "latdeform/matrix.hpp"

namespace latdeform {

// Coefficient field for homology ranks and minimization.
struct FieldSpec {
  bool rationals = true;
  unsigned long prime = 0;
};

// ---------------------------------------------------------------------
// Monomial side.

// Scarf complex of a minimally generated monomial ideal: the subsets of
// generators whose lcm is shared by no other subset.
struct MonomialScarf {
  int nvars = 0;
  std::vector<IntVec> gens;  // lex sorted
  std::vector<std::vector<std::vector<int>>> faces_by_dim;  // index sets
  std::vector<std::vector<IntVec>> labels_by_dim;

  std::vector<int> f_vector() const;
};

MonomialScarf scarf_complex_monomial(std::vector<IntVec> gens, int nvars);

// Distinct lcms of nonempty generator subsets under divisibility.
struct LcmPoset {
  std::vector<IntVec> elements;  // lex sorted
  std::vector<std::vector<bool>> divides;
};

LcmPoset lcm_poset(const std::vector<IntVec>& gens, int nvars);

// Order data of the lcm poset keyed to the lex-sorted generator list:
// equal signatures certify an isomorphism of posets matching generators
// by position. class_of_mask[m] identifies the lcm class of the subset
// with bitmask m+1.
struct LcmPosetSignature {
  int num_classes = 0;
  std::vector<int> class_of_mask;
  std::vector<std::vector<bool>> class_divides;

  bool operator==(const LcmPosetSignature&) const = default;
};

LcmPosetSignature lcm_poset_signature(const std::vector<IntVec>& gens,
                                      int nvars);

// ---------------------------------------------------------------------
// Lattice (Laurent module) side, as a quotient by the translation
// action: one representative per face orbit, translated so the lex
// smallest vertex sits at the origin.

struct QuotientFace {
  std::vector<IntVec> coeffs;        // basis coefficients per vertex
  std::vector<IntVec> points;        // geometry points, lex ascending
  std::vector<IntVec> label_points;  // label image per vertex
  IntVec label;                      // componentwise max of label_points
};

struct QuotientScarf {
  Lattice geometry;
  IntMat label_basis;  // initially the geometry basis
  std::vector<std::vector<QuotientFace>> faces_by_dim;

  std::vector<int> f_vector() const;
};

// Builds the quotient Scarf complex of the lattice's Laurent module.
// Soundness is unconditional (every face passes an exact finite
// dominance test); completeness rests on the doubling candidate sweep
// plus the initial-ideal cross-check done by callers. Structural
// failures (missing top dimension, broken closure, nonzero Euler
// characteristic) throw NonGenericResult.
QuotientScarf scarf_complex_lattice(const Lattice& l,
                                    const std::vector<IntVec>& seeds = {});

// Relabels each vertex by mapping its coordinates in basis_gen to the
// lattice point with the same coordinates in basis_orig, producing the
// degeneration complex carrying the original lattice's labels on the
// deformed geometry.
QuotientScarf relabel_degenerate(const QuotientScarf& s,
                                 const IntMat& basis_gen,
                                 const IntMat& basis_orig);

int euler_characteristic(const QuotientScarf& s);

// Face-by-face equality of the underlying unlabeled complexes in basis
// coordinates.
bool combinatorially_isomorphic(const QuotientScarf& a,
                                const QuotientScarf& b);

// f-vector shift between a quotient lattice Scarf complex and the
// monomial Scarf complex of an initial ideal: quotient (i+1)-faces
// match monomial i-faces.
bool scarf_shift_check(const QuotientScarf& qs, const MonomialScarf& ms);

// ---------------------------------------------------------------------
// Free complexes.

struct ExpLexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    return compare_lex(a, b) < 0;
  }
};

// Polynomial entry: exponent -> rational coefficient.
using Poly = std::map<IntVec, Rat, ExpLexLess>;

struct FreeComplex {
  int nvars = 0;
  std::vector<std::vector<IntVec>> degrees;  // generator labels per degree
  // d[k] maps degree k to degree k-1: d[k][target][source]. d[0] is
  // empty.
  std::vector<std::vector<std::vector<Poly>>> d;
};

// Labelled-complex differential with orientation signs from the lex
// order of vertices. A face class whose boundary class is absent
// contributes nothing for that vertex (only corrupted inputs hit this).
FreeComplex free_complex(const QuotientScarf& s);

bool dd_zero(const FreeComplex& fc, const FieldSpec& field);

// Homology ranks of the complex evaluated at x = 1 over the field.
std::vector<int> quotient_homology(const FreeComplex& fc,
                                   const FieldSpec& field);

// Bayer-Sturmfels criterion at every face label degree b: the
// subcomplex of translated faces with label dominated by b must have
// vanishing reduced homology. Also fails (returns false) when the
// composition is nonzero or a boundary face is missing.
bool check_exactness(const QuotientScarf& s, const FreeComplex& fc,
                     const FieldSpec& field);

// Gaussian cancellation of scalar differential entries; returns the
// ranks once no scalar entries remain. Requires d compose to zero.
std::vector<int> minimize_complex(const FreeComplex& fc,
                                  const FieldSpec& field);

// Same, cancelling in an order drawn from the seed; the result must
// not depend on it.
std::vector<int> minimize_complex_seeded(const FreeComplex& fc,
                                         const FieldSpec& field,
                                         uint64_t seed);

}  // namespace latdeform

#endif
