#ifndef LATDEFORM_GROEBNER_HPP
#define LATDEFORM_GROEBNER_HPP

#include <optional>
#include <vector>

#include "latdeform/digraph.hpp"
#include "latdeform/matrix.hpp"

namespace latdeform {

// Graded reverse-lexicographic order on monomials in variables
// x_0..x_n, parameterized by a permutation listing the variables from
// smallest to largest.
struct TermOrder {
  std::vector<int> ascending;

  // -1, 0, or 1 as a <, =, > b. Ties in total degree break reverse
  // lexicographically: the first differing variable in ascending order
  // decides, smaller exponent there meaning the greater monomial.
  int compare(const IntVec& a, const IntVec& b) const;
  bool greater(const IntVec& a, const IntVec& b) const {
    return compare(a, b) > 0;
  }
};

// Linear extension of a reversed breadth-first search toward vertex 0
// along a spanning in-tree: x_0 is smallest, deeper vertices are
// larger, ties break by vertex index. Throws NotStronglyConnected when
// no in-tree exists.
TermOrder spanning_tree_order(const WeightedDigraph& g);

// Grevlex with x_0 > x_1 > ... > x_n.
TermOrder descending_index_order(int nvars);

struct MarkedBinomial {
  IntVec u;  // exponent vector; the binomial is x^(u+) - x^(u-)
  IntVec x;  // witness with u = q^T x
  bool plus_leading;

  IntVec lead() const;
  IntVec trail() const;
};

struct MarkedGB {
  std::vector<MarkedBinomial> binomials;  // sorted by witness lex
  TermOrder order;
  IntVec sigma;
  int nvars = 0;
};

// The chip-firing Groebner basis: one binomial per firing vector x with
// 0 <= x <= sigma, x[0] = 0, x != 0, taking u = q^T x. Requires
// sigma[0] == 1 and sigma the left kernel vector of q.
MarkedGB grobner_basis(const IntMat& q, const IntVec& sigma,
                       const TermOrder& order);

// Same binomials re-marked under another order.
MarkedGB remark(const MarkedGB& gb, const TermOrder& order);

// Fully reduces the monomial x^m, always rewriting by the first listed
// binomial whose leading exponent divides.
IntVec normal_form(const MarkedGB& gb, const IntVec& m);

// Inclusion-minimal generators of the leading-term ideal, lex sorted.
std::vector<IntVec> initial_ideal_mingens(const MarkedGB& gb);

// Number of monomials outside the ideal generated by gens. The gens
// must avoid x_0 and include a pure power of every other variable;
// throws Error otherwise (the count would be infinite).
Int standard_monomial_count(const std::vector<IntVec>& gens, int nvars);

struct GenericityViolation {
  IntVec x;
  int i;
};

// Lex-smallest x with 0 <= x <= sigma, x not in {0, sigma}, admitting a
// smallest index i with (q^T x)_i = 0; nullopt when the ideal is
// generic.
std::optional<GenericityViolation> genericity_violation(
    const RatMat& q, const IntVec& sigma);

bool is_generic(const RatMat& q, const IntVec& sigma);

// Buchberger verification: every S-polynomial reduces to zero.
bool spair_check(const MarkedGB& gb);

}  // namespace latdeform

#endif
