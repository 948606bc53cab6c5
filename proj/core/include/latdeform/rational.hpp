#ifndef LATDEFORM_RATIONAL_HPP
#define LATDEFORM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace latdeform {

// Arbitrary-precision integers and rationals. Rat values are kept canonical:
// lowest terms, positive denominator. Every helper that builds a Rat
// canonicalizes before returning it.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Int int_from_string(const std::string& s);
std::string int_to_string(const Int& v);

// Accepts "p" or "p/q" with q > 0 after sign normalization.
Rat rat_from_string(const std::string& s);
// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& v);

Rat make_rat(const Int& num, const Int& den);
bool is_integer(const Rat& v);

Int rat_num(const Rat& v);
Int rat_den(const Rat& v);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int rat_floor(const Rat& v);
Int rat_ceil(const Rat& v);

Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);

// Truncated decimal expansion of sqrt(v) to `digits` fractional places.
// v must be nonnegative.
std::string sqrt_decimal(const Rat& v, int digits = 9);

std::string vec_to_string(const IntVec& v);
int compare_lex(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& v);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_max(const IntVec& a, const IntVec& b);
IntVec positive_part(const IntVec& v);
IntVec negative_part(const IntVec& v);
Int vec_sum(const IntVec& v);
bool vec_is_zero(const IntVec& v);
bool vec_leq(const IntVec& a, const IntVec& b);

}  // namespace latdeform

#endif
