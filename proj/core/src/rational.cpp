#include "latdeform/rational.hpp"

#include <cctype>
#include <sstream>

#include "latdeform/errors.hpp"

namespace latdeform {

namespace {

bool valid_decimal(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Int int_from_string(const std::string& s) {
  if (!valid_decimal(s)) {
    throw SchemaError("not a decimal integer: \"" + s + "\"");
  }
  return Int(s, 10);
}

std::string int_to_string(const Int& v) { return v.get_str(); }

Rat rat_from_string(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) {
    return Rat(int_from_string(s));
  }
  Int num = int_from_string(s.substr(0, slash));
  Int den = int_from_string(s.substr(slash + 1));
  if (den == 0) throw SchemaError("zero denominator: \"" + s + "\"");
  return make_rat(num, den);
}

std::string rat_to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& v) { return v.get_den() == 1; }

Int rat_num(const Rat& v) { return v.get_num(); }
Int rat_den(const Rat& v) { return v.get_den(); }

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int rat_floor(const Rat& v) { return floor_div(v.get_num(), v.get_den()); }

Int rat_ceil(const Rat& v) { return ceil_div(v.get_num(), v.get_den()); }

Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::string sqrt_decimal(const Rat& v, int digits) {
  if (v < 0) throw Error("sqrt_decimal of negative value");
  Int pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  // floor(sqrt(v) * 10^digits) = isqrt(floor(num * 10^(2 digits) / den))
  Int scaled = (v.get_num() * pow10 * pow10) / v.get_den();
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  std::string s = root.get_str();
  if (static_cast<int>(s.size()) <= digits) {
    s = std::string(digits + 1 - s.size(), '0') + s;
  }
  return s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
}

std::string vec_to_string(const IntVec& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i].get_str();
  }
  out << ")";
  return out.str();
}

int compare_lex(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("compare_lex: length mismatch");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

IntVec vec_neg(const IntVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("vec_add: length mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("vec_sub: length mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec vec_max(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("vec_max: length mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

IntVec positive_part(const IntVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] > 0 ? v[i] : Int(0);
  return r;
}

IntVec negative_part(const IntVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] < 0 ? Int(-v[i]) : Int(0);
  return r;
}

Int vec_sum(const IntVec& v) {
  Int s = 0;
  for (const Int& x : v) s += x;
  return s;
}

bool vec_is_zero(const IntVec& v) {
  for (const Int& x : v) {
    if (x != 0) return false;
  }
  return true;
}

bool vec_leq(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("vec_leq: length mismatch");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace latdeform
