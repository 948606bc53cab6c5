#include "latdeform/scarf.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "latdeform/errors.hpp"

namespace latdeform {

namespace {

struct VecLexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    return compare_lex(a, b) < 0;
  }
};

struct FaceKeyLess {
  bool operator()(const std::vector<IntVec>& a,
                  const std::vector<IntVec>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      int c = compare_lex(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

IntVec lcm_of(const std::vector<IntVec>& gens, unsigned mask, int nvars) {
  IntVec m(nvars, Int(0));
  for (size_t g = 0; g < gens.size(); ++g) {
    if (mask & (1u << g)) m = vec_max(m, gens[g]);
  }
  return m;
}

}  // namespace

std::vector<int> MonomialScarf::f_vector() const {
  std::vector<int> f;
  for (const auto& faces : faces_by_dim) {
    f.push_back(static_cast<int>(faces.size()));
  }
  return f;
}

MonomialScarf scarf_complex_monomial(std::vector<IntVec> gens, int nvars) {
  if (gens.empty()) throw Error("scarf_complex_monomial: no generators");
  if (gens.size() > 20) {
    throw Error("scarf_complex_monomial: too many generators");
  }
  for (const IntVec& g : gens) {
    if (static_cast<int>(g.size()) != nvars) {
      throw Error("scarf_complex_monomial: generator length mismatch");
    }
    for (const Int& e : g) {
      if (e < 0) throw Error("scarf_complex_monomial: negative exponent");
    }
  }
  std::sort(gens.begin(), gens.end(), VecLexLess{});
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = 0; j < gens.size(); ++j) {
      if (i != j && vec_leq(gens[i], gens[j])) {
        throw Error("scarf_complex_monomial: generators not minimal");
      }
    }
  }
  size_t g = gens.size();
  unsigned total = (1u << g) - 1;
  std::map<IntVec, int, VecLexLess> lcm_count;
  std::vector<IntVec> mask_lcm(total + 1);
  for (unsigned mask = 1; mask <= total; ++mask) {
    mask_lcm[mask] = lcm_of(gens, mask, nvars);
    ++lcm_count[mask_lcm[mask]];
  }
  MonomialScarf s;
  s.nvars = nvars;
  s.gens = gens;
  for (unsigned mask = 1; mask <= total; ++mask) {
    if (lcm_count.at(mask_lcm[mask]) != 1) continue;
    std::vector<int> face;
    for (size_t i = 0; i < g; ++i) {
      if (mask & (1u << i)) face.push_back(static_cast<int>(i));
    }
    size_t dim = face.size() - 1;
    while (s.faces_by_dim.size() <= dim) {
      s.faces_by_dim.emplace_back();
      s.labels_by_dim.emplace_back();
    }
    s.faces_by_dim[dim].push_back(face);
    s.labels_by_dim[dim].push_back(mask_lcm[mask]);
  }
  for (size_t dim = 0; dim < s.faces_by_dim.size(); ++dim) {
    std::vector<size_t> idx(s.faces_by_dim[dim].size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      return s.faces_by_dim[dim][a] < s.faces_by_dim[dim][b];
    });
    std::vector<std::vector<int>> faces;
    std::vector<IntVec> labels;
    for (size_t i : idx) {
      faces.push_back(s.faces_by_dim[dim][i]);
      labels.push_back(s.labels_by_dim[dim][i]);
    }
    s.faces_by_dim[dim] = std::move(faces);
    s.labels_by_dim[dim] = std::move(labels);
  }
  return s;
}

LcmPoset lcm_poset(const std::vector<IntVec>& gens, int nvars) {
  if (gens.empty() || gens.size() > 20) {
    throw Error("lcm_poset: unsupported generator count");
  }
  std::vector<IntVec> sorted = gens;
  std::sort(sorted.begin(), sorted.end(), VecLexLess{});
  unsigned total = (1u << sorted.size()) - 1;
  std::set<IntVec, VecLexLess> elems;
  for (unsigned mask = 1; mask <= total; ++mask) {
    elems.insert(lcm_of(sorted, mask, nvars));
  }
  LcmPoset p;
  p.elements.assign(elems.begin(), elems.end());
  size_t n = p.elements.size();
  p.divides.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      p.divides[i][j] = vec_leq(p.elements[i], p.elements[j]);
    }
  }
  return p;
}

LcmPosetSignature lcm_poset_signature(const std::vector<IntVec>& gens,
                                      int nvars) {
  if (gens.empty() || gens.size() > 20) {
    throw Error("lcm_poset_signature: unsupported generator count");
  }
  std::vector<IntVec> sorted = gens;
  std::sort(sorted.begin(), sorted.end(), VecLexLess{});
  unsigned total = (1u << sorted.size()) - 1;
  std::vector<IntVec> mask_lcm(total + 1);
  std::map<IntVec, int, VecLexLess> cls;
  std::vector<IntVec> reps;
  LcmPosetSignature sig;
  sig.class_of_mask.resize(total);
  for (unsigned mask = 1; mask <= total; ++mask) {
    IntVec l = lcm_of(sorted, mask, nvars);
    auto [it, inserted] = cls.emplace(l, static_cast<int>(reps.size()));
    if (inserted) reps.push_back(l);
    sig.class_of_mask[mask - 1] = it->second;
  }
  sig.num_classes = static_cast<int>(reps.size());
  sig.class_divides.assign(reps.size(),
                           std::vector<bool>(reps.size(), false));
  for (size_t i = 0; i < reps.size(); ++i) {
    for (size_t j = 0; j < reps.size(); ++j) {
      sig.class_divides[i][j] = vec_leq(reps[i], reps[j]);
    }
  }
  return sig;
}

// ---------------------------------------------------------------------

std::vector<int> QuotientScarf::f_vector() const {
  std::vector<int> f;
  for (const auto& faces : faces_by_dim) {
    f.push_back(static_cast<int>(faces.size()));
  }
  return f;
}

namespace {

// Exact Scarf test for a translate class of lattice points containing
// the origin: the dominance set of the componentwise max must be
// exactly the vertex set, and dropping any vertex must change the max.
bool exact_face_test(const Lattice& l, const std::vector<IntVec>& points) {
  IntVec m(points[0].size(), Int(0));
  for (const IntVec& p : points) m = vec_max(m, p);
  std::vector<IntVec> dom = l.points_dominated(m);
  if (dom.size() != points.size()) return false;
  std::vector<IntVec> sorted = points;
  std::sort(sorted.begin(), sorted.end(), VecLexLess{});
  for (size_t i = 0; i < dom.size(); ++i) {
    if (dom[i] != sorted[i]) return false;
  }
  for (size_t skip = 0; skip < points.size(); ++skip) {
    IntVec sub(points[0].size(), Int(0));
    bool first = true;
    for (size_t i = 0; i < points.size(); ++i) {
      if (i == skip) continue;
      if (first) {
        sub = points[i];
        first = false;
      } else {
        sub = vec_max(sub, points[i]);
      }
    }
    if (sub == m) return false;
  }
  return true;
}

QuotientFace make_face(const Lattice& l, const IntMat& label_basis,
                       std::vector<IntVec> points) {
  std::sort(points.begin(), points.end(), VecLexLess{});
  IntVec base = points[0];
  QuotientFace f;
  for (IntVec& p : points) p = vec_sub(p, base);
  f.points = std::move(points);
  for (const IntVec& p : f.points) {
    IntVec c = l.solve_in_basis(p);
    f.coeffs.push_back(c);
    f.label_points.push_back(row_times_mat(c, label_basis));
  }
  f.label = f.label_points[0];
  for (const IntVec& lp : f.label_points) f.label = vec_max(f.label, lp);
  return f;
}

}  // namespace

QuotientScarf scarf_complex_lattice(const Lattice& l,
                                    const std::vector<IntVec>& seeds) {
  int n = l.rank();
  QuotientScarf s;
  s.geometry = l;
  s.label_basis = l.basis();

  // Edge vectors, canonicalized to the lex-positive representative of
  // {a, -a}. The test is symmetric under negation.
  //
  // The exact test scans a coefficient box, which gets expensive once the
  // basis entries are large. Known lattice points double as cheap
  // counterexamples: a pool point below the candidate's join that is not a
  // candidate vertex already refutes the face, and only unrefuted
  // candidates pay for the exact scan.
  std::set<IntVec, VecLexLess> edge_vecs;
  std::set<IntVec, VecLexLess> tried;
  std::vector<IntVec> pool;
  auto blocked = [&](const std::vector<IntVec>& pts) {
    IntVec m(pts[0].size(), Int(0));
    for (const IntVec& p : pts) m = vec_max(m, p);
    for (const IntVec& v : pool) {
      if (!vec_leq(v, m)) continue;
      if (std::find(pts.begin(), pts.end(), v) == pts.end()) return true;
    }
    return false;
  };
  auto try_edge = [&](const IntVec& a) {
    if (vec_is_zero(a)) return;
    IntVec canon = compare_lex(a, IntVec(a.size(), Int(0))) > 0 ? a
                                                                : vec_neg(a);
    if (!tried.insert(canon).second) return;
    std::vector<IntVec> pts{IntVec(a.size(), Int(0)), canon};
    if (blocked(pts)) return;
    if (exact_face_test(l, pts)) edge_vecs.insert(canon);
  };
  std::set<IntVec, VecLexLess> pool_seen;
  auto pool_add = [&](const IntVec& v) {
    if (pool_seen.insert(v).second) pool.push_back(v);
  };
  for (const IntVec& a : l.points_in_coeff_box(2)) pool_add(a);
  for (const IntVec& seed : seeds) {
    if (static_cast<int>(seed.size()) != l.ambient_dim()) {
      throw Error("scarf_complex_lattice: seed length mismatch");
    }
    if (l.member(seed)) pool_add(seed);
  }
  for (size_t i = 0; i < pool.size(); ++i) try_edge(pool[i]);
  Int radius = 2;
  size_t settled = 0;
  for (;;) {
    std::vector<IntVec> batch = l.points_in_coeff_box(radius);
    for (const IntVec& a : batch) pool_add(a);
    for (const IntVec& a : batch) try_edge(a);
    if (edge_vecs.size() == settled) break;
    settled = edge_vecs.size();
    radius *= 2;
    if (radius > 1024) {
      throw Error("scarf_complex_lattice: edge sweep did not settle");
    }
  }

  s.faces_by_dim.emplace_back();
  s.faces_by_dim[0].push_back(
      make_face(l, s.label_basis, {IntVec(l.ambient_dim(), Int(0))}));
  if (!edge_vecs.empty()) {
    s.faces_by_dim.emplace_back();
    for (const IntVec& a : edge_vecs) {
      s.faces_by_dim[1].push_back(make_face(
          l, s.label_basis, {IntVec(l.ambient_dim(), Int(0)), a}));
    }
  }

  auto is_edge_vector = [&](const IntVec& d) {
    if (vec_is_zero(d)) return false;
    IntVec canon =
        compare_lex(d, IntVec(d.size(), Int(0))) > 0 ? d : vec_neg(d);
    return edge_vecs.count(canon) > 0;
  };

  // Extend faces one dimension at a time: a new vertex must be edge
  // adjacent to every current vertex, then the exact test decides.
  for (int dim = 2; dim <= n + 1; ++dim) {
    if (s.faces_by_dim.size() < static_cast<size_t>(dim)) break;
    std::set<std::vector<IntVec>, FaceKeyLess> found;
    for (const QuotientFace& f : s.faces_by_dim[dim - 1]) {
      for (const IntVec& e : edge_vecs) {
        for (int sign = 0; sign < 2; ++sign) {
          IntVec v = sign ? vec_neg(e) : e;
          bool adjacent = true;
          for (const IntVec& p : f.points) {
            if (p == v || !is_edge_vector(vec_sub(v, p))) {
              adjacent = false;
              break;
            }
          }
          if (!adjacent) continue;
          std::vector<IntVec> pts = f.points;
          pts.push_back(v);
          if (blocked(pts)) continue;
          if (!exact_face_test(l, pts)) continue;
          std::sort(pts.begin(), pts.end(), VecLexLess{});
          IntVec base = pts[0];
          for (IntVec& p : pts) p = vec_sub(p, base);
          found.insert(pts);
        }
      }
    }
    if (found.empty()) break;
    if (dim > n) {
      throw NonGenericResult(
          "scarf_complex_lattice: face dimension exceeds the rank");
    }
    s.faces_by_dim.emplace_back();
    for (const std::vector<IntVec>& pts : found) {
      s.faces_by_dim[dim].push_back(make_face(l, s.label_basis, pts));
    }
  }

  if (s.faces_by_dim.size() != static_cast<size_t>(n + 1)) {
    throw NonGenericResult(
        "scarf_complex_lattice: top dimension missing; lattice is not "
        "generic");
  }
  // Class-level subset closure.
  for (size_t dim = 1; dim < s.faces_by_dim.size(); ++dim) {
    std::set<std::vector<IntVec>, FaceKeyLess> lower;
    for (const QuotientFace& f : s.faces_by_dim[dim - 1]) {
      lower.insert(f.points);
    }
    for (const QuotientFace& f : s.faces_by_dim[dim]) {
      for (size_t skip = 0; skip < f.points.size(); ++skip) {
        std::vector<IntVec> sub;
        for (size_t i = 0; i < f.points.size(); ++i) {
          if (i != skip) sub.push_back(f.points[i]);
        }
        IntVec base = sub[0];
        for (IntVec& p : sub) p = vec_sub(p, base);
        if (!lower.count(sub)) {
          throw NonGenericResult(
              "scarf_complex_lattice: closure violated; lattice is not "
              "generic");
        }
      }
    }
  }
  if (euler_characteristic(s) != 0) {
    throw NonGenericResult(
        "scarf_complex_lattice: Euler characteristic nonzero; lattice is "
        "not generic");
  }
  return s;
}

QuotientScarf relabel_degenerate(const QuotientScarf& s,
                                 const IntMat& basis_gen,
                                 const IntMat& basis_orig) {
  if (basis_gen.rows() != basis_orig.rows() ||
      basis_gen.cols() != basis_orig.cols()) {
    throw Error("relabel_degenerate: basis shape mismatch");
  }
  Lattice gen_lattice = Lattice::from_basis(basis_gen);
  QuotientScarf out = s;
  out.label_basis = basis_orig;
  for (auto& faces : out.faces_by_dim) {
    for (QuotientFace& f : faces) {
      f.label_points.clear();
      for (const IntVec& p : f.points) {
        IntVec alpha = gen_lattice.solve_in_basis(p);
        f.label_points.push_back(row_times_mat(alpha, basis_orig));
      }
      f.label = f.label_points[0];
      for (const IntVec& lp : f.label_points) {
        f.label = vec_max(f.label, lp);
      }
    }
  }
  return out;
}

int euler_characteristic(const QuotientScarf& s) {
  int chi = 0;
  int sign = 1;
  for (const auto& faces : s.faces_by_dim) {
    chi += sign * static_cast<int>(faces.size());
    sign = -sign;
  }
  return chi;
}

bool combinatorially_isomorphic(const QuotientScarf& a,
                                const QuotientScarf& b) {
  if (a.faces_by_dim.size() != b.faces_by_dim.size()) return false;
  for (size_t dim = 0; dim < a.faces_by_dim.size(); ++dim) {
    if (a.faces_by_dim[dim].size() != b.faces_by_dim[dim].size()) {
      return false;
    }
    std::set<std::vector<IntVec>, FaceKeyLess> fa, fb;
    for (const QuotientFace& f : a.faces_by_dim[dim]) fa.insert(f.coeffs);
    for (const QuotientFace& f : b.faces_by_dim[dim]) fb.insert(f.coeffs);
    if (fa != fb) return false;
  }
  return true;
}

bool scarf_shift_check(const QuotientScarf& qs, const MonomialScarf& ms) {
  std::vector<int> fq = qs.f_vector();
  std::vector<int> fm = ms.f_vector();
  if (fq.empty() || fq[0] != 1) return false;
  if (fq.size() != fm.size() + 1) return false;
  for (size_t i = 0; i < fm.size(); ++i) {
    if (fq[i + 1] != fm[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------

FreeComplex free_complex(const QuotientScarf& s) {
  FreeComplex fc;
  fc.nvars = s.geometry.ambient_dim();
  fc.degrees.resize(s.faces_by_dim.size());
  fc.d.resize(s.faces_by_dim.size());
  for (size_t dim = 0; dim < s.faces_by_dim.size(); ++dim) {
    for (const QuotientFace& f : s.faces_by_dim[dim]) {
      fc.degrees[dim].push_back(f.label);
    }
  }
  std::vector<std::map<std::vector<IntVec>, int, FaceKeyLess>> index(
      s.faces_by_dim.size());
  for (size_t dim = 0; dim < s.faces_by_dim.size(); ++dim) {
    for (size_t i = 0; i < s.faces_by_dim[dim].size(); ++i) {
      index[dim][s.faces_by_dim[dim][i].points] = static_cast<int>(i);
    }
  }
  for (size_t dim = 1; dim < s.faces_by_dim.size(); ++dim) {
    size_t rows = s.faces_by_dim[dim - 1].size();
    size_t cols = s.faces_by_dim[dim].size();
    fc.d[dim].assign(rows, std::vector<Poly>(cols));
    for (size_t j = 0; j < cols; ++j) {
      const QuotientFace& f = s.faces_by_dim[dim][j];
      for (size_t t = 0; t < f.points.size(); ++t) {
        std::vector<IntVec> sub;
        IntVec sub_label;
        bool first = true;
        for (size_t i = 0; i < f.points.size(); ++i) {
          if (i == t) continue;
          sub.push_back(f.points[i]);
          if (first) {
            sub_label = f.label_points[i];
            first = false;
          } else {
            sub_label = vec_max(sub_label, f.label_points[i]);
          }
        }
        IntVec base = sub[0];
        std::vector<IntVec> canon = sub;
        for (IntVec& p : canon) p = vec_sub(p, base);
        auto it = index[dim - 1].find(canon);
        if (it == index[dim - 1].end()) continue;
        IntVec expo = vec_sub(f.label, sub_label);
        Rat coeff = (t % 2 == 0) ? Rat(1) : Rat(-1);
        Poly& entry = fc.d[dim][it->second][j];
        auto [pit, inserted] = entry.emplace(expo, coeff);
        if (!inserted) {
          pit->second += coeff;
          if (pit->second == 0) entry.erase(pit);
        }
      }
    }
  }
  return fc;
}

// ---------------------------------------------------------------------
// Field-generic homological algebra.

namespace {

struct RationalField {
  using E = Rat;
  E from_rat(const Rat& r) const { return r; }
  bool is_zero(const E& e) const { return e == 0; }
  E add(const E& a, const E& b) const { return Rat(a + b); }
  E sub(const E& a, const E& b) const { return Rat(a - b); }
  E mul(const E& a, const E& b) const { return Rat(a * b); }
  E div(const E& a, const E& b) const { return Rat(a / b); }
  E neg(const E& a) const { return Rat(-a); }
};

struct PrimeField {
  unsigned long p;
  using E = unsigned long;

  E from_rat(const Rat& r) const {
    Int num = r.get_num();
    Int den = r.get_den();
    Int pz(p);
    Int nm, dm;
    mpz_fdiv_r(nm.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
    mpz_fdiv_r(dm.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    unsigned long n = nm.get_ui();
    unsigned long d = dm.get_ui();
    if (d == 0) throw Error("prime field: denominator divisible by p");
    return mul(n, inv(d));
  }
  bool is_zero(const E& e) const { return e == 0; }
  E add(E a, E b) const { return (a + b) % p; }
  E sub(E a, E b) const { return (a + p - b) % p; }
  E mul(E a, E b) const {
    return static_cast<E>((static_cast<unsigned __int128>(a) * b) % p);
  }
  E div(E a, E b) const { return mul(a, inv(b)); }
  E neg(E a) const { return (p - a) % p; }
  E inv(E a) const {
    if (a == 0) throw Error("prime field: division by zero");
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a);
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw Error("prime field: modulus not prime");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<E>(t);
  }
};

template <class F>
using PolyF = std::map<IntVec, typename F::E, ExpLexLess>;

template <class F>
void poly_add_term(PolyF<F>& p, const IntVec& e, const typename F::E& c,
                   const F& f) {
  auto [it, inserted] = p.emplace(e, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) p.erase(it);
  } else if (f.is_zero(it->second)) {
    p.erase(it);
  }
}

template <class F>
PolyF<F> convert_poly(const Poly& p, const F& f) {
  PolyF<F> out;
  for (const auto& [e, c] : p) {
    typename F::E ec = f.from_rat(c);
    if (!f.is_zero(ec)) poly_add_term<F>(out, e, ec, f);
  }
  return out;
}

template <class F>
void poly_add_scaled_product(PolyF<F>& acc, const PolyF<F>& a,
                             const PolyF<F>& b, const typename F::E& scale,
                             const F& f) {
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      poly_add_term<F>(acc, vec_add(ea, eb), f.mul(scale, f.mul(ca, cb)),
                       f);
    }
  }
}

template <class F>
int field_rank(std::vector<std::vector<typename F::E>> m, const F& f) {
  if (m.empty() || m[0].empty()) return 0;
  size_t rows = m.size();
  size_t cols = m[0].size();
  int rank = 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = rows;
    for (size_t i = r; i < rows; ++i) {
      if (!f.is_zero(m[i][c])) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    typename F::E inv_pivot = f.div(f.from_rat(Rat(1)), m[r][c]);
    for (size_t jc = c; jc < cols; ++jc) {
      m[r][jc] = f.mul(m[r][jc], inv_pivot);
    }
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || f.is_zero(m[i][c])) continue;
      typename F::E factor = m[i][c];
      for (size_t jc = c; jc < cols; ++jc) {
        m[i][jc] = f.sub(m[i][jc], f.mul(factor, m[r][jc]));
      }
    }
    ++r;
    ++rank;
  }
  return rank;
}

template <class F>
std::vector<std::vector<std::vector<PolyF<F>>>> convert_complex(
    const FreeComplex& fc, const F& f) {
  std::vector<std::vector<std::vector<PolyF<F>>>> d(fc.d.size());
  for (size_t k = 1; k < fc.d.size(); ++k) {
    d[k].resize(fc.d[k].size());
    for (size_t r = 0; r < fc.d[k].size(); ++r) {
      d[k][r].resize(fc.d[k][r].size());
      for (size_t c = 0; c < fc.d[k][r].size(); ++c) {
        d[k][r][c] = convert_poly<F>(fc.d[k][r][c], f);
      }
    }
  }
  return d;
}

template <class F>
bool dd_zero_impl(const FreeComplex& fc, const F& f) {
  auto d = convert_complex<F>(fc, f);
  typename F::E one = f.from_rat(Rat(1));
  for (size_t k = 2; k < d.size(); ++k) {
    size_t rows = fc.degrees[k - 2].size();
    size_t mid = fc.degrees[k - 1].size();
    size_t cols = fc.degrees[k].size();
    for (size_t r = 0; r < rows; ++r) {
      for (size_t c = 0; c < cols; ++c) {
        PolyF<F> acc;
        for (size_t m = 0; m < mid; ++m) {
          poly_add_scaled_product<F>(acc, d[k - 1][r][m], d[k][m][c], one,
                                     f);
        }
        if (!acc.empty()) return false;
      }
    }
  }
  return true;
}

template <class F>
std::vector<int> quotient_homology_impl(const FreeComplex& fc, const F& f) {
  size_t top = fc.degrees.size();
  std::vector<int> ranks(top + 1, 0);
  for (size_t k = 1; k < top; ++k) {
    size_t rows = fc.degrees[k - 1].size();
    size_t cols = fc.degrees[k].size();
    std::vector<std::vector<typename F::E>> m(
        rows, std::vector<typename F::E>(cols, f.from_rat(Rat(0))));
    for (size_t r = 0; r < rows; ++r) {
      for (size_t c = 0; c < cols; ++c) {
        Rat sum = 0;
        for (const auto& [e, coeff] : fc.d[k][r][c]) sum += coeff;
        m[r][c] = f.from_rat(sum);
      }
    }
    ranks[k] = field_rank<F>(std::move(m), f);
  }
  std::vector<int> betti(top, 0);
  for (size_t k = 0; k < top; ++k) {
    int dim = static_cast<int>(fc.degrees[k].size());
    betti[k] = dim - ranks[k] - (k + 1 < top + 1 ? ranks[k + 1] : 0);
  }
  return betti;
}

struct StrandInstance {
  std::vector<IntVec> points;  // absolute geometry points, lex sorted
};

template <class F>
bool check_exactness_impl(const QuotientScarf& s, const FreeComplex& fc,
                          const F& f) {
  if (!dd_zero_impl<F>(fc, f)) return false;
  Lattice label_lattice = Lattice::from_basis(s.label_basis);
  std::set<IntVec, VecLexLess> degrees;
  for (const auto& faces : s.faces_by_dim) {
    for (const QuotientFace& face : faces) degrees.insert(face.label);
  }
  for (const IntVec& b : degrees) {
    // Faces of the infinite complex with label dominated by b: each
    // class contributes the translates by tau with
    // tau <= b - label(class).
    size_t dims = s.faces_by_dim.size();
    std::vector<std::vector<StrandInstance>> inst(dims);
    std::vector<std::map<std::vector<IntVec>, int, FaceKeyLess>> pos(dims);
    for (size_t dim = 0; dim < dims; ++dim) {
      for (const QuotientFace& face : s.faces_by_dim[dim]) {
        IntVec room = vec_sub(b, face.label);
        for (const IntVec& tau : label_lattice.points_dominated(room)) {
          IntVec ct = label_lattice.solve_in_basis(tau);
          IntVec shift = row_times_mat(ct, s.geometry.basis());
          StrandInstance si;
          for (const IntVec& p : face.points) {
            si.points.push_back(vec_add(p, shift));
          }
          auto [it, inserted] =
              pos[dim].emplace(si.points, static_cast<int>(inst[dim].size()));
          if (inserted) inst[dim].push_back(si);
        }
      }
    }
    if (inst[0].empty()) return false;
    // Closure: every boundary of a strand face must itself be present.
    for (size_t dim = 1; dim < dims; ++dim) {
      for (const StrandInstance& si : inst[dim]) {
        for (size_t skip = 0; skip < si.points.size(); ++skip) {
          std::vector<IntVec> sub;
          for (size_t i = 0; i < si.points.size(); ++i) {
            if (i != skip) sub.push_back(si.points[i]);
          }
          if (!pos[dim - 1].count(sub)) return false;
        }
      }
    }
    // Reduced homology via exact ranks; the augmentation gives rank 1.
    std::vector<int> ranks(dims + 1, 0);
    ranks[0] = 1;
    for (size_t dim = 1; dim < dims; ++dim) {
      size_t rows = inst[dim - 1].size();
      size_t cols = inst[dim].size();
      if (rows == 0 || cols == 0) continue;
      std::vector<std::vector<typename F::E>> m(
          rows, std::vector<typename F::E>(cols, f.from_rat(Rat(0))));
      for (size_t c = 0; c < cols; ++c) {
        const StrandInstance& si = inst[dim][c];
        for (size_t skip = 0; skip < si.points.size(); ++skip) {
          std::vector<IntVec> sub;
          for (size_t i = 0; i < si.points.size(); ++i) {
            if (i != skip) sub.push_back(si.points[i]);
          }
          int row = pos[dim - 1].at(sub);
          Rat sign = (skip % 2 == 0) ? Rat(1) : Rat(-1);
          m[row][c] = f.add(m[row][c], f.from_rat(sign));
        }
      }
      ranks[dim] = field_rank<F>(std::move(m), f);
    }
    for (size_t dim = 0; dim < dims; ++dim) {
      int cdim = static_cast<int>(inst[dim].size());
      int reduced = cdim - ranks[dim] - ranks[dim + 1];
      if (reduced != 0) return false;
    }
  }
  return true;
}

template <class F>
std::vector<int> minimize_impl(const FreeComplex& fc, const F& f,
                               std::optional<uint64_t> seed) {
  if (!dd_zero_impl<F>(fc, f)) {
    throw Error("minimize_complex: differentials do not compose to zero");
  }
  auto d = convert_complex<F>(fc, f);
  std::vector<std::vector<IntVec>> degrees = fc.degrees;
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);
  IntVec zero_exp;
  for (;;) {
    // Collect every cancellable entry: a single constant term.
    struct Pick {
      size_t k, i, j;
    };
    std::vector<Pick> picks;
    for (size_t k = 1; k < d.size(); ++k) {
      for (size_t i = 0; i < d[k].size(); ++i) {
        for (size_t j = 0; j < d[k][i].size(); ++j) {
          const PolyF<F>& e = d[k][i][j];
          if (e.empty()) continue;
          bool has_const = false;
          for (const auto& [expo, c] : e) {
            if (vec_is_zero(expo)) has_const = true;
          }
          if (!has_const) continue;
          if (e.size() != 1) {
            throw Error("minimize_complex: mixed constant entry violates "
                        "the grading");
          }
          picks.push_back(Pick{k, i, j});
        }
      }
    }
    if (picks.empty()) break;
    Pick pick = picks[0];
    if (rng) {
      pick = picks[std::uniform_int_distribution<size_t>(
          0, picks.size() - 1)(*rng)];
    }
    size_t k = pick.k, ci = pick.i, cj = pick.j;
    typename F::E cval = d[k][ci][cj].begin()->second;
    // Gaussian cancellation of the (ci, cj) pair.
    size_t rows = d[k].size();
    size_t cols = d[k][ci].size();
    for (size_t i = 0; i < rows; ++i) {
      if (i == ci) continue;
      const PolyF<F>& left = d[k][i][cj];
      if (left.empty()) continue;
      for (size_t j = 0; j < cols; ++j) {
        if (j == cj) continue;
        const PolyF<F>& right = d[k][ci][j];
        if (right.empty()) continue;
        typename F::E scale = f.neg(f.div(f.from_rat(Rat(1)), cval));
        poly_add_scaled_product<F>(d[k][i][j], left, right, scale, f);
      }
    }
    auto drop_row = [](std::vector<std::vector<PolyF<F>>>& m, size_t r) {
      m.erase(m.begin() + r);
    };
    auto drop_col = [](std::vector<std::vector<PolyF<F>>>& m, size_t c) {
      for (auto& row : m) row.erase(row.begin() + c);
    };
    drop_row(d[k], ci);
    drop_col(d[k], cj);
    if (k + 1 < d.size() && !d[k + 1].empty()) drop_row(d[k + 1], cj);
    if (k >= 2 && !d[k - 1].empty()) drop_col(d[k - 1], ci);
    degrees[k].erase(degrees[k].begin() + cj);
    degrees[k - 1].erase(degrees[k - 1].begin() + ci);
  }
  std::vector<int> ranks;
  for (const auto& gens : degrees) {
    ranks.push_back(static_cast<int>(gens.size()));
  }
  return ranks;
}

template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.rationals) {
    return fn(RationalField{});
  }
  if (spec.prime < 2) throw Error("field spec: prime must be >= 2");
  return fn(PrimeField{spec.prime});
}

}  // namespace

bool dd_zero(const FreeComplex& fc, const FieldSpec& field) {
  return with_field(field,
                    [&](const auto& f) { return dd_zero_impl(fc, f); });
}

std::vector<int> quotient_homology(const FreeComplex& fc,
                                   const FieldSpec& field) {
  return with_field(
      field, [&](const auto& f) { return quotient_homology_impl(fc, f); });
}

bool check_exactness(const QuotientScarf& s, const FreeComplex& fc,
                     const FieldSpec& field) {
  return with_field(field, [&](const auto& f) {
    return check_exactness_impl(s, fc, f);
  });
}

std::vector<int> minimize_complex(const FreeComplex& fc,
                                  const FieldSpec& field) {
  return with_field(field, [&](const auto& f) {
    return minimize_impl(fc, f, std::nullopt);
  });
}

std::vector<int> minimize_complex_seeded(const FreeComplex& fc,
                                         const FieldSpec& field,
                                         uint64_t seed) {
  return with_field(field, [&](const auto& f) {
    return minimize_impl(fc, f, std::optional<uint64_t>(seed));
  });
}

}  // namespace latdeform
