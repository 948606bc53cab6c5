#include "latdeform/lattice.hpp"

#include <algorithm>

#include "latdeform/errors.hpp"

namespace latdeform {

namespace {

IntVec project(const IntVec& v) {
  return IntVec(v.begin() + 1, v.end());
}

// Odometer over the box [-r[k], r[k]] for each k; calls f on every point.
template <typename F>
void scan_box(const IntVec& radii, F&& f) {
  size_t n = radii.size();
  IntVec c(n);
  for (size_t k = 0; k < n; ++k) c[k] = -radii[k];
  for (;;) {
    f(c);
    size_t k = n;
    while (k > 0) {
      --k;
      if (c[k] < radii[k]) {
        ++c[k];
        for (size_t j = k + 1; j < n; ++j) c[j] = -radii[j];
        break;
      }
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

Lattice Lattice::from_basis(const IntMat& basis) {
  if (basis.cols() < 2 || basis.rows() != basis.cols() - 1) {
    throw NotFiniteIndex("basis must have ambient_dim - 1 rows");
  }
  for (int i = 0; i < basis.rows(); ++i) {
    Int s = 0;
    for (int j = 0; j < basis.cols(); ++j) s += basis.at(i, j);
    if (s != 0) {
      throw SchemaError("basis row " + std::to_string(i) +
                        " does not sum to zero");
    }
  }
  Lattice l;
  l.ambient_ = basis.cols();
  l.basis_ = basis;
  int n = basis.rows();
  l.proj_ = IntMat(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) l.proj_.at(i, j) = basis.at(i, j + 1);
  }
  Int det = bareiss_det(l.proj_);
  if (det == 0) {
    throw NotFiniteIndex("basis rows are linearly dependent");
  }
  l.index_ = abs(det);
  HnfResult h = hnf(l.proj_);
  l.proj_hnf_ = hnf_basis(l.proj_);
  l.hnf_u_ = h.u;
  l.proj_inv_ = *rat_inverse(to_rat(l.proj_));
  return l;
}

Lattice Lattice::from_generators(const IntMat& gens) {
  if (gens.cols() < 2) throw SchemaError("ambient dimension must be >= 2");
  int n = gens.cols() - 1;
  for (int i = 0; i < gens.rows(); ++i) {
    Int s = 0;
    for (int j = 0; j < gens.cols(); ++j) s += gens.at(i, j);
    if (s != 0) {
      throw SchemaError("generator row " + std::to_string(i) +
                        " does not sum to zero");
    }
  }
  IntMat proj(gens.rows(), n);
  for (int i = 0; i < gens.rows(); ++i) {
    for (int j = 0; j < n; ++j) proj.at(i, j) = gens.at(i, j + 1);
  }
  IntMat reduced = hnf_basis(proj);
  if (reduced.rows() != n) {
    throw NotFiniteIndex("generators span rank " +
                         std::to_string(reduced.rows()) + " < " +
                         std::to_string(n));
  }
  IntMat basis(n, n + 1);
  for (int i = 0; i < n; ++i) {
    Int s = 0;
    for (int j = 0; j < n; ++j) {
      basis.at(i, j + 1) = reduced.at(i, j);
      s += reduced.at(i, j);
    }
    basis.at(i, 0) = -s;
  }
  return from_basis(basis);
}

bool Lattice::member(const IntVec& v) const {
  if (static_cast<int>(v.size()) != ambient_) return false;
  if (vec_sum(v) != 0) return false;
  // Solve y * proj_hnf_ == project(v) over the integers against the
  // echelon structure of the Hermite form.
  IntVec t = project(v);
  int n = rank();
  for (int r = 0; r < n; ++r) {
    int pc = -1;
    for (int j = 0; j < n; ++j) {
      if (proj_hnf_.at(r, j) != 0) {
        pc = j;
        break;
      }
    }
    if (pc < 0) return false;
    if (t[pc] % proj_hnf_.at(r, pc) != 0) return false;
    Int y = t[pc] / proj_hnf_.at(r, pc);
    for (int j = 0; j < n; ++j) t[j] -= y * proj_hnf_.at(r, j);
  }
  return vec_is_zero(t);
}

IntVec Lattice::solve_in_basis(const IntVec& v) const {
  if (static_cast<int>(v.size()) != ambient_ || vec_sum(v) != 0) {
    throw Error("solve_in_basis: not a lattice member");
  }
  IntVec t = project(v);
  int n = rank();
  IntVec y(n, Int(0));
  for (int r = 0; r < n; ++r) {
    int pc = -1;
    for (int j = 0; j < n; ++j) {
      if (proj_hnf_.at(r, j) != 0) {
        pc = j;
        break;
      }
    }
    if (pc < 0 || t[pc] % proj_hnf_.at(r, pc) != 0) {
      throw Error("solve_in_basis: not a lattice member");
    }
    y[r] = t[pc] / proj_hnf_.at(r, pc);
    for (int j = 0; j < n; ++j) t[j] -= y[r] * proj_hnf_.at(r, j);
  }
  if (!vec_is_zero(t)) throw Error("solve_in_basis: not a lattice member");
  // c * proj_ == project(v) with c = y * hnf_u_.
  return row_times_mat(y, hnf_u_);
}

IntVec Lattice::from_coeffs(const IntVec& c) const {
  IntVec b = row_times_mat(c, basis_);
  return b;
}

std::vector<IntVec> Lattice::points_dominated(const IntVec& m) const {
  if (static_cast<int>(m.size()) != ambient_) {
    throw Error("points_dominated: wrong length");
  }
  std::vector<IntVec> out;
  Int total = vec_sum(m);
  if (total < 0) return out;
  // A dominated point b satisfies m_i - total <= b_i <= m_i in every
  // coordinate, which bounds its basis coefficients exactly.
  int n = rank();
  RatVec bound(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    Int lo = abs(m[i + 1] - total);
    Int hi = abs(m[i + 1]);
    bound[i] = Rat(lo > hi ? lo : hi);
  }
  IntVec radii(n, Int(0));
  for (int k = 0; k < n; ++k) {
    Rat r = 0;
    for (int i = 0; i < n; ++i) r += bound[i] * abs(proj_inv_.at(i, k));
    radii[k] = rat_floor(r);
  }
  scan_box(radii, [&](const IntVec& c) {
    IntVec b = from_coeffs(c);
    if (vec_leq(b, m)) out.push_back(b);
  });
  std::sort(out.begin(), out.end(),
            [](const IntVec& a, const IntVec& b) {
              return compare_lex(a, b) < 0;
            });
  return out;
}

std::vector<IntVec> Lattice::points_in_coeff_box(const Int& radius) const {
  std::vector<IntVec> out;
  IntVec radii(rank(), radius);
  scan_box(radii, [&](const IntVec& c) {
    if (vec_is_zero(c)) return;
    out.push_back(from_coeffs(c));
  });
  std::sort(out.begin(), out.end(),
            [](const IntVec& a, const IntVec& b) {
              return compare_lex(a, b) < 0;
            });
  return out;
}

}  // namespace latdeform
