#include "latdeform/laplacianize.hpp"

#include "latdeform/errors.hpp"

namespace latdeform {

IntVec script_vector(const IntMat& m) {
  int n = m.rows();
  if (n == 0 || m.cols() != n) throw Error("script_vector: not square");
  for (int i = 0; i < n; ++i) {
    if (m.at(i, i) <= 0) throw Error("script_vector: diagonal not positive");
    Int s = 0;
    for (int j = 0; j < n; ++j) {
      if (i != j && m.at(i, j) > 0) {
        throw Error("script_vector: positive off-diagonal entry");
      }
      s += m.at(i, j);
    }
    if (s < 0) throw Error("script_vector: negative row sum");
  }
  std::optional<RatMat> inv = rat_inverse(to_rat(m));
  if (!inv) throw Error("script_vector: matrix is singular");
  // A Z-matrix with nonnegative row sums and an inverse is an M-matrix,
  // so the inverse is entrywise nonnegative; weighting its columns by
  // the positive diagonal then gives a strictly positive vector.
  RatVec st(n, Rat(0));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (inv->at(i, k) < 0) {
        throw Error("script_vector: inverse has a negative entry");
      }
      st[k] += Rat(m.at(i, i)) * inv->at(i, k);
    }
    if (st[k] <= 0) throw Error("script_vector: nonpositive entry");
  }
  Int scale = 1;
  for (const Rat& x : st) scale = int_lcm(scale, x.get_den());
  IntVec sigma(n);
  Int g = 0;
  for (int k = 0; k < n; ++k) {
    sigma[k] = Int(Rat(st[k] * Rat(scale)).get_num());
    g = int_gcd(g, sigma[k]);
  }
  for (Int& x : sigma) x /= g;
  return sigma;
}

namespace {

// Lexicographic list of projected lattice rows with positive pivot
// coordinate, nonpositive elsewhere, and nonnegative sum.
std::vector<IntVec> pivot_candidates(const Lattice& l, int pivot,
                                     const Int& box) {
  int n = l.rank();
  std::vector<IntVec> out;
  IntVec v(n);
  for (int j = 0; j < n; ++j) v[j] = j == pivot ? Int(1) : Int(-box);
  for (;;) {
    if (vec_sum(v) >= 0) {
      IntVec full(n + 1);
      Int s = 0;
      for (int j = 0; j < n; ++j) {
        full[j + 1] = v[j];
        s += v[j];
      }
      full[0] = -s;
      if (l.member(full)) out.push_back(v);
    }
    int k = n;
    bool done = true;
    while (k > 0) {
      --k;
      Int hi = k == pivot ? box : Int(0);
      if (v[k] < hi) {
        ++v[k];
        for (int j = k + 1; j < n; ++j) {
          v[j] = j == pivot ? Int(1) : Int(-box);
        }
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return out;
}

bool search_selection(const std::vector<std::vector<IntVec>>& cands,
                      const Int& target, int level, IntMat& sel) {
  int n = static_cast<int>(cands.size());
  if (level == n) {
    return abs(bareiss_det(sel)) == target;
  }
  for (const IntVec& v : cands[level]) {
    sel.set_row(level, v);
    RatMat partial(level + 1, n);
    for (int i = 0; i <= level; ++i) {
      for (int j = 0; j < n; ++j) partial.at(i, j) = Rat(sel.at(i, j));
    }
    if (rat_rank(partial) != level + 1) continue;
    if (search_selection(cands, target, level + 1, sel)) return true;
  }
  return false;
}

}  // namespace

LaplacianPresentation laplacianize(const Lattice& l) {
  int n = l.rank();
  Int g = l.index();
  Int box = g;
  IntMat sel(n, n);
  bool found = false;
  for (; box <= 4096 * g; box *= 2) {
    std::vector<std::vector<IntVec>> cands;
    cands.reserve(n);
    bool empty = false;
    for (int i = 0; i < n; ++i) {
      cands.push_back(pivot_candidates(l, i, box));
      if (cands.back().empty()) empty = true;
    }
    if (!empty && search_selection(cands, g, 0, sel)) {
      found = true;
      break;
    }
  }
  if (!found) throw Error("laplacianize: no sign-patterned basis found");

  IntVec sigma = script_vector(sel);
  LaplacianPresentation p;
  p.reduced_basis = sel;
  p.sigma = IntVec(n + 1);
  p.sigma[0] = 1;
  for (int i = 0; i < n; ++i) p.sigma[i + 1] = sigma[i];
  p.q = IntMat(n + 1, n + 1);
  for (int i = 0; i < n; ++i) {
    Int s = 0;
    for (int j = 0; j < n; ++j) {
      p.q.at(i + 1, j + 1) = sel.at(i, j);
      s += sel.at(i, j);
    }
    p.q.at(i + 1, 0) = -s;
  }
  for (int j = 0; j <= n; ++j) {
    Int s = 0;
    for (int i = 1; i <= n; ++i) s += p.sigma[i] * p.q.at(i, j);
    p.q.at(0, j) = -s;
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i != j && p.q.at(i, j) < 0) {
        p.edges.push_back(WeightedEdge{i, j, Rat(-p.q.at(i, j))});
      }
    }
  }

  IntMat rows = p.q;
  if (!same_row_lattice(rows, l.basis())) {
    throw Error("laplacianize: output lattice mismatch");
  }
  if (!cone_membership(to_rat(p.q), p.sigma)) {
    throw Error("laplacianize: output fails Laplacian certificate");
  }
  return p;
}

}  // namespace latdeform
