#include "latdeform/groebner.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "latdeform/errors.hpp"

namespace latdeform {

int TermOrder::compare(const IntVec& a, const IntVec& b) const {
  if (a.size() != ascending.size() || b.size() != ascending.size()) {
    throw Error("TermOrder: exponent length mismatch");
  }
  Int da = vec_sum(a);
  Int db = vec_sum(b);
  if (da != db) return da < db ? -1 : 1;
  for (int v : ascending) {
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

TermOrder spanning_tree_order(const WeightedDigraph& g) {
  if (!g.strongly_connected()) {
    throw NotStronglyConnected("spanning_tree_order needs strong connectivity");
  }
  int n = g.num_vertices();
  std::vector<std::vector<int>> in_nbrs(n);
  for (const WeightedEdge& e : g.edges()) in_nbrs[e.dst].push_back(e.src);
  for (auto& v : in_nbrs) std::sort(v.begin(), v.end());
  // Breadth-first search along reversed edges grows an in-tree toward
  // vertex 0; the level of a vertex is its tree distance to the root.
  std::vector<int> level(n, -1);
  std::queue<int> bfs;
  level[0] = 0;
  bfs.push(0);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : in_nbrs[v]) {
      if (level[w] < 0) {
        level[w] = level[v] + 1;
        bfs.push(w);
      }
    }
  }
  TermOrder ord;
  ord.ascending.resize(n);
  for (int v = 0; v < n; ++v) ord.ascending[v] = v;
  std::sort(ord.ascending.begin(), ord.ascending.end(), [&](int a, int b) {
    return level[a] != level[b] ? level[a] < level[b] : a < b;
  });
  return ord;
}

TermOrder descending_index_order(int nvars) {
  TermOrder ord;
  ord.ascending.resize(nvars);
  for (int v = 0; v < nvars; ++v) ord.ascending[v] = nvars - 1 - v;
  return ord;
}

IntVec MarkedBinomial::lead() const {
  return plus_leading ? positive_part(u) : negative_part(u);
}

IntVec MarkedBinomial::trail() const {
  return plus_leading ? negative_part(u) : positive_part(u);
}

MarkedGB grobner_basis(const IntMat& q, const IntVec& sigma,
                       const TermOrder& order) {
  int nv = q.rows();
  if (q.cols() != nv || static_cast<int>(sigma.size()) != nv) {
    throw Error("grobner_basis: shape mismatch");
  }
  if (sigma[0] != 1) {
    throw Error("grobner_basis: sigma[0] must be 1");
  }
  if (left_kernel_sigma(to_rat(q)) != sigma) {
    throw Error("grobner_basis: sigma is not the left kernel vector");
  }
  MarkedGB gb;
  gb.order = order;
  gb.sigma = sigma;
  gb.nvars = nv;
  // Odometer over 0 <= x <= sigma with x[0] = 0, lex ascending.
  IntVec x(nv, Int(0));
  for (;;) {
    int k = nv;
    bool advanced = false;
    while (k > 1) {
      --k;
      if (x[k] < sigma[k]) {
        ++x[k];
        for (int j = k + 1; j < nv; ++j) x[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    MarkedBinomial b;
    b.u = transpose_apply(q, x);
    b.x = x;
    int c = order.compare(positive_part(b.u), negative_part(b.u));
    if (c == 0) throw Error("grobner_basis: unmarked binomial");
    b.plus_leading = c > 0;
    gb.binomials.push_back(b);
  }
  return gb;
}

MarkedGB remark(const MarkedGB& gb, const TermOrder& order) {
  MarkedGB out = gb;
  out.order = order;
  for (MarkedBinomial& b : out.binomials) {
    int c = order.compare(positive_part(b.u), negative_part(b.u));
    if (c == 0) throw Error("remark: unmarked binomial");
    b.plus_leading = c > 0;
  }
  return out;
}

IntVec normal_form(const MarkedGB& gb, const IntVec& m) {
  IntVec cur = m;
  for (const Int& e : cur) {
    if (e < 0) throw Error("normal_form: negative exponent");
  }
  for (;;) {
    bool reduced = false;
    for (const MarkedBinomial& b : gb.binomials) {
      if (vec_leq(b.lead(), cur)) {
        cur = vec_add(vec_sub(cur, b.lead()), b.trail());
        reduced = true;
        break;
      }
    }
    if (!reduced) return cur;
  }
}

std::vector<IntVec> initial_ideal_mingens(const MarkedGB& gb) {
  std::vector<IntVec> leads;
  for (const MarkedBinomial& b : gb.binomials) leads.push_back(b.lead());
  std::sort(leads.begin(), leads.end(), [](const IntVec& a, const IntVec& b) {
    return compare_lex(a, b) < 0;
  });
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  std::vector<IntVec> mins;
  for (size_t i = 0; i < leads.size(); ++i) {
    bool divisible = false;
    for (size_t j = 0; j < leads.size() && !divisible; ++j) {
      if (i != j && vec_leq(leads[j], leads[i])) divisible = true;
    }
    if (!divisible) mins.push_back(leads[i]);
  }
  return mins;
}

Int standard_monomial_count(const std::vector<IntVec>& gens, int nvars) {
  std::vector<Int> pure(nvars, Int(0));
  for (const IntVec& g : gens) {
    if (static_cast<int>(g.size()) != nvars) {
      throw Error("standard_monomial_count: length mismatch");
    }
    if (g[0] != 0) {
      throw Error("standard_monomial_count: generator touches x_0");
    }
    int support = -1;
    for (int v = 1; v < nvars; ++v) {
      if (g[v] != 0) {
        if (support >= 0) {
          support = -2;
          break;
        }
        support = v;
      }
    }
    if (support > 0 && (pure[support] == 0 || g[support] < pure[support])) {
      pure[support] = g[support];
    }
  }
  for (int v = 1; v < nvars; ++v) {
    if (pure[v] == 0) {
      throw Error("standard_monomial_count: no pure power of variable " +
                  std::to_string(v) + "; count is infinite");
    }
  }
  // Standard monomials avoid x_0 and sit under the pure-power box.
  Int count = 0;
  IntVec m(nvars, Int(0));
  for (;;) {
    bool standard = true;
    for (const IntVec& g : gens) {
      if (vec_leq(g, m)) {
        standard = false;
        break;
      }
    }
    if (standard) ++count;
    int k = nvars;
    bool advanced = false;
    while (k > 1) {
      --k;
      if (m[k] < pure[k] - 1) {
        ++m[k];
        for (int j = k + 1; j < nvars; ++j) m[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return count;
}

std::optional<GenericityViolation> genericity_violation(
    const RatMat& q, const IntVec& sigma) {
  int nv = q.rows();
  if (q.cols() != nv || static_cast<int>(sigma.size()) != nv) {
    throw Error("genericity_violation: shape mismatch");
  }
  IntVec x(nv, Int(0));
  for (;;) {
    int k = nv;
    bool advanced = false;
    while (k > 0) {
      --k;
      if (x[k] < sigma[k]) {
        ++x[k];
        for (int j = k + 1; j < nv; ++j) x[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;
    if (x == sigma) continue;
    RatVec u = transpose_apply(q, x);
    for (int i = 0; i < nv; ++i) {
      if (u[i] == 0) return GenericityViolation{x, i};
    }
  }
}

bool is_generic(const RatMat& q, const IntVec& sigma) {
  return !genericity_violation(q, sigma).has_value();
}

namespace {

struct LexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    return compare_lex(a, b) < 0;
  }
};

using Poly = std::map<IntVec, Int, LexLess>;

void poly_add(Poly& p, const IntVec& m, const Int& c) {
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  } else if (it->second == 0) {
    p.erase(it);
  }
}

// Full division by the marked basis; true iff the remainder is zero.
bool reduces_to_zero(const MarkedGB& gb, Poly p) {
  while (!p.empty()) {
    const IntVec* top = nullptr;
    for (const auto& [m, c] : p) {
      if (!top || gb.order.greater(m, *top)) top = &m;
    }
    bool hit = false;
    for (const MarkedBinomial& b : gb.binomials) {
      if (vec_leq(b.lead(), *top)) {
        Int c = p.at(*top);
        IntVec shift_trail = vec_add(vec_sub(*top, b.lead()), b.trail());
        IntVec lead_copy = *top;
        poly_add(p, lead_copy, -c);
        poly_add(p, shift_trail, c);
        hit = true;
        break;
      }
    }
    // An irreducible maximal term survives all later steps, so the
    // remainder cannot be zero.
    if (!hit) return false;
  }
  return true;
}

}  // namespace

bool spair_check(const MarkedGB& gb) {
  size_t m = gb.binomials.size();
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      const MarkedBinomial& a = gb.binomials[i];
      const MarkedBinomial& b = gb.binomials[j];
      IntVec lcm = vec_max(a.lead(), b.lead());
      Poly p;
      poly_add(p, vec_add(vec_sub(lcm, a.lead()), a.trail()), Int(1));
      poly_add(p, vec_add(vec_sub(lcm, b.lead()), b.trail()), Int(-1));
      if (!reduces_to_zero(gb, p)) return false;
    }
  }
  return true;
}

}  // namespace latdeform
