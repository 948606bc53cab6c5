#include "latdeform/digraph.hpp"

#include <algorithm>
#include <map>

#include "latdeform/errors.hpp"

namespace latdeform {

WeightedDigraph::WeightedDigraph(int num_vertices,
                                 const std::vector<WeightedEdge>& edges)
    : n_(num_vertices) {
  if (num_vertices <= 0) throw SchemaError("digraph needs >= 1 vertex");
  std::map<std::pair<int, int>, Rat> merged;
  for (const WeightedEdge& e : edges) {
    if (e.src < 0 || e.src >= n_ || e.dst < 0 || e.dst >= n_) {
      throw SchemaError("edge endpoint out of range");
    }
    if (e.src == e.dst) throw SchemaError("loop edge not allowed");
    if (e.weight <= 0) throw SchemaError("edge weight must be positive");
    merged[{e.src, e.dst}] += e.weight;
  }
  for (const auto& [key, w] : merged) {
    edges_.push_back(WeightedEdge{key.first, key.second, w});
  }
}

RatMat WeightedDigraph::laplacian() const {
  RatMat q(n_, n_);
  for (const WeightedEdge& e : edges_) {
    q.at(e.src, e.dst) = -e.weight;
    q.at(e.src, e.src) += e.weight;
  }
  return q;
}

bool WeightedDigraph::strongly_connected() const {
  std::vector<std::vector<int>> fwd(n_), rev(n_);
  for (const WeightedEdge& e : edges_) {
    fwd[e.src].push_back(e.dst);
    rev[e.dst].push_back(e.src);
  }
  auto reaches_all = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(n_, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n_;
  };
  return reaches_all(fwd) && reaches_all(rev);
}

bool is_laplacian_matrix(const RatMat& q) {
  if (q.rows() != q.cols() || q.rows() == 0) return false;
  for (int i = 0; i < q.rows(); ++i) {
    Rat sum = 0;
    for (int j = 0; j < q.cols(); ++j) {
      if (i != j && q.at(i, j) > 0) return false;
      sum += q.at(i, j);
    }
    if (sum != 0) return false;
    if (q.at(i, i) < 0) return false;
  }
  return true;
}

WeightedDigraph digraph_from_laplacian(const RatMat& q) {
  if (!is_laplacian_matrix(q)) {
    throw SchemaError("matrix is not a digraph Laplacian");
  }
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < q.rows(); ++i) {
    for (int j = 0; j < q.cols(); ++j) {
      if (i != j && q.at(i, j) < 0) {
        edges.push_back(WeightedEdge{i, j, -q.at(i, j)});
      }
    }
  }
  return WeightedDigraph(q.rows(), edges);
}

IntVec left_kernel_sigma(const RatMat& q) {
  if (!is_laplacian_matrix(q)) {
    throw SchemaError("matrix is not a digraph Laplacian");
  }
  std::vector<RatVec> kernel = null_space(transpose(q));
  if (kernel.size() != 1) {
    throw NotStronglyConnected("left kernel has dimension " +
                               std::to_string(kernel.size()));
  }
  const RatVec& v = kernel[0];
  Int scale = 1;
  for (const Rat& x : v) scale = int_lcm(scale, x.get_den());
  IntVec s(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    s[i] = Int(Rat(v[i] * Rat(scale)).get_num());
    g = int_gcd(g, s[i]);
  }
  if (g == 0) throw NotStronglyConnected("left kernel vector is zero");
  bool neg = false;
  for (const Int& x : s) {
    if (x < 0) {
      neg = true;
      break;
    }
    if (x > 0) break;
  }
  for (Int& x : s) {
    x /= g;
    if (neg) x = -x;
  }
  for (const Int& x : s) {
    if (x <= 0) {
      throw NotStronglyConnected(
          "left kernel vector has a nonpositive entry");
    }
  }
  return s;
}

bool cone_membership(const RatMat& q, const IntVec& sigma) {
  if (!is_laplacian_matrix(q)) return false;
  if (static_cast<int>(sigma.size()) != q.rows()) return false;
  for (const Int& x : sigma) {
    if (x <= 0) return false;
  }
  try {
    IntVec s = left_kernel_sigma(q);
    if (s != sigma) return false;
  } catch (const Error&) {
    return false;
  }
  return digraph_from_laplacian(q).strongly_connected();
}

RatMat ray_laplacian(const std::vector<int>& cycle, const IntVec& sigma,
                     int dim) {
  RatMat q(dim, dim);
  size_t k = cycle.size();
  if (k < 2) throw Error("ray_laplacian: cycle needs >= 2 vertices");
  for (size_t t = 0; t < k; ++t) {
    int v = cycle[t];
    int w = cycle[(t + 1) % k];
    if (v < 0 || v >= dim || v == w) throw Error("ray_laplacian: bad cycle");
    Rat wt = make_rat(1, sigma[v]);
    q.at(v, w) -= wt;
    q.at(v, v) += wt;
  }
  return q;
}

namespace {

// First simple cycle from start in depth-first order with ascending
// neighbor choice; sequences are explored lexicographically, so the
// first complete cycle is the lex-smallest one through start.
bool find_lex_cycle(const std::map<std::pair<int, int>, Rat>& weights,
                    int n, int start, std::vector<int>& path,
                    std::vector<bool>& on_path) {
  int v = path.back();
  for (int w = 0; w < n; ++w) {
    auto it = weights.find({v, w});
    if (it == weights.end() || it->second == 0) continue;
    if (w == start && path.size() >= 2) return true;
    if (on_path[w] || w == start) continue;
    path.push_back(w);
    on_path[w] = true;
    if (find_lex_cycle(weights, n, start, path, on_path)) return true;
    on_path[w] = false;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::vector<CycleRay> cycle_ray_decomposition(const RatMat& q,
                                              const IntVec& sigma) {
  if (!cone_membership(q, sigma)) {
    throw Error("cycle_ray_decomposition: matrix is outside the cone");
  }
  int n = q.rows();
  // Scaling row v by sigma[v] balances the edge weights (in-flow equals
  // out-flow at every vertex), so greedy cycle peeling terminates.
  std::map<std::pair<int, int>, Rat> weights;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && q.at(i, j) < 0) {
        weights[{i, j}] = Rat(-Rat(sigma[i]) * q.at(i, j));
      }
    }
  }
  std::vector<CycleRay> rays;
  while (!weights.empty()) {
    int start = weights.begin()->first.first;
    std::vector<int> path{start};
    std::vector<bool> on_path(n, false);
    on_path[start] = true;
    if (!find_lex_cycle(weights, n, start, path, on_path)) {
      throw Error("cycle_ray_decomposition: no cycle through vertex " +
                  std::to_string(start));
    }
    Rat peel = 0;
    for (size_t t = 0; t < path.size(); ++t) {
      const Rat& w = weights.at({path[t], path[(t + 1) % path.size()]});
      if (peel == 0 || w < peel) peel = w;
    }
    for (size_t t = 0; t < path.size(); ++t) {
      auto key = std::make_pair(path[t], path[(t + 1) % path.size()]);
      weights[key] -= peel;
      if (weights[key] == 0) weights.erase(key);
    }
    rays.push_back(CycleRay{path, peel});
  }
  // The peeled weights must reassemble the input exactly.
  RatMat sum(n, n);
  for (const CycleRay& r : rays) {
    RatMat ray = ray_laplacian(r.cycle, sigma, n);
    for (int i = 0; i < n; ++i) {
      // ray uses weight 1/sigma[v] per cycle vertex; the peel weight is
      // in sigma-scaled units, so the combination coefficient is peel.
      for (int j = 0; j < n; ++j) sum.at(i, j) += r.weight * ray.at(i, j);
    }
  }
  if (sum != q) throw Error("cycle_ray_decomposition: reassembly mismatch");
  return rays;
}

}  // namespace latdeform
