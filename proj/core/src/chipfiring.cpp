#include "latdeform/chipfiring.hpp"

#include <algorithm>
#include <random>

#include "latdeform/errors.hpp"

namespace latdeform {

namespace {

void check_shapes(const IntMat& q, const IntVec& sigma) {
  if (q.rows() != q.cols()) throw Error("laplacian must be square");
  if (sigma.size() != static_cast<size_t>(q.rows())) {
    throw Error("sigma length mismatch");
  }
}

// Iterates f over the box 0 <= f <= sigma with f[0] = 0 in lex order,
// skipping f = 0; stops early when cb returns true.
template <typename F>
void scan_firings(const IntVec& sigma, F&& cb) {
  size_t n = sigma.size();
  IntVec f(n, Int(0));
  for (;;) {
    size_t k = n;
    bool advanced = false;
    while (k > 1) {
      --k;
      if (f[k] < sigma[k]) {
        ++f[k];
        for (size_t j = k + 1; j < n; ++j) f[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
    if (cb(f)) return;
  }
}

}  // namespace

ChipConfig apply_firing(const IntMat& q, const ChipConfig& c,
                        const IntVec& f) {
  if (c.size() != static_cast<size_t>(q.rows()) || f.size() != c.size()) {
    throw Error("apply_firing: length mismatch");
  }
  return vec_sub(c, transpose_apply(q, f));
}

bool away_nonnegative(const ChipConfig& c) {
  for (size_t i = 1; i < c.size(); ++i) {
    if (c[i] < 0) return false;
  }
  return true;
}

std::vector<IntVec> legal_firings(const IntMat& q, const IntVec& sigma,
                                  const ChipConfig& c) {
  check_shapes(q, sigma);
  if (!away_nonnegative(c)) {
    throw Error("legal_firings: configuration is in debt away from v_0");
  }
  std::vector<IntVec> out;
  scan_firings(sigma, [&](const IntVec& f) {
    if (away_nonnegative(apply_firing(q, c, f))) out.push_back(f);
    return false;
  });
  return out;
}

namespace {

// Lex-smallest legal firing, preferring single-vertex moves.
bool next_firing(const IntMat& q, const IntVec& sigma, const ChipConfig& c,
                 IntVec& out) {
  size_t n = c.size();
  for (size_t i = 1; i < n; ++i) {
    IntVec f(n, Int(0));
    f[i] = 1;
    if (away_nonnegative(apply_firing(q, c, f))) {
      out = f;
      return true;
    }
  }
  bool found = false;
  scan_firings(sigma, [&](const IntVec& f) {
    if (away_nonnegative(apply_firing(q, c, f))) {
      out = f;
      found = true;
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace

StabilizeResult superstabilize(const IntMat& q, const IntVec& sigma,
                               const ChipConfig& c) {
  check_shapes(q, sigma);
  if (!away_nonnegative(c)) {
    throw Error("superstabilize: configuration is in debt away from v_0");
  }
  StabilizeResult r{c, IntVec(c.size(), Int(0))};
  IntVec f;
  long steps = 0;
  while (next_firing(q, sigma, r.final, f)) {
    r.final = apply_firing(q, r.final, f);
    r.script = vec_add(r.script, f);
    if (++steps > 100000000L) {
      throw Error("superstabilize: step limit exceeded");
    }
  }
  return r;
}

bool confluence_fuzz(const IntMat& q, const IntVec& sigma,
                     const ChipConfig& c,
                     const std::vector<uint64_t>& seeds) {
  ChipConfig target = superstabilize(q, sigma, c).final;
  for (uint64_t seed : seeds) {
    std::mt19937_64 rng(seed);
    ChipConfig cur = c;
    for (;;) {
      std::vector<IntVec> legal = legal_firings(q, sigma, cur);
      if (legal.empty()) break;
      size_t pick = std::uniform_int_distribution<size_t>(
          0, legal.size() - 1)(rng);
      cur = apply_firing(q, cur, legal[pick]);
    }
    if (cur != target) return false;
  }
  return true;
}

std::vector<ChipConfig> superstable_configs(const IntMat& q,
                                            const IntVec& sigma) {
  check_shapes(q, sigma);
  int n = q.rows() - 1;
  // A configuration with c_i >= q(i,i) admits the single firing of
  // vertex i, so superstables lie under the diagonal.
  std::vector<ChipConfig> out;
  ChipConfig c(n + 1, Int(0));
  for (;;) {
    if (legal_firings(q, sigma, c).empty()) out.push_back(c);
    int k = n + 1;
    bool advanced = false;
    while (k > 1) {
      --k;
      if (c[k] < q.at(k, k) - 1) {
        ++c[k];
        for (int j = k + 1; j <= n; ++j) c[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  std::sort(out.begin(), out.end(), [](const ChipConfig& a,
                                       const ChipConfig& b) {
    return compare_lex(a, b) < 0;
  });
  return out;
}

}  // namespace latdeform
