#include <algorithm>
#include <set>

#include "doctest.h"
#include "latdeform/errors.hpp"
#include "latdeform/groebner.hpp"

using namespace latdeform;

namespace {

IntMat make3(std::initializer_list<int> vals) {
  IntMat m(3, 3);
  auto it = vals.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Int(*it++);
  return m;
}

IntVec iv(std::initializer_list<int> vals) {
  IntVec v;
  for (int x : vals) v.push_back(Int(x));
  return v;
}

const IntMat kLap25 = make3({5, -3, -2, -1, 3, -2, -1, -1, 2});
const IntMat kDeformed = make3({60, -36, -24, -12, 39, -27, -12, -14, 26});
const IntVec kSigma25{Int(1), Int(2), Int(3)};
const TermOrder kChip{{0, 1, 2}};

struct LexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    return compare_lex(a, b) < 0;
  }
};

}  // namespace

TEST_CASE("graded reverse lexicographic comparisons") {
  TermOrder o{{0, 1, 2}};
  CHECK(o.compare(iv({0, 0, 2}), iv({1, 1, 0})) > 0);
  CHECK(o.compare(iv({0, 3, 0}), iv({0, 0, 2})) > 0);  // higher degree
  CHECK(o.compare(iv({1, 0, 1}), iv({0, 2, 0})) < 0);
  CHECK(o.compare(iv({1, 1, 1}), iv({1, 1, 1})) == 0);
  TermOrder rev{{2, 1, 0}};
  CHECK(rev.compare(iv({0, 0, 2}), iv({1, 1, 0})) < 0);
  CHECK(rev.greater(iv({2, 0, 0}), iv({0, 1, 1})));
}

TEST_CASE("spanning tree order of the running example") {
  WeightedDigraph g = digraph_from_laplacian(to_rat(kLap25));
  CHECK(spanning_tree_order(g).ascending == std::vector<int>{0, 1, 2});
}

TEST_CASE("spanning tree order walks levels toward the root") {
  std::vector<WeightedEdge> cyc{{0, 1, Int(1)}, {1, 2, Int(1)},
                                {2, 0, Int(1)}};
  WeightedDigraph g(3, cyc);
  CHECK(spanning_tree_order(g).ascending == std::vector<int>{0, 2, 1});
}

TEST_CASE("descending index order") {
  CHECK(descending_index_order(3).ascending == std::vector<int>{2, 1, 0});
  CHECK(descending_index_order(3).greater(iv({1, 0, 0}), iv({0, 0, 1})));
}

TEST_CASE("chip firing basis of the running example") {
  MarkedGB gb = grobner_basis(kLap25, kSigma25, kChip);
  REQUIRE(gb.binomials.size() == 11);
  std::vector<std::pair<IntVec, IntVec>> expect{
      {iv({0, 0, 1}), iv({-1, -1, 2})},  {iv({0, 0, 2}), iv({-2, -2, 4})},
      {iv({0, 0, 3}), iv({-3, -3, 6})},  {iv({0, 1, 0}), iv({-1, 3, -2})},
      {iv({0, 1, 1}), iv({-2, 2, 0})},   {iv({0, 1, 2}), iv({-3, 1, 2})},
      {iv({0, 1, 3}), iv({-4, 0, 4})},   {iv({0, 2, 0}), iv({-2, 6, -4})},
      {iv({0, 2, 1}), iv({-3, 5, -2})},  {iv({0, 2, 2}), iv({-4, 4, 0})},
      {iv({0, 2, 3}), iv({-5, 3, 2})},
  };
  for (size_t k = 0; k < expect.size(); ++k) {
    CHECK(gb.binomials[k].x == expect[k].first);
    CHECK(gb.binomials[k].u == expect[k].second);
    CHECK(gb.binomials[k].u == transpose_apply(kLap25, gb.binomials[k].x));
    CHECK(gb.binomials[k].plus_leading);
    CHECK(gb.binomials[k].lead() == positive_part(gb.binomials[k].u));
  }
  CHECK(spair_check(gb));
}

TEST_CASE("basis size is the box count") {
  MarkedGB gb = grobner_basis(kDeformed, kSigma25, kChip);
  CHECK(gb.binomials.size() == 11);  // (2+1)(3+1) - 1
  CHECK(spair_check(gb));
}

TEST_CASE("rejects a scaled kernel vector") {
  CHECK_THROWS_AS(
      grobner_basis(kLap25, IntVec{Int(2), Int(4), Int(6)}, kChip), Error);
}

TEST_CASE("normal forms reduce into the standard monomials") {
  MarkedGB gb = grobner_basis(kLap25, kSigma25, kChip);
  CHECK(normal_form(gb, iv({0, 0, 2})) == iv({1, 1, 0}));
  CHECK(normal_form(gb, iv({0, 1, 1})) == iv({0, 1, 1}));
  CHECK(normal_form(gb, iv({0, 0, 0})) == iv({0, 0, 0}));
  // Reduction is a ring map modulo the ideal: reducing twice is stable.
  IntVec nf = normal_form(gb, iv({0, 2, 3}));
  CHECK(normal_form(gb, nf) == nf);
}

TEST_CASE("initial ideal generators and standard count") {
  MarkedGB gb = grobner_basis(kLap25, kSigma25, kChip);
  std::vector<IntVec> mg = initial_ideal_mingens(gb);
  REQUIRE(mg.size() == 2);
  CHECK(mg[0] == iv({0, 0, 2}));
  CHECK(mg[1] == iv({0, 2, 0}));
  CHECK(standard_monomial_count(mg, 3) == 4);
}

TEST_CASE("standard count requires pure powers away from the root") {
  CHECK_THROWS_AS(standard_monomial_count({iv({0, 2, 0})}, 3), Error);
  CHECK_THROWS_AS(
      standard_monomial_count({iv({1, 2, 0}), iv({0, 0, 2})}, 3), Error);
}

TEST_CASE("remarking under the descending order") {
  MarkedGB gb = grobner_basis(kDeformed, kSigma25, kChip);
  std::vector<IntVec> chip_mg = initial_ideal_mingens(gb);
  REQUIRE(chip_mg.size() == 3);
  CHECK(chip_mg[0] == iv({0, 0, 26}));
  CHECK(chip_mg[1] == iv({0, 11, 25}));
  CHECK(chip_mg[2] == iv({0, 25, 0}));
  CHECK(standard_monomial_count(chip_mg, 3) == 636);

  MarkedGB re = remark(gb, descending_index_order(3));
  std::vector<IntVec> mg = initial_ideal_mingens(re);
  REQUIRE(mg.size() == 3);
  CHECK(mg[0] == iv({0, 25, 0}));
  CHECK(mg[1] == iv({12, 14, 0}));
  CHECK(mg[2] == iv({36, 0, 0}));
  // Same binomials, opposite marking where the lead flips.
  for (size_t k = 0; k < re.binomials.size(); ++k) {
    CHECK(re.binomials[k].u == gb.binomials[k].u);
    CHECK(descending_index_order(3).greater(re.binomials[k].lead(),
                                            re.binomials[k].trail()));
  }
}

TEST_CASE("genericity violations are found lex first") {
  auto v = genericity_violation(to_rat(kLap25), kSigma25);
  REQUIRE(v.has_value());
  CHECK(v->x == iv({0, 1, 1}));
  CHECK(v->i == 2);
  CHECK(!is_generic(to_rat(kLap25), kSigma25));
  CHECK(is_generic(to_rat(kDeformed), kSigma25));
  CHECK(!genericity_violation(to_rat(kDeformed), kSigma25).has_value());
}

TEST_CASE("all violations of the running example") {
  // Direct scan over the full box including the root coordinate.
  std::vector<std::pair<IntVec, int>> found;
  for (int x0 = 0; x0 <= 1; ++x0) {
    for (int x1 = 0; x1 <= 2; ++x1) {
      for (int x2 = 0; x2 <= 3; ++x2) {
        IntVec x = iv({x0, x1, x2});
        if (vec_is_zero(x) || x == iv({1, 2, 3})) continue;
        IntVec u = transpose_apply(kLap25, x);
        for (size_t i = 0; i < u.size(); ++i) {
          if (u[i] == 0) {
            found.push_back({x, static_cast<int>(i)});
            break;
          }
        }
      }
    }
  }
  std::vector<std::pair<IntVec, int>> expect{
      {iv({0, 1, 1}), 2}, {iv({0, 1, 3}), 1}, {iv({0, 2, 2}), 2},
      {iv({1, 0, 1}), 2}, {iv({1, 1, 0}), 1}, {iv({1, 1, 2}), 2},
  };
  CHECK(found == expect);
  // The supports that fail are exactly three vectors up to sign.
  std::set<IntVec, LexLess> supports;
  for (auto& [x, i] : found) {
    IntVec u = transpose_apply(kLap25, x);
    IntVec canon = compare_lex(u, IntVec(3, Int(0))) > 0 ? u : vec_neg(u);
    supports.insert(canon);
  }
  CHECK(supports.size() == 3);
  CHECK(supports.count(iv({2, -2, 0})) == 1);
  CHECK(supports.count(iv({4, 0, -4})) == 1);
  CHECK(supports.count(iv({4, -4, 0})) == 1);
}
