#include <numeric>

#include "doctest.h"
#include "latdeform/chipfiring.hpp"
#include "latdeform/errors.hpp"

using namespace latdeform;

namespace {

IntMat make3(std::initializer_list<int> vals) {
  IntMat m(3, 3);
  auto it = vals.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Int(*it++);
  return m;
}

const IntMat kLap25 = make3({5, -3, -2, -1, 3, -2, -1, -1, 2});
const IntVec kSigma25{Int(1), Int(2), Int(3)};

IntVec iv(std::initializer_list<int> vals) {
  IntVec v;
  for (int x : vals) v.push_back(Int(x));
  return v;
}

}  // namespace

TEST_CASE("firing moves chips along outgoing edges") {
  CHECK(apply_firing(kLap25, iv({0, 1, 2}), iv({0, 0, 1})) == iv({1, 2, 0}));
  CHECK(apply_firing(kLap25, iv({0, 0, 0}), iv({0, 1, 0})) ==
        iv({1, -3, 2}));
  CHECK(apply_firing(kLap25, iv({5, 0, 0}), iv({1, 0, 0})) ==
        iv({0, 3, 2}));
}

TEST_CASE("away from the exempt vertex nonnegativity") {
  CHECK(away_nonnegative(iv({-7, 0, 1})));
  CHECK(!away_nonnegative(iv({0, -1, 1})));
}

TEST_CASE("legal firings keep every other vertex out of debt") {
  std::vector<IntVec> legal = legal_firings(kLap25, kSigma25, iv({0, 1, 2}));
  // Brute check against the definition.
  std::vector<IntVec> expect;
  for (int f1 = 0; f1 <= 2; ++f1) {
    for (int f2 = 0; f2 <= 3; ++f2) {
      if (f1 == 0 && f2 == 0) continue;
      IntVec f = iv({0, f1, f2});
      if (away_nonnegative(apply_firing(kLap25, iv({0, 1, 2}), f))) {
        expect.push_back(f);
      }
    }
  }
  CHECK(legal == expect);
  CHECK(legal_firings(kLap25, kSigma25, iv({0, 0, 0})).empty());
}

TEST_CASE("superstabilization of the running example") {
  StabilizeResult r = superstabilize(kLap25, kSigma25, iv({0, 0, 2}));
  CHECK(r.final == iv({1, 1, 0}));
  CHECK(r.script == iv({0, 0, 1}));

  StabilizeResult s = superstabilize(kLap25, kSigma25, iv({0, 4, 5}));
  CHECK(s.final == iv({8, 0, 1}));
  CHECK(s.script == iv({0, 3, 5}));
  CHECK(legal_firings(kLap25, kSigma25, s.final).empty());

  StabilizeResult t = superstabilize(kLap25, kSigma25, iv({0, 1, 1}));
  CHECK(t.final == iv({0, 1, 1}));
  CHECK(vec_is_zero(t.script));
}

TEST_CASE("firing script accounts for the chip movement") {
  IntVec c = iv({0, 6, 6});
  StabilizeResult r = superstabilize(kLap25, kSigma25, c);
  CHECK(r.final == apply_firing(kLap25, c, r.script));
  CHECK(r.script[0] == 0);
  CHECK(away_nonnegative(r.final));
}

TEST_CASE("stabilization order does not matter") {
  std::vector<uint64_t> seeds(50);
  std::iota(seeds.begin(), seeds.end(), 1);
  CHECK(confluence_fuzz(kLap25, kSigma25, iv({0, 4, 5}), seeds));
  CHECK(confluence_fuzz(kLap25, kSigma25, iv({0, 6, 6}), seeds));
  CHECK(confluence_fuzz(kLap25, kSigma25, iv({0, 0, 2}), seeds));
}

TEST_CASE("superstable configurations are counted by the index") {
  std::vector<ChipConfig> stable = superstable_configs(kLap25, kSigma25);
  std::vector<ChipConfig> expect{iv({0, 0, 0}), iv({0, 0, 1}),
                                 iv({0, 1, 0}), iv({0, 1, 1})};
  CHECK(stable == expect);
}
