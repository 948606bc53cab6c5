#ifndef LATDEFORM_CHIPFIRING_HPP
#define LATDEFORM_CHIPFIRING_HPP

#include <cstdint>
#include <vector>

#include "latdeform/matrix.hpp"

namespace latdeform {

// Chip configurations live on the vertices; vertex 0 is the exempt one
// that may run a deficit. All dynamics use integer Laplacians with the
// row convention, so firing f moves c to c - q^T f.
using ChipConfig = IntVec;

ChipConfig apply_firing(const IntMat& q, const ChipConfig& c,
                        const IntVec& f);

bool away_nonnegative(const ChipConfig& c);

// All f with 0 <= f <= sigma, f != 0, f[0] = 0 keeping every vertex
// other than 0 out of debt, in lexicographic order. Requires c
// away-nonnegative.
std::vector<IntVec> legal_firings(const IntMat& q, const IntVec& sigma,
                                  const ChipConfig& c);

struct StabilizeResult {
  ChipConfig final;
  IntVec script;  // accumulated firing, script[0] == 0
};

// Greedy stabilization: fire the lex-smallest legal single vertex,
// falling back to the lex-smallest legal firing vector. Terminates at
// the unique configuration with no legal firing.
StabilizeResult superstabilize(const IntMat& q, const IntVec& sigma,
                               const ChipConfig& c);

// Replays stabilization with a random legal firing chosen per step for
// every seed; true iff all runs end at superstabilize's result.
bool confluence_fuzz(const IntMat& q, const IntVec& sigma,
                     const ChipConfig& c,
                     const std::vector<uint64_t>& seeds);

// All superstable configurations with c[0] = 0, lex sorted. Brute force
// over the box bounded by the diagonal.
std::vector<ChipConfig> superstable_configs(const IntMat& q,
                                            const IntVec& sigma);

}  // namespace latdeform

#endif
