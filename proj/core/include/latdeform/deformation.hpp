#ifndef LATDEFORM_DEFORMATION_HPP
#define LATDEFORM_DEFORMATION_HPP

#include <optional>
#include <vector>

#include "latdeform/groebner.hpp"
#include "latdeform/laplacianize.hpp"
#include "latdeform/lattice.hpp"

namespace latdeform {

// Laplacian of the two-vertex cycle between i and j with weights
// 1/sigma[i] and 1/sigma[j]; sigma stays in its left kernel.
RatMat hat_laplacian(int i, int j, const IntVec& sigma);

// Smallest coordinate j whose chip ratio x_j/sigma_j differs from
// x_i/sigma_i. Requires 0 <= x <= sigma with x not in {0, sigma};
// existence then follows from primitivity of sigma.
int choose_j(const IntVec& x, int i, const IntVec& sigma);

// Exact safe step size: half the minimum of the sign-flip ratio bound
// over the firing box and the drift allowance delta scaled by the
// entrywise 1-norm of q_hat, the dimension, and the sigma product.
Rat epsilon_bound(const RatMat& q, const RatMat& q_hat, const IntVec& sigma,
                  const Rat& delta, int i, int j);

struct IntegralScale {
  Int lambda;     // lcm of entry denominators
  IntMat scaled;  // lambda * q
};

IntegralScale integral_scale(const RatMat& q);

struct DistanceBound {
  Rat norm_sq;          // exact sum of squared entry differences
  std::string decimal;  // truncated decimal rendering of the sqrt
};

DistanceBound distance_upper_bound(const RatMat& b1, const RatMat& b2);

struct DeformationStep {
  int r;
  RatMat q_r;     // matrix before the step
  Int lambda_r;   // integral scale of q_r
  IntVec x;       // repaired violation witness
  int i;
  int j;
  Rat epsilon;
};

struct DeformationResult {
  RatMat q0;
  RatMat q_gen;
  IntVec sigma;
  Int lambda;         // integral scale of q_gen
  IntMat scaled_gen;  // lambda * q_gen
  std::vector<DeformationStep> steps;
  DistanceBound distance;  // designated bases: rows 1..n of q0 and q_gen
};

// One forced perturbation step with all certificates checked: sign
// preservation over the firing box, strict progress impossible to
// assert here (no violation is passed), sigma invariance, and cone
// membership.
struct ForcedStep {
  RatMat q_next;
  RatMat q_hat;
  Rat epsilon;
};

ForcedStep deform_step_forced(const RatMat& q, const IntVec& sigma, int i,
                              int j, const Rat& delta);

// The full repair loop on an existing presentation.
DeformationResult deform_presentation(const RatMat& q0, const IntVec& sigma,
                                      const Rat& delta);

// laplacianize then repair.
DeformationResult deform(const Lattice& l, const Rat& delta);

// Re-runs the deformation with every epsilon scaled by 2^-level for
// level = 0..levels-1, insisting on the identical (x, i, j) step
// template each time; errors when a level diverges from the template
// or fails a certificate.
std::vector<DeformationResult> stable_deformation_sequence(
    const Lattice& l, const Rat& delta, int levels);

std::vector<DeformationResult> stable_deformation_sequence_presentation(
    const RatMat& q0, const IntVec& sigma, const Rat& delta, int levels);

}  // namespace latdeform

#endif
