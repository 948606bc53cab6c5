#ifndef LATDEFORM_DIGRAPH_HPP
#define LATDEFORM_DIGRAPH_HPP

#include <vector>

#include "latdeform/matrix.hpp"

namespace latdeform {

struct WeightedEdge {
  int src;
  int dst;
  Rat weight;  // > 0
};

// Strongly weighted digraph with no loops; parallel edges merge on input.
class WeightedDigraph {
 public:
  WeightedDigraph(int num_vertices, const std::vector<WeightedEdge>& edges);

  int num_vertices() const { return n_; }
  // Canonical order: (src, dst) lexicographic.
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  // Laplacian with row convention: diagonal = total outgoing weight,
  // off-diagonal (i, j) = -weight(i -> j). Rows sum to zero.
  RatMat laplacian() const;

  bool strongly_connected() const;

 private:
  int n_;
  std::vector<WeightedEdge> edges_;
};

// Reads a digraph off a Laplacian. Validates the sign pattern and the
// zero row sums; throws SchemaError otherwise.
WeightedDigraph digraph_from_laplacian(const RatMat& q);

bool is_laplacian_matrix(const RatMat& q);

// Primitive positive integer vector s with s^T q = 0. Exists and is
// unique exactly when the digraph of q is strongly connected; throws
// NotStronglyConnected otherwise.
IntVec left_kernel_sigma(const RatMat& q);

// Whether q is the Laplacian of a strongly connected digraph whose
// primitive left kernel vector equals sigma. Returns false (never
// throws) on any structural failure.
bool cone_membership(const RatMat& q, const IntVec& sigma);

// One extreme ray of the cone of Laplacians with left kernel sigma:
// the cycle v_0 -> v_1 -> ... -> v_0 with weight 1/sigma[v] out of each
// cycle vertex v, zero elsewhere.
RatMat ray_laplacian(const std::vector<int>& cycle, const IntVec& sigma,
                     int dim);

struct CycleRay {
  std::vector<int> cycle;  // starts at its smallest vertex
  Rat weight;
};

// Writes q as a positive combination of cycle rays by greedy peeling of
// lexicographically smallest cycles. Requires cone_membership(q, sigma).
std::vector<CycleRay> cycle_ray_decomposition(const RatMat& q,
                                              const IntVec& sigma);

}  // namespace latdeform

#endif
