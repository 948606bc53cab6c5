#ifndef LATDEFORM_JSON_IO_HPP
#define LATDEFORM_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "latdeform/chipfiring.hpp"
#include "latdeform/deformation.hpp"
#include "latdeform/groebner.hpp"
#include "latdeform/laplacianize.hpp"
#include "latdeform/lattice.hpp"

namespace latdeform {

// All exact values cross the JSON boundary as strings: integers as
// decimal strings, rationals as "p/q" (or plain "p" when integral).
// Small structural numbers (dimensions, vertex indices, counts) are
// plain JSON numbers. Parsers accept either form for integers.

struct BasisInput {
  IntMat rows;
  bool generators = false;  // true: reduce the rows first
};

// Accepts {"basis": [[..], ..]} for a designated ordered basis or
// {"generators": [[..], ..]} for an arbitrary generating set.
BasisInput parse_basis_input(const std::string& text);

Lattice lattice_from_input(const BasisInput& in);

// Accepts {"laplacian": [[..], ..]} with integer entries, or
// {"n": v, "edges": [[src, dst, w], ..]} with integer weights.
IntMat parse_integer_laplacian(const std::string& text);

// A bare JSON array of integers, e.g. ["3", "0", "-2"].
IntVec parse_vector_text(const std::string& text);

std::string laplacianize_document(const LaplacianPresentation& lp,
                                  const Int& index);
std::string superstabilize_document(const StabilizeResult& r);
std::string grobner_document(const MarkedGB& gb,
                             std::optional<bool> spairs_ok);
std::string deformation_document(const DeformationResult& r);
std::string stable_sequence_document(
    const std::vector<DeformationResult>& levels);
std::string error_document(const std::string& message, int exit_code);

}  // namespace latdeform

#endif
