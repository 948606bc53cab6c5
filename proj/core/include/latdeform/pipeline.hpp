#ifndef LATDEFORM_PIPELINE_HPP
#define LATDEFORM_PIPELINE_HPP

#include <cstdint>
#include <string>

#include "latdeform/rational.hpp"
#include "latdeform/scarf.hpp"

namespace latdeform {

struct PipelineConfig {
  std::string command;  // laplacianize | superstabilize | grobner |
                        // deform | resolve | demo-pitfall
  Rat delta = Rat(1);
  uint64_t seed = 0;
  FieldSpec field;
  int levels = 1;
  int pitfall_k = 2;
  std::string config_vector;  // superstabilize chip vector, JSON array
  bool check_spairs = false;
  int threads = 1;  // accepted for interface stability; output never
                    // depends on it
};

struct RunResult {
  std::string output;
  int exit_code = 0;
};

// Dispatches one command. Never throws: library errors become an error
// document plus the matching exit code.
RunResult run(const PipelineConfig& config, const std::string& input);

// Algorithm parameters that pin down every deterministic choice.
std::string version_fingerprint();

}  // namespace latdeform

#endif
