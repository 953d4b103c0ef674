#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taulab/homological.hpp"

namespace taulab {

// per-module classification record; optional fields are not-applicable:
// tau_perfect for projectives, tau_inv_perfect for injectives,
// gorenstein_projective when the Gorenstein degree is out of reach
struct ClassReport {
  std::string label;
  std::vector<int> dims;
  int ext1_A = 0;  // dim ext^1(module, regular module)
  int ext2_A = 0;
  bool tr_reflexive = false;
  std::optional<bool> tau_perfect;
  std::optional<bool> tau_inv_perfect;
  bool reflexive = false;
  bool torsionless = false;
  std::optional<bool> gorenstein_projective;
  DomDim dominant_dim;
  bool projective = false;
  bool injective = false;
};

// deterministic per-label seed derivation, shared by every randomized pass
uint64_t mix_seed(uint64_t seed, const std::string& label);

std::optional<int> try_ig_degree(const AlgebraPtr& a, int bound);

ClassReport classify_module(const Rep& m, const std::string& label, uint64_t seed,
                            std::optional<int> ig_degree, int bound);

std::vector<ClassReport> classify_modules(const std::vector<std::pair<std::string, Rep>>& modules,
                                          uint64_t seed, std::optional<int> ig_degree, int bound);

}  // namespace taulab
