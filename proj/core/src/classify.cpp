#include "taulab/classify.hpp"

#include <random>

#include "taulab/errors.hpp"

namespace taulab {

uint64_t mix_seed(uint64_t seed, const std::string& label) {
  // FNV-1a over the label, then splitmix64 finalization of the combined word
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ull;
  }
  uint64_t z = seed + 0x9e3779b97f4a7c15ull + h;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::optional<int> try_ig_degree(const AlgebraPtr& a, int bound) {
  try {
    return iwanaga_gorenstein_degree(a, bound);
  } catch (const BoundExceeded&) {
    return std::nullopt;
  }
}

ClassReport classify_module(const Rep& m, const std::string& label, uint64_t seed,
                            std::optional<int> ig_degree, int bound) {
  std::mt19937_64 rng(mix_seed(seed, label));
  ClassReport r;
  r.label = label;
  r.dims = m.dims;
  Rep reg = regular_rep(m.alg);
  auto ext = ext_dims_to(m, reg, 2);
  r.ext1_A = ext[0];
  r.ext2_A = ext[1];
  r.tr_reflexive = is_reflexive(transpose(m), ReflexiveMethod::Evaluation, rng);
  r.projective = is_projective_rep(m);
  r.injective = is_injective_rep(m);
  if (!r.projective && !m.is_zero()) r.tau_perfect = is_tau_perfect(m, rng);
  if (!r.injective && !m.is_zero()) r.tau_inv_perfect = is_tau_inv_perfect(m, rng);
  r.reflexive = is_reflexive(m, ReflexiveMethod::Evaluation, rng);
  r.torsionless = is_torsionless(m);
  if (ig_degree) r.gorenstein_projective = is_gorenstein_projective(m, *ig_degree);
  r.dominant_dim = dominant_dimension(m, bound);
  return r;
}

std::vector<ClassReport> classify_modules(const std::vector<std::pair<std::string, Rep>>& modules,
                                          uint64_t seed, std::optional<int> ig_degree, int bound) {
  std::vector<ClassReport> out;
  out.reserve(modules.size());
  for (const auto& [label, m] : modules)
    out.push_back(classify_module(m, label, seed, ig_degree, bound));
  return out;
}

}  // namespace taulab
