#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "taulab/classify.hpp"
#include "taulab/corpus.hpp"

namespace taulab {

struct VerifyFailure {
  std::string module_label;
  std::string expected;
  std::string got;
};

struct VerifyResult {
  std::string suite;
  std::string algebra;
  int checked = 0;
  std::vector<VerifyFailure> failures;
  bool bound_exceeded = false;  // a resolution bound was hit; counts as failure
  bool passed() const { return failures.empty() && !bound_exceeded; }
};

struct VerifyOptions {
  uint64_t seed = 0;
  int bound = 32;
  int random_sums = 100;  // direct-sum samples for the reflexivity suite
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& s);

struct LabeledRep {
  std::string label;
  Rep rep;
};

// the closed uniserial list on serial algebras; otherwise a bounded closure
// search from simples, projectives and injectives under translates, syzygies,
// cosyzygies and radical/socle quotients, deduplicated up to isomorphism
std::vector<LabeledRep> all_indecomposables(const AlgebraPtr& a, std::mt19937_64& rng);

VerifyResult run_suite(const std::string& suite, const std::string& algebra_label,
                       const AlgebraPtr& a, const VerifyOptions& opt);

// one result per corpus entry, sorted by algebra label, failures by module
std::vector<VerifyResult> run_suite_corpus(const std::string& suite,
                                           const std::vector<CorpusEntry>& corpus,
                                           const VerifyOptions& opt);

}  // namespace taulab
