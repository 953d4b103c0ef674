#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taulab/algebra.hpp"

namespace taulab {

// one generated algebra plus the file content the corpus command would write
struct CorpusEntry {
  std::string label;
  AlgebraPtr algebra;
  std::string json_text;
};

// every valid series with 1 <= n <= nmax vertices and lengths <= cmax,
// linear first then cyclic, each block in lexicographic order; cyclic series
// are deduplicated up to rotation (smallest rotation is the representative)
std::vector<KupischSeries> enumerate_kupisch(int nmax, int cmax);

std::string kupisch_label(const KupischSeries& k);

// fixed quiver-presented examples shipped alongside the generated series
std::vector<CorpusEntry> extra_examples(uint32_t field);

std::vector<CorpusEntry> corpus_algebras(int nmax, int cmax, uint32_t field,
                                         bool include_extras = true);

}  // namespace taulab
