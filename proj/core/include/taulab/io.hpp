#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "taulab/classify.hpp"
#include "taulab/verify.hpp"

namespace taulab {

enum class Format { Text, Json };

// algebra file schema: {"field": p, "kupisch": {"lengths": [...], "cyclic": bool}}
// or {"field": p, "quiver": {"vertices": n, "arrows": [{"name","source","target"}]},
//     "relations": [[{"coef", "path"}]], "max_path_length": L}
AlgebraPtr parse_algebra_text(const std::string& text,
                              std::optional<uint32_t> field_override = {},
                              std::optional<int> max_path_override = {});
AlgebraPtr load_algebra_file(const std::string& path,
                             std::optional<uint32_t> field_override = {},
                             std::optional<int> max_path_override = {});

// module expressions: S(i), P(i), I(i), PJ(i,k), A, D(A), joined by + or ⊕
Rep parse_module_expr(const AlgebraPtr& a, const std::string& expr);

// decomposition-based display: uniserial labels when available, else raw dims
std::string module_display(const Rep& m, std::mt19937_64& rng);

std::string domdim_string(const DomDim& d);

struct InfoReport {
  std::string label;
  int dim = 0;
  std::optional<KupischSeries> kupisch;
  bool semisimple = false;
  bool selfinjective = false;
  std::optional<int> ig_degree;  // absent when the resolution bound was hit
  DomDim domdim;
  std::vector<int> proj_inj_vertices;
};
InfoReport algebra_info(const AlgebraPtr& a, const std::string& label, int bound);

std::string render_info(const InfoReport& r, Format f);
std::string render_class_reports(const std::vector<ClassReport>& rows, Format f);
std::string render_verify_results(const std::vector<VerifyResult>& rs, Format f);

}  // namespace taulab
