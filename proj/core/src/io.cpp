#include "taulab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "taulab/errors.hpp"

namespace taulab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

KupischSeries parse_kupisch_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("lengths") || !j["lengths"].is_array())
    throw ParseError("kupisch entry needs a \"lengths\" array");
  KupischSeries k;
  for (const auto& v : j["lengths"]) {
    if (!v.is_number_integer()) throw ParseError("kupisch lengths must be integers");
    k.lengths.push_back(v.get<int>());
  }
  if (j.contains("cyclic")) {
    if (!j["cyclic"].is_boolean()) throw ParseError("kupisch \"cyclic\" must be a boolean");
    k.cyclic = j["cyclic"].get<bool>();
  }
  return k;
}

AlgebraPresentation parse_presentation_json(const ordered_json& j, uint32_t field,
                                            std::optional<int> max_path_override) {
  AlgebraPresentation p;
  p.field = field;
  const auto& q = j["quiver"];
  if (!q.is_object() || !q.contains("vertices") || !q.contains("arrows"))
    throw ParseError("quiver entry needs \"vertices\" and \"arrows\"");
  p.quiver.vertex_count = q["vertices"].get<int>();
  for (const auto& a : q["arrows"]) {
    if (!a.is_object() || !a.contains("name") || !a.contains("source") || !a.contains("target"))
      throw ParseError("each arrow needs \"name\", \"source\" and \"target\"");
    p.quiver.arrows.push_back(
        {a["name"].get<std::string>(), a["source"].get<int>(), a["target"].get<int>()});
  }
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) throw ParseError("\"relations\" must be an array");
    for (const auto& r : j["relations"]) {
      Relation rel;
      if (!r.is_array()) throw ParseError("each relation is an array of terms");
      for (const auto& t : r) {
        RelationTerm term;
        if (t.contains("coef")) term.coef = t["coef"].get<long long>();
        if (!t.contains("path") || !t["path"].is_array())
          throw ParseError("each relation term needs a \"path\" array of arrow names");
        for (const auto& name : t["path"]) term.path.push_back(name.get<std::string>());
        rel.terms.push_back(term);
      }
      p.relations.push_back(rel);
    }
  }
  if (max_path_override)
    p.max_path_length = *max_path_override;
  else if (j.contains("max_path_length"))
    p.max_path_length = j["max_path_length"].get<int>();
  return p;
}

}  // namespace

AlgebraPtr parse_algebra_text(const std::string& text, std::optional<uint32_t> field_override,
                              std::optional<int> max_path_override) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
  uint32_t field = 1009;
  if (j.contains("field")) field = j["field"].get<uint32_t>();
  if (field_override) field = *field_override;
  if (j.contains("kupisch")) return build_nakayama(parse_kupisch_json(j["kupisch"]), field);
  if (j.contains("quiver"))
    return build_algebra(parse_presentation_json(j, field, max_path_override));
  throw ParseError("algebra file needs a \"kupisch\" or \"quiver\" entry");
}

AlgebraPtr load_algebra_file(const std::string& path, std::optional<uint32_t> field_override,
                             std::optional<int> max_path_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_algebra_text(ss.str(), field_override, max_path_override);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace {

// one term of a module expression, e.g. "PJ(1,2)" or "D(A)"
Rep parse_module_term(const AlgebraPtr& a, const std::string& term) {
  std::string t = trim(term);
  if (t.empty()) throw ParseError("empty module term");
  if (t == "A") return regular_rep(a);
  if (t == "D(A)") return k_dual(regular_rep(opposite_algebra(a)));
  auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')')
    throw ParseError("cannot parse module term: " + t);
  std::string head = t.substr(0, open);
  std::string args = t.substr(open + 1, t.size() - open - 2);
  std::vector<int> nums;
  std::stringstream ss(args);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    piece = trim(piece);
    try {
      size_t used = 0;
      nums.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw ParseError("bad number in module term: " + t);
    }
  }
  if (head == "S" && nums.size() == 1) return simple_module(a, nums[0]);
  if (head == "P" && nums.size() == 1) return projective_module(a, nums[0]);
  if (head == "I" && nums.size() == 1) return injective_module(a, nums[0]);
  if (head == "PJ" && nums.size() == 2) return serial_quotient(a, nums[0], nums[1]);
  throw ParseError("cannot parse module term: " + t);
}

}  // namespace

Rep parse_module_expr(const AlgebraPtr& a, const std::string& expr) {
  // split on '+' and on the UTF-8 direct-sum sign
  std::vector<std::string> terms;
  std::string cur;
  for (size_t i = 0; i < expr.size();) {
    if (expr[i] == '+') {
      terms.push_back(cur);
      cur.clear();
      ++i;
    } else if (expr.compare(i, 3, "\xE2\x8A\x95") == 0) {
      terms.push_back(cur);
      cur.clear();
      i += 3;
    } else {
      cur += expr[i];
      ++i;
    }
  }
  terms.push_back(cur);
  std::vector<Rep> parts;
  parts.reserve(terms.size());
  for (const auto& t : terms) parts.push_back(parse_module_term(a, t));
  return parts.size() == 1 ? parts[0] : direct_sum(parts);
}

std::string module_display(const Rep& m, std::mt19937_64& rng) {
  if (m.is_zero()) return "0";
  const AlgebraPtr& a = m.alg;
  std::vector<SerialModule> serials;
  if (is_serial_algebra(a)) serials = serial_indecomposables(a);
  std::vector<std::string> names;
  for (const Rep& piece : decompose(m, rng)) {
    std::string name;
    for (const auto& sm : serials) {
      if (sm.rep.dims != piece.dims) continue;
      if (is_isomorphic(sm.rep, piece, rng).iso) {
        name = sm.label;
        break;
      }
    }
    if (name.empty() && piece.total_dim() == 1) {
      for (int v = 0; v < a->nvert; ++v)
        if (piece.dims[v] == 1) name = "S(" + std::to_string(v) + ")";
    }
    if (name.empty()) {
      for (int v = 0; v < a->nvert && name.empty(); ++v) {
        Rep p = projective_module(a, v);
        if (p.dims == piece.dims && is_isomorphic(p, piece, rng).iso)
          name = "P(" + std::to_string(v) + ")";
      }
      for (int v = 0; v < a->nvert && name.empty(); ++v) {
        Rep inj = injective_module(a, v);
        if (inj.dims == piece.dims && is_isomorphic(inj, piece, rng).iso)
          name = "I(" + std::to_string(v) + ")";
      }
    }
    if (name.empty()) {
      name = "[";
      for (size_t i = 0; i < piece.dims.size(); ++i) {
        if (i) name += ",";
        name += std::to_string(piece.dims[i]);
      }
      name += "]";
    }
    names.push_back(name);
  }
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += " \xE2\x8A\x95 ";
    out += names[i];
  }
  return out;
}

std::string domdim_string(const DomDim& d) {
  if (d.infinite) return "inf";
  if (d.at_least_only) return ">=" + std::to_string(d.value);
  return std::to_string(d.value);
}

InfoReport algebra_info(const AlgebraPtr& a, const std::string& label, int bound) {
  InfoReport r;
  r.label = label;
  r.dim = a->dim();
  r.kupisch = a->kupisch;
  r.semisimple = a->dim() == a->nvert;
  r.selfinjective = is_selfinjective(a);
  r.ig_degree = try_ig_degree(a, bound);
  r.domdim = dominant_dimension_algebra(a, bound);
  r.proj_inj_vertices = proj_injective_vertices(a);
  return r;
}

namespace {

std::string dims_string(const std::vector<int>& dims) {
  std::string s = "[";
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + "]";
}

std::string set_string(const std::vector<int>& xs) {
  std::string s = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + "}";
}

ordered_json domdim_json(const DomDim& d) {
  if (d.infinite) return "inf";
  if (d.at_least_only) return ">=" + std::to_string(d.value);
  return d.value;
}

ordered_json opt_bool_json(const std::optional<bool>& b) {
  if (!b) return nullptr;
  return *b;
}

std::string opt_bool_text(const std::optional<bool>& b) {
  if (!b) return "-";
  return *b ? "true" : "false";
}

ordered_json class_report_json(const ClassReport& r) {
  ordered_json j;
  j["label"] = r.label;
  j["dims"] = r.dims;
  j["ext1_A"] = r.ext1_A;
  j["ext2_A"] = r.ext2_A;
  j["tr_reflexive"] = r.tr_reflexive;
  j["tau_perfect"] = opt_bool_json(r.tau_perfect);
  j["tau_inv_perfect"] = opt_bool_json(r.tau_inv_perfect);
  j["reflexive"] = r.reflexive;
  j["torsionless"] = r.torsionless;
  j["gorenstein_projective"] = opt_bool_json(r.gorenstein_projective);
  j["dominant_dim"] = domdim_json(r.dominant_dim);
  j["projective"] = r.projective;
  j["injective"] = r.injective;
  return j;
}

}  // namespace

std::string render_info(const InfoReport& r, Format f) {
  if (f == Format::Json) {
    ordered_json j;
    j["label"] = r.label;
    j["dim"] = r.dim;
    if (r.kupisch) {
      j["kupisch"]["lengths"] = r.kupisch->lengths;
      j["kupisch"]["cyclic"] = r.kupisch->cyclic;
    } else {
      j["kupisch"] = nullptr;
    }
    j["semisimple"] = r.semisimple;
    j["selfinjective"] = r.selfinjective;
    j["ig_degree"] = r.ig_degree ? ordered_json(*r.ig_degree) : ordered_json(nullptr);
    j["dominant_dimension"] = domdim_json(r.domdim);
    j["proj_injective_vertices"] = r.proj_inj_vertices;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "label: " << r.label << "\n";
  out << "dim: " << r.dim << "\n";
  if (r.kupisch)
    out << "Kupisch: " << dims_string(r.kupisch->lengths) << " "
        << (r.kupisch->cyclic ? "cyclic" : "linear") << "\n";
  out << "semisimple: " << (r.semisimple ? "yes" : "no") << "\n";
  out << "selfinjective: " << (r.selfinjective ? "yes" : "no") << "\n";
  if (r.ig_degree)
    out << "Iwanaga-Gorenstein degree: " << *r.ig_degree << "\n";
  else
    out << "Iwanaga-Gorenstein degree: unknown (bound exceeded)\n";
  out << "dominant dimension: " << domdim_string(r.domdim) << "\n";
  out << "f = " << set_string(r.proj_inj_vertices) << "\n";
  return out.str();
}

std::string render_class_reports(const std::vector<ClassReport>& rows, Format f) {
  if (f == Format::Json) {
    auto arr = ordered_json::array();
    for (const auto& r : rows) arr.push_back(class_report_json(r));
    return arr.dump(2) + "\n";
  }
  std::vector<std::string> headers = {"label",     "dims",      "ext1", "ext2",  "tr_refl",
                                      "tau_perf",  "tau_inv",   "refl", "tors",  "domdim",
                                      "gp",        "proj",      "inj"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    cells.push_back({r.label, dims_string(r.dims), std::to_string(r.ext1_A),
                     std::to_string(r.ext2_A), r.tr_reflexive ? "true" : "false",
                     opt_bool_text(r.tau_perfect), opt_bool_text(r.tau_inv_perfect),
                     r.reflexive ? "true" : "false", r.torsionless ? "true" : "false",
                     domdim_string(r.dominant_dim), opt_bool_text(r.gorenstein_projective),
                     r.projective ? "true" : "false", r.injective ? "true" : "false"});
  }
  std::vector<size_t> width(headers.size());
  for (size_t c = 0; c < headers.size(); ++c) {
    width[c] = headers[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << row[c] << std::string(width[c] - row[c].size(), ' ');
    }
    out << "\n";
  };
  emit(headers);
  for (const auto& row : cells) emit(row);
  return out.str();
}

std::string render_verify_results(const std::vector<VerifyResult>& rs, Format f) {
  if (f == Format::Json) {
    auto arr = ordered_json::array();
    for (const auto& r : rs) {
      ordered_json j;
      j["suite"] = r.suite;
      j["algebra"] = r.algebra;
      j["checked"] = r.checked;
      j["passed"] = r.passed();
      j["bound_exceeded"] = r.bound_exceeded;
      auto fails = ordered_json::array();
      for (const auto& x : r.failures) {
        ordered_json jf;
        jf["module"] = x.module_label;
        jf["expected"] = x.expected;
        jf["got"] = x.got;
        fails.push_back(jf);
      }
      j["failures"] = fails;
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& r : rs) {
    out << r.suite << " " << r.algebra << ": " << (r.passed() ? "pass" : "FAIL") << " ("
        << r.checked << " checked)";
    if (r.bound_exceeded) out << " [bound exceeded]";
    out << "\n";
    for (const auto& x : r.failures)
      out << "  " << x.module_label << ": expected " << x.expected << ", got " << x.got << "\n";
  }
  return out.str();
}

}  // namespace taulab
