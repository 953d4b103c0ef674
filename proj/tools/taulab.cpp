// taulab: homological calculator for bound quiver algebras over prime fields.
//
// Exit codes: 0 pass/success, 1 verification failure, 2 usage or parse error,
// 3 resolution/path bound exceeded.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "taulab/corpus.hpp"
#include "taulab/errors.hpp"
#include "taulab/io.hpp"
#include "taulab/verify.hpp"

namespace {

using taulab::Format;
using ordered_json = nlohmann::ordered_json;

struct GlobalOpts {
  uint32_t field = 1009;
  bool field_given = false;
  uint64_t seed = 0;
  std::string format = "text";
  int max_resolution = 32;
  int max_path_length = 64;

  Format fmt() const { return format == "json" ? Format::Json : Format::Text; }
  std::optional<uint32_t> field_override() const {
    return field_given ? std::optional<uint32_t>(field) : std::nullopt;
  }
};

std::string file_label(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

taulab::AlgebraPtr load(const GlobalOpts& g, const std::string& path) {
  return taulab::load_algebra_file(path, g.field_override(), g.max_path_length);
}

ordered_json domdim_json(const taulab::DomDim& d) {
  if (d.infinite) return "inf";
  if (d.at_least_only) return ">=" + std::to_string(d.value);
  return d.value;
}

int cmd_info(const GlobalOpts& g, const std::string& file) {
  auto a = load(g, file);
  auto report = taulab::algebra_info(a, file_label(file), g.max_resolution);
  std::cout << taulab::render_info(report, g.fmt());
  return 0;
}

// ops taking no extra argument before the module expression
bool plain_op(const std::string& op) {
  static const std::vector<std::string> ops = {"tau",  "tau_inv",   "nu",        "nu_inv",
                                               "tr",   "dual",      "kdual",     "domdim",
                                               "reflexive", "tau_perfect", "gp"};
  return std::find(ops.begin(), ops.end(), op) != ops.end();
}

int cmd_compute(const GlobalOpts& g, const std::vector<std::string>& args) {
  if (args.size() < 3) throw taulab::ParseError("compute needs OP [ARGS] EXPR FILE");
  const std::string& op = args.front();
  const std::string& file = args.back();
  const std::string& expr = args[args.size() - 2];
  std::vector<std::string> extra(args.begin() + 1, args.end() - 2);

  auto need_extra = [&](size_t n, const char* usage) {
    if (extra.size() != n) throw taulab::ParseError(std::string("usage: compute ") + usage);
  };
  auto to_int = [](const std::string& s) {
    try {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw taulab::ParseError("not an integer: " + s);
    }
  };

  auto a = load(g, file);
  taulab::Rep m = taulab::parse_module_expr(a, expr);
  std::mt19937_64 rng(taulab::mix_seed(g.seed, op + "/" + expr));

  ordered_json j;
  j["op"] = op;
  j["input"] = expr;

  auto print_module = [&](const taulab::Rep& r, bool over_opposite) {
    std::string disp = taulab::module_display(r, rng);
    if (g.fmt() == Format::Json) {
      j["result"] = disp;
      j["dims"] = r.dims;
      j["opposite"] = over_opposite;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << disp << (over_opposite ? " over the opposite algebra" : "") << "\n";
    }
  };
  auto print_bool = [&](bool v) {
    if (g.fmt() == Format::Json) {
      j["result"] = v;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (v ? "true" : "false") << "\n";
    }
  };
  auto print_value = [&](const ordered_json& v, const std::string& text) {
    if (g.fmt() == Format::Json) {
      j["result"] = v;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text << "\n";
    }
  };

  if (plain_op(op)) need_extra(0, "OP EXPR FILE");

  if (op == "tau") return print_module(taulab::ar_translate(m), false), 0;
  if (op == "tau_inv") return print_module(taulab::ar_translate_inv(m), false), 0;
  if (op == "nu") return print_module(taulab::nakayama_nu(m), false), 0;
  if (op == "nu_inv") return print_module(taulab::nakayama_nu_inv(m), false), 0;
  if (op == "tr") return print_module(taulab::transpose(m), true), 0;
  if (op == "dual") return print_module(taulab::a_dual(m), true), 0;
  if (op == "kdual") return print_module(taulab::k_dual(m), true), 0;
  if (op == "domdim") {
    auto d = taulab::dominant_dimension(m, g.max_resolution);
    return print_value(domdim_json(d), taulab::domdim_string(d)), 0;
  }
  if (op == "reflexive")
    return print_bool(taulab::is_reflexive(m, taulab::ReflexiveMethod::Evaluation, rng)), 0;
  if (op == "tau_perfect") return print_bool(taulab::is_tau_perfect(m, rng)), 0;
  if (op == "gp") {
    auto ig = taulab::try_ig_degree(a, g.max_resolution);
    if (!ig) throw taulab::BoundExceeded("Gorenstein degree not reached within the bound");
    return print_bool(taulab::is_gorenstein_projective(m, *ig)), 0;
  }
  if (op == "omega" || op == "coomega") {
    need_extra(1, "omega K EXPR FILE");
    int k = to_int(extra[0]);
    j["degree"] = k;
    taulab::Rep r = op == "omega" ? taulab::syzygy(m, k) : taulab::cosyzygy(m, k);
    return print_module(r, false), 0;
  }
  if (op == "ext") {
    need_extra(2, "ext I NEXPR EXPR FILE");
    int i = to_int(extra[0]);
    taulab::Rep n = taulab::parse_module_expr(a, extra[1]);
    j["degree"] = i;
    j["against"] = extra[1];
    int d = taulab::ext_dim(m, n, i);
    return print_value(d, std::to_string(d)), 0;
  }
  throw taulab::ParseError("unknown compute op: " + op);
}

int cmd_classify(const GlobalOpts& g, const std::string& file, const std::string& modules) {
  auto a = load(g, file);
  std::vector<std::pair<std::string, taulab::Rep>> mods;
  if (!modules.empty()) {
    std::stringstream ss(modules);
    std::string piece;
    while (std::getline(ss, piece, ';')) {
      size_t b = piece.find_first_not_of(" \t");
      size_t e = piece.find_last_not_of(" \t");
      if (b == std::string::npos) continue;
      std::string expr = piece.substr(b, e - b + 1);
      mods.emplace_back(expr, taulab::parse_module_expr(a, expr));
    }
    if (mods.empty()) throw taulab::ParseError("--modules list is empty");
  } else {
    if (!taulab::is_serial_algebra(a))
      throw taulab::NotNakayama(
          "indecomposables are not enumerable here; pass --modules \"expr;expr;...\"");
    for (const auto& sm : taulab::serial_indecomposables(a)) mods.emplace_back(sm.label, sm.rep);
  }
  auto ig = taulab::try_ig_degree(a, g.max_resolution);
  auto rows = taulab::classify_modules(mods, g.seed, ig, g.max_resolution);
  std::cout << taulab::render_class_reports(rows, g.fmt());
  return 0;
}

int verify_exit_code(const std::vector<taulab::VerifyResult>& rs) {
  bool bound = false, failed = false;
  for (const auto& r : rs) {
    bound = bound || r.bound_exceeded;
    failed = failed || !r.failures.empty();
  }
  if (bound) return 3;
  return failed ? 1 : 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, const std::string& file,
               const std::string& corpus_spec) {
  if (!taulab::is_suite_name(suite)) throw taulab::ParseError("unknown suite: " + suite);
  taulab::VerifyOptions opt;
  opt.seed = g.seed;
  opt.bound = g.max_resolution;
  std::vector<taulab::CorpusEntry> entries;
  if (!corpus_spec.empty()) {
    auto comma = corpus_spec.find(',');
    if (comma == std::string::npos)
      throw taulab::ParseError("--corpus wants \"n,c\" (max vertices, max length)");
    int n = 0, c = 0;
    try {
      n = std::stoi(corpus_spec.substr(0, comma));
      c = std::stoi(corpus_spec.substr(comma + 1));
    } catch (const std::exception&) {
      throw taulab::ParseError("--corpus wants \"n,c\" (max vertices, max length)");
    }
    entries = taulab::corpus_algebras(n, c, g.field, true);
  } else if (!file.empty()) {
    entries.push_back({file_label(file), load(g, file), ""});
  } else {
    throw taulab::ParseError("verify needs an algebra FILE or --corpus n,c");
  }
  auto results = taulab::run_suite_corpus(suite, entries, opt);
  std::cout << taulab::render_verify_results(results, g.fmt());
  return verify_exit_code(results);
}

int cmd_corpus(const GlobalOpts& g, int n, int c, const std::string& out_dir) {
  auto entries = taulab::corpus_algebras(n, c, g.field, true);
  std::filesystem::create_directories(out_dir);
  auto listing = ordered_json::array();
  for (const auto& entry : entries) {
    std::filesystem::path p = std::filesystem::path(out_dir) / (entry.label + ".json");
    std::ofstream out(p);
    if (!out) throw taulab::ParseError("cannot write file: " + p.string());
    out << entry.json_text;
    if (g.fmt() == Format::Json)
      listing.push_back(p.string());
    else
      std::cout << p.string() << "\n";
  }
  if (g.fmt() == Format::Json) std::cout << listing.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homological calculator for bound quiver algebras over F_p"};
  app.require_subcommand(1);

  GlobalOpts g;
  auto* field_opt =
      app.add_option("--field", g.field, "prime field characteristic (overrides the file)");
  app.add_option("--seed", g.seed, "seed for randomized isomorphism and splitting tests")
      ->envname("TAULAB_SEED");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-resolution", g.max_resolution, "resolution/coresolution step bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-path-length", g.max_path_length, "path length bound for algebra building")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string file, modules, suite, corpus_spec, out_dir = ".";
  std::vector<std::string> compute_args;
  int corpus_n = 0, corpus_c = 0;

  // the shared flags live on the root app; fallthrough lets them appear after
  // a subcommand's positional arguments as well
  auto* info = app.add_subcommand("info", "summarize an algebra file");
  info->fallthrough();
  info->add_option("file", file, "algebra JSON file")->required();

  auto* compute = app.add_subcommand(
      "compute", "apply one operator: OP [ARGS] EXPR FILE (e.g. tau \"S(0)\" alg.json)");
  compute->fallthrough();
  compute->add_option("args", compute_args, "OP [ARGS] EXPR FILE")->required()->expected(-1);

  auto* classify = app.add_subcommand("classify", "per-indecomposable classification table");
  classify->fallthrough();
  classify->add_option("file", file, "algebra JSON file")->required();
  classify->add_option("--modules", modules, "semicolon-separated module expressions");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("file", file, "algebra JSON file");
  verify->add_option("--corpus", corpus_spec, "run over the generated corpus: n,c");

  auto* corpus = app.add_subcommand("corpus", "emit algebra files for all series up to n,c");
  corpus->fallthrough();
  corpus->add_option("n", corpus_n, "max vertex count")->required();
  corpus->add_option("c", corpus_c, "max composition length")->required();
  corpus->add_option("--out", out_dir, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
    g.field_given = field_opt->count() > 0;
    if (info->parsed()) return cmd_info(g, file);
    if (compute->parsed()) return cmd_compute(g, compute_args);
    if (classify->parsed()) return cmd_classify(g, file, modules);
    if (verify->parsed()) return cmd_verify(g, suite, file, corpus_spec);
    if (corpus->parsed()) return cmd_corpus(g, corpus_n, corpus_c, out_dir);
    return 2;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const taulab::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const taulab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
