#include "taulab/corpus.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "taulab/errors.hpp"

namespace taulab {

namespace {

using ordered_json = nlohmann::ordered_json;

// linear series read backwards: the tail is forced to ..,2,1 and each step
// leftwards may rise by at most one
void linear_from(std::vector<int>& c, int pos, int cmax, std::vector<KupischSeries>& out) {
  if (pos < 0) {
    out.push_back(KupischSeries{c, false});
    return;
  }
  int hi = std::min(cmax, c[pos + 1] + 1);
  for (int v = 2; v <= hi; ++v) {
    c[pos] = v;
    linear_from(c, pos - 1, cmax, out);
  }
}

std::vector<int> smallest_rotation(const std::vector<int>& c) {
  std::vector<int> best = c;
  int n = static_cast<int>(c.size());
  for (int s = 1; s < n; ++s) {
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = c[(s + i) % n];
    if (rot < best) best = rot;
  }
  return best;
}

void cyclic_from(std::vector<int>& c, int pos, int cmax, std::set<std::vector<int>>& seen,
                 std::vector<KupischSeries>& out) {
  int n = static_cast<int>(c.size());
  if (pos == n) {
    // wrap-around drop constraint, then rotation dedup
    if (c[0] < c[n - 1] - 1) return;
    if (smallest_rotation(c) != c) return;
    if (seen.insert(c).second) out.push_back(KupischSeries{c, true});
    return;
  }
  int lo = pos == 0 ? 2 : std::max(2, c[pos - 1] - 1);
  for (int v = lo; v <= cmax; ++v) {
    c[pos] = v;
    cyclic_from(c, pos + 1, cmax, seen, out);
  }
}

std::string kupisch_json(const KupischSeries& k, uint32_t field) {
  ordered_json j;
  j["field"] = field;
  j["kupisch"]["lengths"] = k.lengths;
  j["kupisch"]["cyclic"] = k.cyclic;
  return j.dump(2) + "\n";
}

std::string presentation_json(const AlgebraPresentation& p) {
  ordered_json j;
  j["field"] = p.field;
  j["quiver"]["vertices"] = p.quiver.vertex_count;
  auto arrows = ordered_json::array();
  for (const auto& a : p.quiver.arrows) {
    ordered_json ja;
    ja["name"] = a.name;
    ja["source"] = a.source;
    ja["target"] = a.target;
    arrows.push_back(ja);
  }
  j["quiver"]["arrows"] = arrows;
  auto rels = ordered_json::array();
  for (const auto& r : p.relations) {
    auto terms = ordered_json::array();
    for (const auto& t : r.terms) {
      ordered_json jt;
      jt["coef"] = t.coef;
      jt["path"] = t.path;
      terms.push_back(jt);
    }
    rels.push_back(terms);
  }
  j["relations"] = rels;
  j["max_path_length"] = p.max_path_length;
  return j.dump(2) + "\n";
}

}  // namespace

std::vector<KupischSeries> enumerate_kupisch(int nmax, int cmax) {
  if (nmax < 1 || cmax < 1) throw InvalidInput("corpus bounds must be at least 1");
  std::vector<KupischSeries> out;
  // linear
  out.push_back(KupischSeries{{1}, false});
  for (int n = 2; n <= nmax; ++n) {
    if (cmax < 2) break;
    std::vector<int> c(n);
    c[n - 1] = 1;
    c[n - 2] = 2;
    std::vector<KupischSeries> block;
    linear_from(c, n - 3, cmax, block);
    std::sort(block.begin(), block.end(),
              [](const KupischSeries& a, const KupischSeries& b) { return a.lengths < b.lengths; });
    out.insert(out.end(), block.begin(), block.end());
  }
  // cyclic
  for (int n = 1; n <= nmax; ++n) {
    if (cmax < 2) break;
    std::vector<int> c(n);
    std::set<std::vector<int>> seen;
    std::vector<KupischSeries> block;
    cyclic_from(c, 0, cmax, seen, block);
    std::sort(block.begin(), block.end(),
              [](const KupischSeries& a, const KupischSeries& b) { return a.lengths < b.lengths; });
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::string kupisch_label(const KupischSeries& k) {
  std::string s = "kupisch_";
  s += k.cyclic ? "cyclic" : "linear";
  for (int c : k.lengths) s += "_" + std::to_string(c);
  return s;
}

std::vector<CorpusEntry> extra_examples(uint32_t field) {
  std::vector<CorpusEntry> out;

  AlgebraPresentation a2;
  a2.field = field;
  a2.quiver.vertex_count = 2;
  a2.quiver.arrows = {{"a", 0, 1}};
  out.push_back({"a2", build_algebra(a2), presentation_json(a2)});

  AlgebraPresentation sq;
  sq.field = field;
  sq.quiver.vertex_count = 4;
  sq.quiver.arrows = {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}};
  sq.relations = {Relation{{RelationTerm{1, {"a", "b"}}, RelationTerm{-1, {"c", "d"}}}}};
  out.push_back({"commutative_square", build_algebra(sq), presentation_json(sq)});

  AlgebraPresentation gb;
  gb.field = field;
  gb.quiver.vertex_count = 4;
  gb.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 1, 3}};
  gb.relations = {Relation{{RelationTerm{1, {"a", "b"}}}}};
  out.push_back({"gentle_branch", build_algebra(gb), presentation_json(gb)});

  return out;
}

std::vector<CorpusEntry> corpus_algebras(int nmax, int cmax, uint32_t field, bool include_extras) {
  std::vector<CorpusEntry> out;
  for (const auto& k : enumerate_kupisch(nmax, cmax))
    out.push_back({kupisch_label(k), build_nakayama(k, field), kupisch_json(k, field)});
  if (include_extras) {
    auto ex = extra_examples(field);
    out.insert(out.end(), ex.begin(), ex.end());
  }
  return out;
}

}  // namespace taulab
