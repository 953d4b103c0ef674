#include "taulab/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "taulab/errors.hpp"

namespace taulab {

std::vector<uint32_t> Algebra::mul_elems(const std::vector<uint32_t>& x,
                                         const std::vector<uint32_t>& y) const {
  Fp f = field();
  std::vector<uint32_t> r(basis.size(), 0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      if (!y[j]) continue;
      uint32_t c = f.mul(x[i], y[j]);
      const auto& row = mult_row(static_cast<int>(i), static_cast<int>(j));
      for (size_t k = 0; k < r.size(); ++k) {
        if (row[k]) r[k] = f.add(r[k], f.mul(c, row[k]));
      }
    }
  }
  return r;
}

namespace {

// incremental reduced row space over F_p with growable coordinate set;
// rows stay mutually reduced, so pivot columns are canonical
class RowSpace {
 public:
  explicit RowSpace(Fp f) : f_(f) {}

  bool insert(std::vector<uint32_t> v) {
    for (size_t r = 0; r < rows_.size(); ++r) {
      int piv = pivots_[r];
      if (piv >= static_cast<int>(v.size())) continue;
      uint32_t c = v[piv];
      if (!c) continue;
      const auto& row = rows_[r];
      for (size_t j = 0; j < row.size(); ++j) {
        if (row[j]) v[j] = f_.sub(v[j], f_.mul(c, row[j]));
      }
    }
    int piv = -1;
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j]) {
        piv = static_cast<int>(j);
        break;
      }
    }
    if (piv < 0) return false;
    uint32_t inv = f_.inv(v[piv]);
    for (auto& x : v) x = f_.mul(x, inv);
    for (auto& row : rows_) {
      if (piv < static_cast<int>(row.size()) && row[piv]) {
        uint32_t c = row[piv];
        if (row.size() < v.size()) row.resize(v.size(), 0);
        for (size_t j = 0; j < v.size(); ++j) {
          if (v[j]) row[j] = f_.sub(row[j], f_.mul(c, v[j]));
        }
      }
    }
    pivot_row_[piv] = rows_.size();
    pivots_.push_back(piv);
    rows_.push_back(std::move(v));
    return true;
  }

  bool has_pivot(int coord) const { return pivot_row_.count(coord) > 0; }
  const std::vector<uint32_t>* row_for_pivot(int coord) const {
    auto it = pivot_row_.find(coord);
    return it == pivot_row_.end() ? nullptr : &rows_[it->second];
  }

 private:
  Fp f_;
  std::vector<std::vector<uint32_t>> rows_;
  std::vector<int> pivots_;
  std::map<int, size_t> pivot_row_;
};

struct PathRec {
  int source = 0, target = 0, length = 0;
  std::vector<int> word;  // arrow indices
};

struct PairData {
  std::vector<int> path_ids;
  std::map<int, int> local_of;
  RowSpace rows;
  explicit PairData(Fp f) : rows(f) {}
};

struct ResolvedInput {
  std::vector<ResolvedRelation> relations;
  int max_rel_len = 0;
};

ResolvedInput resolve_relations(const AlgebraPresentation& pres) {
  Fp f{pres.field};
  std::map<std::string, int> arrow_of_name;
  for (size_t k = 0; k < pres.quiver.arrows.size(); ++k) {
    const auto& ar = pres.quiver.arrows[k];
    if (!arrow_of_name.emplace(ar.name, static_cast<int>(k)).second) {
      throw ParseError("duplicate arrow name: " + ar.name);
    }
  }
  ResolvedInput out;
  for (const auto& rel : pres.relations) {
    std::map<std::vector<int>, uint32_t> merged;
    int src = -1, tgt = -1;
    for (const auto& term : rel.terms) {
      uint32_t coef = f.reduce_int(term.coef);
      std::vector<int> word;
      int s = -1, t = -1;
      for (const auto& name : term.path) {
        auto it = arrow_of_name.find(name);
        if (it == arrow_of_name.end()) throw ParseError("unknown arrow in relation: " + name);
        const auto& ar = pres.quiver.arrows[it->second];
        if (t >= 0 && ar.source != t) throw NotAdmissible("relation term is not a composable path");
        if (s < 0) s = ar.source;
        t = ar.target;
        word.push_back(it->second);
      }
      if (coef == 0) continue;
      if (word.size() < 2) throw NotAdmissible("relation term shorter than two arrows");
      if (src < 0) {
        src = s;
        tgt = t;
      } else if (src != s || tgt != t) {
        throw NotAdmissible("relation terms are not parallel");
      }
      Fp ff = f;
      auto [it2, fresh] = merged.emplace(std::move(word), coef);
      if (!fresh) it2->second = ff.add(it2->second, coef);
    }
    ResolvedRelation rr;
    rr.source = src;
    rr.target = tgt;
    for (auto& [word, coef] : merged) {
      if (coef == 0) continue;
      rr.terms.push_back({coef, word});
      out.max_rel_len = std::max(out.max_rel_len, static_cast<int>(word.size()));
    }
    if (!rr.terms.empty()) out.relations.push_back(std::move(rr));
  }
  return out;
}

std::string word_display(const std::vector<QuiverArrow>& arrows, const std::vector<int>& word,
                         int source) {
  if (word.empty()) return "e" + std::to_string(source);
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += "*";
    s += arrows[word[i]].name;
  }
  return s;
}

constexpr size_t kPathCap = 500000;

}  // namespace

AlgebraPtr build_algebra(const AlgebraPresentation& pres) {
  if (!is_prime(pres.field)) throw InvalidInput("field size must be prime");
  const int n = pres.quiver.vertex_count;
  if (n < 1) throw InvalidVertex("quiver needs at least one vertex");
  for (const auto& ar : pres.quiver.arrows) {
    if (ar.source < 0 || ar.source >= n || ar.target < 0 || ar.target >= n) {
      throw InvalidVertex("arrow endpoint out of range: " + ar.name);
    }
  }
  Fp f{pres.field};
  ResolvedInput rin = resolve_relations(pres);

  std::vector<PathRec> paths;
  // keyed by (source, word): the empty word alone would collide across vertices
  std::map<std::pair<int, std::vector<int>>, int> word_to_id;
  // by (vertex, length) -> path ids, for relation generator enumeration
  std::vector<std::vector<std::vector<int>>> by_src_len(n), by_tgt_len(n);
  std::map<std::pair<int, int>, PairData> pairs;
  auto pair_of = [&](int s, int t) -> PairData& {
    auto it = pairs.find({s, t});
    if (it == pairs.end()) it = pairs.emplace(std::make_pair(s, t), PairData(f)).first;
    return it->second;
  };
  auto add_path = [&](PathRec rec) {
    int id = static_cast<int>(paths.size());
    word_to_id.emplace(std::make_pair(rec.source, rec.word), id);
    if (by_src_len[rec.source].size() <= static_cast<size_t>(rec.length)) {
      for (int v = 0; v < n; ++v) {
        by_src_len[v].resize(rec.length + 1);
        by_tgt_len[v].resize(rec.length + 1);
      }
    }
    by_src_len[rec.source][rec.length].push_back(id);
    by_tgt_len[rec.target][rec.length].push_back(id);
    PairData& pd = pair_of(rec.source, rec.target);
    pd.local_of[id] = static_cast<int>(pd.path_ids.size());
    pd.path_ids.push_back(id);
    paths.push_back(std::move(rec));
    return id;
  };

  std::vector<int> frontier;
  for (int v = 0; v < n; ++v) frontier.push_back(add_path({v, v, 0, {}}));
  std::vector<std::vector<int>> arrows_out(n);
  for (size_t k = 0; k < pres.quiver.arrows.size(); ++k) {
    arrows_out[pres.quiver.arrows[k].source].push_back(static_cast<int>(k));
  }

  int lstar = -1;
  for (int len = 1; len <= pres.max_path_length; ++len) {
    std::vector<int> next;
    for (int id : frontier) {
      for (int k : arrows_out[paths[id].target]) {
        PathRec rec;
        rec.source = paths[id].source;
        rec.target = pres.quiver.arrows[k].target;
        rec.length = len;
        rec.word = paths[id].word;
        rec.word.push_back(k);
        next.push_back(add_path(std::move(rec)));
        if (paths.size() > kPathCap) {
          throw BoundExceeded("path count cap hit; the relations do not bound the algebra");
        }
      }
    }
    frontier = std::move(next);
    // ideal generators u * r * v whose longest term has total length == len
    for (const auto& rel : rin.relations) {
      int lr = 0;
      for (const auto& t : rel.terms) lr = std::max(lr, static_cast<int>(t.word.size()));
      if (lr > len) continue;
      for (int lu = 0; lu + lr <= len; ++lu) {
        int lv = len - lr - lu;
        if (static_cast<size_t>(lu) >= by_tgt_len[rel.source].size()) continue;
        if (static_cast<size_t>(lv) >= by_src_len[rel.target].size()) continue;
        for (int uid : by_tgt_len[rel.source][lu]) {
          for (int vid : by_src_len[rel.target][lv]) {
            PairData& pd = pair_of(paths[uid].source, paths[vid].target);
            std::vector<uint32_t> vec(pd.path_ids.size(), 0);
            for (const auto& term : rel.terms) {
              std::vector<int> w = paths[uid].word;
              w.insert(w.end(), term.word.begin(), term.word.end());
              w.insert(w.end(), paths[vid].word.begin(), paths[vid].word.end());
              int pid = word_to_id.at({paths[uid].source, w});
              int local = pd.local_of.at(pid);
              vec[local] = f.add(vec[local], term.coef);
            }
            pd.rows.insert(std::move(vec));
          }
        }
      }
    }
    bool all_dead = true;
    for (int id : frontier) {
      PairData& pd = pair_of(paths[id].source, paths[id].target);
      if (!pd.rows.has_pivot(pd.local_of.at(id))) {
        all_dead = false;
        break;
      }
    }
    if (all_dead) {
      lstar = len;
      break;
    }
  }
  if (lstar < 0) {
    throw BoundExceeded("no path length with all paths in the ideal within max_path_length");
  }

  // basis = non-pivot paths (all shorter than lstar), in enumeration order
  std::vector<int> basis_of_path(paths.size(), -1);
  auto a = std::make_shared<Algebra>();
  a->p = pres.field;
  a->nvert = n;
  a->quiver_arrows = pres.quiver.arrows;
  for (size_t id = 0; id < paths.size(); ++id) {
    const PathRec& rec = paths[id];
    PairData& pd = pair_of(rec.source, rec.target);
    if (pd.rows.has_pivot(pd.local_of.at(static_cast<int>(id)))) continue;
    basis_of_path[id] = a->dim();
    a->basis.push_back({rec.source, rec.target, rec.length, rec.word,
                        word_display(pres.quiver.arrows, rec.word, rec.source)});
  }
  const int dim = a->dim();
  auto residue = [&](int id) {
    std::vector<uint32_t> r(dim, 0);
    if (paths[id].length >= lstar) return r;
    if (basis_of_path[id] >= 0) {
      r[basis_of_path[id]] = 1;
      return r;
    }
    PairData& pd = pair_of(paths[id].source, paths[id].target);
    int local = pd.local_of.at(id);
    const std::vector<uint32_t>* row = pd.rows.row_for_pivot(local);
    for (size_t j = 0; j < row->size(); ++j) {
      if (static_cast<int>(j) == local || (*row)[j] == 0) continue;
      int bid = basis_of_path[pd.path_ids[j]];
      r[bid] = f.neg((*row)[j]);
    }
    return r;
  };
  a->mult.assign(static_cast<size_t>(dim) * dim, std::vector<uint32_t>(dim, 0));
  std::vector<int> path_of_basis(dim);
  for (size_t id = 0; id < paths.size(); ++id) {
    if (basis_of_path[id] >= 0) path_of_basis[basis_of_path[id]] = static_cast<int>(id);
  }
  for (int i = 0; i < dim; ++i) {
    const PathRec& x = paths[path_of_basis[i]];
    for (int j = 0; j < dim; ++j) {
      const PathRec& y = paths[path_of_basis[j]];
      if (x.target != y.source) continue;
      if (x.length + y.length >= lstar) continue;
      std::vector<int> w = x.word;
      w.insert(w.end(), y.word.begin(), y.word.end());
      a->mult[static_cast<size_t>(i) * dim + j] = residue(word_to_id.at({x.source, w}));
    }
  }
  for (size_t k = 0; k < pres.quiver.arrows.size(); ++k) {
    int id = word_to_id.at(
        {pres.quiver.arrows[k].source, std::vector<int>{static_cast<int>(k)}});
    a->arrow_basis_index.push_back(basis_of_path[id]);
  }
  a->relations = std::move(rin.relations);
  a->words_valid = true;
  return a;
}

void validate_kupisch(const KupischSeries& k) {
  const int n = static_cast<int>(k.lengths.size());
  if (n < 1) throw InvalidKupisch("empty series");
  for (int c : k.lengths) {
    if (c < 1) throw InvalidKupisch("series entries must be positive");
  }
  if (k.cyclic) {
    for (int i = 0; i < n; ++i) {
      if (k.lengths[i] < 2) throw InvalidKupisch("cyclic series entries must be at least 2");
      if (k.lengths[(i + 1) % n] < k.lengths[i] - 1) {
        throw InvalidKupisch("cyclic series drops by more than one");
      }
    }
  } else {
    if (k.lengths[n - 1] != 1) {
      throw InvalidKupisch("linear series must end in 1: the last vertex has no outgoing arrow");
    }
    for (int i = 0; i + 1 < n; ++i) {
      if (k.lengths[i] < 2) throw InvalidKupisch("interior entries of a linear series must be >= 2");
      if (k.lengths[i + 1] < k.lengths[i] - 1) {
        throw InvalidKupisch("linear series drops by more than one");
      }
    }
  }
}

AlgebraPresentation nakayama_presentation(const KupischSeries& k, uint32_t field,
                                          int max_path_length) {
  validate_kupisch(k);
  const int n = static_cast<int>(k.lengths.size());
  AlgebraPresentation pres;
  pres.field = field;
  pres.max_path_length = max_path_length;
  pres.quiver.vertex_count = n;
  const int narrows = k.cyclic ? n : n - 1;
  for (int i = 0; i < narrows; ++i) {
    pres.quiver.arrows.push_back({"a" + std::to_string(i), i, (i + 1) % n});
  }
  for (int i = 0; i < n; ++i) {
    const int c = k.lengths[i];
    if (!k.cyclic && i + c > n - 1) continue;  // the path of length c from i does not exist
    RelationTerm term;
    term.coef = 1;
    for (int s = 0; s < c; ++s) term.path.push_back("a" + std::to_string((i + s) % n));
    pres.relations.push_back({{term}});
  }
  return pres;
}

AlgebraPtr build_nakayama(const KupischSeries& k, uint32_t field) {
  AlgebraPresentation pres = nakayama_presentation(k, field);
  int need = 1;
  for (int c : k.lengths) need = std::max(need, c + 1);
  pres.max_path_length = std::max(pres.max_path_length, need);
  auto a = build_algebra(pres);
  const_cast<Algebra&>(*a).kupisch = k;
  return a;
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) {
  std::lock_guard<std::mutex> g(a->opp_mutex);
  if (a->opp_strong) return a->opp_strong;
  if (auto w = a->opp_weak.lock()) return w;
  auto b = std::make_shared<Algebra>();
  b->p = a->p;
  b->nvert = a->nvert;
  for (const auto& ar : a->quiver_arrows) b->quiver_arrows.push_back({ar.name, ar.target, ar.source});
  for (const auto& bp : a->basis) {
    std::vector<int> w(bp.word.rbegin(), bp.word.rend());
    std::string display = a->words_valid ? word_display(b->quiver_arrows, w, bp.target) : bp.display;
    b->basis.push_back({bp.target, bp.source, bp.length, std::move(w), std::move(display)});
  }
  b->arrow_basis_index = a->arrow_basis_index;
  const int dim = a->dim();
  b->mult.resize(static_cast<size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      b->mult[static_cast<size_t>(i) * dim + j] = a->mult_row(j, i);
    }
  }
  for (const auto& rel : a->relations) {
    ResolvedRelation rr;
    rr.source = rel.target;
    rr.target = rel.source;
    for (const auto& t : rel.terms) {
      rr.terms.push_back({t.coef, std::vector<int>(t.word.rbegin(), t.word.rend())});
    }
    b->relations.push_back(std::move(rr));
  }
  b->words_valid = a->words_valid;
  b->opp_weak = a;
  a->opp_strong = b;
  return b;
}

bool structurally_equal(const Algebra& x, const Algebra& y) {
  if (x.p != y.p || x.nvert != y.nvert || x.dim() != y.dim()) return false;
  if (x.arrow_basis_index != y.arrow_basis_index) return false;
  for (int i = 0; i < x.dim(); ++i) {
    if (x.basis[i].source != y.basis[i].source || x.basis[i].target != y.basis[i].target ||
        x.basis[i].length != y.basis[i].length) {
      return false;
    }
  }
  return x.mult == y.mult;
}

bool same_algebra(const AlgebraPtr& x, const AlgebraPtr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  return structurally_equal(*x, *y);
}

SubalgebraRestriction idempotent_subalgebra(const AlgebraPtr& a, const std::vector<int>& f_in) {
  if (f_in.empty()) throw InvalidIdempotent("empty vertex subset");
  std::vector<int> f = f_in;
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  for (int v : f) {
    if (v < 0 || v >= a->nvert) throw InvalidVertex("vertex out of range in idempotent subset");
  }
  std::vector<int> sub_vertex(a->nvert, -1);
  for (size_t i = 0; i < f.size(); ++i) sub_vertex[f[i]] = static_cast<int>(i);

  SubalgebraRestriction res;
  res.vertices = f;
  auto b = std::make_shared<Algebra>();
  b->p = a->p;
  b->nvert = static_cast<int>(f.size());
  b->words_valid = false;

  std::vector<int> parent_of;  // idempotents of f first, then by parent index
  for (int v : f) parent_of.push_back(v);
  for (int i = a->nvert; i < a->dim(); ++i) {
    const auto& bp = a->basis[i];
    if (sub_vertex[bp.source] >= 0 && sub_vertex[bp.target] >= 0) parent_of.push_back(i);
  }
  std::vector<int> sub_of_parent(a->dim(), -1);
  for (size_t i = 0; i < parent_of.size(); ++i) sub_of_parent[parent_of[i]] = static_cast<int>(i);
  for (int pi : parent_of) {
    const auto& bp = a->basis[pi];
    b->basis.push_back({sub_vertex[bp.source], sub_vertex[bp.target], bp.length, {}, bp.display});
  }
  const int dim = static_cast<int>(parent_of.size());
  b->mult.assign(static_cast<size_t>(dim) * dim, std::vector<uint32_t>(dim, 0));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const auto& row = a->mult_row(parent_of[i], parent_of[j]);
      auto& out = b->mult[static_cast<size_t>(i) * dim + j];
      for (int k = 0; k < a->dim(); ++k) {
        if (row[k] && sub_of_parent[k] >= 0) out[sub_of_parent[k]] = row[k];
      }
    }
  }
  // radical generators: basis elements of eJe independent of (eJe)^2
  std::vector<int> radism;  // sub indices of length >= 1 elements
  for (int i = 0; i < dim; ++i) {
    if (b->basis[i].length >= 1) radism.push_back(i);
  }
  std::vector<int> local_of(dim, -1);
  for (size_t i = 0; i < radism.size(); ++i) local_of[radism[i]] = static_cast<int>(i);
  RowSpace span(Fp{b->p});
  for (int x : radism) {
    for (int y : radism) {
      const auto& row = b->mult_row(x, y);
      std::vector<uint32_t> vec(radism.size(), 0);
      bool nonzero = false;
      for (int k = 0; k < dim; ++k) {
        // products of radical elements stay inside the span of length >= 1 elements
        if (row[k] && local_of[k] >= 0) {
          vec[local_of[k]] = row[k];
          nonzero = true;
        }
      }
      if (nonzero) span.insert(std::move(vec));
    }
  }
  for (size_t i = 0; i < radism.size(); ++i) {
    if (!span.has_pivot(static_cast<int>(i))) b->arrow_basis_index.push_back(radism[i]);
  }
  for (int k : b->arrow_basis_index) {
    b->quiver_arrows.push_back({b->basis[k].display, b->basis[k].source, b->basis[k].target});
  }
  res.sub = b;
  res.basis_to_parent = parent_of;
  return res;
}

}  // namespace taulab
