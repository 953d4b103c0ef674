#include "taulab/rep.hpp"

#include <algorithm>
#include <map>

#include "taulab/errors.hpp"

namespace taulab {

namespace {

void require_same_algebra(const AlgebraPtr& x, const AlgebraPtr& y) {
  if (!same_algebra(x, y)) throw AlgebraMismatch("modules live over different algebras");
}

Mat unwrap_solve(std::optional<Mat> s, const char* what) {
  if (!s) throw InvalidShape(std::string("internal solve failed: ") + what);
  return std::move(*s);
}

// per-vertex coordinate lists of a projective e_v * A
std::vector<std::vector<int>> proj_vertex_coords(const Algebra& a, int v) {
  std::vector<std::vector<int>> coords(a.nvert);
  for (int b = 0; b < a.dim(); ++b) {
    if (a.basis[b].source == v) coords[a.basis[b].target].push_back(b);
  }
  return coords;
}

}  // namespace

void validate_rep(const Rep& m) {
  if (!m.alg) throw InvalidInput("module has no algebra");
  const Algebra& a = *m.alg;
  if (static_cast<int>(m.dims.size()) != a.nvert) throw InvalidShape("dims size != vertex count");
  for (int d : m.dims) {
    if (d < 0) throw InvalidShape("negative dimension");
  }
  if (static_cast<int>(m.action.size()) != a.arrow_count()) {
    throw InvalidShape("one action matrix per arrow required");
  }
  for (int k = 0; k < a.arrow_count(); ++k) {
    const Mat& x = m.action[k];
    if (x.p != a.p) throw InvalidShape("action matrix over wrong field");
    if (x.rows != m.dims[a.arrow_target(k)] || x.cols != m.dims[a.arrow_source(k)]) {
      throw InvalidShape("action matrix has wrong shape for arrow " + a.arrow_name(k));
    }
  }
  if (a.words_valid) {
    for (const auto& rel : a.relations) {
      Mat acc = Mat::zero(a.p, m.dims[rel.target], m.dims[rel.source]);
      for (const auto& term : rel.terms) {
        acc = add(acc, scale(path_action(m, term.word, rel.source), term.coef));
      }
      if (!acc.is_zero()) throw NotAdmissible("action does not satisfy the relations");
    }
  }
}

void validate_map(const ModMap& f) {
  validate_rep(f.source);
  validate_rep(f.target);
  require_same_algebra(f.source.alg, f.target.alg);
  const Algebra& a = *f.source.alg;
  if (static_cast<int>(f.blocks.size()) != a.nvert) throw InvalidShape("one block per vertex");
  for (int v = 0; v < a.nvert; ++v) {
    if (f.blocks[v].rows != f.target.dims[v] || f.blocks[v].cols != f.source.dims[v]) {
      throw InvalidShape("map block has wrong shape at vertex " + std::to_string(v));
    }
  }
  for (int k = 0; k < a.arrow_count(); ++k) {
    int s = a.arrow_source(k), t = a.arrow_target(k);
    Mat lhs = mul(f.blocks[t], f.source.action[k]);
    Mat rhs = mul(f.target.action[k], f.blocks[s]);
    if (!(lhs == rhs)) throw InvalidShape("map does not commute with arrow " + a.arrow_name(k));
  }
}

bool rep_equal(const Rep& x, const Rep& y) {
  if (!same_algebra(x.alg, y.alg)) return false;
  return x.dims == y.dims && x.action == y.action;
}

Rep zero_rep(const AlgebraPtr& a) {
  Rep m;
  m.alg = a;
  m.dims.assign(a->nvert, 0);
  for (int k = 0; k < a->arrow_count(); ++k) m.action.push_back(Mat::zero(a->p, 0, 0));
  return m;
}

Rep simple_module(const AlgebraPtr& a, int vertex) {
  if (vertex < 0 || vertex >= a->nvert) throw InvalidVertex("simple module vertex out of range");
  Rep m;
  m.alg = a;
  m.dims.assign(a->nvert, 0);
  m.dims[vertex] = 1;
  for (int k = 0; k < a->arrow_count(); ++k) {
    m.action.push_back(Mat::zero(a->p, m.dims[a->arrow_target(k)], m.dims[a->arrow_source(k)]));
  }
  return m;
}

Rep projective_module(const AlgebraPtr& a, int vertex) {
  if (vertex < 0 || vertex >= a->nvert) throw InvalidVertex("projective vertex out of range");
  auto coords = proj_vertex_coords(*a, vertex);
  Rep m;
  m.alg = a;
  m.dims.resize(a->nvert);
  std::vector<int> pos(a->dim(), -1);
  for (int w = 0; w < a->nvert; ++w) {
    m.dims[w] = static_cast<int>(coords[w].size());
    for (size_t i = 0; i < coords[w].size(); ++i) pos[coords[w][i]] = static_cast<int>(i);
  }
  for (int k = 0; k < a->arrow_count(); ++k) {
    int s = a->arrow_source(k), t = a->arrow_target(k);
    Mat x = Mat::zero(a->p, m.dims[t], m.dims[s]);
    for (int j = 0; j < m.dims[s]; ++j) {
      const auto& row = a->mult_row(coords[s][j], a->arrow_basis_index[k]);
      for (int b = 0; b < a->dim(); ++b) {
        if (row[b]) x.at(pos[b], j) = row[b];
      }
    }
    m.action.push_back(std::move(x));
  }
  return m;
}

Rep injective_module(const AlgebraPtr& a, int vertex) {
  return k_dual(projective_module(opposite_algebra(a), vertex));
}

Rep regular_rep(const AlgebraPtr& a) {
  std::vector<Rep> parts;
  for (int v = 0; v < a->nvert; ++v) parts.push_back(projective_module(a, v));
  return direct_sum(parts);
}

Rep direct_sum(const std::vector<Rep>& parts) {
  if (parts.empty()) throw InvalidInput("direct sum needs at least one part");
  const AlgebraPtr& a = parts[0].alg;
  for (const auto& part : parts) require_same_algebra(a, part.alg);
  Rep m;
  m.alg = a;
  m.dims.assign(a->nvert, 0);
  for (const auto& part : parts) {
    for (int v = 0; v < a->nvert; ++v) m.dims[v] += part.dims[v];
  }
  for (int k = 0; k < a->arrow_count(); ++k) {
    int s = a->arrow_source(k), t = a->arrow_target(k);
    Mat x = Mat::zero(a->p, m.dims[t], m.dims[s]);
    int ro = 0, co = 0;
    for (const auto& part : parts) {
      const Mat& b = part.action[k];
      for (int i = 0; i < b.rows; ++i) {
        for (int j = 0; j < b.cols; ++j) x.at(ro + i, co + j) = b.at(i, j);
      }
      ro += part.dims[t];
      co += part.dims[s];
    }
    m.action.push_back(std::move(x));
  }
  return m;
}

ModMap summand_inclusion(const std::vector<Rep>& parts, const Rep& sum, int idx) {
  ModMap f;
  f.source = parts[idx];
  f.target = sum;
  for (int v = 0; v < sum.alg->nvert; ++v) {
    int off = 0;
    for (int i = 0; i < idx; ++i) off += parts[i].dims[v];
    Mat b = Mat::zero(sum.alg->p, sum.dims[v], parts[idx].dims[v]);
    for (int j = 0; j < parts[idx].dims[v]; ++j) b.at(off + j, j) = 1;
    f.blocks.push_back(std::move(b));
  }
  return f;
}

ModMap summand_projection(const std::vector<Rep>& parts, const Rep& sum, int idx) {
  ModMap f;
  f.source = sum;
  f.target = parts[idx];
  for (int v = 0; v < sum.alg->nvert; ++v) {
    int off = 0;
    for (int i = 0; i < idx; ++i) off += parts[i].dims[v];
    Mat b = Mat::zero(sum.alg->p, parts[idx].dims[v], sum.dims[v]);
    for (int j = 0; j < parts[idx].dims[v]; ++j) b.at(j, off + j) = 1;
    f.blocks.push_back(std::move(b));
  }
  return f;
}

Mat path_action(const Rep& m, const std::vector<int>& word, int source) {
  if (word.empty()) return Mat::identity(m.alg->p, m.dims[source]);
  Mat cur = m.action[word[0]];
  for (size_t i = 1; i < word.size(); ++i) cur = mul(m.action[word[i]], cur);
  return cur;
}

Rep k_dual(const Rep& m) {
  Rep r;
  r.alg = opposite_algebra(m.alg);
  r.dims = m.dims;
  for (const auto& x : m.action) r.action.push_back(transposed(x));
  return r;
}

ModMap k_dual(const ModMap& f) {
  ModMap g;
  g.source = k_dual(f.target);
  g.target = k_dual(f.source);
  for (const auto& b : f.blocks) g.blocks.push_back(transposed(b));
  return g;
}

ModMap id_map(const Rep& m) {
  ModMap f;
  f.source = m;
  f.target = m;
  for (int v = 0; v < m.alg->nvert; ++v) f.blocks.push_back(Mat::identity(m.alg->p, m.dims[v]));
  return f;
}

ModMap zero_map(const Rep& src, const Rep& dst) {
  require_same_algebra(src.alg, dst.alg);
  ModMap f;
  f.source = src;
  f.target = dst;
  for (int v = 0; v < src.alg->nvert; ++v) {
    f.blocks.push_back(Mat::zero(src.alg->p, dst.dims[v], src.dims[v]));
  }
  return f;
}

ModMap compose(const ModMap& g, const ModMap& f) {
  require_same_algebra(g.source.alg, f.target.alg);
  if (g.source.dims != f.target.dims) throw InvalidShape("composition dimension mismatch");
  ModMap h;
  h.source = f.source;
  h.target = g.target;
  for (size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(mul(g.blocks[v], f.blocks[v]));
  return h;
}

ModMap map_add(const ModMap& f, const ModMap& g) {
  ModMap h;
  h.source = f.source;
  h.target = f.target;
  for (size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(add(f.blocks[v], g.blocks[v]));
  return h;
}

ModMap map_scale(uint32_t c, const ModMap& f) {
  ModMap h;
  h.source = f.source;
  h.target = f.target;
  for (const auto& b : f.blocks) h.blocks.push_back(scale(b, c));
  return h;
}

bool map_is_zero(const ModMap& f) {
  for (const auto& b : f.blocks) {
    if (!b.is_zero()) return false;
  }
  return true;
}

Submodule kernel(const ModMap& f) {
  const AlgebraPtr& a = f.source.alg;
  Submodule s;
  s.rep.alg = a;
  std::vector<Mat> basis;
  for (int v = 0; v < a->nvert; ++v) {
    basis.push_back(kernel_basis(f.blocks[v]));
    s.rep.dims.push_back(basis[v].cols);
  }
  for (int k = 0; k < a->arrow_count(); ++k) {
    int sv = a->arrow_source(k), tv = a->arrow_target(k);
    s.rep.action.push_back(
        unwrap_solve(solve_right(basis[tv], mul(f.source.action[k], basis[sv])), "kernel action"));
  }
  s.incl.source = s.rep;
  s.incl.target = f.source;
  s.incl.blocks = std::move(basis);
  return s;
}

Submodule image(const ModMap& f) {
  const AlgebraPtr& a = f.source.alg;
  Submodule s;
  s.rep.alg = a;
  std::vector<Mat> basis;
  for (int v = 0; v < a->nvert; ++v) {
    basis.push_back(column_space_basis(f.blocks[v]));
    s.rep.dims.push_back(basis[v].cols);
  }
  for (int k = 0; k < a->arrow_count(); ++k) {
    int sv = a->arrow_source(k), tv = a->arrow_target(k);
    s.rep.action.push_back(
        unwrap_solve(solve_right(basis[tv], mul(f.target.action[k], basis[sv])), "image action"));
  }
  s.incl.source = s.rep;
  s.incl.target = f.target;
  s.incl.blocks = std::move(basis);
  return s;
}

Quotient quotient_by(const ModMap& incl) {
  const Rep& amb = incl.target;
  const AlgebraPtr& a = amb.alg;
  Fp f = a->field();
  Quotient q;
  q.rep.alg = a;
  std::vector<Mat> projs, secs;
  for (int v = 0; v < a->nvert; ++v) {
    const int d = amb.dims[v];
    RrefResult rr = rref(transposed(incl.blocks[v]));
    std::vector<char> is_pivot(d, 0);
    for (int pcol : rr.pivots) is_pivot[pcol] = 1;
    std::vector<int> comp;
    for (int c = 0; c < d; ++c) {
      if (!is_pivot[c]) comp.push_back(c);
    }
    std::vector<int> comp_idx(d, -1);
    for (size_t i = 0; i < comp.size(); ++i) comp_idx[comp[i]] = static_cast<int>(i);
    Mat pr = Mat::zero(a->p, static_cast<int>(comp.size()), d);
    for (size_t i = 0; i < comp.size(); ++i) pr.at(static_cast<int>(i), comp[i]) = 1;
    for (int r = 0; r < rr.rank; ++r) {
      int pcol = rr.pivots[r];
      for (int c : comp) pr.at(comp_idx[c], pcol) = f.neg(rr.m.at(r, c));
    }
    Mat sec = Mat::zero(a->p, d, static_cast<int>(comp.size()));
    for (size_t i = 0; i < comp.size(); ++i) sec.at(comp[i], static_cast<int>(i)) = 1;
    q.rep.dims.push_back(static_cast<int>(comp.size()));
    projs.push_back(std::move(pr));
    secs.push_back(std::move(sec));
  }
  for (int k = 0; k < a->arrow_count(); ++k) {
    int sv = a->arrow_source(k), tv = a->arrow_target(k);
    q.rep.action.push_back(mul(projs[tv], mul(amb.action[k], secs[sv])));
  }
  q.proj.source = amb;
  q.proj.target = q.rep;
  q.proj.blocks = std::move(projs);
  q.section = std::move(secs);
  return q;
}

Quotient cokernel(const ModMap& f) { return quotient_by(image(f).incl); }

namespace {

Submodule submodule_from_spans(const Rep& m, const std::vector<Mat>& spans) {
  const AlgebraPtr& a = m.alg;
  Submodule s;
  s.rep.alg = a;
  std::vector<Mat> basis;
  for (int v = 0; v < a->nvert; ++v) {
    basis.push_back(column_space_basis(spans[v]));
    s.rep.dims.push_back(basis[v].cols);
  }
  for (int k = 0; k < a->arrow_count(); ++k) {
    int sv = a->arrow_source(k), tv = a->arrow_target(k);
    s.rep.action.push_back(
        unwrap_solve(solve_right(basis[tv], mul(m.action[k], basis[sv])), "submodule action"));
  }
  s.incl.source = s.rep;
  s.incl.target = m;
  s.incl.blocks = std::move(basis);
  return s;
}

}  // namespace

Submodule radical_submodule(const Rep& m) {
  const AlgebraPtr& a = m.alg;
  std::vector<Mat> spans;
  for (int v = 0; v < a->nvert; ++v) {
    Mat acc = Mat::zero(a->p, m.dims[v], 0);
    for (int k = 0; k < a->arrow_count(); ++k) {
      if (a->arrow_target(k) == v) acc = hstack(acc, m.action[k]);
    }
    spans.push_back(std::move(acc));
  }
  return submodule_from_spans(m, spans);
}

Submodule socle_submodule(const Rep& m) {
  const AlgebraPtr& a = m.alg;
  Submodule s;
  s.rep.alg = a;
  std::vector<Mat> basis;
  for (int v = 0; v < a->nvert; ++v) {
    Mat acc = Mat::zero(a->p, 0, m.dims[v]);
    for (int k = 0; k < a->arrow_count(); ++k) {
      if (a->arrow_source(k) == v) acc = vstack(acc, m.action[k]);
    }
    basis.push_back(kernel_basis(acc));
    s.rep.dims.push_back(basis[v].cols);
  }
  for (int k = 0; k < a->arrow_count(); ++k) {
    int sv = a->arrow_source(k), tv = a->arrow_target(k);
    s.rep.action.push_back(
        unwrap_solve(solve_right(basis[tv], mul(m.action[k], basis[sv])), "socle action"));
  }
  s.incl.source = s.rep;
  s.incl.target = m;
  s.incl.blocks = std::move(basis);
  return s;
}

Quotient top_quotient(const Rep& m) { return quotient_by(radical_submodule(m).incl); }

ProjModule proj_sum(const AlgebraPtr& a, const std::vector<int>& copies) {
  ProjModule p;
  p.copies = copies;
  if (copies.empty()) {
    p.rep = zero_rep(a);
    return p;
  }
  std::vector<Rep> parts;
  for (int v : copies) parts.push_back(projective_module(a, v));
  p.rep = direct_sum(parts);
  return p;
}

std::vector<std::pair<int, int>> proj_coords(const ProjModule& p, int w) {
  const Algebra& a = *p.rep.alg;
  std::vector<std::pair<int, int>> out;
  for (size_t c = 0; c < p.copies.size(); ++c) {
    for (int b = 0; b < a.dim(); ++b) {
      if (a.basis[b].source == p.copies[c] && a.basis[b].target == w) {
        out.push_back({static_cast<int>(c), b});
      }
    }
  }
  return out;
}

ModMap left_mult_map(const AlgebraPtr& a, const std::vector<uint32_t>& x, int from, int to) {
  ProjModule src = proj_sum(a, {from});
  ProjModule dst = proj_sum(a, {to});
  return proj_block_map(src, dst, {{x}});
}

ModMap proj_block_map(const ProjModule& src, const ProjModule& dst,
                      const std::vector<std::vector<std::vector<uint32_t>>>& x) {
  const AlgebraPtr& a = src.rep.alg;
  Fp f = a->field();
  ModMap g;
  g.source = src.rep;
  g.target = dst.rep;
  for (int w = 0; w < a->nvert; ++w) {
    auto scoords = proj_coords(src, w);
    auto dcoords = proj_coords(dst, w);
    Mat block = Mat::zero(a->p, static_cast<int>(dcoords.size()), static_cast<int>(scoords.size()));
    for (size_t j = 0; j < scoords.size(); ++j) {
      auto [l, q] = scoords[j];
      for (size_t kcopy = 0; kcopy < dst.copies.size(); ++kcopy) {
        const auto& xv = x[kcopy][l];
        // product x[k][l] * q expanded over the algebra basis
        std::vector<uint32_t> prod(a->dim(), 0);
        for (int i = 0; i < a->dim(); ++i) {
          if (!xv[i]) continue;
          const auto& row = a->mult_row(i, q);
          for (int b = 0; b < a->dim(); ++b) {
            if (row[b]) prod[b] = f.add(prod[b], f.mul(xv[i], row[b]));
          }
        }
        for (size_t i = 0; i < dcoords.size(); ++i) {
          if (dcoords[i].first == static_cast<int>(kcopy) && prod[dcoords[i].second]) {
            block.at(static_cast<int>(i), static_cast<int>(j)) = prod[dcoords[i].second];
          }
        }
      }
    }
    g.blocks.push_back(std::move(block));
  }
  return g;
}

Cover projective_cover(const Rep& m) {
  const AlgebraPtr& a = m.alg;
  if (!a->words_valid) throw InvalidInput("projective covers need a path basis for the algebra");
  Quotient top = top_quotient(m);
  Cover cov;
  std::vector<int> copies;
  std::vector<std::pair<int, int>> gens;
  for (int v = 0; v < a->nvert; ++v) {
    for (int j = 0; j < top.rep.dims[v]; ++j) {
      copies.push_back(v);
      // the section column is a unit vector; its coordinate generates
      int c = -1;
      for (int r = 0; r < top.section[v].rows; ++r) {
        if (top.section[v].at(r, j)) {
          c = r;
          break;
        }
      }
      gens.push_back({v, c});
    }
  }
  cov.p = proj_sum(a, copies);
  cov.gens = gens;
  cov.eps.source = cov.p.rep;
  cov.eps.target = m;
  for (int w = 0; w < a->nvert; ++w) {
    auto coords = proj_coords(cov.p, w);
    Mat block = Mat::zero(a->p, m.dims[w], static_cast<int>(coords.size()));
    for (size_t j = 0; j < coords.size(); ++j) {
      auto [copy, b] = coords[j];
      auto [v, c] = gens[copy];
      Mat act = path_action(m, a->basis[b].word, v);
      for (int r = 0; r < m.dims[w]; ++r) block.at(r, static_cast<int>(j)) = act.at(r, c);
    }
    cov.eps.blocks.push_back(std::move(block));
  }
  return cov;
}

Rep syzygy_step(const Rep& m) { return kernel(projective_cover(m).eps).rep; }

Rep syzygy(const Rep& m, int n) {
  Rep cur = m;
  for (int i = 0; i < n; ++i) cur = syzygy_step(cur);
  return cur;
}

ModMap injective_envelope(const Rep& m) {
  Cover cov = projective_cover(k_dual(m));
  return k_dual(cov.eps);
}

Rep cosyzygy_step(const Rep& m) { return cokernel(injective_envelope(m)).rep; }

Rep cosyzygy(const Rep& m, int n) {
  Rep cur = m;
  for (int i = 0; i < n; ++i) cur = cosyzygy_step(cur);
  return cur;
}

std::vector<ModMap> hom_basis(const Rep& m, const Rep& n) {
  require_same_algebra(m.alg, n.alg);
  const Algebra& a = *m.alg;
  std::vector<int> offset(a.nvert + 1, 0);
  for (int v = 0; v < a.nvert; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  const int nvars = offset[a.nvert];
  if (nvars == 0) return {};
  auto var = [&](int v, int r, int c) { return offset[v] + r * m.dims[v] + c; };
  int nrows = 0;
  for (int k = 0; k < a.arrow_count(); ++k) {
    nrows += n.dims[a.arrow_target(k)] * m.dims[a.arrow_source(k)];
  }
  Mat sys = Mat::zero(a.p, nrows, nvars);
  Fp f = a.field();
  int row = 0;
  for (int k = 0; k < a.arrow_count(); ++k) {
    int s = a.arrow_source(k), t = a.arrow_target(k);
    const Mat& xm = m.action[k];  // dims[t] x dims[s] on m
    const Mat& xn = n.action[k];
    for (int i = 0; i < n.dims[t]; ++i) {
      for (int j = 0; j < m.dims[s]; ++j) {
        // (phi_t * X^m)_{ij} - (X^n * phi_s)_{ij} = 0
        for (int c = 0; c < m.dims[t]; ++c) {
          if (xm.at(c, j)) sys.at(row, var(t, i, c)) = f.add(sys.at(row, var(t, i, c)), xm.at(c, j));
        }
        for (int c = 0; c < n.dims[s]; ++c) {
          if (xn.at(i, c)) sys.at(row, var(s, c, j)) = f.sub(sys.at(row, var(s, c, j)), xn.at(i, c));
        }
        ++row;
      }
    }
  }
  Mat ker = kernel_basis(sys);
  std::vector<ModMap> out;
  for (int col = 0; col < ker.cols; ++col) {
    ModMap g;
    g.source = m;
    g.target = n;
    for (int v = 0; v < a.nvert; ++v) {
      Mat b = Mat::zero(a.p, n.dims[v], m.dims[v]);
      for (int r = 0; r < n.dims[v]; ++r) {
        for (int c = 0; c < m.dims[v]; ++c) b.at(r, c) = ker.at(var(v, r, c), col);
      }
      g.blocks.push_back(std::move(b));
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

bool blocks_invertible(const ModMap& f) {
  for (const auto& b : f.blocks) {
    if (!b.is_square() || !is_invertible(b)) return false;
  }
  return true;
}

ModMap combine(const std::vector<ModMap>& basis, const std::vector<uint32_t>& coef) {
  ModMap f = map_scale(coef[0], basis[0]);
  for (size_t i = 1; i < basis.size(); ++i) {
    if (coef[i]) f = map_add(f, map_scale(coef[i], basis[i]));
  }
  return f;
}

}  // namespace

IsoResult is_isomorphic(const Rep& m, const Rep& n, std::mt19937_64& rng) {
  require_same_algebra(m.alg, n.alg);
  IsoResult res;
  if (m.dims != n.dims) return res;
  if (m.total_dim() == 0) {
    res.iso = true;
    res.witness = zero_map(m, n);
    return res;
  }
  std::vector<ModMap> basis = hom_basis(m, n);
  const size_t h = basis.size();
  if (h == 0) return res;
  const uint64_t p = m.alg->p;
  // decide between exhausting projective representatives and random sampling
  uint64_t count = 1;
  bool small = true;
  for (size_t i = 0; i < h; ++i) {
    count *= p;
    if (count > 65536) {
      small = false;
      break;
    }
  }
  auto attempt = [&](const std::vector<uint32_t>& coef) -> bool {
    ModMap f = combine(basis, coef);
    if (!blocks_invertible(f)) return false;
    res.iso = true;
    res.witness = std::move(f);
    return true;
  };
  if (small) {
    // one representative per line: first nonzero coefficient equal to 1
    for (size_t lead = 0; lead < h; ++lead) {
      const size_t tail = h - 1 - lead;
      uint64_t combos = 1;
      for (size_t i = 0; i < tail; ++i) combos *= p;
      for (uint64_t ctr = 0; ctr < combos; ++ctr) {
        std::vector<uint32_t> coef(h, 0);
        coef[lead] = 1;
        uint64_t rest = ctr;
        for (size_t i = 0; i < tail; ++i) {
          coef[lead + 1 + i] = static_cast<uint32_t>(rest % p);
          rest /= p;
        }
        if (attempt(coef)) return res;
      }
    }
    return res;
  }
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<uint32_t> coef(h);
    bool any = false;
    for (size_t i = 0; i < h; ++i) {
      coef[i] = static_cast<uint32_t>(rng() % p);
      any = any || coef[i];
    }
    if (!any) coef[trial % h] = 1;
    if (attempt(coef)) return res;
  }
  return res;
}

bool is_projective_rep(const Rep& m) { return syzygy_step(m).is_zero(); }

bool is_injective_rep(const Rep& m) { return cosyzygy_step(m).is_zero(); }

Rep strip_projectives(const Rep& m, std::mt19937_64& rng) {
  std::vector<Rep> keep;
  for (auto& part : decompose(m, rng)) {
    if (!is_projective_rep(part)) keep.push_back(std::move(part));
  }
  return keep.empty() ? zero_rep(m.alg) : direct_sum(keep);
}

Rep strip_injectives(const Rep& m, std::mt19937_64& rng) {
  std::vector<Rep> keep;
  for (auto& part : decompose(m, rng)) {
    if (!is_injective_rep(part)) keep.push_back(std::move(part));
  }
  return keep.empty() ? zero_rep(m.alg) : direct_sum(keep);
}

bool is_uniserial(const Rep& m) {
  Rep cur = m;
  while (cur.total_dim() > 0) {
    Rep rad = radical_submodule(cur).rep;
    if (cur.total_dim() - rad.total_dim() > 1) return false;
    cur = std::move(rad);
  }
  return true;
}

bool is_serial_algebra(const AlgebraPtr& a) {
  AlgebraPtr op = opposite_algebra(a);
  for (int v = 0; v < a->nvert; ++v) {
    if (!is_uniserial(projective_module(a, v))) return false;
    if (!is_uniserial(projective_module(op, v))) return false;
  }
  return true;
}

Rep serial_quotient(const AlgebraPtr& a, int vertex, int layers) {
  Rep p = projective_module(a, vertex);
  if (!is_uniserial(p)) throw NotNakayama("projective is not uniserial");
  const int clen = p.total_dim();
  if (layers < 1 || layers > clen) throw InvalidInput("layer count out of range");
  if (layers == clen) return p;
  ModMap incl = radical_submodule(p).incl;
  for (int i = 1; i < layers; ++i) {
    incl = compose(incl, radical_submodule(incl.source).incl);
  }
  return quotient_by(incl).rep;
}

std::vector<SerialModule> serial_indecomposables(const AlgebraPtr& a) {
  if (!is_serial_algebra(a)) {
    throw NotNakayama("projectives or injectives are not all uniserial");
  }
  std::vector<SerialModule> out;
  for (int v = 0; v < a->nvert; ++v) {
    Rep p = projective_module(a, v);
    const int clen = p.total_dim();
    // walk the radical chain once; quotient by rad^k gives the length-k module
    ModMap incl = radical_submodule(p).incl;
    for (int k = 1; k <= clen; ++k) {
      SerialModule sm;
      sm.vertex = v;
      sm.layers = k;
      sm.projective = (k == clen);
      if (k == clen) {
        sm.rep = p;
        sm.label = "P(" + std::to_string(v) + ")";
      } else {
        sm.rep = quotient_by(incl).rep;
        sm.label = "PJ(" + std::to_string(v) + "," + std::to_string(k) + ")";
        incl = compose(incl, radical_submodule(incl.source).incl);
      }
      out.push_back(std::move(sm));
    }
  }
  return out;
}

}  // namespace taulab
