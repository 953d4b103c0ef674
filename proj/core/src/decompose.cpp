#include <algorithm>
#include <deque>

#include "taulab/errors.hpp"
#include "taulab/poly.hpp"
#include "taulab/rep.hpp"

namespace taulab {

namespace {

// minimal polynomial of an endomorphism, via the first linear dependency
// among flattened powers; degree is at most the total dimension
Poly minpoly_of_endo(const ModMap& phi) {
  const Rep& x = phi.source;
  Fp f = x.alg->field();
  int flat = 0;
  for (int v = 0; v < x.alg->nvert; ++v) flat += x.dims[v] * x.dims[v];
  const int maxdeg = x.total_dim();
  std::vector<std::vector<uint32_t>> rows, coeffs;
  std::vector<int> pivots;
  ModMap pw = id_map(x);
  for (int d = 0; d <= maxdeg; ++d) {
    std::vector<uint32_t> vec;
    vec.reserve(flat);
    for (const auto& b : pw.blocks) vec.insert(vec.end(), b.a.begin(), b.a.end());
    std::vector<uint32_t> co(maxdeg + 2, 0);
    co[d] = 1;
    for (size_t r = 0; r < rows.size(); ++r) {
      uint32_t c = vec[pivots[r]];
      if (!c) continue;
      for (int j = 0; j < flat; ++j) {
        if (rows[r][j]) vec[j] = f.sub(vec[j], f.mul(c, rows[r][j]));
      }
      for (size_t j = 0; j < co.size(); ++j) {
        if (coeffs[r][j]) co[j] = f.sub(co[j], f.mul(c, coeffs[r][j]));
      }
    }
    int piv = -1;
    for (int j = 0; j < flat; ++j) {
      if (vec[j]) {
        piv = j;
        break;
      }
    }
    if (piv < 0) return poly_monic(f, poly_trim(std::move(co)));
    uint32_t inv = f.inv(vec[piv]);
    for (auto& t : vec) t = f.mul(t, inv);
    for (auto& t : co) t = f.mul(t, inv);
    pivots.push_back(piv);
    rows.push_back(std::move(vec));
    coeffs.push_back(std::move(co));
    pw = compose(phi, pw);
  }
  throw InvalidShape("no linear dependency among endomorphism powers");
}

// evaluate a polynomial at an endomorphism (horner)
ModMap poly_at_map(const Poly& g, const ModMap& phi) {
  const Rep& x = phi.source;
  if (g.empty()) return zero_map(x, x);
  ModMap acc = map_scale(g.back(), id_map(x));
  for (int i = static_cast<int>(g.size()) - 2; i >= 0; --i) {
    acc = compose(phi, acc);
    if (g[i]) acc = map_add(acc, map_scale(g[i], id_map(x)));
  }
  return acc;
}

// fitting: for psi an endomorphism and N >= dim, X = ker(psi^N) + im(psi^N)
std::optional<std::pair<Rep, Rep>> fitting_split(const ModMap& psi) {
  const Rep& x = psi.source;
  int n = 1;
  while (n < x.total_dim()) n <<= 1;
  ModMap pw;
  pw.source = x;
  pw.target = x;
  for (const auto& b : psi.blocks) pw.blocks.push_back(mat_pow(b, n));
  Rep ker = kernel(pw).rep;
  if (ker.total_dim() == 0 || ker.total_dim() == x.total_dim()) return std::nullopt;
  Rep im = image(pw).rep;
  return std::make_pair(std::move(ker), std::move(im));
}

Poly poly_x() { return Poly{0u, 1u}; }

// equal-degree splitting attempt on g, a squarefree product of >= 2 irreducible
// factors of the same degree d; returns a proper divisor on success
std::optional<Poly> equal_degree_divisor(const Poly& g, int d, uint32_t p, std::mt19937_64& rng) {
  Fp f{p};
  const int dg = poly_deg(g);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Poly r(dg, 0);
    bool any = false;
    for (int i = 0; i < dg; ++i) {
      r[i] = static_cast<uint32_t>(rng() % p);
      any = any || r[i];
    }
    if (!any) continue;
    r = poly_trim(std::move(r));
    Poly e;
    if (p == 2) {
      // trace map: sum of r^(2^i) for i < d
      Poly s = poly_mod(f, r, g);
      e = s;
      for (int i = 1; i < d; ++i) {
        s = poly_powmod(f, s, 2, g);
        e = poly_mod(f, poly_add(f, e, s), g);
      }
      Poly h = poly_gcd(f, e, g);
      if (poly_deg(h) > 0 && poly_deg(h) < dg) return h;
    } else {
      // r^((p^d - 1)/2) = prod over i < d of (r^((p-1)/2))^(p^i)
      Poly s = poly_powmod(f, r, (p - 1) / 2, g);
      Poly acc = s;
      for (int i = 1; i < d; ++i) {
        s = poly_powmod(f, s, p, g);
        acc = poly_mod(f, poly_mul(f, acc, s), g);
      }
      Poly h = poly_gcd(f, poly_sub(f, acc, Poly{1}), g);
      if (poly_deg(h) > 0 && poly_deg(h) < dg) return h;
      // acc + 1 catches the other half of the factors
      h = poly_gcd(f, poly_add(f, acc, Poly{1}), g);
      if (poly_deg(h) > 0 && poly_deg(h) < dg) return h;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Rep, Rep>> try_split(const ModMap& phi, std::mt19937_64& rng) {
  const Rep& x = phi.source;
  const uint32_t p = x.alg->p;
  Fp f{p};
  Poly mp = minpoly_of_endo(phi);
  const int deg = poly_deg(mp);
  if (deg <= 0) return std::nullopt;
  // eigenvalue pass: shift by each root in the prime field, ascending
  bool any_root = false;
  for (uint32_t c = 0; c < p; ++c) {
    if (poly_eval(f, mp, c) != 0) continue;
    any_root = true;
    Poly shift{f.neg(c), 1};
    if (auto s = fitting_split(poly_at_map(shift, phi))) return s;
  }
  if (any_root) {
    // a root existed but gave no split: the whole minimal polynomial is a
    // power of (x - c), so this endomorphism cannot separate anything
    return std::nullopt;
  }
  // distinct-degree pass over the rootless minimal polynomial
  Poly xp = poly_x();
  for (int d = 1; d <= deg; ++d) {
    xp = poly_powmod(f, xp, p, mp);  // x^(p^d) mod mp
    Poly g = poly_gcd(f, poly_sub(f, xp, poly_x()), mp);
    const int dg = poly_deg(g);
    if (dg <= 0) continue;
    if (dg < deg) {
      if (auto s = fitting_split(poly_at_map(g, phi))) return s;
    }
    if (dg > d) {
      // several irreducible factors of degree d; separate two of them
      if (auto h = equal_degree_divisor(g, d, p, rng)) {
        if (auto s = fitting_split(poly_at_map(*h, phi))) return s;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Rep> decompose(const Rep& m, std::mt19937_64& rng, int trials_per_piece) {
  std::vector<Rep> out;
  std::deque<Rep> queue;
  if (m.total_dim() > 0) queue.push_back(m);
  while (!queue.empty()) {
    Rep x = std::move(queue.front());
    queue.pop_front();
    if (x.total_dim() == 1) {
      out.push_back(std::move(x));
      continue;
    }
    std::vector<ModMap> endo = hom_basis(x, x);
    if (endo.size() <= 1) {
      out.push_back(std::move(x));
      continue;
    }
    const uint32_t p = x.alg->p;
    bool split_found = false;
    for (int t = 0; t < trials_per_piece && !split_found; ++t) {
      ModMap phi = map_scale(static_cast<uint32_t>(rng() % p), endo[0]);
      for (size_t i = 1; i < endo.size(); ++i) {
        uint32_t c = static_cast<uint32_t>(rng() % p);
        if (c) phi = map_add(phi, map_scale(c, endo[i]));
      }
      if (auto s = try_split(phi, rng)) {
        queue.push_back(std::move(s->first));
        queue.push_back(std::move(s->second));
        split_found = true;
      }
    }
    if (!split_found) out.push_back(std::move(x));
  }
  // deterministic presentation: larger pieces first, then by data
  std::stable_sort(out.begin(), out.end(), [](const Rep& a, const Rep& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() > b.total_dim();
    return a.dims > b.dims;
  });
  return out;
}

}  // namespace taulab
