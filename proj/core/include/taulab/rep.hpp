#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "taulab/algebra.hpp"
#include "taulab/matrix.hpp"

namespace taulab {

// finite-dimensional right module over a bound quiver algebra, stored as a
// representation: one space per vertex, one matrix per acting arrow.
// the arrow a: s -> t acts by a matrix of shape dims[t] x dims[s] applied on
// the left of column vectors; a path a1*a2*...*ak (left to right) acts by
// X(ak) * ... * X(a1).
struct Rep {
  AlgebraPtr alg;
  std::vector<int> dims;    // one per vertex
  std::vector<Mat> action;  // one per acting arrow, indexed like alg->arrow_basis_index

  int total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
  }
  bool is_zero() const { return total_dim() == 0; }
};

// morphism of representations: one block per vertex, target.dims[v] x source.dims[v],
// commuting with all arrow actions.
struct ModMap {
  Rep source, target;
  std::vector<Mat> blocks;
};

void validate_rep(const Rep& m);     // shapes + relations (when the algebra carries words)
void validate_map(const ModMap& f);  // shapes + commutation with every arrow

bool rep_equal(const Rep& x, const Rep& y);  // same algebra, identical data

Rep zero_rep(const AlgebraPtr& a);
Rep simple_module(const AlgebraPtr& a, int vertex);
Rep projective_module(const AlgebraPtr& a, int vertex);  // e_vertex * A
Rep injective_module(const AlgebraPtr& a, int vertex);   // dual of the opposite projective
Rep regular_rep(const AlgebraPtr& a);                    // direct sum of all projectives
Rep direct_sum(const std::vector<Rep>& parts);

// inclusion and projection maps of one summand of a direct sum
ModMap summand_inclusion(const std::vector<Rep>& parts, const Rep& sum, int idx);
ModMap summand_projection(const std::vector<Rep>& parts, const Rep& sum, int idx);

// action of a path given by acting-arrow indices: a matrix M_source -> M_target
Mat path_action(const Rep& m, const std::vector<int>& word, int source);

// standard duality to the opposite algebra: transpose every action matrix.
// applying it twice reproduces the original data exactly.
Rep k_dual(const Rep& m);
ModMap k_dual(const ModMap& f);

ModMap id_map(const Rep& m);
ModMap zero_map(const Rep& src, const Rep& dst);
ModMap compose(const ModMap& g, const ModMap& f);  // g after f
ModMap map_add(const ModMap& f, const ModMap& g);
ModMap map_scale(uint32_t c, const ModMap& f);
bool map_is_zero(const ModMap& f);

struct Submodule {
  Rep rep;
  ModMap incl;  // embedding into the ambient module
};

struct Quotient {
  Rep rep;
  ModMap proj;               // ambient -> quotient
  std::vector<Mat> section;  // linear (not module) right inverse of proj, per vertex
};

Submodule kernel(const ModMap& f);
Submodule image(const ModMap& f);              // embeds into f.target
Quotient quotient_by(const ModMap& incl);      // ambient = incl.target, by the image of incl
Quotient cokernel(const ModMap& f);

Submodule radical_submodule(const Rep& m);  // sum of all arrow images
Submodule socle_submodule(const Rep& m);    // joint kernel of all arrow actions
Quotient top_quotient(const Rep& m);        // m / rad m

// projective module with an explicit decomposition into copies of e_v * A;
// at each vertex w the coordinates are grouped by copy, in order, and inside
// one copy of e_v * A they run over the algebra basis paths v -> w in basis order.
struct ProjModule {
  Rep rep;
  std::vector<int> copies;  // vertex of each copy
};

ProjModule proj_sum(const AlgebraPtr& a, const std::vector<int>& copies);
// layout of coordinates at vertex w: (copy index, algebra basis index) pairs
std::vector<std::pair<int, int>> proj_coords(const ProjModule& p, int w);

// left multiplication by x in e_to * A * e_from, as a map e_from*A -> e_to*A
ModMap left_mult_map(const AlgebraPtr& a, const std::vector<uint32_t>& x, int from, int to);

// map between explicit projectives given by a matrix of algebra elements:
// x[k][l] lies in e_{dst.copies[k]} * A * e_{src.copies[l]} and the map sends
// the generator of source copy l to the sum over k of x[k][l] placed in copy k.
ModMap proj_block_map(const ProjModule& src, const ProjModule& dst,
                      const std::vector<std::vector<std::vector<uint32_t>>>& x);

struct Cover {
  ProjModule p;
  ModMap eps;                             // p.rep ->> module being covered
  std::vector<std::pair<int, int>> gens;  // per copy: (vertex, coordinate in M_vertex) it hits
};

Cover projective_cover(const Rep& m);
Rep syzygy_step(const Rep& m);                 // kernel of the projective cover
Rep syzygy(const Rep& m, int n);               // n-fold, n >= 0
ModMap injective_envelope(const Rep& m);       // the embedding m -> E(m)
Rep cosyzygy_step(const Rep& m);               // cokernel of the injective envelope
Rep cosyzygy(const Rep& m, int n);

// basis of the space of module maps m -> n, deterministic for fixed inputs
std::vector<ModMap> hom_basis(const Rep& m, const Rep& n);

struct IsoResult {
  bool iso = false;
  std::optional<ModMap> witness;  // present when iso
};

// one-sided error: a true result always carries a checked certificate; a false
// result is exact when the search space was exhausted and whp otherwise.
IsoResult is_isomorphic(const Rep& m, const Rep& n, std::mt19937_64& rng);

bool is_projective_rep(const Rep& m);
bool is_injective_rep(const Rep& m);

// indecomposable summands, via random endomorphisms and fitting decompositions
std::vector<Rep> decompose(const Rep& m, std::mt19937_64& rng, int trials_per_piece = 128);

Rep strip_projectives(const Rep& m, std::mt19937_64& rng);
Rep strip_injectives(const Rep& m, std::mt19937_64& rng);

// serial (uniserial-on-both-sides) algebras have a closed list of
// indecomposables: quotients of the projectives by radical powers
struct SerialModule {
  Rep rep;
  int vertex = 0;  // top
  int layers = 0;  // composition length
  bool projective = false;
  std::string label;
};

bool is_uniserial(const Rep& m);
bool is_serial_algebra(const AlgebraPtr& a);
// throws NotNakayama when some projective or injective is not uniserial
std::vector<SerialModule> serial_indecomposables(const AlgebraPtr& a);
// P_vertex / rad^layers, 1 <= layers <= composition length of P_vertex
Rep serial_quotient(const AlgebraPtr& a, int vertex, int layers);

}  // namespace taulab
