#pragma once

#include <random>
#include <vector>

#include "taulab/rep.hpp"

namespace taulab {

// minimal projective presentation p1 -> p0 ->> m
struct Presentation {
  ProjModule p0, p1;
  ModMap d1;   // p1.rep -> p0.rep
  ModMap eps;  // p0.rep -> m
};

Presentation minimal_presentation(const Rep& m);

// chain of projectives p_0 .. p_len over m; maps[j] : mods[j+1] -> mods[j]
struct ProjChain {
  std::vector<Rep> mods;
  std::vector<ModMap> maps;
};
ProjChain projective_chain(const Rep& m, int len);

// cokernel of the dualized presentation map, a module over the opposite algebra
Rep transpose(const Rep& m);

// hom(m, regular module) as a module over the opposite algebra, built from
// explicit hom bases into each projective (independently of presentations)
Rep a_dual(const Rep& m);

// the natural map m -> a_dual(a_dual(m))
ModMap evaluation_map(const Rep& m);

bool is_torsionless(const Rep& m);  // evaluation injective

enum class ReflexiveMethod {
  Evaluation,    // evaluation map bijective
  DoubleDualIso, // isomorphic to its double dual by any isomorphism
  TransposeExt,  // ext^1 and ext^2 of the transpose against the regular module vanish
};
bool is_reflexive(const Rep& m, ReflexiveMethod how, std::mt19937_64& rng);

Rep nakayama_nu(const Rep& m);      // standard dual after hom-dual; projectives -> injectives
Rep nakayama_nu_inv(const Rep& m);  // hom-dual after standard dual; injectives -> projectives

Rep ar_translate(const Rep& m);      // standard dual of the transpose
Rep ar_translate_inv(const Rep& m);  // transpose of the standard dual

// dim_k ext^i(m, n) for 1 <= i <= imax, sharing one minimal resolution
std::vector<int> ext_dims_to(const Rep& m, const Rep& n, int imax);
int ext_dim(const Rep& m, const Rep& n, int i);

// whether the translate of m equals nu(omega^2 m) exactly (no summands dropped
// from the syzygies before applying nu); m must be nonzero and non-projective
bool is_tau_perfect(const Rep& m, std::mt19937_64& rng);
// dual comparison for nonzero non-injective m
bool is_tau_inv_perfect(const Rep& m, std::mt19937_64& rng);

int injective_dimension(const Rep& m, int bound);  // throws BoundExceeded past bound
int projective_dimension(const Rep& m, int bound);
bool is_selfinjective(const AlgebraPtr& a);

// max of the self-injective dimensions on both sides (equal when both finite)
int iwanaga_gorenstein_degree(const AlgebraPtr& a, int bound);

// full vanishing of ext^i(m, A) for 1 <= i <= ig_degree; every module qualifies
// at degree 0 (selfinjective case)
bool is_gorenstein_projective(const Rep& m, int ig_degree);

struct DomDim {
  bool infinite = false;       // the coresolution stopped: every term projective
  bool at_least_only = false;  // bound hit; value holds the bound
  int value = 0;
};
DomDim dominant_dimension(const Rep& m, int bound);
DomDim dominant_dimension_algebra(const AlgebraPtr& a, int bound);

// vertices whose projective is also injective
std::vector<int> proj_injective_vertices(const AlgebraPtr& a);

// vertices whose injective is also projective (the socle vertices of the
// projective-injective modules); restriction to these vertices preserves hom
// spaces into any module copresented by projective-injectives
std::vector<int> injective_projective_vertices(const AlgebraPtr& a);

// restriction of a module to the idempotent subalgebra: spaces at the kept
// vertices, arrows acting through the parent path actions
Rep f_restrict(const Rep& m, const SubalgebraRestriction& r);

}  // namespace taulab
