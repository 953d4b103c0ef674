#pragma once
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "taulab/field.hpp"
#include "taulab/matrix.hpp"

namespace taulab {

struct QuiverArrow {
  std::string name;
  int source = 0;
  int target = 0;
  bool operator==(const QuiverArrow&) const = default;
};

struct Quiver {
  int vertex_count = 0;
  std::vector<QuiverArrow> arrows;
};

// one summand of a relation: coef * (path given by arrow names, left to right)
struct RelationTerm {
  long long coef = 1;
  std::vector<std::string> path;
};
struct Relation {
  std::vector<RelationTerm> terms;
};

struct AlgebraPresentation {
  uint32_t field = 1009;
  Quiver quiver;
  std::vector<Relation> relations;
  int max_path_length = 64;
};

// admissibility: cyclic needs all c_i >= 2 and c_{i+1 mod n} >= c_i - 1;
// linear needs c_{n-1} = 1 (no outgoing arrow at the last vertex),
// c_i >= 2 elsewhere, and c_{i+1} >= c_i - 1
struct KupischSeries {
  std::vector<int> lengths;
  bool cyclic = false;
  bool operator==(const KupischSeries&) const = default;
};

// relation with arrow indices resolved, for representation validation
struct ResolvedRelationTerm {
  uint32_t coef = 1;
  std::vector<int> word;  // acting-arrow indices, composed left to right
};
struct ResolvedRelation {
  std::vector<ResolvedRelationTerm> terms;
  int source = 0, target = 0;
};

// residue class of a path; basis[0..nvert) are the vertex idempotents
struct BasisPath {
  int source = 0, target = 0, length = 0;
  std::vector<int> word;  // acting-arrow indices; unset when !words_valid
  std::string display;
  bool operator==(const BasisPath&) const = default;
};

// A basic finite-dimensional algebra presented by a basis of path residues
// and a full multiplication table.  Always handled through shared_ptr;
// immutable after construction apart from the cached opposite.
struct Algebra {
  uint32_t p = 1009;
  int nvert = 0;
  std::vector<QuiverArrow> quiver_arrows;  // presentation quiver (printing/io)
  std::vector<BasisPath> basis;
  // indices into basis of the chosen radical generators ("acting arrows");
  // for quiver-built algebras these are exactly the length-1 residues
  std::vector<int> arrow_basis_index;
  // mult[i*dim+j] = coefficient vector of basis_i * basis_j over the basis
  std::vector<std::vector<uint32_t>> mult;
  std::vector<ResolvedRelation> relations;  // empty for derived algebras
  bool words_valid = true;
  std::optional<KupischSeries> kupisch;

  int dim() const { return static_cast<int>(basis.size()); }
  int arrow_count() const { return static_cast<int>(arrow_basis_index.size()); }
  int arrow_source(int k) const { return basis[arrow_basis_index[k]].source; }
  int arrow_target(int k) const { return basis[arrow_basis_index[k]].target; }
  const std::string& arrow_name(int k) const { return basis[arrow_basis_index[k]].display; }
  Fp field() const { return Fp{p}; }
  const std::vector<uint32_t>& mult_row(int i, int j) const {
    return mult[static_cast<size_t>(i) * basis.size() + j];
  }
  std::vector<uint32_t> mul_elems(const std::vector<uint32_t>& x,
                                  const std::vector<uint32_t>& y) const;

  Algebra() = default;
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  mutable std::mutex opp_mutex;
  mutable std::shared_ptr<const Algebra> opp_strong;
  mutable std::weak_ptr<const Algebra> opp_weak;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr build_algebra(const AlgebraPresentation& pres);

void validate_kupisch(const KupischSeries& k);
AlgebraPresentation nakayama_presentation(const KupischSeries& k, uint32_t field,
                                          int max_path_length = 64);
AlgebraPtr build_nakayama(const KupischSeries& k, uint32_t field);

// strict involution: opposite_algebra(opposite_algebra(a)) is pointer-equal
// to a while a stays alive
AlgebraPtr opposite_algebra(const AlgebraPtr& a);

bool structurally_equal(const Algebra& x, const Algebra& y);
bool same_algebra(const AlgebraPtr& x, const AlgebraPtr& y);

struct SubalgebraRestriction {
  AlgebraPtr sub;
  std::vector<int> vertices;         // parent vertex per sub vertex, ascending
  std::vector<int> basis_to_parent;  // parent basis index per sub basis index
};
// corner algebra eAe for the idempotent e = sum of e_i, i in f
SubalgebraRestriction idempotent_subalgebra(const AlgebraPtr& a, const std::vector<int>& f);

}  // namespace taulab
