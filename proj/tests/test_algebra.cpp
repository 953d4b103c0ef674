#include "doctest.h"
#include "taulab/algebra.hpp"
#include "taulab/errors.hpp"

using namespace taulab;

namespace {

AlgebraPtr nak(std::vector<int> lengths, bool cyclic, uint32_t p = 1009) {
  return build_nakayama(KupischSeries{std::move(lengths), cyclic}, p);
}

void check_associative(const AlgebraPtr& a) {
  int n = a->dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto ij = a->mult_row(i, j);
      for (int k = 0; k < n; ++k) {
        auto jk = a->mult_row(j, k);
        // (b_i b_j) b_k
        std::vector<uint32_t> lhs(n, 0), rhs(n, 0);
        Fp f = a->field();
        for (int s = 0; s < n; ++s) {
          if (ij[s])
            for (int t = 0; t < n; ++t)
              lhs[t] = f.add(lhs[t], f.mul(ij[s], a->mult_row(s, k)[t]));
          if (jk[s])
            for (int t = 0; t < n; ++t)
              rhs[t] = f.add(rhs[t], f.mul(jk[s], a->mult_row(i, s)[t]));
        }
        CHECK(lhs == rhs);
      }
    }
}

}  // namespace

TEST_CASE("Kupisch validation accepts exactly the admissible series") {
  CHECK_NOTHROW(validate_kupisch({{1}, false}));
  CHECK_NOTHROW(validate_kupisch({{2, 1}, false}));
  CHECK_NOTHROW(validate_kupisch({{2, 2, 2, 1}, false}));
  CHECK_NOTHROW(validate_kupisch({{4, 3, 2, 1}, false}));
  CHECK_NOTHROW(validate_kupisch({{2}, true}));
  CHECK_NOTHROW(validate_kupisch({{2, 3}, true}));
  CHECK_NOTHROW(validate_kupisch({{3, 3, 4}, true}));

  CHECK_THROWS_AS(validate_kupisch({{}, false}), InvalidKupisch);
  CHECK_THROWS_AS(validate_kupisch({{3, 1}, false}), InvalidKupisch);   // drop of 2
  CHECK_THROWS_AS(validate_kupisch({{1, 1}, false}), InvalidKupisch);   // interior 1
  CHECK_THROWS_AS(validate_kupisch({{2, 2}, false}), InvalidKupisch);   // must end in 1
  CHECK_THROWS_AS(validate_kupisch({{2, 4}, true}), InvalidKupisch);    // wrap drop of 2
  CHECK_THROWS_AS(validate_kupisch({{1}, true}), InvalidKupisch);       // cyclic needs >= 2
  CHECK_THROWS_AS(validate_kupisch({{1, 2}, true}), InvalidKupisch);
}

TEST_CASE("algebra dimensions match composition lengths") {
  CHECK(nak({2, 2, 2, 1}, false)->dim() == 7);
  CHECK(nak({3, 3, 4}, true)->dim() == 10);
  CHECK(nak({2, 1}, false)->dim() == 3);
  CHECK(nak({2, 2}, true)->dim() == 4);
  CHECK(nak({1}, false)->dim() == 1);
  CHECK(nak({5}, true)->dim() == 5);
}

TEST_CASE("series arrows run around the cycle") {
  auto a = nak({3, 3, 4}, true);
  REQUIRE(a->arrow_count() == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(a->arrow_source(k) == k);
    CHECK(a->arrow_target(k) == (k + 1) % 3);
  }
  CHECK(a->kupisch.has_value());
  CHECK(a->kupisch->lengths == std::vector<int>{3, 3, 4});
}

TEST_CASE("quiver presentations build the expected algebras") {
  AlgebraPresentation square;
  square.field = 1009;
  square.quiver.vertex_count = 4;
  square.quiver.arrows = {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}};
  square.relations = {Relation{{RelationTerm{1, {"a", "b"}}, RelationTerm{-1, {"c", "d"}}}}};
  auto sq = build_algebra(square);
  CHECK(sq->dim() == 9);
  check_associative(sq);

  AlgebraPresentation gentle;
  gentle.field = 1009;
  gentle.quiver.vertex_count = 4;
  gentle.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 1, 3}};
  gentle.relations = {Relation{{RelationTerm{1, {"a", "b"}}}}};
  CHECK(build_algebra(gentle)->dim() == 8);

  AlgebraPresentation a2;
  a2.field = 1009;
  a2.quiver.vertex_count = 2;
  a2.quiver.arrows = {{"a", 0, 1}};
  CHECK(build_algebra(a2)->dim() == 3);

  check_associative(nak({3, 3, 4}, true));
}

TEST_CASE("relation admissibility is enforced") {
  AlgebraPresentation p;
  p.field = 1009;
  p.quiver.vertex_count = 2;
  p.quiver.arrows = {{"a", 0, 1}, {"b", 0, 1}};
  // length-1 relation
  p.relations = {Relation{{RelationTerm{1, {"a"}}}}};
  CHECK_THROWS_AS(build_algebra(p), NotAdmissible);
  // non-parallel terms
  p.quiver.arrows = {{"a", 0, 1}, {"b", 1, 0}, {"c", 1, 1}};
  p.relations = {Relation{{RelationTerm{1, {"a", "b"}}, RelationTerm{1, {"a", "c"}}}}};
  CHECK_THROWS_AS(build_algebra(p), NotAdmissible);
  // unknown arrow name
  p.relations = {Relation{{RelationTerm{1, {"a", "z"}}}}};
  CHECK_THROWS_AS(build_algebra(p), ParseError);
}

TEST_CASE("an unbounded loop hits the path length bound") {
  AlgebraPresentation p;
  p.field = 1009;
  p.quiver.vertex_count = 1;
  p.quiver.arrows = {{"a", 0, 0}};
  p.max_path_length = 5;
  CHECK_THROWS_AS(build_algebra(p), BoundExceeded);
}

TEST_CASE("opposite algebra is a strict involution") {
  auto a = nak({2, 2, 2, 1}, false);
  auto b = opposite_algebra(a);
  CHECK(opposite_algebra(b).get() == a.get());
  CHECK(b->dim() == 7);
  // projective dimensions on the opposite side: paths ending at each vertex
  std::vector<int> opdims(4, 0);
  for (const auto& bp : b->basis) ++opdims[bp.source];
  CHECK(opdims == std::vector<int>{1, 2, 2, 2});
  check_associative(b);
}

TEST_CASE("corner algebra at the projective-injective vertices") {
  auto a = nak({2, 2, 2, 1}, false);
  auto r = idempotent_subalgebra(a, {0, 1, 2});
  CHECK(r.sub->dim() == 5);
  CHECK(r.sub->nvert == 3);
  CHECK(r.sub->arrow_count() == 2);
  CHECK(r.vertices == std::vector<int>{0, 1, 2});
  check_associative(r.sub);
  // the corner over every vertex reproduces the algebra structurally
  auto full = idempotent_subalgebra(a, {0, 1, 2, 3});
  CHECK(structurally_equal(*full.sub, *a));
  CHECK_THROWS_AS(idempotent_subalgebra(a, {}), InvalidIdempotent);
  CHECK_THROWS_AS(idempotent_subalgebra(a, {7}), InvalidVertex);
}
