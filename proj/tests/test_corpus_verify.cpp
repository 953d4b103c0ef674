#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "taulab/corpus.hpp"
#include "taulab/errors.hpp"
#include "taulab/verify.hpp"

using namespace taulab;

namespace {

AlgebraPtr chain4() { return build_nakayama(KupischSeries{{2, 2, 2, 1}, false}, 1009); }
AlgebraPtr cyc334() { return build_nakayama(KupischSeries{{3, 3, 4}, true}, 1009); }

std::vector<int> min_rotation(std::vector<int> v) {
  std::vector<int> best = v;
  for (size_t r = 1; r < v.size(); ++r) {
    std::rotate(v.begin(), v.begin() + 1, v.end());
    best = std::min(best, v);
  }
  return best;
}

}  // namespace

TEST_CASE("series enumeration is exhaustive, valid and canonical") {
  auto small = enumerate_kupisch(2, 2);
  REQUIRE(small.size() == 4);
  CHECK(small[0] == KupischSeries{{1}, false});
  CHECK(small[1] == KupischSeries{{2, 1}, false});
  CHECK(small[2] == KupischSeries{{2}, true});
  CHECK(small[3] == KupischSeries{{2, 2}, true});

  auto all = enumerate_kupisch(4, 5);
  CHECK(all == enumerate_kupisch(4, 5));
  int linear = 0;
  std::set<std::vector<int>> canon;
  for (const auto& k : all) {
    CHECK_NOTHROW(validate_kupisch(k));
    CHECK(static_cast<int>(k.lengths.size()) <= 4);
    for (int c : k.lengths) CHECK(c <= 5);
    if (!k.cyclic) {
      ++linear;
    } else {
      // exactly one representative per rotation class, the smallest one
      CHECK(k.lengths == min_rotation(k.lengths));
      CHECK(canon.insert(min_rotation(k.lengths)).second);
    }
  }
  CHECK(linear == 9);
  auto has = [&](std::vector<int> lens, bool cyc) {
    return std::find(all.begin(), all.end(), KupischSeries{std::move(lens), cyc}) != all.end();
  };
  CHECK(has({2, 2, 2, 1}, false));
  CHECK(has({3, 3, 4}, true));
  CHECK(has({4, 3, 2, 1}, false));
  CHECK_FALSE(has({3, 4, 3}, true));  // non-canonical rotation
}

TEST_CASE("corpus labels and file texts") {
  CHECK(kupisch_label({{2, 2, 2, 1}, false}) == "kupisch_linear_2_2_2_1");
  CHECK(kupisch_label({{3, 3, 4}, true}) == "kupisch_cyclic_3_3_4");
  auto plain = corpus_algebras(2, 2, 1009, false);
  CHECK(plain.size() == 4);
  auto rich = corpus_algebras(2, 2, 1009, true);
  CHECK(rich.size() == 7);
  std::set<std::string> labels;
  for (const auto& e : rich) {
    CHECK(labels.insert(e.label).second);
    REQUIRE(e.algebra);
    CHECK(e.algebra->dim() >= 1);
    REQUIRE_FALSE(e.json_text.empty());
    CHECK(e.json_text.back() == '\n');
  }
  CHECK(labels.count("a2") == 1);
  CHECK(labels.count("commutative_square") == 1);
  CHECK(labels.count("gentle_branch") == 1);
}

TEST_CASE("indecomposable listings") {
  std::mt19937_64 rng(1);
  auto serial = all_indecomposables(chain4(), rng);
  REQUIRE(serial.size() == 7);
  CHECK(serial[0].label == "PJ(0,1)");
  CHECK(serial[1].label == "P(0)");
  CHECK(all_indecomposables(cyc334(), rng).size() == 10);

  // closure search on a non-serial algebra: deterministic, deduplicated, complete
  // enough to contain every simple, projective and injective
  AlgebraPtr sq;
  for (const auto& e : extra_examples(1009))
    if (e.label == "commutative_square") sq = e.algebra;
  REQUIRE(sq);
  std::mt19937_64 r1(3), r2(77);
  auto one = all_indecomposables(sq, r1);
  auto two = all_indecomposables(sq, r2);
  CHECK(one.size() == two.size());
  CHECK(one.size() >= 4);
  for (size_t i = 0; i < one.size(); ++i) {
    std::mt19937_64 r(5);
    CHECK(decompose(one[i].rep, r).size() == 1);
    for (size_t j = i + 1; j < one.size(); ++j) {
      CHECK_FALSE(is_isomorphic(one[i].rep, one[j].rep, r).iso);
    }
  }
  auto contains = [&](const Rep& m) {
    std::mt19937_64 r(8);
    for (const auto& lr : one)
      if (is_isomorphic(lr.rep, m, r).iso) return true;
    return false;
  };
  for (int v = 0; v < sq->nvert; ++v) {
    CHECK(contains(simple_module(sq, v)));
    CHECK(contains(projective_module(sq, v)));
    CHECK(contains(injective_module(sq, v)));
  }
}

TEST_CASE("suite bookkeeping on the chain algebra") {
  auto a = chain4();
  VerifyOptions opt;
  struct Want {
    const char* suite;
    int checked;
  };
  for (const auto& w : std::initializer_list<Want>{{"main-theorem", 3},
                                                   {"dual-theorem", 3},
                                                   {"trtr", 3},
                                                   {"lemma-dual-syzygy", 6},
                                                   {"per-tau-bijection", 2},
                                                   {"selfinjective-criterion", 5},
                                                   // 7 indecomposables plus
                                                   // 5x5 reflexive hom pairs
                                                   {"domdim-reflexive", 32},
                                                   {"nakayama-oracle", 7}}) {
    CAPTURE(w.suite);
    VerifyResult r = run_suite(w.suite, "chain", a, opt);
    CHECK(r.passed());
    CHECK(r.checked == w.checked);
    CHECK(r.suite == w.suite);
    CHECK(r.algebra == "chain");
  }
  // Gorenstein degree three: the degree-two equivalence makes no claim here
  VerifyResult gp = run_suite("gp-equals-tau-perfect", "chain", a, opt);
  CHECK(gp.passed());
  CHECK(gp.checked == 0);
  VerifyOptions light;
  light.random_sums = 10;
  VerifyResult refl = run_suite("reflexive-equivalences", "chain", a, light);
  CHECK(refl.passed());
  CHECK(refl.checked == 17);
}

TEST_CASE("suite bookkeeping on the cyclic algebra") {
  auto a = cyc334();
  VerifyOptions opt;
  VerifyResult gp = run_suite("gp-equals-tau-perfect", "cyc", a, opt);
  CHECK(gp.passed());
  CHECK(gp.checked == 7);
  VerifyResult nak = run_suite("nakayama-oracle", "cyc", a, opt);
  CHECK(nak.passed());
  CHECK(nak.checked == 10);
  CHECK(run_suite("main-theorem", "cyc", a, opt).passed());
  CHECK(run_suite("selfinjective-criterion", "cyc", a, opt).passed());
}

TEST_CASE("suite names and dispatch") {
  CHECK(suite_names().size() == 10);
  for (const auto& s : suite_names()) CHECK(is_suite_name(s));
  CHECK_FALSE(is_suite_name("no-such-suite"));
  VerifyOptions opt;
  CHECK_THROWS_AS(run_suite("no-such-suite", "x", chain4(), opt), InvalidInput);
}

TEST_CASE("every suite passes across a small corpus") {
  auto corpus = corpus_algebras(2, 2, 1009, true);
  VerifyOptions opt;
  opt.random_sums = 20;
  for (const auto& suite : suite_names()) {
    auto results = run_suite_corpus(suite, corpus, opt);
    REQUIRE(results.size() == corpus.size());
    for (size_t i = 1; i < results.size(); ++i) CHECK(results[i - 1].algebra <= results[i].algebra);
    for (const auto& r : results) {
      std::string detail;
      for (const auto& f : r.failures)
        detail += f.module_label + ": expected " + f.expected + ", got " + f.got + "; ";
      CAPTURE(suite);
      CAPTURE(r.algebra);
      CAPTURE(detail);
      CHECK(r.passed());
    }
  }
}

TEST_CASE("random direct sums keep the reflexivity methods in agreement") {
  VerifyOptions opt;
  opt.seed = 12345;
  opt.random_sums = 40;
  VerifyResult r = run_suite("reflexive-equivalences", "cyc", cyc334(), opt);
  CHECK(r.passed());
  CHECK(r.checked == 50);
}
