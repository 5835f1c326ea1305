#include <catch_amalgamated.hpp>

#include "lawvere/fuzzy.hpp"

using namespace lawvere;

namespace {

HeytingPtr chain(int n) { return std::make_shared<const FiniteHeytingAlgebra>(FiniteHeytingAlgebra::chain(n)); }

HeytingPtr diamond() {
  return std::make_shared<const FiniteHeytingAlgebra>(
      FiniteHeytingAlgebra::from_covers({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

// On the 5-chain 0 < 1/4 < 1/2 < 3/4 < 1: x \/ 1/2.
const std::vector<int> kJoinHalf{2, 2, 2, 3, 4};

}  // namespace

TEST_CASE("closure under the identity nucleus changes nothing") {
  auto L = chain(5);
  auto op = QClosureOperator::induced(L, {0, 1, 2, 3, 4});
  auto A = make_fuzzy_set(L, {3, 4});
  for (const auto& s : enumerate_fuzzy_subsets(A)) CHECK(fuzzy_closure(op, A, s) == s);
}

TEST_CASE("closure under the top nucleus makes a subset strong") {
  auto L = chain(5);
  auto op = QClosureOperator::induced(L, {4, 4, 4, 4, 4});
  auto A = make_fuzzy_set(L, {3, 2});
  for (const auto& s : enumerate_fuzzy_subsets(A)) {
    auto c = fuzzy_closure(op, A, s);
    CHECK(is_strong(A, c));
    for (int a = 0; a < A.size(); ++a) CHECK(c.contains(a) == s.contains(a));
  }
}

TEST_CASE("a quarter inside three quarters closes to a half") {
  auto L = chain(5);
  auto op = QClosureOperator::induced(L, kJoinHalf);
  auto A = make_fuzzy_set(L, {3});
  auto c = fuzzy_closure(op, A, FuzzySubset{{1}});
  CHECK(c.level == std::vector<int>{2});
  CHECK(describe(A, c) == "{x0:1/2}");
  CHECK_FALSE(is_dense(op, A, FuzzySubset{{1}}));
  CHECK(is_dense(op, make_fuzzy_set(L, {2}), FuzzySubset{{0}}));
}

TEST_CASE("the trivial closure is the whole set") {
  auto L = chain(3);
  auto op = QClosureOperator::trivial(L);
  auto A = make_fuzzy_set(L, {1, 2});
  for (const auto& s : enumerate_fuzzy_subsets(A)) {
    CHECK(fuzzy_closure(op, A, s) == whole_subset(A));
    CHECK(is_dense(op, A, s));
  }
}

TEST_CASE("subset enumeration counts") {
  auto L = chain(3);
  // An element of membership m is absent or at one of the m+1 levels below it.
  CHECK(enumerate_fuzzy_subsets(make_fuzzy_set(L, {0, 1, 2})).size() == 2 * 3 * 4);
  CHECK_THROWS_AS(validate_subset(make_fuzzy_set(L, {1}), FuzzySubset{{2}}), InputError);
  CHECK_THROWS_AS(make_fuzzy_set(L, {3}).validate(), InputError);
}

TEST_CASE("pullbacks meet the membership of the source") {
  auto L = chain(3);
  auto A = make_fuzzy_set(L, {2, 2});
  auto B = make_fuzzy_set(L, {1, 2, 2});
  const std::vector<int> f{0, 0, 1};
  REQUIRE(is_fuzzy_morphism(B, A, f));
  auto p = pullback(B, f, *L, FuzzySubset{{2, -1}});
  CHECK(p.level == std::vector<int>{1, 2, -1});
  CHECK_FALSE(is_fuzzy_morphism(A, B, {0, 0}));
}

TEST_CASE("nucleus-induced operators satisfy the closure laws") {
  for (const auto& L : {chain(3), chain(4), diamond()}) {
    auto corpus = fuzzy_corpus(L, 2);
    for (const auto& n : enumerate_nuclei(L)) {
      auto r = verify_qclosure(QClosureOperator::induced(n), corpus);
      INFO(describe_map(*L, n.map) << " " << r.describe());
      CHECK(r.ok());
    }
    CHECK(verify_qclosure(QClosureOperator::trivial(L), corpus));
  }
}

TEST_CASE("a closure map that is not a nucleus breaks pullback stability") {
  auto L = diamond();
  const std::vector<int> phi{0, 3, 2, 3};
  REQUIRE(verify_closure_map(*L, phi));
  REQUIRE_FALSE(verify_nucleus(*L, phi));
  auto r = verify_qclosure(QClosureOperator::induced(L, phi), fuzzy_corpus(L, 2));
  CHECK_FALSE(r.ok());
  CHECK(r.law() == "(iv) stable under pullback");
}

TEST_CASE("nuclei are recovered from the operators they induce") {
  for (const auto& L : {chain(4), chain(5), diamond()}) {
    auto corpus = fuzzy_corpus(L, 2);
    for (const auto& n : enumerate_nuclei(L)) {
      auto op = QClosureOperator::induced(n);
      auto back = nucleus_from_operator(op);
      CHECK(back == n.map);
      CHECK(same_operator(op, QClosureOperator::induced(L, back), corpus));
    }
  }
  CHECK_THROWS_AS(nucleus_from_operator(QClosureOperator::trivial(chain(3))), InputError);
}

TEST_CASE("sheaves for a nucleus are the sets valued in its fixed points") {
  auto L = chain(5);
  auto op = QClosureOperator::induced(L, kJoinHalf);
  auto corpus = fuzzy_corpus(L, 1);
  CHECK(classify_fuzzy(make_fuzzy_set(L, {2, 3, 4}), op, corpus).sheaf);
  auto q = classify_fuzzy(make_fuzzy_set(L, {1, 4}), op, corpus);
  CHECK(q.separated);
  CHECK_FALSE(q.sheaf);
  CHECK_FALSE(q.reason.empty());
}

TEST_CASE("nucleus classification agrees with the factorization oracle") {
  for (const auto& L : {chain(3), chain(4), diamond()}) {
    auto corpus = fuzzy_corpus(L, 2);
    for (const auto& n : enumerate_nuclei(L)) {
      auto op = QClosureOperator::induced(n);
      for (const auto& B : corpus) {
        auto c = classify_fuzzy(B, op, corpus);
        auto o = fuzzy_factorization_check(B, op, corpus);
        INFO(describe(op) << " on " << describe(B));
        CHECK(c.separated == o.separated);
        CHECK(c.sheaf == o.sheaf());
      }
    }
  }
}

TEST_CASE("trivial operator: separated iff at most one element, sheaf only the top point") {
  auto L = chain(3);
  auto op = QClosureOperator::trivial(L);
  auto corpus = fuzzy_corpus(L, 2);
  for (const auto& B : corpus) {
    auto o = fuzzy_factorization_check(B, op, corpus);
    INFO(describe(B));
    CHECK(o.separated == (B.size() <= 1));
    CHECK(o.sheaf() == (B.size() == 1 && B.membership[0] == L->top()));
    auto c = classify_fuzzy(B, op, corpus);
    CHECK(c.separated == o.separated);
    CHECK(c.sheaf == o.sheaf());
  }
}

TEST_CASE("fuzzy corpus lists multisets of memberships") {
  // Multisets of size <= 2 over 3 values: 1 + 3 + 6.
  CHECK(fuzzy_corpus(chain(3), 2).size() == 10);
  CHECK(describe(make_fuzzy_set(chain(3), {1, 2})) == "{x0:1/2, x1:1}");
}
