#include <catch_amalgamated.hpp>

#include <set>

#include "lawvere/lattice.hpp"

using namespace lawvere;

namespace {

HeytingPtr share(FiniteHeytingAlgebra L) { return std::make_shared<const FiniteHeytingAlgebra>(std::move(L)); }

// Diamond 0 < a, b < 1.
FiniteHeytingAlgebra diamond() { return FiniteHeytingAlgebra::from_covers({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// Nuclei by trying all n^n maps against the three defining laws.
std::set<std::vector<int>> brute_nuclei(const FiniteHeytingAlgebra& L) {
  const int n = L.size();
  std::set<std::vector<int>> out;
  std::vector<int> f(n, 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      ok = L.leq(a, f[a]) && f[f[a]] == f[a];
      for (int b = 0; b < n && ok; ++b) ok = f[L.meet(a, b)] == L.meet(f[a], f[b]);
    }
    if (ok) out.insert(f);
    int i = 0;
    for (; i < n; ++i) {
      if (++f[i] < n) break;
      f[i] = 0;
    }
    if (i == n) return out;
  }
}

}  // namespace

TEST_CASE("chains and boolean algebras") {
  auto c3 = FiniteHeytingAlgebra::chain(3);
  CHECK(c3.size() == 3);
  CHECK(c3.name(1) == "1/2");
  CHECK(c3.implies(2, 1) == 1);
  CHECK(c3.implies(1, 2) == 2);
  CHECK(c3.neg(1) == c3.bottom());
  CHECK(verify_tables(c3));

  auto b2 = FiniteHeytingAlgebra::boolean(2);
  CHECK(b2.size() == 4);
  for (int a = 0; a < 4; ++a) CHECK(b2.neg(b2.neg(a)) == a);
  CHECK(verify_tables(b2));
}

TEST_CASE("implication is the largest c with c /\\ a <= b") {
  auto L = diamond();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      int best = -1;
      for (int c = 0; c < 4; ++c)
        if (L.leq(L.meet(c, a), b) && (best < 0 || L.leq(best, c))) best = c;
      CHECK(L.implies(a, b) == best);
    }
}

TEST_CASE("N5 and M3 are rejected") {
  // N5: 0 < a < c < 1, 0 < b < 1.
  auto n5 = order_from_covers(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
  auto r = verify_heyting(n5, {"0", "a", "b", "c", "1"});
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.witness().empty());
  // M3: three atoms.
  auto m3 = order_from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK_FALSE(verify_heyting(m3).ok());
  CHECK_THROWS_AS(FiniteHeytingAlgebra::from_order({"0", "a", "b", "c", "1"}, m3), InputError);
}

TEST_CASE("malformed orders are rejected") {
  CHECK_THROWS_AS(order_from_covers(2, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(order_from_covers(2, {{0, 5}}), InputError);
  // Two incomparable maximal elements: no top.
  CHECK_FALSE(verify_heyting(order_from_covers(3, {{0, 1}, {0, 2}})).ok());
}

TEST_CASE("nucleus enumeration agrees with brute force") {
  std::vector<HeytingPtr> algebras{share(FiniteHeytingAlgebra::chain(2)), share(FiniteHeytingAlgebra::chain(3)),
                                   share(FiniteHeytingAlgebra::chain(4)), share(FiniteHeytingAlgebra::chain(5)),
                                   share(diamond()), share(FiniteHeytingAlgebra::boolean(3))};
  for (const auto& L : algebras) {
    std::set<std::vector<int>> got;
    for (const auto& n : enumerate_nuclei(L)) {
      got.insert(n.map);
      CHECK(verify_nucleus(*L, n.map));
      CHECK(verify_nucleus_derived(*L, n.map));
    }
    CHECK(got == brute_nuclei(*L));
  }
}

TEST_CASE("nucleus counts on small chains") {
  CHECK(enumerate_nuclei(share(FiniteHeytingAlgebra::chain(2))).size() == 2);
  // A chain of n elements has 2^(n-1) nuclei: any set of fixed points containing top.
  CHECK(enumerate_nuclei(share(FiniteHeytingAlgebra::chain(3))).size() == 4);
  CHECK(enumerate_nuclei(share(FiniteHeytingAlgebra::chain(5))).size() == 16);
  CHECK(enumerate_nuclei(share(diamond())).size() == 4);
}

TEST_CASE("nucleus size bound") {
  CHECK_THROWS_AS(enumerate_nuclei(share(FiniteHeytingAlgebra::chain(9))), BudgetExceeded);
  CHECK(enumerate_nuclei(share(FiniteHeytingAlgebra::chain(9)), 9).size() == 256);
}

TEST_CASE("maps failing the nucleus laws are caught") {
  auto L = diamond();
  // Sends a to 1 and keeps b: phi(a /\ b) = 0 but phi(a) /\ phi(b) = b.
  auto r = verify_nucleus(L, {0, 3, 2, 3});
  CHECK_FALSE(r.ok());
  CHECK_FALSE(verify_nucleus_derived(L, {0, 3, 2, 3}).ok());
  CHECK(verify_closure_map(L, {0, 3, 2, 3}).ok());
  CHECK_FALSE(verify_closure_map(L, {1, 0, 2, 3}).ok());
}

TEST_CASE("double negation is a nucleus") {
  for (const auto& L : enumerate_heyting_algebras(6)) {
    auto nn = double_negation_map(L);
    CHECK(verify_nucleus(L, nn));
  }
  auto c3 = FiniteHeytingAlgebra::chain(3);
  CHECK(double_negation_map(c3) == std::vector<int>{0, 2, 2});
}

TEST_CASE("De Morgan algebras") {
  CHECK(is_de_morgan(FiniteHeytingAlgebra::chain(4)));
  CHECK(is_de_morgan(FiniteHeytingAlgebra::boolean(2)));
  // Two atoms under a new top: neg a = b, neg b = a, but a \/ b sits below 1
  // and neg(a /\ b) = 1 while neg a \/ neg b = a \/ b.
  auto L = FiniteHeytingAlgebra::from_covers({"0", "a", "b", "ab", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
  CHECK_FALSE(is_de_morgan(L));
}

TEST_CASE("distributive lattices up to isomorphism") {
  // OEIS A006982: 1, 1, 1, 2, 3, 5, 8 for n = 1..7.
  auto all = enumerate_heyting_algebras(7);
  std::vector<int> by_size(8);
  for (const auto& L : all) ++by_size[L.size()];
  CHECK(by_size == std::vector<int>{0, 1, 1, 1, 2, 3, 5, 8});
  int de_morgan = 0;
  for (const auto& L : all) de_morgan += is_de_morgan(L);
  CHECK(de_morgan == 16);
}

TEST_CASE("map rendering") { CHECK(describe_map(FiniteHeytingAlgebra::chain(3), {0, 2, 2}) == "0->0 1/2->1 1->1"); }
