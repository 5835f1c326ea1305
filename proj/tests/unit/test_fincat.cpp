#include <catch_amalgamated.hpp>

#include "lawvere/check.hpp"
#include "lawvere/fincat.hpp"

using namespace lawvere;

namespace {

// Monotone maps {0..k} -> {0..l}, optionally injective, by brute force.
int count_monotone(int k, int l, bool injective) {
  int count = 0;
  std::vector<int> f(k + 1, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < k; ++i) ok = ok && (injective ? f[i] < f[i + 1] : f[i] <= f[i + 1]);
    count += ok;
    int i = 0;
    for (; i <= k; ++i) {
      if (++f[i] <= l) break;
      f[i] = 0;
    }
    if (i > k) return count;
  }
}

std::vector<int> raw_compose(const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> out;
  for (int v : f) out.push_back(g[v]);
  return out;
}

}  // namespace

TEST_CASE("hom sets of the truncated simplex categories count monotone maps") {
  for (int n = 1; n <= 3; ++n) {
    auto semi = FiniteIndexCategory::build("semi" + std::to_string(n));
    auto full = FiniteIndexCategory::build("sset" + std::to_string(n));
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) {
        CHECK(static_cast<int>(semi->hom(a, b).size()) == count_monotone(a, b, true));
        CHECK(static_cast<int>(full->hom(a, b).size()) == count_monotone(a, b, false));
      }
  }
}

TEST_CASE("composition agrees with composing the underlying maps") {
  auto C = FiniteIndexCategory::build("sset3");
  for (int f = 0; f < C->morphism_count(); ++f)
    for (int g = 0; g < C->morphism_count(); ++g) {
      auto gf = C->compose(g, f);
      const bool composable = C->morphism(f).target == C->morphism(g).source;
      REQUIRE(gf.has_value() == composable);
      if (composable) CHECK(C->morphism(*gf).map == raw_compose(C->morphism(g).map, C->morphism(f).map));
    }
}

TEST_CASE("category laws hold for every built-in shape") {
  for (const auto* spec : {"set", "graph", "reflgraph", "bicolor", "semi2", "sset2", "semi3", "sset3"}) {
    std::string witness;
    INFO(spec);
    CHECK(verify_category_laws(*FiniteIndexCategory::build(spec), &witness));
  }
}

TEST_CASE("simplicial identities") {
  auto C = FiniteIndexCategory::build("sset3");
  auto d = [&](int l, int i) { return *C->find_generator("d" + std::to_string(l) + "_" + std::to_string(i)); };
  auto s = [&](int l, int i) { return *C->find_generator("s" + std::to_string(l) + "_" + std::to_string(i)); };
  auto comp = [&](int g, int f) { return *C->compose(g, f); };
  // d_j d_i = d_i d_(j-1) for i < j, as maps into dimension 3.
  for (int j = 0; j <= 3; ++j)
    for (int i = 0; i < j; ++i) CHECK(comp(d(3, j), d(2, i)) == comp(d(3, i), d(2, j - 1)));
  // s_j . d_i on dimension-2 data: the face of a degeneracy.
  for (int i = 0; i <= 2; ++i) CHECK(comp(s(1, 0), d(2, i)) != -1);
  for (int i = 0; i <= 1; ++i) CHECK(C->is_identity(comp(s(1, i), d(2, i))));
  for (int i = 0; i <= 1; ++i) CHECK(C->is_identity(comp(s(1, i), d(2, i + 1))));
}

TEST_CASE("normal forms recompose to the morphism") {
  auto C = FiniteIndexCategory::build("sset3");
  for (int m = 0; m < C->morphism_count(); ++m) {
    auto nf = C->normal_form(m);
    for (std::size_t i = 1; i < nf.faces.size(); ++i) CHECK(nf.faces[i - 1] > nf.faces[i]);
    for (std::size_t i = 1; i < nf.degeneracies.size(); ++i) CHECK(nf.degeneracies[i - 1] < nf.degeneracies[i]);
    CHECK(C->recompose(nf, C->dimension(C->morphism(m).source)) == m);
  }
}

TEST_CASE("factor returns generators composing to the morphism") {
  for (const auto* spec : {"reflgraph", "bicolor", "sset2"}) {
    auto C = FiniteIndexCategory::build(spec);
    for (int m = 0; m < C->morphism_count(); ++m) {
      auto gens = C->factor(m);
      if (C->is_identity(m)) {
        CHECK(gens.empty());
        continue;
      }
      int acc = gens.back();
      for (int k = static_cast<int>(gens.size()) - 2; k >= 0; --k) acc = *C->compose(gens[k], acc);
      CHECK(acc == m);
    }
  }
}

TEST_CASE("graph shapes name their generators s, t and refl") {
  auto G = FiniteIndexCategory::build("graph");
  CHECK(G->object_count() == 2);
  CHECK(G->find_generator("s") == G->find_generator("d1_1"));
  CHECK(G->find_generator("t") == G->find_generator("d1_0"));
  CHECK_FALSE(G->find_generator("refl"));
  auto R = FiniteIndexCategory::build("reflgraph");
  REQUIRE(R->find_generator("refl"));
  CHECK(*R->compose(*R->find_generator("refl"), *R->find_generator("s")) == R->identity(0));
}

TEST_CASE("bicoloured shape has two edge colours over one vertex object") {
  auto B = FiniteIndexCategory::build("bicolor");
  CHECK(B->object_count() == 3);
  CHECK(B->generators().size() == 4);
  CHECK(B->faces(0).empty());
  CHECK(B->faces(1).size() == 2);
  CHECK(B->faces(2).size() == 2);
}

TEST_CASE("faces are ordered from d_k down to d_0") {
  auto C = FiniteIndexCategory::build("semi2");
  auto f = C->faces(2);
  REQUIRE(f.size() == 3);
  CHECK(C->morphism(f[0]).name == "d2_2");
  CHECK(C->morphism(f[2]).name == "d2_0");
}

TEST_CASE("malformed category specs are rejected") {
  CHECK_THROWS_AS(FiniteIndexCategory::build("semi"), InputError);
  CHECK_THROWS_AS(FiniteIndexCategory::build("sset9"), BudgetExceeded);
  CHECK_THROWS_AS(FiniteIndexCategory::build("cube2"), InputError);
}
