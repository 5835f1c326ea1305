#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "lawvere/check.hpp"
#include "lawvere/presheaf.hpp"

using namespace lawvere;

namespace {

// Two vertices, two parallel edges a, b : v0 -> v1, and a loop c at v0.
FinitePresheaf small_graph() {
  auto G = FiniteIndexCategory::build("graph");
  const auto gens = G->generators();
  std::vector<std::vector<int>> acts(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const bool src = G->morphism(gens[g].morphism).name == "s";
    acts[g] = src ? std::vector<int>{0, 0, 0} : std::vector<int>{1, 1, 0};
  }
  return FinitePresheaf(G, {2, 3}, acts, {{"v0", "v1"}, {"a", "b", "c"}});
}

// Every subset of elements, kept when closed under every morphism.
std::set<std::vector<bool>> brute_subpresheaves(const FinitePresheaf& X) {
  const auto& C = X.category();
  const int n = X.total_size();
  std::set<std::vector<bool>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (int m = 0; m < C.morphism_count() && closed; ++m) {
      const auto& f = C.morphism(m);
      for (int x = 0; x < X.size(f.target) && closed; ++x)
        if ((mask >> X.global(f.target, x)) & 1) closed = (mask >> X.global(f.source, X.act(m, x))) & 1;
    }
    if (!closed) continue;
    std::vector<bool> s(n);
    for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
    out.insert(s);
  }
  return out;
}

std::vector<bool> as_bits(const Subpresheaf& s) {
  std::vector<bool> out(s.elements.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.elements.test(i);
  return out;
}

// Every family of functions, filtered by naturality on all morphisms.
std::size_t brute_morphism_count(const FinitePresheaf& X, const FinitePresheaf& Y) {
  const auto& C = X.category();
  std::vector<std::pair<int, int>> slots;  // (object, element of X)
  for (int c = 0; c < C.object_count(); ++c)
    for (int x = 0; x < X.size(c); ++x) slots.emplace_back(c, x);
  for (auto [c, x] : slots)
    if (Y.size(c) == 0) return 0;
  std::vector<int> value(slots.size(), 0);
  std::size_t count = 0;
  while (true) {
    auto image = [&](int c, int x) {
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i] == std::pair{c, x}) return value[i];
      return -1;
    };
    bool natural = true;
    for (int m = 0; m < C.morphism_count() && natural; ++m) {
      const auto& f = C.morphism(m);
      for (int x = 0; x < X.size(f.target) && natural; ++x)
        natural = image(f.source, X.act(m, x)) == Y.act(m, image(f.target, x));
    }
    count += natural;
    std::size_t i = 0;
    for (; i < slots.size(); ++i) {
      if (++value[i] < Y.size(slots[i].first)) break;
      value[i] = 0;
    }
    if (i == slots.size()) return count;
  }
}

}  // namespace

TEST_CASE("representables over the simplex categories") {
  auto C = FiniteIndexCategory::build("sset2");
  auto y2 = yoneda(C, 2);
  CHECK(y2.size(0) == 3);
  CHECK(y2.size(1) == 6);
  CHECK(y2.size(2) == 10);
  CHECK(y2.representing_object() == 2);
  CHECK(y2.find_element(1, "(0,2)").has_value());

  auto S = FiniteIndexCategory::build("semi2");
  auto s2 = yoneda(S, 2);
  CHECK(s2.size(0) == 3);
  CHECK(s2.size(1) == 3);
  CHECK(s2.size(2) == 1);
}

TEST_CASE("functoriality violations are rejected") {
  auto R = FiniteIndexCategory::build("reflgraph");
  const auto gens = R->generators();
  std::vector<std::vector<int>> acts(gens.size());
  // refl sends v to edge e, but s(e) is not v.
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& name = R->morphism(gens[g].morphism).name;
    acts[g] = name == "refl" ? std::vector<int>{0, 0} : std::vector<int>{1};
  }
  CHECK_THROWS_AS(FinitePresheaf(R, {2, 1}, acts), InputError);
}

TEST_CASE("subpresheaf enumeration matches the brute-force subset filter") {
  auto check = [](const FinitePresheaf& X) {
    auto subs = enumerate_subpresheaves(X);
    std::set<std::vector<bool>> got;
    for (const auto& s : subs) got.insert(as_bits(s));
    CHECK(got.size() == subs.size());
    CHECK(got == brute_subpresheaves(X));
    for (std::size_t i = 1; i < subs.size(); ++i) CHECK(canonical_less(subs[i - 1].elements, subs[i].elements));
  };
  check(small_graph());
  check(yoneda(FiniteIndexCategory::build("semi2"), 2));
  check(yoneda(FiniteIndexCategory::build("reflgraph"), 1));
  check(yoneda(FiniteIndexCategory::build("bicolor"), 2));
}

TEST_CASE("make_subpresheaf refuses sets that are not closed") {
  auto X = small_graph();
  CHECK_THROWS_AS(make_subpresheaf(X, {{}, {0}}), InputError);
  auto s = make_subpresheaf(X, {{0, 1}, {0}});
  CHECK(s.count() == 3);
  auto g = generated_subpresheaf(X, std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(level_elements(X, g, 0) == std::vector<int>{0});
  CHECK(level_elements(X, g, 1) == std::vector<int>{2});
}

TEST_CASE("meet and join of subpresheaves are intersection and union") {
  auto X = small_graph();
  auto subs = enumerate_subpresheaves(X);
  for (const auto& a : subs)
    for (const auto& b : subs) {
      CHECK(meet(a, b).elements == (a.elements & b.elements));
      CHECK(join(a, b).elements == (a.elements | b.elements));
      CHECK(leq(a, b) == a.elements.is_subset_of(b.elements));
    }
}

TEST_CASE("faces and boundary of y(k)") {
  auto S = FiniteIndexCategory::build("semi2");
  auto y2 = yoneda(S, 2);
  for (int i = 0; i <= 2; ++i) CHECK(ith_face(y2, i).count() == 3);
  CHECK(boundary(y2).count() == 6);
  auto y0 = yoneda(S, 0);
  CHECK(boundary(y0).count() == 0);
}

TEST_CASE("degeneracies are added and stripped inversely") {
  auto semi = FiniteIndexCategory::build("semi2");
  auto full = FiniteIndexCategory::build("sset2");
  auto sy = yoneda(semi, 2);
  auto fy = yoneda(full, 2);
  for (const auto& x : enumerate_subpresheaves(sy)) {
    auto up = add_degeneracies(sy, x, fy);
    CHECK(is_action_closed(fy, up.elements));
    CHECK(strip_degeneracies(fy, up, sy) == x);
  }
  CHECK(add_degeneracies(sy, full_subpresheaf(sy), fy) == full_subpresheaf(fy));
}

TEST_CASE("for_each_morphism agrees with brute force") {
  auto G = FiniteIndexCategory::build("graph");
  auto X = small_graph();
  auto edge = yoneda(G, 1);
  auto vertex = yoneda(G, 0);
  CHECK(all_morphisms(edge, X).size() == brute_morphism_count(edge, X));
  CHECK(all_morphisms(X, X).size() == brute_morphism_count(X, X));
  CHECK(all_morphisms(vertex, X).size() == 2);
  CHECK(all_morphisms(edge, X).size() == 3);
  for (const auto& f : all_morphisms(X, X)) CHECK(is_natural(X, X, f));

  auto R = FiniteIndexCategory::build("reflgraph");
  auto r1 = yoneda(R, 1);
  CHECK(all_morphisms(r1, r1).size() == brute_morphism_count(r1, r1));
}

TEST_CASE("restrict_to yields a presheaf with a natural inclusion") {
  auto X = small_graph();
  for (const auto& s : enumerate_subpresheaves(X)) {
    auto r = restrict_to(X, s);
    CHECK(r.presheaf.total_size() == static_cast<int>(s.count()));
    CHECK(is_natural(r.presheaf, X, PresheafMorphism{r.inclusion}));
  }
}

TEST_CASE("canonical_key ignores relabelling") {
  auto G = FiniteIndexCategory::build("graph");
  auto X = small_graph();
  const auto gens = G->generators();
  // Swap the vertices and reverse the edge order.
  const std::vector<int> vperm{1, 0};
  const std::vector<int> eperm{2, 1, 0};
  std::vector<std::vector<int>> acts(gens.size(), std::vector<int>(3));
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (int e = 0; e < 3; ++e) acts[g][eperm[e]] = vperm[X.generator_action(g)[e]];
  FinitePresheaf Y(G, {2, 3}, acts);
  CHECK(canonical_key(X) == canonical_key(Y));

  // Reversing edge b makes the two non-loop edges antiparallel.
  std::vector<std::vector<int>> anti(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const bool src = G->morphism(gens[g].morphism).name == "s";
    anti[g] = src ? std::vector<int>{0, 1, 0} : std::vector<int>{1, 0, 0};
  }
  FinitePresheaf W(G, {2, 3}, anti);
  CHECK(canonical_key(X) != canonical_key(W));
}

TEST_CASE("graphs up to isomorphism with at most three cells") {
  auto G = FiniteIndexCategory::build("graph");
  auto all = enumerate_presheaves(G, 3);
  // empty; 1 vertex; 2 vertices; 1 loop; 3 vertices; loop + vertex;
  // edge between two vertices; 2 loops on one vertex.
  CHECK(all.size() == 8);
  std::set<std::vector<int>> keys;
  for (const auto& x : all) keys.insert(canonical_key(x));
  CHECK(keys.size() == all.size());
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].total_size() <= all[i].total_size());
}

TEST_CASE("set presheaves up to isomorphism are determined by their size") {
  auto S = FiniteIndexCategory::build("set");
  CHECK(enumerate_presheaves(S, 5).size() == 6);
}
