#include <catch_amalgamated.hpp>

#include "lawvere/omega.hpp"

using namespace lawvere;

namespace {

OmegaPtr omega_of(const char* spec) { return OmegaObject::build(FiniteIndexCategory::build(spec)); }

}  // namespace

TEST_CASE("level sizes") {
  auto semi = omega_of("semi3");
  CHECK(semi->size(0) == 2);
  CHECK(semi->size(1) == 5);
  CHECK(semi->size(2) == 19);
  CHECK(semi->size(3) == 167);

  auto g = omega_of("graph");
  CHECK(g->size(0) == 2);
  CHECK(g->size(1) == 5);
  CHECK(omega_of("set")->size(0) == 2);
  CHECK(omega_of("reflgraph")->size(1) == 5);
  auto b = omega_of("bicolor");
  CHECK(b->size(1) == 5);
  CHECK(b->size(2) == 5);
}

TEST_CASE("level bound is enforced") {
  CHECK_THROWS_AS(omega_of("semi4"), BudgetExceeded);
  CHECK_THROWS_AS(OmegaObject::build(FiniteIndexCategory::build("semi3"), 100), BudgetExceeded);
}

TEST_CASE("levels are Heyting algebras ordered by inclusion") {
  auto om = omega_of("sset2");
  for (int c = 0; c < om->level_count(); ++c) {
    const auto& L = om->level(c);
    CHECK(verify_tables(L));
    CHECK(om->sieve(c, 0).count() == 0);
    CHECK(om->sieve(c, om->top(c)) == full_subpresheaf(om->representable(c)));
    for (int s = 0; s < om->size(c); ++s) {
      CHECK(om->index_of(c, om->sieve(c, s)) == s);
      for (int t = 0; t < om->size(c); ++t) {
        CHECK(L.leq(s, t) == leq(om->sieve(c, s), om->sieve(c, t)));
        CHECK(om->sieve(c, L.meet(s, t)) == meet(om->sieve(c, s), om->sieve(c, t)));
      }
    }
  }
}

TEST_CASE("pullback of sieves is functorial") {
  auto om = omega_of("sset2");
  const auto& C = om->category();
  for (int f = 0; f < C.morphism_count(); ++f)
    for (int g = 0; g < C.morphism_count(); ++g) {
      auto fg = C.compose(f, g);
      if (!fg) continue;
      const int c = C.morphism(f).target;
      for (int s = 0; s < om->size(c); ++s) CHECK(om->act(*fg, s) == om->act(g, om->act(f, s)));
    }
  for (int c = 0; c < C.object_count(); ++c)
    for (int s = 0; s < om->size(c); ++s) CHECK(om->act(C.identity(c), s) == s);
}

TEST_CASE("characteristic maps round-trip through the pullback of True") {
  auto G = FiniteIndexCategory::build("graph");
  auto om = OmegaObject::build(G);
  const auto gens = G->generators();
  std::vector<std::vector<int>> acts(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g)
    acts[g] = G->morphism(gens[g].morphism).name == "s" ? std::vector<int>{0, 0, 1} : std::vector<int>{1, 1, 2};
  FinitePresheaf X(G, {3, 3}, acts);
  for (const auto& s : enumerate_subpresheaves(X)) {
    auto chi = characteristic_function(*om, X, s);
    CHECK(is_natural(X, om->as_presheaf(), chi));
    CHECK(pullback_true(*om, X, chi) == s);
  }
}

TEST_CASE("faces of a simplex are order isomorphic to the lower level") {
  auto om = omega_of("semi3");
  const auto& C = om->category();
  for (int c = 1; c <= 3; ++c)
    for (int d : C.faces(c)) {
      auto r = verify_face_downset_iso(*om, d);
      INFO(r.describe());
      CHECK(r.ok());
      CHECK(static_cast<int>(face_pushforward(*om, d).size()) == om->size(c - 1));
    }
}

TEST_CASE("incidence map on edges and triangles") {
  auto om = omega_of("semi2");
  auto e = analyze_incidence(*om, 1);
  CHECK(e.tuples == 4);
  CHECK(e.surjective);
  CHECK(e.collisions.size() == 1);

  auto t = analyze_incidence(*om, 2);
  CHECK(t.tuples == 125);
  CHECK(t.compatible_tuples == 18);
  CHECK(t.hit == 18);
  CHECK_FALSE(t.surjective);
  CHECK(t.surjective_on_compatible);
  CHECK(t.collisions.size() == 1);
  for (int s = 0; s < om->size(2); ++s) {
    auto fiber = om->incidence_fiber(2, om->incidence_tuple(2, s));
    CHECK(std::find(fiber.begin(), fiber.end(), s) != fiber.end());
  }
}

TEST_CASE("sieve labels") {
  auto om = omega_of("graph");
  CHECK(om->label(1, 0) == "empty");
  CHECK(om->label(1, om->top(1)) == "(0,1)");
  CHECK(om->label(1, om->boundary_index(1)) == "(0)+(1)");
}

TEST_CASE("DOT output is deterministic") {
  auto a = omega_of("semi2")->to_dot(2);
  auto b = omega_of("semi2")->to_dot(2);
  CHECK(a == b);
  CHECK(a.rfind("digraph", 0) == 0);
}
