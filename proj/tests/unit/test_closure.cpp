#include <catch_amalgamated.hpp>

#include "lawvere/closure.hpp"

using namespace lawvere;

namespace {

OmegaPtr omega_of(const std::string& spec) { return OmegaObject::build(FiniteIndexCategory::build(spec)); }

// Graph with the given vertex count and edges (source, target).
FinitePresheaf graph(int vertices, const std::vector<std::pair<int, int>>& edges) {
  auto G = FiniteIndexCategory::build("graph");
  const auto gens = G->generators();
  std::vector<std::vector<int>> acts(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const bool src = G->morphism(gens[g].morphism).name == "s";
    for (auto [s, t] : edges) acts[g].push_back(src ? s : t);
  }
  return FinitePresheaf(G, {vertices, static_cast<int>(edges.size())}, acts);
}

// One vertex with the given number of loops, nothing above dimension 1.
FinitePresheaf loops(const std::string& spec, int n) {
  auto C = FiniteIndexCategory::build(spec);
  std::vector<int> sizes(C->object_count(), 0);
  sizes[0] = 1;
  sizes[1] = n;
  std::vector<std::vector<int>> acts(C->generators().size());
  for (std::size_t g = 0; g < acts.size(); ++g)
    if (C->morphism(C->generators()[g].morphism).target == 1) acts[g].assign(n, 0);
  return FinitePresheaf(C, sizes, acts);
}

}  // namespace

TEST_CASE("double negation on graphs is the topology closing edges") {
  auto om = omega_of("graph");
  LTTopology nn{om, {}, std::nullopt};
  for (int c = 0; c < om->level_count(); ++c) nn.level_map.push_back(double_negation_map(om->level(c)));
  CHECK(verify_topology(nn));
  CHECK(nn == construct_jw(om, "01"));
}

TEST_CASE("double negation closure adds an edge when both endpoints are present") {
  auto om = omega_of("graph");
  auto j = construct_jw(om, "01");
  auto X = graph(3, {{0, 1}, {1, 2}, {0, 1}});
  for (const auto& s : enumerate_subpresheaves(X)) {
    auto r = closure_via_chi(j, X, s);
    for (int e = 0; e < 3; ++e) {
      const bool ends = s.contains(X, 0, X.act(X.category().generators()[0].morphism, e)) &&
                        s.contains(X, 0, X.act(X.category().generators()[1].morphism, e));
      CHECK(r.closed.contains(X, 1, e) == ends);
    }
    for (int v = 0; v < 3; ++v) CHECK(r.closed.contains(X, 0, v) == s.contains(X, 0, v));
  }
}

TEST_CASE("closure through chi equals the recursive closure") {
  for (const auto* spec : {"graph", "reflgraph", "bicolor", "semi2", "sset2"}) {
    auto om = omega_of(spec);
    auto corpus = factorization_corpus(om->category_ptr(), 4);
    for (const auto& j : enumerate_topologies(om, EnumerationMethod::Constrained)) {
      INFO(spec << " " << *j.tag);
      for (const auto& X : corpus)
        for (const auto& s : enumerate_subpresheaves(X)) {
          auto a = closure_via_chi(j, X, s);
          auto b = closure_recursive(*j.tag, X, s);
          CHECK(a.closed == b.closed);
          CHECK(a.added == b.added);
          CHECK(is_dense(j, X, s) == is_dense_by_levels(*j.tag, X, s));
        }
    }
  }
}

TEST_CASE("closure operator laws") {
  for (const auto* spec : {"graph", "semi2"}) {
    auto om = omega_of(spec);
    auto corpus = factorization_corpus(om->category_ptr(), 3);
    for (const auto& j : enumerate_topologies(om, EnumerationMethod::Constrained)) {
      auto r = verify_closure_axioms(j, corpus, 3);
      INFO(spec << " " << *j.tag << " " << r.describe());
      CHECK(r.ok());
    }
  }
}

TEST_CASE("the empty set under the trivial topology") {
  auto S = FiniteIndexCategory::build("set");
  FinitePresheaf empty(S, {0}, {});
  auto c = classify(empty, "1");
  CHECK(c.separated);
  CHECK_FALSE(c.complete);
  CHECK_FALSE(c.sheaf);
  FinitePresheaf point(S, {1}, {});
  CHECK(classify(point, "1").sheaf);
  FinitePresheaf two(S, {2}, {});
  CHECK_FALSE(classify(two, "1").separated);
  CHECK(classify(two, "0").sheaf);
}

TEST_CASE("simple graphs are the separated ones") {
  CHECK(classify(graph(2, {{0, 1}}), "01").separated);
  auto parallel = classify(graph(2, {{0, 1}, {0, 1}}), "01");
  CHECK_FALSE(parallel.separated);
  CHECK_FALSE(parallel.notes.empty());
  CHECK(classify(graph(2, {{0, 1}, {1, 0}}), "01").separated);
  // Complete means an edge for every ordered pair, loops included.
  CHECK(classify(graph(1, {{0, 0}}), "01").sheaf);
  CHECK_FALSE(classify(graph(2, {{0, 1}, {1, 0}}), "01").complete);
}

TEST_CASE("two loops on one vertex in the 2-truncated semi-simplicial shape") {
  auto X = loops("semi2", 2);
  auto edges = classify(X, "010");
  CHECK_FALSE(edges.separated);
  CHECK(edges.complete);
  // Eight compatible boundaries of a triangle, none filled.
  auto tri = classify(X, "001");
  CHECK(tri.separated);
  CHECK_FALSE(tri.complete);
  std::string why;
  CHECK_FALSE(k_complete(X, 2, &why));
  CHECK_FALSE(why.empty());
  CHECK(k_simple(X, 2));
}

TEST_CASE("classification agrees with the factorization oracle on graphs") {
  auto om = omega_of("graph");
  auto corpus = factorization_corpus(om->category_ptr(), 4);
  for (const auto& j : enumerate_topologies(om, EnumerationMethod::Constrained)) {
    auto dense = dense_pairs(j, corpus);
    for (const auto& B : corpus) {
      if (B.total_size() > 3) continue;
      auto c = classify(B, *j.tag);
      auto o = brute_factorization_check(B, corpus, dense);
      INFO(*j.tag << "\n" << describe(B));
      CHECK(c.separated == o.separated);
      CHECK(c.complete == o.complete);
    }
  }
}
