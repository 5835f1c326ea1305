#include <catch_amalgamated.hpp>

#include "lawvere/closure.hpp"
#include "lawvere/topology.hpp"

using namespace lawvere;

namespace {

OmegaPtr omega_of(const std::string& spec) { return OmegaObject::build(FiniteIndexCategory::build(spec)); }

std::vector<std::string> tags_of(const std::vector<LTTopology>& js) {
  std::vector<std::string> out;
  for (const auto& j : js) out.push_back(j.tag.value_or("?"));
  return out;
}

}  // namespace

TEST_CASE("topology counts per shape") {
  const std::vector<std::pair<std::string, std::size_t>> expected{{"set", 2},   {"graph", 4}, {"reflgraph", 3},
                                                                  {"bicolor", 8}, {"semi2", 8}, {"sset2", 4}};
  for (const auto& [spec, n] : expected) {
    INFO(spec);
    CHECK(enumerate_topologies(omega_of(spec), EnumerationMethod::Constrained).size() == n);
  }
}

TEST_CASE("brute force finds the same topologies as the constrained search") {
  for (const auto* spec : {"set", "graph", "reflgraph", "bicolor", "semi2", "sset2"}) {
    INFO(spec);
    auto om = omega_of(spec);
    auto brute = enumerate_topologies(om, EnumerationMethod::Brute);
    auto fast = enumerate_topologies(om, EnumerationMethod::Constrained);
    CHECK(brute == fast);
    CHECK(tags_of(brute) == tags_of(fast));
    for (const auto& j : brute) CHECK(verify_topology(j));
  }
}

TEST_CASE("tags of the graph topologies") {
  CHECK(tags_of(enumerate_topologies(omega_of("graph"), EnumerationMethod::Constrained)) ==
        std::vector<std::string>{"00", "01", "10", "11"});
  CHECK(tags_of(enumerate_topologies(omega_of("reflgraph"), EnumerationMethod::Constrained)) ==
        std::vector<std::string>{"00", "01", "11"});
  auto bicol = tags_of(enumerate_topologies(omega_of("bicolor"), EnumerationMethod::Constrained));
  CHECK(bicol == std::vector<std::string>{"00", "01", "02", "03", "10", "11", "12", "13"});
}

TEST_CASE("three-dimensional truncations") {
  CHECK(enumerate_topologies(omega_of("semi3"), EnumerationMethod::Constrained).size() == 16);
  CHECK(enumerate_topologies(omega_of("sset3"), EnumerationMethod::Constrained).size() == 5);
}

TEST_CASE("discrete and trivial topologies are the extreme tags") {
  auto om = omega_of("semi2");
  auto js = enumerate_topologies(om, EnumerationMethod::Constrained);
  CHECK(js.front() == discrete_topology(om));
  CHECK(js.back() == trivial_topology(om));
  CHECK(behavioural_tag(discrete_topology(om)) == "000");
  CHECK(behavioural_tag(trivial_topology(om)) == "111");
}

TEST_CASE("behavioural bits recover the tag") {
  auto om = omega_of("semi2");
  for (const auto& tag : all_tags(om->category())) {
    auto j = construct_jw(om, tag);
    CHECK(behavioural_tag(j) == tag);
    CHECK(tag_from_bits(om->category(), bits_from_tag(om->category(), tag)) == tag);
  }
  CHECK_THROWS_AS(bits_from_tag(om->category(), "01"), InputError);
  CHECK_THROWS_AS(bits_from_tag(om->category(), "0a1"), InputError);
}

TEST_CASE("a 10 pattern breaks naturality once degeneracies exist") {
  auto om = omega_of("reflgraph");
  try {
    construct_jw(om, "10");
    FAIL("expected rejection");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find(
              "naturality: with refl fails at empty in Omega(V): j(refl(empty)) = (0)+(1) but refl(j(empty)) = (0,1)") !=
          std::string::npos);
  }
  auto raw = construct_from_bits(om, {true, false});
  auto r = verify_topology(raw);
  CHECK_FALSE(r.ok());
  CHECK(r.describe() ==
        "naturality: with refl fails at empty in Omega(V): j(refl(empty)) = (0)+(1) but refl(j(empty)) = (0,1)");
}

TEST_CASE("face-only topologies survive adding degeneracies exactly when no 10 occurs") {
  auto semi = omega_of("semi2");
  auto full = omega_of("sset2");
  for (const auto& j : enumerate_topologies(semi, EnumerationMethod::Constrained)) {
    const auto& tag = *j.tag;
    INFO(tag);
    CHECK(degeneracy_compatible(j, *full).ok() == (tag.find("10") == std::string::npos));
  }
  REQUIRE(degeneracy_partner(semi->category()));
  CHECK(degeneracy_partner(semi->category())->spec() == "sset2");
  CHECK_FALSE(degeneracy_partner(full->category()));
}

TEST_CASE("restricting a topology to lower levels keeps it a topology") {
  auto hi = omega_of("semi3");
  auto lo = omega_of("semi2");
  auto low_js = enumerate_topologies(lo, EnumerationMethod::Constrained);
  for (const auto& j : enumerate_topologies(hi, EnumerationMethod::Constrained)) {
    auto r = restrict_levels(j, lo);
    CHECK(verify_topology(r));
    CHECK(std::find(low_js.begin(), low_js.end(), r) != low_js.end());
    CHECK(behavioural_tag(r) == j.tag->substr(0, 3));
  }
}

TEST_CASE("recursive closure induces the same topology") {
  auto om = omega_of("semi2");
  for (const auto& tag : all_tags(om->category())) {
    INFO(tag);
    CHECK(topology_from_recursive_closure(om, tag) == construct_jw(om, tag));
  }
}

TEST_CASE("maps failing the axioms are reported") {
  auto om = omega_of("graph");
  auto j = discrete_topology(om);
  j.level_map[1][0] = om->top(1);  // empty edge sieve to True but boundary kept
  CHECK_FALSE(verify_topology(j).ok());
  auto k = discrete_topology(om);
  k.level_map[0][om->top(0)] = 0;
  CHECK(verify_topology(k).law().find("(1)") != std::string::npos);
}
