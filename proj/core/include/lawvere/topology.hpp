#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lawvere/check.hpp"
#include "lawvere/omega.hpp"

namespace lawvere {

/// A Lawvere-Tierney topology j : Omega -> Omega, stored as one map per
/// object of sieve indices. Equality is extensional; the tag is metadata.
struct LTTopology {
  OmegaPtr omega;
  std::vector<std::vector<int>> level_map;
  std::optional<std::string> tag;

  int operator()(int c, int s) const { return level_map.at(c).at(s); }
  bool operator==(const LTTopology& o) const { return level_map == o.level_map; }
};

/// Axioms (1) j . True = True, (2) j . j = j, (3) j . meet = meet . (j x j),
/// then naturality with every generator.
CheckResult verify_topology(const OmegaObject& omega, const std::vector<std::vector<int>>& level_map);
inline CheckResult verify_topology(const LTTopology& j) { return verify_topology(*j.omega, j.level_map); }

LTTopology discrete_topology(const OmegaPtr& omega);
LTTopology trivial_topology(const OmegaPtr& omega);

/// Per-object closure bits named by a tag. Simplex shapes use one bit per
/// dimension ("011"); the bicoloured shape uses the two-digit labels 00..13
/// where the first digit is the vertex bit and the second digit is
/// E + 2 E'. Throws InputError on a malformed tag.
std::vector<bool> bits_from_tag(const FiniteIndexCategory& cat, std::string_view tag);
std::string tag_from_bits(const FiniteIndexCategory& cat, const std::vector<bool>& bits);

/// The extension procedure: objects without faces get the identity or the
/// constant True; above them y and the boundary are sent to themselves or
/// to y by the object's bit, and every other sieve goes to the unique sieve
/// whose incidence tuple is the j-image of its own, the all-True tuple again
/// falling to the bit. The result is not verified.
LTTopology construct_from_bits(const OmegaPtr& omega, const std::vector<bool>& bits);

/// j^w. On categories with degeneracies a tag containing "10" is rejected
/// with the failing naturality square as witness.
LTTopology construct_jw(const OmegaPtr& omega, std::string_view w);

/// Bits read off the behaviour of j: whether j sends the boundary (the empty
/// sieve at dimension 0) to True.
std::vector<bool> behavioural_bits(const LTTopology& j);
std::string behavioural_tag(const LTTopology& j);

/// All well-formed tags for the category, in lexicographic order.
std::vector<std::string> all_tags(const FiniteIndexCategory& cat);

enum class EnumerationMethod { Brute, Constrained };

inline constexpr std::uint64_t kDefaultBruteNodeBudget = 10'000'000;

/// Brute force: backtracking over raw per-level maps pruned only by the
/// topology axioms and naturality, with no use of the j^w family.
/// Constrained: construct_from_bits for every bit vector, kept when valid.
/// Results are sorted by tag and carry their behavioural tag.
std::vector<LTTopology> enumerate_topologies(const OmegaPtr& omega, EnumerationMethod method,
                                             std::uint64_t node_budget = kDefaultBruteNodeBudget);

/// Category with the same truncation plus degeneracies (graph -> reflgraph,
/// semiN -> ssetN); nullopt when there is none.
CategoryPtr degeneracy_partner(const FiniteIndexCategory& cat);

/// Transports j from a face-only Omega to the partner Omega with
/// degeneracies through F (adding degeneracies to every sieve) and checks
/// naturality with every generator there.
CheckResult degeneracy_compatible(const LTTopology& j, const OmegaObject& simplex_omega);

/// Drops the levels above the truncation of `lower`, whose sieves must match.
LTTopology restrict_levels(const LTTopology& j, const OmegaPtr& lower);

std::string describe(const LTTopology& j);

}  // namespace lawvere
