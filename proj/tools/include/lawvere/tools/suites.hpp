#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lawvere/closure.hpp"

namespace lawvere::suites {

struct CheckLine {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct CriterionReport {
  int id = 0;
  std::string title;
  std::vector<CheckLine> checks;
  double seconds = 0;
  double budget_seconds = 0;
  std::string summary;

  bool within_budget() const { return seconds <= budget_seconds; }
  bool pass() const;
};

struct Options {
  int corpus_bound = kDefaultCorpusBound;
};

CriterionReport topology_counts(const Options& = {});
CriterionReport omega_structure(const Options& = {});
CriterionReport closure_equivalence(const Options& = {});
CriterionReport sheaf_criteria(const Options& = {});
CriterionReport degeneracy_filter(const Options& = {});
CriterionReport nuclei_and_fuzzy(const Options& = {});
CriterionReport double_negation_nucleus(const Options& = {});

inline constexpr int kCriterionCount = 7;
CriterionReport run_criterion(int id, const Options& = {});

/// Criterion ids making up a named suite: counts, closures, criteria,
/// fuzzy or all. Throws InputError on an unknown name.
std::vector<int> suite_members(std::string_view suite);

/// "Set:2 Graph:4 ReflGraph:3 BiColGraph:8 Semi2:8 Sset2:4" from the
/// constrained enumerator.
std::string counts_line();

}  // namespace lawvere::suites
