#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lawvere/check.hpp"
#include "lawvere/presheaf.hpp"
#include "lawvere/topology.hpp"

namespace lawvere {

struct ClosureResult {
  Subpresheaf closed;
  /// Per object, local indices of the elements the closure added.
  std::vector<std::vector<int>> added;
};

/// The subobject classified by j . chi(A').
ClosureResult closure_via_chi(const LTTopology& j, const FinitePresheaf& ambient, const Subpresheaf& sub);

/// Closure of j^w by recursion on dimension: a level with bit 0 is copied;
/// with bit 1 it becomes every element of A whose faces all lie in the
/// already closed lower level (all of A at objects without faces).
ClosureResult closure_recursive(std::string_view w, const FinitePresheaf& ambient, const Subpresheaf& sub);
ClosureResult closure_recursive(const std::vector<bool>& bits, const FinitePresheaf& ambient, const Subpresheaf& sub);

bool is_dense(const LTTopology& j, const FinitePresheaf& ambient, const Subpresheaf& sub);
/// Density read off the levels: A'(c) = A(c) wherever the bit is 0.
bool is_dense_by_levels(std::string_view w, const FinitePresheaf& ambient, const Subpresheaf& sub);

/// The topology chi(tau(True)) of a closure operator, with tau given by the
/// recursive closure of j^w applied to True as a subobject of Omega.
LTTopology topology_from_recursive_closure(const OmegaPtr& omega, std::string_view w);

/// Per-object predicates. At an object without faces: at most / at least /
/// exactly one element. Above: at most / at least / exactly one element per
/// incidence tuple, where completeness ranges over the tuples whose shared
/// faces agree (the only tuples a boundary can realise).
bool k_simple(const FinitePresheaf& B, int c, std::string* witness = nullptr);
bool k_complete(const FinitePresheaf& B, int c, std::string* witness = nullptr);
bool k_exact(const FinitePresheaf& B, int c, std::string* witness = nullptr);

struct Classification {
  bool separated = true;
  bool complete = true;
  bool sheaf = true;
  std::vector<std::string> notes;  // per failing object: which predicate fails, with witness
};

/// Separated iff simple, complete iff complete, sheaf iff exact, at every
/// object whose bit is 1.
Classification classify(const FinitePresheaf& B, std::string_view w);

inline constexpr int kDefaultCorpusBound = 6;

/// Ambient presheaves for the factorization oracle: every presheaf with
/// total carrier at most `max_total` up to isomorphism, plus each
/// representable y(c) (whose boundary inclusion refutes simplicity and
/// completeness) when it is larger than the bound.
std::vector<FinitePresheaf> factorization_corpus(const CategoryPtr& cat, int max_total);

/// Pairs (A, A') of corpus presheaves with A' dense in A under j.
struct DensePair {
  int ambient;  // index into the corpus
  Subpresheaf sub;
};
std::vector<DensePair> dense_pairs(const LTTopology& j, const std::vector<FinitePresheaf>& corpus);

struct FactorizationReport {
  bool separated = true;
  bool complete = true;
  bool sheaf() const { return separated && complete; }
  std::size_t dense_monos = 0;
  std::size_t maps_checked = 0;
  std::optional<std::string> separation_witness;  // a map with two factorizations
  std::optional<std::string> completeness_witness;  // a map with none
};

/// Counts, for every dense A' in A from the list and every A' -> B, the
/// factorizations through A. Stops once both answers are known to be false.
FactorizationReport brute_factorization_check(const FinitePresheaf& B, const std::vector<FinitePresheaf>& corpus,
                                              const std::vector<DensePair>& dense);

/// Closure operator laws on every subobject of every corpus presheaf:
/// increasing, idempotent, monotone, and stable under pullback along every
/// morphism between corpus presheaves of total size at most `pullback_bound`.
CheckResult verify_closure_axioms(const LTTopology& j, const std::vector<FinitePresheaf>& corpus,
                                  int pullback_bound);

}  // namespace lawvere
