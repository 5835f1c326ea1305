#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lawvere/check.hpp"
#include "lawvere/lattice.hpp"

namespace lawvere {

/// A carrier with a membership function into a finite Heyting algebra.
struct FuzzySet {
  HeytingPtr algebra;
  std::vector<std::string> carrier;
  std::vector<int> membership;

  int size() const { return static_cast<int>(carrier.size()); }
  /// Throws InputError on a missing algebra, a length mismatch or an
  /// out-of-range membership value.
  void validate() const;
};

/// Carrier names x0, x1, ...
FuzzySet make_fuzzy_set(HeytingPtr algebra, std::vector<int> membership);

/// A subobject of (A, alpha): per element either absent (-1) or its
/// membership in the subset, which must lie below alpha.
struct FuzzySubset {
  std::vector<int> level;

  bool contains(int a) const { return level.at(a) >= 0; }
  bool operator==(const FuzzySubset&) const = default;
};

void validate_subset(const FuzzySet& A, const FuzzySubset& sub);
FuzzySubset whole_subset(const FuzzySet& A);
FuzzySubset empty_fuzzy_subset(const FuzzySet& A);
/// Strong: the membership is the restriction of alpha.
bool is_strong(const FuzzySet& A, const FuzzySubset& sub);
bool subset_leq(const FiniteHeytingAlgebra& L, const FuzzySubset& a, const FuzzySubset& b);
/// Every subobject of A: each element absent or at any level below alpha.
std::vector<FuzzySubset> enumerate_fuzzy_subsets(const FuzzySet& A);
/// The subset as a fuzzy set of its own (members only, in carrier order),
/// together with the inclusion into A.
std::pair<FuzzySet, std::vector<int>> subset_object(const FuzzySet& A, const FuzzySubset& sub);

/// alpha(a) <= beta(f(a)) for every a.
bool is_fuzzy_morphism(const FuzzySet& A, const FuzzySet& B, const std::vector<int>& f);
/// Pullback of a subobject of A along f : B -> A, with membership
/// beta(b) /\ level(f(b)).
FuzzySubset pullback(const FuzzySet& B, const std::vector<int>& f, const FiniteHeytingAlgebra& L,
                     const FuzzySubset& sub);

/// A closure operator on fuzzy sets: the trivial one, or the one induced by
/// an endomap of the algebra. The map is not required to be a nucleus, so
/// non-nuclei can be tested against the closure axioms.
struct QClosureOperator {
  enum class Kind { Trivial, NucleusInduced };
  Kind kind = Kind::Trivial;
  HeytingPtr algebra;
  std::vector<int> phi;

  static QClosureOperator trivial(HeytingPtr algebra);
  static QClosureOperator induced(HeytingPtr algebra, std::vector<int> phi);
  static QClosureOperator induced(const Nucleus& n) { return induced(n.algebra, n.map); }
};

std::string describe(const QClosureOperator& op);

/// Trivial: (A, alpha). Induced by phi: (A', phi . alpha' /\ alpha).
FuzzySubset fuzzy_closure(const QClosureOperator& op, const FuzzySet& A, const FuzzySubset& sub);
bool is_dense(const QClosureOperator& op, const FuzzySet& A, const FuzzySubset& sub);

/// Every fuzzy set with at most `max_carrier` elements up to relabelling of
/// the carrier (memberships listed in non-decreasing index order).
std::vector<FuzzySet> fuzzy_corpus(const HeytingPtr& L, int max_carrier);

inline constexpr int kFuzzyCorpusCarrier = 3;
inline constexpr int kFuzzyPullbackCarrier = 2;

/// Axioms (i) increasing, (ii) idempotent, (iii) monotone, (iv) stable under
/// pullback, (v) preserves strongness, over every subobject of every corpus
/// set. Pullbacks run along every morphism between corpus sets that is
/// injective or whose carriers are both at most `pullback_carrier`.
CheckResult verify_qclosure(const QClosureOperator& op, const std::vector<FuzzySet>& corpus,
                            int pullback_carrier = kFuzzyPullbackCarrier);

struct FuzzyClassification {
  bool separated = true;
  bool sheaf = true;
  std::string reason;
};

/// Induced by a nucleus: separated always, sheaf iff im(beta) lies in
/// im(phi). Trivial: read off the factorization oracle on `corpus`.
FuzzyClassification classify_fuzzy(const FuzzySet& B, const QClosureOperator& op,
                                   const std::vector<FuzzySet>& corpus);

struct FuzzyFactorizationReport {
  bool separated = true;
  bool complete = true;
  bool sheaf() const { return separated && complete; }
  std::size_t dense_monos = 0;
  std::size_t maps_checked = 0;
  std::optional<std::string> separation_witness;
  std::optional<std::string> completeness_witness;
};

/// For every dense A' in A over the corpus and every A' -> B, counts the
/// extensions A -> B.
FuzzyFactorizationReport fuzzy_factorization_check(const FuzzySet& B, const QClosureOperator& op,
                                                   const std::vector<FuzzySet>& corpus);

/// phi(x) read off the closure of {.^x} inside {.^top}. Throws InputError
/// for an operator that adds elements.
std::vector<int> nucleus_from_operator(const QClosureOperator& op);

/// Extensional equality of two operators on every subobject of the corpus.
bool same_operator(const QClosureOperator& a, const QClosureOperator& b, const std::vector<FuzzySet>& corpus);

std::string describe(const FuzzySet& A);
std::string describe(const FuzzySet& A, const FuzzySubset& sub);

}  // namespace lawvere
