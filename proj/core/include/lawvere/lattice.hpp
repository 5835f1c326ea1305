#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lawvere/check.hpp"

namespace lawvere {

/// Square boolean matrix: leq[a][b] means a <= b.
using OrderRelation = std::vector<std::vector<bool>>;

/// Reflexive-transitive closure of a cover list. Throws InputError on a cycle
/// or on an out-of-range index.
OrderRelation order_from_covers(int n, const std::vector<std::pair<int, int>>& covers);

/// Checks partial-order laws, existence of all binary meets and joins, and
/// existence of relative pseudo-complements (a => b is the largest c with
/// c /\ a <= b). Failures carry the offending pair or triple.
CheckResult verify_heyting(const OrderRelation& leq, const std::vector<std::string>& names = {});

class FiniteHeytingAlgebra {
 public:
  /// Derives every operation table from the order. Throws InputError with
  /// the verify_heyting witness when the order is not a Heyting algebra.
  static FiniteHeytingAlgebra from_order(std::vector<std::string> names, const OrderRelation& leq);
  static FiniteHeytingAlgebra from_covers(std::vector<std::string> names,
                                          const std::vector<std::pair<int, int>>& covers);

  /// 0 < 1/(n-1) < ... < 1.
  static FiniteHeytingAlgebra chain(int n);
  /// Subsets of k atoms; names are "0", atom letters, "1".
  static FiniteHeytingAlgebra boolean(int atoms);

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[a * n_ + b] != 0; }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  int implies(int a, int b) const { return impl_[a * n_ + b]; }
  int neg(int a) const { return implies(a, bottom_); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const std::string& name(int a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;

  /// Hasse edges (lower, upper), sorted.
  std::vector<std::pair<int, int>> covers() const;
  OrderRelation order() const;

 private:
  FiniteHeytingAlgebra() = default;

  int n_ = 0;
  int bottom_ = 0;
  int top_ = 0;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<int> meet_;
  std::vector<int> join_;
  std::vector<int> impl_;
};

using HeytingPtr = std::shared_ptr<const FiniteHeytingAlgebra>;

/// Re-checks the derived tables exhaustively: lattice laws, distributivity,
/// the adjunction a /\ b <= c iff a <= (b => c), and neg a = a => bottom.
CheckResult verify_tables(const FiniteHeytingAlgebra& L);

/// Axioms (A) meet preservation, (B) increasing, (C) idempotent.
CheckResult verify_nucleus(const FiniteHeytingAlgebra& L, const std::vector<int>& phi);
/// The derivable axioms (D) phi(top) = top, (E) monotone, (F) phi . phi = phi,
/// (G) phi(a) /\ b <= phi(a /\ b).
CheckResult verify_nucleus_derived(const FiniteHeytingAlgebra& L, const std::vector<int>& phi);

struct Nucleus {
  HeytingPtr algebra;
  std::vector<int> map;

  int operator()(int a) const { return map.at(a); }
  bool operator==(const Nucleus& o) const { return algebra == o.algebra && map == o.map; }
};

inline constexpr int kDefaultNucleusBound = 8;

/// All nuclei of L in lexicographic order of their maps. Searches monotone
/// increasing maps fixing top, then filters by (A) and (C).
/// Throws BudgetExceeded when |L| exceeds `max_size`.
std::vector<Nucleus> enumerate_nuclei(const HeytingPtr& L, int max_size = kDefaultNucleusBound);

std::vector<int> double_negation_map(const FiniteHeytingAlgebra& L);
/// Both laws: neg(a \/ b) = neg a /\ neg b and neg(a /\ b) = neg a \/ neg b.
bool is_de_morgan(const FiniteHeytingAlgebra& L);

/// Monotone, increasing and idempotent (a closure operator on the order).
CheckResult verify_closure_map(const FiniteHeytingAlgebra& L, const std::vector<int>& f);

/// Finite Heyting algebras (distributive lattices) with 1..max_size elements,
/// one per isomorphism class.
std::vector<FiniteHeytingAlgebra> enumerate_heyting_algebras(int max_size);

/// Rendering like "0->0 1/2->1 1->1".
std::string describe_map(const FiniteHeytingAlgebra& L, const std::vector<int>& f);

}  // namespace lawvere
