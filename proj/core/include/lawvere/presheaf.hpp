#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lawvere/fincat.hpp"

namespace lawvere {

/// Elements of a finite presheaf are numbered globally: object c owns the
/// contiguous range [offset(c), offset(c) + size(c)).
using ElementSet = boost::dynamic_bitset<>;

class FinitePresheaf {
 public:
  /// `generator_actions[g]` lists, for every element of X(target(g)), its image
  /// in X(source(g)) (indices local to the object). Generators are matched by
  /// position in `cat->generators()`. Functoriality is validated; violations
  /// throw InputError.
  FinitePresheaf(CategoryPtr cat, std::vector<int> sizes, std::vector<std::vector<int>> generator_actions,
                 std::vector<std::vector<std::string>> names = {});

  const FiniteIndexCategory& category() const { return *cat_; }
  const CategoryPtr& category_ptr() const { return cat_; }

  int size(int c) const { return sizes_.at(c); }
  int total_size() const { return total_; }
  int offset(int c) const { return offsets_.at(c); }
  /// Object owning a global element index.
  int object_of(int global) const;
  int global(int c, int x) const { return offsets_[c] + x; }

  /// X(f)(x) for f : a -> b and x in X(b); returns a local index in X(a).
  int act(int morphism, int x) const { return actions_[morphism][x]; }
  /// Action table of a generator (by position in category().generators()).
  const std::vector<int>& generator_action(int gen) const { return generator_actions_.at(gen); }

  const std::string& name(int c, int x) const { return names_.at(c).at(x); }
  std::optional<int> find_element(int c, std::string_view name) const;

  /// Set when this presheaf is the representable y(c).
  std::optional<int> representing_object() const { return representing_; }

  /// All elements reachable from the given one under every action, including itself.
  ElementSet generated_by(int global) const;

  friend FinitePresheaf yoneda(CategoryPtr cat, int c);

 private:
  FinitePresheaf() = default;
  void finalize_offsets();
  void derive_actions();
  void validate() const;

  CategoryPtr cat_;
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  int total_ = 0;
  std::vector<std::vector<int>> generator_actions_;
  std::vector<std::vector<int>> actions_;  // per morphism
  std::vector<std::vector<std::string>> names_;
  std::optional<int> representing_;
};

/// y(c)(a) = C(a, c) with actions by precomposition. Elements are named by
/// their underlying vertex tuple, e.g. "(0,2)".
FinitePresheaf yoneda(CategoryPtr cat, int c);

/// A subpresheaf stored as the set of global element indices it contains.
struct Subpresheaf {
  ElementSet elements;

  bool contains(const FinitePresheaf& ambient, int c, int x) const { return elements.test(ambient.global(c, x)); }
  std::size_t count() const { return elements.count(); }
  bool operator==(const Subpresheaf&) const = default;
};

Subpresheaf empty_subpresheaf(const FinitePresheaf& ambient);
Subpresheaf full_subpresheaf(const FinitePresheaf& ambient);
/// Builds a subpresheaf from per-object element lists; throws InputError if not action-closed.
Subpresheaf make_subpresheaf(const FinitePresheaf& ambient, const std::vector<std::vector<int>>& levels);
bool is_action_closed(const FinitePresheaf& ambient, const ElementSet& elements);
/// Least subpresheaf containing the given elements, given as (object, local index).
Subpresheaf generated_subpresheaf(const FinitePresheaf& ambient, std::span<const std::pair<int, int>> elements);
std::vector<int> level_elements(const FinitePresheaf& ambient, const Subpresheaf& s, int c);
Subpresheaf meet(const Subpresheaf& a, const Subpresheaf& b);
Subpresheaf join(const Subpresheaf& a, const Subpresheaf& b);
bool leq(const Subpresheaf& a, const Subpresheaf& b);

/// Canonical order: compare the element bitsets as numbers whose most
/// significant bit is the last element of the highest object.
bool canonical_less(const ElementSet& a, const ElementSet& b);

/// Every action-closed subset of the ambient presheaf, each exactly once,
/// in canonical order. Throws BudgetExceeded past `max_results`.
std::vector<Subpresheaf> enumerate_subpresheaves(const FinitePresheaf& ambient, std::size_t max_results = 1u << 20);

/// The i-th face of y(k): least subpresheaf containing d^k_i. Needs k >= 1.
Subpresheaf ith_face(const FinitePresheaf& yk, int i);
/// Join of all faces of y(k); empty for k = 0.
Subpresheaf boundary(const FinitePresheaf& yk);

/// Elements of y(k)(l) in the recursive set degen(x, l) of degenerate
/// l-simplices over x. `x` is a subpresheaf of `ambient`, which is y(k) over
/// either SemiSimplex(N) or Simplex(N); results index into `simplex_yk`, the
/// representable y(k) over Simplex(N).
std::vector<int> degen_set(const FinitePresheaf& ambient, const Subpresheaf& x, const FinitePresheaf& simplex_yk,
                           int l);

/// F_k: adds all degeneracies to a subpresheaf of y+(k).
Subpresheaf add_degeneracies(const FinitePresheaf& semi_yk, const Subpresheaf& x_plus,
                             const FinitePresheaf& simplex_yk);
/// F_k^-1: removes all degenerate simplices from a subpresheaf of y(k).
Subpresheaf strip_degeneracies(const FinitePresheaf& simplex_yk, const Subpresheaf& x, const FinitePresheaf& semi_yk);

/// A family of functions X(c) -> Y(c).
struct PresheafMorphism {
  std::vector<std::vector<int>> components;
};

/// Checks every naturality square with every generator.
bool is_natural(const FinitePresheaf& source, const FinitePresheaf& target, const PresheafMorphism& f,
                std::string* witness = nullptr);

/// Subpresheaf viewed as a presheaf in its own right, with the map of its
/// elements into the ambient (per object, local indices).
struct RestrictedPresheaf {
  FinitePresheaf presheaf;
  std::vector<std::vector<int>> inclusion;
};
RestrictedPresheaf restrict_to(const FinitePresheaf& ambient, const Subpresheaf& s);

/// Calls `visit` with every natural transformation source -> target, found
/// by backtracking lowest dimension first. `visit` returns false to stop.
/// Returns the number of morphisms visited.
std::size_t for_each_morphism(const FinitePresheaf& source, const FinitePresheaf& target,
                              const std::function<bool(const PresheafMorphism&)>& visit);
std::vector<PresheafMorphism> all_morphisms(const FinitePresheaf& source, const FinitePresheaf& target);

/// Canonical form of a presheaf under relabelling of each carrier; two
/// presheaves over the same category are isomorphic iff their keys agree.
std::vector<int> canonical_key(const FinitePresheaf& x);

/// Every presheaf over the category with total carrier at most
/// `max_total`, one per isomorphism class, ordered by total size then key.
std::vector<FinitePresheaf> enumerate_presheaves(const CategoryPtr& cat, int max_total);

/// Human-readable rendering: per-object element lists and generator actions.
std::string describe(const FinitePresheaf& x, bool hide_degenerate = false);
std::string describe(const FinitePresheaf& ambient, const Subpresheaf& s);

}  // namespace lawvere
