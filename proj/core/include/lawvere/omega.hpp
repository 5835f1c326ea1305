#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lawvere/fincat.hpp"
#include "lawvere/lattice.hpp"
#include "lawvere/presheaf.hpp"

namespace lawvere {

inline constexpr int kDefaultOmegaLevelBound = 512;

/// Omega(c) = sieves on c, i.e. subpresheaves of y(c), indexed by their
/// position in enumerate_subpresheaves(y(c)). Index 0 is the empty sieve and
/// the last index is y(c) itself (True).
class OmegaObject {
 public:
  /// Throws BudgetExceeded naming the first level with more than `level_bound` sieves.
  static std::shared_ptr<const OmegaObject> build(CategoryPtr cat, int level_bound = kDefaultOmegaLevelBound);

  const FiniteIndexCategory& category() const { return *cat_; }
  const CategoryPtr& category_ptr() const { return cat_; }
  int level_count() const { return cat_->object_count(); }

  const FinitePresheaf& representable(int c) const { return levels_.at(c).yc; }
  const std::vector<Subpresheaf>& sieves(int c) const { return levels_.at(c).sieves; }
  const Subpresheaf& sieve(int c, int s) const { return levels_.at(c).sieves.at(s); }
  const FiniteHeytingAlgebra& level(int c) const { return *levels_.at(c).algebra; }
  const HeytingPtr& level_ptr(int c) const { return levels_.at(c).algebra; }
  int size(int c) const { return static_cast<int>(levels_.at(c).sieves.size()); }
  int top(int c) const { return size(c) - 1; }
  int bottom(int) const { return 0; }

  /// Index of a sieve; throws InputError if the set is not a sieve on c.
  int index_of(int c, const Subpresheaf& s) const;
  int boundary_index(int c) const { return levels_.at(c).boundary; }
  /// Index of the face of y(c) generated by the face generator `face`.
  int face_index(int face) const;

  /// Pullback along u : a -> c, sending S to { g | u . g in S } on a.
  int act(int u, int s) const { return acts_.at(u).at(s); }

  /// Images of the sieve under the faces of c, ordered as category().faces(c).
  std::vector<int> incidence_tuple(int c, int s) const;
  /// Sieves on c with the given incidence tuple.
  std::vector<int> incidence_fiber(int c, const std::vector<int>& tuple) const;

  /// Omega as a presheaf, so that morphisms into it can be checked for naturality.
  const FinitePresheaf& as_presheaf() const { return *presheaf_; }

  /// Short sieve summary listing generating elements, e.g. "(0)+(1)" or "empty".
  std::string label(int c, int s) const;
  std::string to_dot(int c) const;

 private:
  struct Level {
    FinitePresheaf yc;
    std::vector<Subpresheaf> sieves;
    HeytingPtr algebra;
    int boundary = 0;
    std::map<std::vector<int>, std::vector<int>> fibers;
  };

  OmegaObject() = default;

  CategoryPtr cat_;
  std::vector<Level> levels_;
  std::vector<std::vector<int>> acts_;
  std::unique_ptr<FinitePresheaf> presheaf_;
};

using OmegaPtr = std::shared_ptr<const OmegaObject>;

/// chi(a) at c = { f into c | A(f)(a) in A' }, as sieve indices.
PresheafMorphism characteristic_function(const OmegaObject& omega, const FinitePresheaf& ambient,
                                         const Subpresheaf& sub);
/// Pullback of True along a morphism A -> Omega.
Subpresheaf pullback_true(const OmegaObject& omega, const FinitePresheaf& ambient, const PresheafMorphism& chi);

/// For a face generator d : c' -> c, the map T |-> d . T from Omega(c') into
/// the down-set of the face of y(c). Returns the image indices.
std::vector<int> face_pushforward(const OmegaObject& omega, int face);
/// Checks that face_pushforward is an order isomorphism onto the down-set
/// below the face, inverse to pulling back along the face.
CheckResult verify_face_downset_iso(const OmegaObject& omega, int face);

struct IncidenceReport {
  int tuples = 0;             // |Omega(c')|^(number of faces)
  int compatible_tuples = 0;  // tuples whose shared faces agree
  int hit = 0;                // distinct tuples realised by some sieve
  bool surjective = false;    // hit == tuples
  bool surjective_on_compatible = false;
  std::vector<std::vector<int>> collisions;  // fibers with more than one sieve
};
/// Incidence-tuple map at a simplicial level c (dimension >= 1), or at an
/// edge object of the bicoloured shape.
IncidenceReport analyze_incidence(const OmegaObject& omega, int c);

}  // namespace lawvere
