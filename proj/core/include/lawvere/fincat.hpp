#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lawvere {

// Variance convention (used everywhere in this library):
//
//   Morphisms are stored in the direction of the index category C itself.
//   For the simplex kinds C is the truncated simplex category, so a morphism
//   f : k -> l is a monotone map {0..k} -> {0..l}. A presheaf X acts
//   contravariantly: X(f) : X(l) -> X(k). The face d^l_i : l-1 -> l skips i,
//   so for a simplex x in X(l) its i-th face is X(d^l_i)(x). The degeneracy
//   s^l_i : l+1 -> l repeats i, so X(s^l_i) : X(l) -> X(l+1).
//
//   The Yoneda presheaf y(c) has y(c)(a) = C(a, c) and acts by precomposition.

enum class CategoryKind { SemiSimplex, Simplex, Graph, ReflGraph, BiColGraph };

inline constexpr int kDefaultMaxDimension = 4;

struct Morphism {
  int source = 0;
  int target = 0;
  /// Underlying monotone map for simplex kinds, empty for BiColGraph.
  std::vector<int> map;
  std::string name;
};

enum class GeneratorRole { Face, Degeneracy };

struct Generator {
  int morphism = 0;
  GeneratorRole role = GeneratorRole::Face;
  /// The index i of d^l_i / s^l_i. For BiColGraph: 1 for s/s', 0 for t/t'.
  int index = 0;
};

/// Ordered degeneracy and face indices of the unique factorisation
///   f = d_{faces[0]} . ... . d_{faces.back()} . s_{degeneracies[0]} . ... . s_{degeneracies.back()}
/// with faces strictly decreasing and degeneracies strictly increasing.
struct NormalForm {
  std::vector<int> degeneracies;
  std::vector<int> faces;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

class FiniteIndexCategory {
 public:
  /// Builds the built-in category named by `spec`: "set", "graph",
  /// "reflgraph", "bicolor", "semiN" or "ssetN" (N a dimension).
  static std::shared_ptr<const FiniteIndexCategory> build(std::string_view spec,
                                                          int max_dimension = kDefaultMaxDimension);
  static std::shared_ptr<const FiniteIndexCategory> make(CategoryKind kind, int dimension = 1,
                                                         int max_dimension = kDefaultMaxDimension);

  CategoryKind kind() const { return kind_; }
  /// Canonical spec string ("graph", "semi2", ...), accepted by build().
  const std::string& spec() const { return spec_; }
  /// Truncation dimension for simplex kinds (1 for the graph shapes).
  int truncation() const { return truncation_; }
  bool has_degeneracies() const { return kind_ == CategoryKind::Simplex || kind_ == CategoryKind::ReflGraph; }
  bool is_simplicial() const { return kind_ != CategoryKind::BiColGraph; }

  int object_count() const { return static_cast<int>(objects_.size()); }
  const std::string& object_name(int c) const { return objects_.at(c).name; }
  int dimension(int c) const { return objects_.at(c).dimension; }
  std::optional<int> find_object(std::string_view name) const;

  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const Morphism& morphism(int m) const { return morphisms_.at(m); }
  int identity(int c) const { return objects_.at(c).identity; }
  bool is_identity(int m) const { return identity(morphisms_.at(m).source) == m; }

  /// g . f, defined when target(f) == source(g).
  std::optional<int> compose(int g, int f) const;
  /// Morphisms a -> b in canonical order.
  std::span<const int> hom(int a, int b) const { return homs_[a * object_count() + b]; }
  /// Position of m inside hom(source(m), target(m)).
  int position_in_hom(int m) const { return hom_position_.at(m); }
  /// Morphism with the given monotone map, for simplex kinds.
  std::optional<int> find_by_map(int source, int target, std::span<const int> map) const;

  std::span<const Generator> generators() const { return generators_; }
  std::optional<int> find_generator(std::string_view name) const;
  /// Face generators with target c, ordered (d_k, ..., d_0). Empty at dimension 0.
  std::span<const int> faces(int c) const { return objects_.at(c).faces; }

  /// Generators whose composite (first element outermost) equals m; empty for identities.
  std::vector<int> factor(int m) const;
  /// Unique ordered factorisation of a simplex morphism.
  NormalForm normal_form(int m) const;
  /// Recomposes a normal form starting at dimension `source_dim`.
  std::optional<int> recompose(const NormalForm& nf, int source_dim) const;

  /// Human-readable description: objects, hom-set sizes, generators.
  std::string describe() const;

 private:
  struct Object {
    std::string name;
    int dimension = 0;
    int identity = -1;
    std::vector<int> faces;
  };

  FiniteIndexCategory() = default;
  void build_simplex(int n, bool with_degeneracies);
  void build_bicolored();
  void finish();
  int add_morphism(Morphism m);

  CategoryKind kind_ = CategoryKind::SemiSimplex;
  std::string spec_;
  int truncation_ = 0;
  std::vector<Object> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<Generator> generators_;
  std::vector<std::vector<int>> homs_;
  std::vector<int> hom_position_;
  std::vector<int> compose_;  // morphism_count^2, -1 when not composable
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> by_map_;
};

using CategoryPtr = std::shared_ptr<const FiniteIndexCategory>;

/// Two faces of c meeting in a common lower face:
/// faces(c)[i] . faces(lower)[lower_i] == faces(c)[j] . faces(lower)[lower_j], i < j.
struct SharedFace {
  int i = 0;
  int lower_i = 0;
  int j = 0;
  int lower_j = 0;
};
/// All such coincidences; the faces of c must share one source object.
std::vector<SharedFace> shared_faces(const FiniteIndexCategory& cat, int c);

/// Checks associativity and identity laws by exhaustive iteration.
bool verify_category_laws(const FiniteIndexCategory& cat, std::string* witness = nullptr);

}  // namespace lawvere
