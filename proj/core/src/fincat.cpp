#include "lawvere/fincat.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "lawvere/check.hpp"

namespace lawvere {

namespace {

// All (strictly, when `strict`) monotone maps {0..k} -> {0..l}, lexicographic.
void monotone_maps(int k, int l, bool strict, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(k + 1, 0);
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos > k) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= l; ++v) {
      cur[pos] = v;
      self(self, pos + 1, strict ? v + 1 : v);
    }
  };
  rec(rec, 0, 0);
}

std::vector<int> face_map(int l, int i) {
  std::vector<int> m(l);
  for (int j = 0; j < l; ++j) m[j] = j < i ? j : j + 1;
  return m;
}

std::vector<int> degeneracy_map(int l, int i) {
  std::vector<int> m(l + 2);
  for (int j = 0; j <= l + 1; ++j) m[j] = j <= i ? j : j - 1;
  return m;
}

std::string map_name(const std::vector<int>& map) {
  std::string s = "(";
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(map[i]);
  }
  return s + ")";
}

std::optional<int> parse_suffix(std::string_view text, std::string_view prefix) {
  if (!text.starts_with(prefix)) return std::nullopt;
  text.remove_prefix(prefix.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

CategoryPtr FiniteIndexCategory::build(std::string_view spec, int max_dimension) {
  if (spec == "set") return make(CategoryKind::SemiSimplex, 0, max_dimension);
  if (spec == "graph") return make(CategoryKind::Graph, 1, max_dimension);
  if (spec == "reflgraph") return make(CategoryKind::ReflGraph, 1, max_dimension);
  if (spec == "bicolor" || spec == "bicolgraph") return make(CategoryKind::BiColGraph, 1, max_dimension);
  if (auto n = parse_suffix(spec, "semi")) return make(CategoryKind::SemiSimplex, *n, max_dimension);
  if (auto n = parse_suffix(spec, "sset")) return make(CategoryKind::Simplex, *n, max_dimension);
  throw InputError("unknown category kind '" + std::string(spec) + "'");
}

CategoryPtr FiniteIndexCategory::make(CategoryKind kind, int dimension, int max_dimension) {
  std::shared_ptr<FiniteIndexCategory> cat(new FiniteIndexCategory());
  cat->kind_ = kind;
  switch (kind) {
    case CategoryKind::SemiSimplex:
    case CategoryKind::Simplex:
      if (dimension < 0) throw InputError("negative truncation dimension");
      if (dimension > max_dimension) {
        throw BudgetExceeded("truncation dimension " + std::to_string(dimension) + " exceeds maximum " +
                             std::to_string(max_dimension) + " (raise --max-dim to override)");
      }
      cat->build_simplex(dimension, kind == CategoryKind::Simplex);
      if (dimension == 0) {
        cat->spec_ = "set";
      } else {
        cat->spec_ = (kind == CategoryKind::Simplex ? "sset" : "semi") + std::to_string(dimension);
      }
      break;
    case CategoryKind::Graph:
      cat->build_simplex(1, false);
      cat->spec_ = "graph";
      break;
    case CategoryKind::ReflGraph:
      cat->build_simplex(1, true);
      cat->spec_ = "reflgraph";
      break;
    case CategoryKind::BiColGraph:
      cat->build_bicolored();
      cat->spec_ = "bicolor";
      break;
  }
  cat->finish();
  return cat;
}

int FiniteIndexCategory::add_morphism(Morphism m) {
  int id = static_cast<int>(morphisms_.size());
  if (!m.map.empty()) by_map_[{{m.source, m.target}, m.map}] = id;
  morphisms_.push_back(std::move(m));
  return id;
}

void FiniteIndexCategory::build_simplex(int n, bool with_degeneracies) {
  truncation_ = n;
  const bool graph_names = kind_ == CategoryKind::Graph || kind_ == CategoryKind::ReflGraph;
  for (int k = 0; k <= n; ++k) {
    Object o;
    o.name = graph_names ? (k == 0 ? "V" : "E") : std::to_string(k);
    o.dimension = k;
    objects_.push_back(o);
  }
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; l <= n; ++l) {
      std::vector<std::vector<int>> maps;
      monotone_maps(k, l, !with_degeneracies, maps);
      for (auto& mp : maps) {
        Morphism m{k, l, mp, map_name(mp)};
        int id = add_morphism(std::move(m));
        bool is_id = k == l;
        for (int j = 0; is_id && j <= k; ++j) is_id = morphisms_[id].map[j] == j;
        if (is_id) {
          objects_[k].identity = id;
          morphisms_[id].name = "id" + std::to_string(k);
        }
      }
    }
  }
  for (int l = 1; l <= n; ++l) {
    for (int i = l; i >= 0; --i) {
      int id = by_map_.at({{l - 1, l}, face_map(l, i)});
      morphisms_[id].name = "d" + std::to_string(l) + "_" + std::to_string(i);
      if (graph_names) morphisms_[id].name = i == 1 ? "s" : "t";
      generators_.push_back({id, GeneratorRole::Face, i});
      objects_[l].faces.push_back(id);
    }
  }
  if (with_degeneracies) {
    for (int l = 0; l < n; ++l) {
      for (int i = 0; i <= l; ++i) {
        int id = by_map_.at({{l + 1, l}, degeneracy_map(l, i)});
        morphisms_[id].name = graph_names ? "refl" : "s" + std::to_string(l) + "_" + std::to_string(i);
        generators_.push_back({id, GeneratorRole::Degeneracy, i});
      }
    }
  }
}

void FiniteIndexCategory::build_bicolored() {
  truncation_ = 1;
  objects_ = {{"V", 0, -1, {}}, {"E", 1, -1, {}}, {"E'", 1, -1, {}}};
  for (int c = 0; c < 3; ++c) objects_[c].identity = add_morphism({c, c, {}, "id" + objects_[c].name});
  const char* names[2][2] = {{"s", "t"}, {"s'", "t'"}};
  for (int colour = 0; colour < 2; ++colour) {
    for (int which = 0; which < 2; ++which) {
      int id = add_morphism({0, colour + 1, {}, names[colour][which]});
      generators_.push_back({id, GeneratorRole::Face, 1 - which});
      objects_[colour + 1].faces.push_back(id);
    }
  }
}

void FiniteIndexCategory::finish() {
  const int n = object_count();
  const int m = morphism_count();
  homs_.assign(n * n, {});
  hom_position_.assign(m, 0);
  for (int id = 0; id < m; ++id) {
    auto& h = homs_[morphisms_[id].source * n + morphisms_[id].target];
    hom_position_[id] = static_cast<int>(h.size());
    h.push_back(id);
  }
  compose_.assign(static_cast<std::size_t>(m) * m, -1);
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      const auto& mf = morphisms_[f];
      const auto& mg = morphisms_[g];
      if (mf.target != mg.source) continue;
      int result = -1;
      if (is_identity(f)) {
        result = g;
      } else if (is_identity(g)) {
        result = f;
      } else {
        std::vector<int> comp(mf.map.size());
        for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = mg.map[mf.map[i]];
        result = by_map_.at({{mf.source, mg.target}, comp});
      }
      compose_[static_cast<std::size_t>(g) * m + f] = result;
    }
  }
}

std::optional<int> FiniteIndexCategory::find_object(std::string_view name) const {
  for (int c = 0; c < object_count(); ++c)
    if (objects_[c].name == name) return c;
  return std::nullopt;
}

std::optional<int> FiniteIndexCategory::compose(int g, int f) const {
  int r = compose_.at(static_cast<std::size_t>(g) * morphism_count() + f);
  if (r < 0) return std::nullopt;
  return r;
}

std::optional<int> FiniteIndexCategory::find_by_map(int source, int target, std::span<const int> map) const {
  auto it = by_map_.find({{source, target}, std::vector<int>(map.begin(), map.end())});
  if (it == by_map_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FiniteIndexCategory::find_generator(std::string_view name) const {
  for (const auto& g : generators_)
    if (morphisms_[g.morphism].name == name) return g.morphism;
  // Graph shapes also accept the simplicial names.
  if (kind_ == CategoryKind::Graph || kind_ == CategoryKind::ReflGraph) {
    if (name == "d1_1") return find_generator("s");
    if (name == "d1_0") return find_generator("t");
    if (name == "s0_0" && kind_ == CategoryKind::ReflGraph) return find_generator("refl");
  }
  return std::nullopt;
}

NormalForm FiniteIndexCategory::normal_form(int m) const {
  const auto& f = morphisms_.at(m);
  NormalForm nf;
  if (f.map.empty()) return nf;
  const int k = dimension(f.source);
  const int l = dimension(f.target);
  for (int j = 0; j < k; ++j)
    if (f.map[j] == f.map[j + 1]) nf.degeneracies.push_back(j);
  std::vector<bool> hit(l + 1, false);
  for (int v : f.map) hit[v] = true;
  for (int i = l; i >= 0; --i)
    if (!hit[i]) nf.faces.push_back(i);
  return nf;
}

std::optional<int> FiniteIndexCategory::recompose(const NormalForm& nf, int source_dim) const {
  if (kind_ == CategoryKind::BiColGraph) return std::nullopt;
  if (source_dim < 0 || source_dim > truncation_) return std::nullopt;
  std::vector<int> cur(source_dim + 1);
  for (int j = 0; j <= source_dim; ++j) cur[j] = j;
  int dim = source_dim;
  for (auto it = nf.degeneracies.rbegin(); it != nf.degeneracies.rend(); ++it) {
    if (*it < 0 || *it >= dim) return std::nullopt;
    auto s = degeneracy_map(dim - 1, *it);
    for (int& v : cur) v = s[v];
    --dim;
  }
  for (auto it = nf.faces.rbegin(); it != nf.faces.rend(); ++it) {
    if (*it < 0 || *it > dim + 1 || dim + 1 > truncation_) return std::nullopt;
    auto d = face_map(dim + 1, *it);
    for (int& v : cur) v = d[v];
    ++dim;
  }
  return find_by_map(source_dim, dim, cur);
}

std::vector<int> FiniteIndexCategory::factor(int m) const {
  if (is_identity(m)) return {};
  if (kind_ == CategoryKind::BiColGraph) return {m};
  NormalForm nf = normal_form(m);
  std::vector<int> out;
  int dim = dimension(morphisms_[m].source) - static_cast<int>(nf.degeneracies.size());
  // Faces, outermost first: the outermost face lands in the target dimension.
  int top = dimension(morphisms_[m].target);
  for (std::size_t idx = 0; idx < nf.faces.size(); ++idx) {
    int l = top - static_cast<int>(idx);
    out.push_back(by_map_.at({{l - 1, l}, face_map(l, nf.faces[idx])}));
  }
  // Degeneracies: s_{deg[0]} is outermost and lands in dimension `dim`.
  for (std::size_t idx = 0; idx < nf.degeneracies.size(); ++idx) {
    int l = dim + static_cast<int>(idx);
    out.push_back(by_map_.at({{l + 1, l}, degeneracy_map(l, nf.degeneracies[idx])}));
  }
  return out;
}

std::string FiniteIndexCategory::describe() const {
  std::ostringstream os;
  os << "category " << spec_ << ": " << object_count() << " objects, " << morphism_count() << " morphisms\n";
  for (int c = 0; c < object_count(); ++c) os << "  object " << objects_[c].name << " (dim " << dimension(c) << ")\n";
  os << "  generators:";
  for (const auto& g : generators_) os << ' ' << morphisms_[g.morphism].name;
  os << '\n';
  return os.str();
}

bool verify_category_laws(const FiniteIndexCategory& cat, std::string* witness) {
  const int m = cat.morphism_count();
  for (int f = 0; f < m; ++f) {
    const auto& mf = cat.morphism(f);
    if (cat.compose(f, cat.identity(mf.source)) != f || cat.compose(cat.identity(mf.target), f) != f) {
      if (witness) *witness = "identity law fails at " + mf.name;
      return false;
    }
  }
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      auto gf = cat.compose(g, f);
      if (!gf) continue;
      for (int h = 0; h < m; ++h) {
        auto hg = cat.compose(h, g);
        if (!hg) continue;
        if (cat.compose(h, *gf) != cat.compose(*hg, f)) {
          if (witness)
            *witness = "associativity fails at (" + cat.morphism(h).name + "," + cat.morphism(g).name + "," +
                       cat.morphism(f).name + ")";
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace lawvere

namespace lawvere {

std::vector<SharedFace> shared_faces(const FiniteIndexCategory& cat, int c) {
  std::vector<SharedFace> out;
  auto faces = cat.faces(c);
  if (faces.empty()) return out;
  const int below = cat.morphism(faces[0]).source;
  auto lower = cat.faces(below);
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = i + 1; j < faces.size(); ++j)
      for (std::size_t a = 0; a < lower.size(); ++a)
        for (std::size_t b = 0; b < lower.size(); ++b)
          if (*cat.compose(faces[i], lower[a]) == *cat.compose(faces[j], lower[b]))
            out.push_back({static_cast<int>(i), static_cast<int>(a), static_cast<int>(j), static_cast<int>(b)});
  return out;
}

}  // namespace lawvere
