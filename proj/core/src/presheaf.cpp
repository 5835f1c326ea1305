#include "lawvere/presheaf.hpp"

#include <algorithm>
#include <sstream>

#include "lawvere/check.hpp"

namespace lawvere {

FinitePresheaf::FinitePresheaf(CategoryPtr cat, std::vector<int> sizes,
                               std::vector<std::vector<int>> generator_actions,
                               std::vector<std::vector<std::string>> names)
    : cat_(std::move(cat)), sizes_(std::move(sizes)), generator_actions_(std::move(generator_actions)),
      names_(std::move(names)) {
  const auto& C = *cat_;
  if (static_cast<int>(sizes_.size()) != C.object_count())
    throw InputError("presheaf needs one carrier per object of " + C.spec());
  for (int s : sizes_)
    if (s < 0) throw InputError("negative carrier size");
  const auto gens = C.generators();
  if (generator_actions_.size() != gens.size())
    throw InputError("presheaf needs one action per generator of " + C.spec());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& m = C.morphism(gens[g].morphism);
    if (static_cast<int>(generator_actions_[g].size()) != sizes_[m.target])
      throw InputError("action of " + m.name + " must be defined on every element of " + C.object_name(m.target));
    for (int v : generator_actions_[g])
      if (v < 0 || v >= sizes_[m.source])
        throw InputError("action of " + m.name + " leaves " + C.object_name(m.source));
  }
  if (names_.empty()) {
    names_.resize(sizes_.size());
    for (std::size_t c = 0; c < sizes_.size(); ++c)
      for (int x = 0; x < sizes_[c]; ++x) names_[c].push_back(C.object_name(static_cast<int>(c)) + std::to_string(x));
  }
  if (names_.size() != sizes_.size()) throw InputError("element names must cover every object");
  for (std::size_t c = 0; c < sizes_.size(); ++c)
    if (static_cast<int>(names_[c].size()) != sizes_[c]) throw InputError("element names must cover every element");
  finalize_offsets();
  derive_actions();
  validate();
}

void FinitePresheaf::finalize_offsets() {
  offsets_.assign(sizes_.size(), 0);
  total_ = 0;
  for (std::size_t c = 0; c < sizes_.size(); ++c) {
    offsets_[c] = total_;
    total_ += sizes_[c];
  }
}

void FinitePresheaf::derive_actions() {
  const auto& C = *cat_;
  std::vector<int> gen_slot(C.morphism_count(), -1);
  const auto gens = C.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) gen_slot[gens[g].morphism] = static_cast<int>(g);
  actions_.assign(C.morphism_count(), {});
  for (int m = 0; m < C.morphism_count(); ++m) {
    const int b = C.morphism(m).target;
    std::vector<int> table(sizes_[b]);
    for (int x = 0; x < sizes_[b]; ++x) table[x] = x;
    // m = g1 . g2 . ... . gr acts as X(gr) . ... . X(g1).
    for (int g : C.factor(m)) {
      const auto& act = generator_actions_[gen_slot[g]];
      for (int& v : table) v = act[v];
    }
    actions_[m] = std::move(table);
  }
}

void FinitePresheaf::validate() const {
  const auto& C = *cat_;
  for (int g = 0; g < C.morphism_count(); ++g) {
    for (int f = 0; f < C.morphism_count(); ++f) {
      auto gf = C.compose(g, f);
      if (!gf) continue;
      const int b = C.morphism(g).target;
      for (int x = 0; x < sizes_[b]; ++x) {
        if (act(*gf, x) != act(f, act(g, x))) {
          throw InputError("presheaf is not functorial: " + C.morphism(*gf).name + " vs " + C.morphism(g).name +
                           " then " + C.morphism(f).name + " on element " + names_[b][x]);
        }
      }
    }
  }
}

int FinitePresheaf::object_of(int global) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), global);
  int c = static_cast<int>(it - offsets_.begin()) - 1;
  while (c > 0 && sizes_[c] == 0) --c;  // empty objects share the offset of their successor
  while (global >= offsets_[c] + sizes_[c]) ++c;
  return c;
}

std::optional<int> FinitePresheaf::find_element(int c, std::string_view name) const {
  const auto& v = names_.at(c);
  auto it = std::find(v.begin(), v.end(), name);
  if (it == v.end()) return std::nullopt;
  return static_cast<int>(it - v.begin());
}

ElementSet FinitePresheaf::generated_by(int global) const {
  ElementSet out(total_);
  const int c = object_of(global);
  const int x = global - offsets_[c];
  for (int m = 0; m < cat_->morphism_count(); ++m) {
    const auto& mor = cat_->morphism(m);
    if (mor.target != c) continue;
    out.set(offsets_[mor.source] + act(m, x));
  }
  return out;
}

FinitePresheaf yoneda(CategoryPtr cat, int c) {
  const auto& C = *cat;
  if (c < 0 || c >= C.object_count()) throw InputError("yoneda: object out of range");
  FinitePresheaf y;
  y.cat_ = cat;
  y.representing_ = c;
  const int n = C.object_count();
  y.sizes_.resize(n);
  y.names_.resize(n);
  for (int a = 0; a < n; ++a) {
    auto h = C.hom(a, c);
    y.sizes_[a] = static_cast<int>(h.size());
    for (int m : h) y.names_[a].push_back(C.morphism(m).map.empty() ? C.morphism(m).name : [&] {
      std::string s = "(";
      const auto& mp = C.morphism(m).map;
      for (std::size_t i = 0; i < mp.size(); ++i) s += (i ? "," : "") + std::to_string(mp[i]);
      return s + ")";
    }());
  }
  y.finalize_offsets();
  y.actions_.assign(C.morphism_count(), {});
  for (int f = 0; f < C.morphism_count(); ++f) {
    const auto& mf = C.morphism(f);
    auto h = C.hom(mf.target, c);
    std::vector<int> table(h.size());
    for (std::size_t p = 0; p < h.size(); ++p) table[p] = C.position_in_hom(*C.compose(h[p], f));
    y.actions_[f] = std::move(table);
  }
  for (const auto& g : C.generators()) y.generator_actions_.push_back(y.actions_[g.morphism]);
  return y;
}

Subpresheaf empty_subpresheaf(const FinitePresheaf& ambient) { return {ElementSet(ambient.total_size())}; }

Subpresheaf full_subpresheaf(const FinitePresheaf& ambient) {
  ElementSet e(ambient.total_size());
  e.set();
  return {e};
}

bool is_action_closed(const FinitePresheaf& ambient, const ElementSet& elements) {
  const auto& C = ambient.category();
  for (const auto& g : C.generators()) {
    const auto& m = C.morphism(g.morphism);
    for (int x = 0; x < ambient.size(m.target); ++x) {
      if (!elements.test(ambient.global(m.target, x))) continue;
      if (!elements.test(ambient.global(m.source, ambient.act(g.morphism, x)))) return false;
    }
  }
  return true;
}

Subpresheaf make_subpresheaf(const FinitePresheaf& ambient, const std::vector<std::vector<int>>& levels) {
  if (static_cast<int>(levels.size()) != ambient.category().object_count())
    throw InputError("subpresheaf needs one level per object");
  Subpresheaf s = empty_subpresheaf(ambient);
  for (std::size_t c = 0; c < levels.size(); ++c) {
    for (int x : levels[c]) {
      if (x < 0 || x >= ambient.size(static_cast<int>(c))) throw InputError("subpresheaf element out of range");
      s.elements.set(ambient.global(static_cast<int>(c), x));
    }
  }
  if (!is_action_closed(ambient, s.elements)) throw InputError("subset is not closed under the presheaf actions");
  return s;
}

Subpresheaf generated_subpresheaf(const FinitePresheaf& ambient, std::span<const std::pair<int, int>> elements) {
  Subpresheaf s = empty_subpresheaf(ambient);
  for (auto [c, x] : elements) s.elements |= ambient.generated_by(ambient.global(c, x));
  return s;
}

std::vector<int> level_elements(const FinitePresheaf& ambient, const Subpresheaf& s, int c) {
  std::vector<int> out;
  for (int x = 0; x < ambient.size(c); ++x)
    if (s.elements.test(ambient.global(c, x))) out.push_back(x);
  return out;
}

Subpresheaf meet(const Subpresheaf& a, const Subpresheaf& b) { return {a.elements & b.elements}; }
Subpresheaf join(const Subpresheaf& a, const Subpresheaf& b) { return {a.elements | b.elements}; }
bool leq(const Subpresheaf& a, const Subpresheaf& b) { return a.elements.is_subset_of(b.elements); }

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a.test(i) != b.test(i)) return b.test(i);
  }
  return false;
}

std::vector<Subpresheaf> enumerate_subpresheaves(const FinitePresheaf& ambient, std::size_t max_results) {
  const int n = ambient.total_size();
  std::vector<ElementSet> down(n), up(n, ElementSet(n));
  for (int e = 0; e < n; ++e) down[e] = ambient.generated_by(e);
  for (int e = 0; e < n; ++e)
    for (auto d = down[e].find_first(); d != ElementSet::npos; d = down[e].find_next(d)) up[d].set(e);

  std::vector<Subpresheaf> out;
  // Each branch decides one undecided element: including it forces its
  // generated subpresheaf, excluding it forbids everything that generates it.
  // Both branches stay consistent, so every leaf is a distinct subpresheaf.
  auto rec = [&](auto&& self, ElementSet& in, ElementSet& ex) -> void {
    ElementSet decided = in | ex;
    decided.flip();
    auto next = decided.find_first();
    if (next == ElementSet::npos) {
      if (out.size() >= max_results)
        throw BudgetExceeded("more than " + std::to_string(max_results) + " subpresheaves");
      out.push_back({in});
      return;
    }
    {
      ElementSet in2 = in | down[next];
      self(self, in2, ex);
    }
    {
      ElementSet ex2 = ex | up[next];
      self(self, in, ex2);
    }
  };
  ElementSet in(n), ex(n);
  rec(rec, in, ex);
  std::sort(out.begin(), out.end(),
            [](const Subpresheaf& a, const Subpresheaf& b) { return canonical_less(a.elements, b.elements); });
  return out;
}

Subpresheaf ith_face(const FinitePresheaf& yk, int i) {
  const auto& C = yk.category();
  if (!yk.representing_object()) throw InputError("ith_face needs a representable presheaf");
  const int k = *yk.representing_object();
  for (int d : C.faces(k)) {
    const Generator* gen = nullptr;
    for (const auto& g : C.generators())
      if (g.morphism == d) gen = &g;
    if (gen && gen->index == i) {
      std::pair<int, int> el{C.morphism(d).source, C.position_in_hom(d)};
      return generated_subpresheaf(yk, std::span(&el, 1));
    }
  }
  throw InputError("face index " + std::to_string(i) + " out of range for object " + C.object_name(k));
}

Subpresheaf boundary(const FinitePresheaf& yk) {
  const auto& C = yk.category();
  if (!yk.representing_object()) throw InputError("boundary needs a representable presheaf");
  Subpresheaf out = empty_subpresheaf(yk);
  const int k = *yk.representing_object();
  for (int d : C.faces(k)) {
    std::pair<int, int> el{C.morphism(d).source, C.position_in_hom(d)};
    out = join(out, generated_subpresheaf(yk, std::span(&el, 1)));
  }
  return out;
}

namespace {

// Index in `to` (a representable) of the element of `from` at (c, x), matched by monotone map.
int transfer_element(const FinitePresheaf& from, int c, int x, const FinitePresheaf& to) {
  const auto& fc = from.category();
  const int k = *from.representing_object();
  const int m = fc.hom(c, k)[x];
  auto target = to.category().find_by_map(c, k, fc.morphism(m).map);
  if (!target) throw InputError("element has no counterpart in the target representable");
  return to.category().position_in_hom(*target);
}

void require_simplicial_pair(const FinitePresheaf& a, const FinitePresheaf& simplex_yk) {
  if (!a.representing_object() || !simplex_yk.representing_object() ||
      *a.representing_object() != *simplex_yk.representing_object())
    throw InputError("degeneracy translation needs representables over the same object");
  if (!simplex_yk.category().has_degeneracies() || !a.category().is_simplicial() ||
      a.category().truncation() != simplex_yk.category().truncation())
    throw InputError("degeneracy translation needs matching simplex categories");
}

}  // namespace

std::vector<int> degen_set(const FinitePresheaf& ambient, const Subpresheaf& x, const FinitePresheaf& simplex_yk,
                           int l) {
  require_simplicial_pair(ambient, simplex_yk);
  const auto& S = simplex_yk.category();
  // degen(x, 0) is empty; degen(x, m+1) = { s^m_i(f) : f in x(m) u degen(x, m) }.
  std::vector<int> current;
  for (int m = 0; m < l; ++m) {
    std::vector<int> sources = current;
    for (int e : level_elements(ambient, x, m)) sources.push_back(transfer_element(ambient, m, e, simplex_yk));
    std::vector<int> next;
    for (const auto& g : S.generators()) {
      if (g.role != GeneratorRole::Degeneracy || S.morphism(g.morphism).target != m) continue;
      for (int f : sources) next.push_back(simplex_yk.act(g.morphism, f));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
  }
  return current;
}

Subpresheaf add_degeneracies(const FinitePresheaf& semi_yk, const Subpresheaf& x_plus,
                             const FinitePresheaf& simplex_yk) {
  require_simplicial_pair(semi_yk, simplex_yk);
  Subpresheaf out = empty_subpresheaf(simplex_yk);
  const auto& C = simplex_yk.category();
  for (int l = 0; l < C.object_count(); ++l) {
    for (int e : level_elements(semi_yk, x_plus, l)) out.elements.set(simplex_yk.global(l, transfer_element(semi_yk, l, e, simplex_yk)));
    for (int e : degen_set(semi_yk, x_plus, simplex_yk, l)) out.elements.set(simplex_yk.global(l, e));
  }
  return out;
}

Subpresheaf strip_degeneracies(const FinitePresheaf& simplex_yk, const Subpresheaf& x, const FinitePresheaf& semi_yk) {
  require_simplicial_pair(semi_yk, simplex_yk);
  Subpresheaf out = empty_subpresheaf(semi_yk);
  const auto& C = simplex_yk.category();
  for (int l = 0; l < C.object_count(); ++l) {
    auto degen = degen_set(simplex_yk, x, simplex_yk, l);
    for (int e : level_elements(simplex_yk, x, l)) {
      if (std::binary_search(degen.begin(), degen.end(), e)) continue;
      out.elements.set(semi_yk.global(l, transfer_element(simplex_yk, l, e, semi_yk)));
    }
  }
  return out;
}

bool is_natural(const FinitePresheaf& source, const FinitePresheaf& target, const PresheafMorphism& f,
                std::string* witness) {
  const auto& C = source.category();
  if (static_cast<int>(f.components.size()) != C.object_count()) {
    if (witness) *witness = "wrong number of components";
    return false;
  }
  for (int c = 0; c < C.object_count(); ++c) {
    if (static_cast<int>(f.components[c].size()) != source.size(c)) {
      if (witness) *witness = "component at " + C.object_name(c) + " has wrong size";
      return false;
    }
  }
  for (const auto& g : C.generators()) {
    const auto& m = C.morphism(g.morphism);
    for (int x = 0; x < source.size(m.target); ++x) {
      int lhs = f.components[m.source][source.act(g.morphism, x)];
      int rhs = target.act(g.morphism, f.components[m.target][x]);
      if (lhs != rhs) {
        if (witness) *witness = "square for " + m.name + " fails at " + source.name(m.target, x);
        return false;
      }
    }
  }
  return true;
}

RestrictedPresheaf restrict_to(const FinitePresheaf& ambient, const Subpresheaf& s) {
  const auto& C = ambient.category();
  const int n = C.object_count();
  std::vector<std::vector<int>> inclusion(n);
  std::vector<std::vector<int>> local(n);
  std::vector<int> sizes(n);
  std::vector<std::vector<std::string>> names(n);
  for (int c = 0; c < n; ++c) {
    local[c].assign(ambient.size(c), -1);
    for (int x : level_elements(ambient, s, c)) {
      local[c][x] = static_cast<int>(inclusion[c].size());
      inclusion[c].push_back(x);
      names[c].push_back(ambient.name(c, x));
    }
    sizes[c] = static_cast<int>(inclusion[c].size());
  }
  std::vector<std::vector<int>> actions;
  for (const auto& g : C.generators()) {
    const auto& m = C.morphism(g.morphism);
    std::vector<int> table;
    for (int x : inclusion[m.target]) table.push_back(local[m.source][ambient.act(g.morphism, x)]);
    actions.push_back(std::move(table));
  }
  return {FinitePresheaf(ambient.category_ptr(), sizes, actions, names), inclusion};
}

std::string describe(const FinitePresheaf& x, bool hide_degenerate) {
  const auto& C = x.category();
  std::ostringstream os;
  for (int c = 0; c < C.object_count(); ++c) {
    os << C.object_name(c) << ":";
    for (int e = 0; e < x.size(c); ++e) {
      if (hide_degenerate && C.has_degeneracies()) {
        bool degenerate = false;
        for (const auto& g : C.generators()) {
          if (g.role != GeneratorRole::Degeneracy || C.morphism(g.morphism).source != c) continue;
          const int below = C.morphism(g.morphism).target;
          for (int v = 0; v < x.size(below); ++v)
            if (x.act(g.morphism, v) == e) degenerate = true;
        }
        if (degenerate) continue;
      }
      os << ' ' << x.name(c, e);
    }
    os << '\n';
  }
  return os.str();
}

std::string describe(const FinitePresheaf& ambient, const Subpresheaf& s) {
  const auto& C = ambient.category();
  std::ostringstream os;
  for (int c = 0; c < C.object_count(); ++c) {
    os << C.object_name(c) << ":";
    for (int e : level_elements(ambient, s, c)) os << ' ' << ambient.name(c, e);
    os << '\n';
  }
  return os.str();
}

}  // namespace lawvere
