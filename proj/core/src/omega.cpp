#include "lawvere/omega.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lawvere {

namespace {

std::string sieve_label(const FinitePresheaf& yc, const Subpresheaf& s) {
  if (s.count() == 0) return "empty";
  const auto& C = yc.category();
  struct Cand {
    int global;
    int dim;
    ElementSet gen;
  };
  std::vector<Cand> cands;
  for (auto e = s.elements.find_first(); e != ElementSet::npos; e = s.elements.find_next(e)) {
    const int g = static_cast<int>(e);
    cands.push_back({g, C.dimension(yc.object_of(g)), yc.generated_by(g)});
  }
  // Largest generated sets first; among equals (a simplex and its
  // degeneracies) the lowest dimension wins.
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.gen.count() != b.gen.count()) return a.gen.count() > b.gen.count();
    return a.dim < b.dim;
  });
  ElementSet covered(yc.total_size());
  std::vector<int> picked;
  for (const auto& c : cands) {
    if (covered.test(c.global)) continue;
    covered |= c.gen;
    picked.push_back(c.global);
  }
  std::sort(picked.begin(), picked.end());
  std::string out;
  for (int g : picked) {
    const int obj = yc.object_of(g);
    if (!out.empty()) out += "+";
    out += yc.name(obj, g - yc.offset(obj));
  }
  return out;
}

}  // namespace

std::shared_ptr<const OmegaObject> OmegaObject::build(CategoryPtr cat, int level_bound) {
  auto omega = std::shared_ptr<OmegaObject>(new OmegaObject());
  omega->cat_ = cat;
  const auto& C = *cat;
  for (int c = 0; c < C.object_count(); ++c) {
    auto yc = yoneda(cat, c);
    std::vector<Subpresheaf> sieves;
    try {
      sieves = enumerate_subpresheaves(yc, static_cast<std::size_t>(level_bound));
    } catch (const BudgetExceeded&) {
      throw BudgetExceeded("size bound exceeded: Omega level " + C.object_name(c) + " of " + C.spec() +
                           " has more than " + std::to_string(level_bound) + " sieves");
    }
    const int n = static_cast<int>(sieves.size());
    std::vector<std::string> names;
    for (const auto& s : sieves) names.push_back(sieve_label(yc, s));
    OrderRelation leq(n, std::vector<bool>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) leq[a][b] = lawvere::leq(sieves[a], sieves[b]);
    auto algebra = std::make_shared<const FiniteHeytingAlgebra>(FiniteHeytingAlgebra::from_order(names, leq));
    Level level{std::move(yc), std::move(sieves), std::move(algebra), 0, {}};
    omega->levels_.push_back(std::move(level));
    auto& lv = omega->levels_.back();
    lv.boundary = omega->index_of(c, boundary(lv.yc));
  }

  omega->acts_.resize(C.morphism_count());
  for (int u = 0; u < C.morphism_count(); ++u) {
    const auto& mu = C.morphism(u);
    const auto& target = omega->levels_[mu.target];
    const auto& source = omega->levels_[mu.source];
    std::vector<int> table;
    for (const auto& S : target.sieves) {
      ElementSet pulled(source.yc.total_size());
      for (int b = 0; b < C.object_count(); ++b) {
        auto h = C.hom(b, mu.source);
        for (std::size_t p = 0; p < h.size(); ++p) {
          const int ug = *C.compose(u, h[p]);
          if (S.elements.test(target.yc.global(b, C.position_in_hom(ug)))) pulled.set(source.yc.global(b, static_cast<int>(p)));
        }
      }
      table.push_back(omega->index_of(mu.source, {pulled}));
    }
    omega->acts_[u] = std::move(table);
  }

  for (int c = 0; c < C.object_count(); ++c) {
    if (C.faces(c).empty()) continue;
    for (int s = 0; s < omega->size(c); ++s) omega->levels_[c].fibers[omega->incidence_tuple(c, s)].push_back(s);
  }

  std::vector<int> sizes;
  std::vector<std::vector<std::string>> names;
  for (int c = 0; c < C.object_count(); ++c) {
    sizes.push_back(omega->size(c));
    names.push_back(omega->level(c).names());
  }
  std::vector<std::vector<int>> actions;
  for (const auto& g : C.generators()) actions.push_back(omega->acts_[g.morphism]);
  omega->presheaf_ = std::make_unique<FinitePresheaf>(cat, sizes, actions, names);
  return omega;
}

int OmegaObject::index_of(int c, const Subpresheaf& s) const {
  const auto& v = levels_.at(c).sieves;
  if (s.elements.size() != v.front().elements.size()) throw InputError("sieve has the wrong carrier");
  auto it = std::lower_bound(v.begin(), v.end(), s, [](const Subpresheaf& a, const Subpresheaf& b) {
    return canonical_less(a.elements, b.elements);
  });
  if (it == v.end() || !(*it == s)) throw InputError("not a sieve on " + cat_->object_name(c));
  return static_cast<int>(it - v.begin());
}

int OmegaObject::face_index(int face) const {
  const auto& m = cat_->morphism(face);
  const auto& yc = levels_.at(m.target).yc;
  std::pair<int, int> el{m.source, cat_->position_in_hom(face)};
  return index_of(m.target, generated_subpresheaf(yc, std::span(&el, 1)));
}

std::vector<int> OmegaObject::incidence_tuple(int c, int s) const {
  std::vector<int> out;
  for (int d : cat_->faces(c)) out.push_back(act(d, s));
  return out;
}

std::vector<int> OmegaObject::incidence_fiber(int c, const std::vector<int>& tuple) const {
  const auto& f = levels_.at(c).fibers;
  auto it = f.find(tuple);
  if (it == f.end()) return {};
  return it->second;
}

std::string OmegaObject::label(int c, int s) const { return level(c).name(s); }

std::string OmegaObject::to_dot(int c) const {
  const auto& L = level(c);
  std::ostringstream os;
  os << "digraph omega_" << cat_->object_name(c) << " {\n  rankdir=BT;\n";
  for (int s = 0; s < L.size(); ++s) os << "  n" << s << " [label=\"" << L.name(s) << "\"];\n";
  for (auto [lo, hi] : L.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

PresheafMorphism characteristic_function(const OmegaObject& omega, const FinitePresheaf& ambient,
                                         const Subpresheaf& sub) {
  const auto& C = omega.category();
  if (&ambient.category() != &C && ambient.category().spec() != C.spec())
    throw InputError("presheaf and Omega live over different categories");
  PresheafMorphism chi;
  chi.components.resize(C.object_count());
  for (int c = 0; c < C.object_count(); ++c) {
    const auto& yc = omega.representable(c);
    for (int x = 0; x < ambient.size(c); ++x) {
      ElementSet s(yc.total_size());
      for (int b = 0; b < C.object_count(); ++b) {
        auto h = C.hom(b, c);
        for (std::size_t p = 0; p < h.size(); ++p)
          if (sub.contains(ambient, b, ambient.act(h[p], x))) s.set(yc.global(b, static_cast<int>(p)));
      }
      chi.components[c].push_back(omega.index_of(c, {s}));
    }
  }
  return chi;
}

Subpresheaf pullback_true(const OmegaObject& omega, const FinitePresheaf& ambient, const PresheafMorphism& chi) {
  Subpresheaf out = empty_subpresheaf(ambient);
  for (int c = 0; c < ambient.category().object_count(); ++c)
    for (int x = 0; x < ambient.size(c); ++x)
      if (chi.components.at(c).at(x) == omega.top(c)) out.elements.set(ambient.global(c, x));
  return out;
}

std::vector<int> face_pushforward(const OmegaObject& omega, int face) {
  const auto& C = omega.category();
  const auto& m = C.morphism(face);
  const auto& ysrc = omega.representable(m.source);
  const auto& ytgt = omega.representable(m.target);
  std::vector<int> out;
  for (const auto& T : omega.sieves(m.source)) {
    ElementSet img(ytgt.total_size());
    for (int b = 0; b < C.object_count(); ++b) {
      auto h = C.hom(b, m.source);
      for (std::size_t p = 0; p < h.size(); ++p)
        if (T.elements.test(ysrc.global(b, static_cast<int>(p))))
          img.set(ytgt.global(b, C.position_in_hom(*C.compose(face, h[p]))));
    }
    out.push_back(omega.index_of(m.target, {img}));
  }
  return out;
}

CheckResult verify_face_downset_iso(const OmegaObject& omega, int face) {
  const auto& C = omega.category();
  const auto& m = C.morphism(face);
  const auto& lo = omega.level(m.source);
  const auto& hi = omega.level(m.target);
  const int f = omega.face_index(face);
  auto img = face_pushforward(omega, face);
  std::set<int> image(img.begin(), img.end());
  if (static_cast<int>(image.size()) != lo.size()) return CheckResult::fail("injective", "two sieves share an image");
  int downset = 0;
  for (int x = 0; x < hi.size(); ++x)
    if (hi.leq(x, f)) ++downset;
  if (downset != lo.size())
    return CheckResult::fail("onto down-set", std::to_string(downset) + " sieves below the face, " +
                                                  std::to_string(lo.size()) + " in the lower level");
  for (int t = 0; t < lo.size(); ++t) {
    if (!hi.leq(img[t], f)) return CheckResult::fail("below face", lo.name(t) + " lands outside the face");
    if (omega.act(face, img[t]) != t) return CheckResult::fail("inverse", "pullback of the image of " + lo.name(t));
    for (int u = 0; u < lo.size(); ++u)
      if (lo.leq(t, u) != hi.leq(img[t], img[u]))
        return CheckResult::fail("order", lo.name(t) + " vs " + lo.name(u));
  }
  return CheckResult::pass();
}

IncidenceReport analyze_incidence(const OmegaObject& omega, int c) {
  const auto& C = omega.category();
  auto faces = C.faces(c);
  if (faces.empty()) throw InputError("object " + C.object_name(c) + " has no faces");
  const int below = C.morphism(faces[0]).source;
  for (int d : faces)
    if (C.morphism(d).source != below) throw InputError("faces of " + C.object_name(c) + " have different sources");
  const int k = static_cast<int>(faces.size());
  const int m = omega.size(below);

  const auto constraints = shared_faces(C, c);
  auto lower_faces = C.faces(below);

  IncidenceReport r;
  std::set<std::vector<int>> hit;
  for (int s = 0; s < omega.size(c); ++s) hit.insert(omega.incidence_tuple(c, s));
  r.hit = static_cast<int>(hit.size());
  r.tuples = 1;
  for (int i = 0; i < k; ++i) r.tuples *= m;

  bool compatible_all_hit = true;
  std::vector<int> t(k, 0);
  for (int idx = 0; idx < r.tuples; ++idx) {
    int rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      t[i] = rest % m;
      rest /= m;
    }
    bool ok = true;
    for (const auto& cn : constraints)
      if (omega.act(lower_faces[cn.lower_i], t[cn.i]) != omega.act(lower_faces[cn.lower_j], t[cn.j])) ok = false;
    if (!ok) continue;
    ++r.compatible_tuples;
    if (!hit.count(t)) compatible_all_hit = false;
  }
  r.surjective = r.hit == r.tuples;
  r.surjective_on_compatible = compatible_all_hit;
  for (const auto& t2 : hit) {
    auto fiber = omega.incidence_fiber(c, t2);
    if (fiber.size() > 1) r.collisions.push_back(fiber);
  }
  return r;
}

}  // namespace lawvere
