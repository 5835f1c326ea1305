#include "lawvere/closure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace lawvere {

namespace {

void require_same_category(const OmegaObject& omega, const FinitePresheaf& A) {
  if (omega.category().spec() != A.category().spec())
    throw InputError("presheaf over " + A.category().spec() + " used with a topology on " + omega.category().spec());
}

ClosureResult with_added(const FinitePresheaf& A, const Subpresheaf& sub, Subpresheaf closed) {
  ClosureResult r{std::move(closed), std::vector<std::vector<int>>(A.category().object_count())};
  for (int c = 0; c < A.category().object_count(); ++c)
    for (int x = 0; x < A.size(c); ++x)
      if (r.closed.contains(A, c, x) && !sub.contains(A, c, x)) r.added[c].push_back(x);
  return r;
}

std::vector<int> objects_by_dimension(const FiniteIndexCategory& C) {
  std::vector<int> order(C.object_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return C.dimension(a) < C.dimension(b); });
  return order;
}

std::string tuple_text(const FinitePresheaf& B, int below, const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + B.name(below, t[i]);
  return s + ")";
}

std::vector<int> incidence_of(const FinitePresheaf& B, int c, int x) {
  std::vector<int> t;
  for (int d : B.category().faces(c)) t.push_back(B.act(d, x));
  return t;
}

}  // namespace

ClosureResult closure_via_chi(const LTTopology& j, const FinitePresheaf& A, const Subpresheaf& sub) {
  const auto& omega = *j.omega;
  require_same_category(omega, A);
  auto chi = characteristic_function(omega, A, sub);
  Subpresheaf closed = empty_subpresheaf(A);
  for (int c = 0; c < A.category().object_count(); ++c)
    for (int x = 0; x < A.size(c); ++x)
      if (j(c, chi.components[c][x]) == omega.top(c)) closed.elements.set(A.global(c, x));
  return with_added(A, sub, std::move(closed));
}

ClosureResult closure_recursive(const std::vector<bool>& bits, const FinitePresheaf& A, const Subpresheaf& sub) {
  const auto& C = A.category();
  if (static_cast<int>(bits.size()) != C.object_count()) throw InputError("one bit per object required");
  Subpresheaf closed = empty_subpresheaf(A);
  for (int c : objects_by_dimension(C)) {
    for (int x = 0; x < A.size(c); ++x) {
      bool in = sub.contains(A, c, x);
      if (!in && bits[c]) {
        in = true;
        for (int d : C.faces(c))
          if (!closed.contains(A, C.morphism(d).source, A.act(d, x))) in = false;
      }
      if (in) closed.elements.set(A.global(c, x));
    }
  }
  return with_added(A, sub, std::move(closed));
}

ClosureResult closure_recursive(std::string_view w, const FinitePresheaf& A, const Subpresheaf& sub) {
  return closure_recursive(bits_from_tag(A.category(), w), A, sub);
}

bool is_dense(const LTTopology& j, const FinitePresheaf& A, const Subpresheaf& sub) {
  return closure_via_chi(j, A, sub).closed.count() == static_cast<std::size_t>(A.total_size());
}

bool is_dense_by_levels(std::string_view w, const FinitePresheaf& A, const Subpresheaf& sub) {
  const auto bits = bits_from_tag(A.category(), w);
  for (int c = 0; c < A.category().object_count(); ++c)
    if (!bits[c])
      for (int x = 0; x < A.size(c); ++x)
        if (!sub.contains(A, c, x)) return false;
  return true;
}

LTTopology topology_from_recursive_closure(const OmegaPtr& omega, std::string_view w) {
  const auto& P = omega->as_presheaf();
  std::vector<std::vector<int>> levels;
  for (int c = 0; c < omega->level_count(); ++c) levels.push_back({omega->top(c)});
  auto truth = make_subpresheaf(P, levels);
  auto closed = closure_recursive(w, P, truth).closed;
  auto chi = characteristic_function(*omega, P, closed);
  LTTopology j{omega, chi.components, std::nullopt};
  j.tag = behavioural_tag(j);
  return j;
}

bool k_simple(const FinitePresheaf& B, int c, std::string* witness) {
  const auto& C = B.category();
  if (C.faces(c).empty()) {
    if (B.size(c) <= 1) return true;
    if (witness) *witness = C.object_name(c) + " has " + std::to_string(B.size(c)) + " elements";
    return false;
  }
  std::map<std::vector<int>, int> seen;
  for (int x = 0; x < B.size(c); ++x) {
    auto t = incidence_of(B, c, x);
    auto [it, fresh] = seen.emplace(t, x);
    if (!fresh) {
      if (witness)
        *witness = B.name(c, it->second) + " and " + B.name(c, x) + " share incidence tuple " +
                   tuple_text(B, C.morphism(C.faces(c)[0]).source, t);
      return false;
    }
  }
  return true;
}

bool k_complete(const FinitePresheaf& B, int c, std::string* witness) {
  const auto& C = B.category();
  auto faces = C.faces(c);
  if (faces.empty()) {
    if (B.size(c) >= 1) return true;
    if (witness) *witness = C.object_name(c) + " is empty";
    return false;
  }
  const int below = C.morphism(faces[0]).source;
  auto lower = C.faces(below);
  const auto constraints = shared_faces(C, c);
  std::map<std::vector<int>, int> realised;
  for (int x = 0; x < B.size(c); ++x) realised.emplace(incidence_of(B, c, x), x);

  const int k = static_cast<int>(faces.size());
  std::vector<int> t(k, 0);
  bool complete = true;
  auto rec = [&](auto&& self, int i) -> void {
    if (!complete) return;
    if (i == k) {
      if (!realised.count(t)) {
        complete = false;
        if (witness) *witness = "no element with incidence tuple " + tuple_text(B, below, t);
      }
      return;
    }
    for (int v = 0; v < B.size(below); ++v) {
      t[i] = v;
      bool ok = true;
      for (const auto& sf : constraints)
        if (sf.j == i && B.act(lower[sf.lower_i], t[sf.i]) != B.act(lower[sf.lower_j], v)) ok = false;
      if (ok) self(self, i + 1);
    }
  };
  rec(rec, 0);
  return complete;
}

bool k_exact(const FinitePresheaf& B, int c, std::string* witness) {
  return k_simple(B, c, witness) && k_complete(B, c, witness);
}

Classification classify(const FinitePresheaf& B, std::string_view w) {
  const auto& C = B.category();
  const auto bits = bits_from_tag(C, w);
  Classification out;
  for (int c = 0; c < C.object_count(); ++c) {
    if (!bits[c]) continue;
    std::string why;
    if (!k_simple(B, c, &why)) {
      out.separated = false;
      out.notes.push_back(C.object_name(c) + ": not simple, " + why);
    }
    why.clear();
    if (!k_complete(B, c, &why)) {
      out.complete = false;
      out.notes.push_back(C.object_name(c) + ": not complete, " + why);
    }
  }
  out.sheaf = out.separated && out.complete;
  return out;
}

std::vector<FinitePresheaf> factorization_corpus(const CategoryPtr& cat, int max_total) {
  auto corpus = enumerate_presheaves(cat, max_total);
  for (int c = 0; c < cat->object_count(); ++c) {
    auto y = yoneda(cat, c);
    if (y.total_size() > max_total) corpus.push_back(std::move(y));
  }
  return corpus;
}

std::vector<DensePair> dense_pairs(const LTTopology& j, const std::vector<FinitePresheaf>& corpus) {
  std::vector<DensePair> out;
  for (std::size_t a = 0; a < corpus.size(); ++a)
    for (auto& s : enumerate_subpresheaves(corpus[a]))
      if (is_dense(j, corpus[a], s)) out.push_back({static_cast<int>(a), std::move(s)});
  return out;
}

namespace {

std::vector<int> flatten(const PresheafMorphism& f, const std::vector<std::vector<int>>& inclusion) {
  std::vector<int> key;
  for (std::size_t c = 0; c < inclusion.size(); ++c)
    for (int x : inclusion[c]) key.push_back(f.components[c][x]);
  return key;
}

std::string morphism_text(const FinitePresheaf& src, const std::vector<std::vector<int>>& inclusion,
                          const FinitePresheaf& B, const std::vector<int>& key) {
  std::string s;
  std::size_t i = 0;
  for (std::size_t c = 0; c < inclusion.size(); ++c)
    for (int x : inclusion[c]) {
      if (!s.empty()) s += ", ";
      s += src.name(static_cast<int>(c), x) + "->" + B.name(static_cast<int>(c), key[i++]);
    }
  return "{" + s + "}";
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

}  // namespace

FactorizationReport brute_factorization_check(const FinitePresheaf& B, const std::vector<FinitePresheaf>& corpus,
                                              const std::vector<DensePair>& dense) {
  FactorizationReport r;
  std::map<int, std::vector<const DensePair*>> by_ambient;
  for (const auto& d : dense) by_ambient[d.ambient].push_back(&d);
  for (const auto& [a, pairs] : by_ambient) {
    const auto& A = corpus.at(a);
    auto homs = all_morphisms(A, B);
    for (const DensePair* d : pairs) {
      if (!r.separated && !r.complete) return r;
      ++r.dense_monos;
      auto sub = restrict_to(A, d->sub);
      std::map<std::vector<int>, int> factorizations;
      for_each_morphism(sub.presheaf, B, [&](const PresheafMorphism& g) {
        std::vector<int> key;
        for (const auto& comp : g.components) key.insert(key.end(), comp.begin(), comp.end());
        factorizations.emplace(std::move(key), 0);
        return true;
      });
      for (const auto& f : homs) ++factorizations.at(flatten(f, sub.inclusion));
      r.maps_checked += factorizations.size();
      for (const auto& [key, count] : factorizations) {
        if (count >= 2 && r.separated) {
          r.separated = false;
          r.separation_witness = "A = [" + one_line(describe(A)) + "], A' = [" + one_line(describe(A, d->sub)) +
                                 "], map " + morphism_text(A, sub.inclusion, B, key) + " has " +
                                 std::to_string(count) + " factorizations";
        }
        if (count == 0 && r.complete) {
          r.complete = false;
          r.completeness_witness = "A = [" + one_line(describe(A)) + "], A' = [" + one_line(describe(A, d->sub)) +
                                   "], map " + morphism_text(A, sub.inclusion, B, key) + " has no factorization";
        }
      }
    }
  }
  return r;
}

CheckResult verify_closure_axioms(const LTTopology& j, const std::vector<FinitePresheaf>& corpus, int pullback_bound) {
  std::vector<std::vector<Subpresheaf>> subs(corpus.size());
  std::vector<std::vector<Subpresheaf>> closed(corpus.size());
  for (std::size_t a = 0; a < corpus.size(); ++a) {
    const auto& A = corpus[a];
    subs[a] = enumerate_subpresheaves(A);
    for (const auto& s : subs[a]) closed[a].push_back(closure_via_chi(j, A, s).closed);
    const std::string where = " in [" + one_line(describe(A)) + "]";
    for (std::size_t i = 0; i < subs[a].size(); ++i) {
      if (!leq(subs[a][i], closed[a][i]))
        return CheckResult::fail("(i) increasing", one_line(describe(A, subs[a][i])) + where);
      if (!(closure_via_chi(j, A, closed[a][i]).closed == closed[a][i]))
        return CheckResult::fail("(ii) idempotent", one_line(describe(A, subs[a][i])) + where);
      for (std::size_t k = 0; k < subs[a].size(); ++k)
        if (leq(subs[a][i], subs[a][k]) && !leq(closed[a][i], closed[a][k]))
          return CheckResult::fail("(iii) monotone", one_line(describe(A, subs[a][i])) + " vs " +
                                                         one_line(describe(A, subs[a][k])) + where);
    }
  }
  for (std::size_t b = 0; b < corpus.size(); ++b) {
    if (corpus[b].total_size() > pullback_bound) continue;
    for (std::size_t a = 0; a < corpus.size(); ++a) {
      if (corpus[a].total_size() > pullback_bound) continue;
      const auto& A = corpus[a];
      const auto& B = corpus[b];
      for (const auto& f : all_morphisms(B, A)) {
        auto pull = [&](const Subpresheaf& s) {
          Subpresheaf out = empty_subpresheaf(B);
          for (int c = 0; c < B.category().object_count(); ++c)
            for (int x = 0; x < B.size(c); ++x)
              if (s.contains(A, c, f.components[c][x])) out.elements.set(B.global(c, x));
          return out;
        };
        for (std::size_t i = 0; i < subs[a].size(); ++i) {
          auto lhs = closure_via_chi(j, B, pull(subs[a][i])).closed;
          auto rhs = pull(closed[a][i]);
          if (!(lhs == rhs))
            return CheckResult::fail("(iv) stable under pullback",
                                     "along a map [" + one_line(describe(B)) + "] -> [" + one_line(describe(A)) +
                                         "] at " + one_line(describe(A, subs[a][i])));
        }
      }
    }
  }
  return CheckResult::pass();
}

}  // namespace lawvere
