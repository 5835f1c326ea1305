#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lawvere/check.hpp"
#include "lawvere/presheaf.hpp"

namespace lawvere {

namespace {

std::vector<int> objects_by_dimension(const FiniteIndexCategory& C) {
  std::vector<int> order(C.object_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return C.dimension(a) < C.dimension(b); });
  return order;
}

}  // namespace

std::size_t for_each_morphism(const FinitePresheaf& A, const FinitePresheaf& B,
                              const std::function<bool(const PresheafMorphism&)>& visit) {
  const auto& C = A.category();
  if (C.spec() != B.category().spec()) throw InputError("morphisms need presheaves over the same category");
  const int n = C.object_count();

  std::vector<std::pair<int, int>> slots;
  std::vector<std::vector<int>> pos(n);
  for (int c : objects_by_dimension(C)) {
    pos[c].resize(A.size(c));
    for (int x = 0; x < A.size(c); ++x) {
      pos[c][x] = static_cast<int>(slots.size());
      slots.emplace_back(c, x);
    }
  }
  for (int c = 0; c < n; ++c)
    if (A.size(c) > 0 && B.size(c) == 0) return 0;

  // Each naturality square f_a(A(u)(x)) = B(u)(f_c(x)) is checked at the
  // later of its two slots.
  struct Square {
    int u;
    bool at_target;  // this slot is x in A(target(u)); otherwise it is A(u)(x)
    int other;       // element index on the other side
  };
  std::vector<std::vector<Square>> checks(slots.size());
  for (const auto& g : C.generators()) {
    const auto& m = C.morphism(g.morphism);
    for (int x = 0; x < A.size(m.target); ++x) {
      const int ax = A.act(g.morphism, x);
      const int p_x = pos[m.target][x];
      const int p_ax = pos[m.source][ax];
      if (p_x > p_ax)
        checks[p_x].push_back({g.morphism, true, ax});
      else
        checks[p_ax].push_back({g.morphism, false, x});
    }
  }

  PresheafMorphism f;
  f.components.resize(n);
  for (int c = 0; c < n; ++c) f.components[c].assign(A.size(c), -1);
  std::size_t count = 0;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t p) -> void {
    if (stop) return;
    if (p == slots.size()) {
      ++count;
      if (!visit(f)) stop = true;
      return;
    }
    auto [c, x] = slots[p];
    for (int v = 0; v < B.size(c) && !stop; ++v) {
      f.components[c][x] = v;
      bool ok = true;
      for (const auto& sq : checks[p]) {
        const auto& m = C.morphism(sq.u);
        if (sq.at_target) {
          if (f.components[m.source][sq.other] != B.act(sq.u, v)) ok = false;
        } else {
          if (v != B.act(sq.u, f.components[m.target][sq.other])) ok = false;
        }
        if (!ok) break;
      }
      if (ok) self(self, p + 1);
    }
    f.components[c][x] = -1;
  };
  rec(rec, 0);
  return count;
}

std::vector<PresheafMorphism> all_morphisms(const FinitePresheaf& source, const FinitePresheaf& target) {
  std::vector<PresheafMorphism> out;
  for_each_morphism(source, target, [&](const PresheafMorphism& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<int> canonical_key(const FinitePresheaf& x) {
  const auto& C = x.category();
  const int n = C.object_count();
  const auto gens = C.generators();
  double relabellings = 1;
  for (int c = 0; c < n; ++c)
    for (int i = 2; i <= x.size(c); ++i) relabellings *= i;
  if (relabellings > 1e6) throw BudgetExceeded("presheaf too large for canonical form");

  std::vector<std::vector<int>> perm(n);
  for (int c = 0; c < n; ++c) {
    perm[c].resize(x.size(c));
    std::iota(perm[c].begin(), perm[c].end(), 0);
  }
  std::vector<int> best;
  std::vector<int> key;
  auto encode = [&] {
    key.clear();
    for (int c = 0; c < n; ++c) key.push_back(x.size(c));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto& m = C.morphism(gens[g].morphism);
      const auto& act = x.generator_action(static_cast<int>(g));
      std::vector<int> table(act.size());
      for (std::size_t e = 0; e < act.size(); ++e) table[perm[m.target][e]] = perm[m.source][act[e]];
      key.insert(key.end(), table.begin(), table.end());
    }
    if (best.empty() || key < best) best = key;
  };
  auto rec = [&](auto&& self, int c) -> void {
    if (c == n) {
      encode();
      return;
    }
    std::sort(perm[c].begin(), perm[c].end());
    do {
      self(self, c + 1);
    } while (std::next_permutation(perm[c].begin(), perm[c].end()));
  };
  rec(rec, 0);
  return best;
}

std::vector<FinitePresheaf> enumerate_presheaves(const CategoryPtr& cat, int max_total) {
  const auto& C = *cat;
  const int n = C.object_count();
  const auto gens = C.generators();
  std::map<std::vector<int>, FinitePresheaf> found;

  // Length-two relations between generators (the simplicial identities and
  // d . s = id), checked as soon as all tables involved are chosen.
  struct Relation {
    int g1, g2, h1, h2;  // X(g2) . X(g1) == X(h2) . X(h1), or identity when h1 < 0
    int last;
  };
  std::vector<Relation> relations;
  const int ng = static_cast<int>(gens.size());
  auto composite = [&](int a, int b) { return C.compose(gens[a].morphism, gens[b].morphism); };
  for (int g1 = 0; g1 < ng; ++g1)
    for (int g2 = 0; g2 < ng; ++g2) {
      auto m = composite(g1, g2);
      if (!m) continue;
      if (C.is_identity(*m)) relations.push_back({g1, g2, -1, -1, std::max(g1, g2)});
      for (int h1 = 0; h1 < ng; ++h1)
        for (int h2 = 0; h2 < ng; ++h2) {
          if (std::pair(h1, h2) <= std::pair(g1, g2)) continue;
          auto m2 = composite(h1, h2);
          if (m2 && *m2 == *m) relations.push_back({g1, g2, h1, h2, std::max({g1, g2, h1, h2})});
        }
    }

  std::vector<int> sizes(n, 0);
  auto fill_actions = [&](const std::vector<int>& sz) {
    for (int g = 0; g < ng; ++g) {
      const auto& m = C.morphism(gens[g].morphism);
      if (sz[m.target] > 0 && sz[m.source] == 0) return;
    }
    std::vector<std::vector<int>> actions(ng);
    auto holds = [&](const Relation& r) {
      const int c = C.morphism(gens[r.g1].morphism).target;
      for (int x = 0; x < sz[c]; ++x) {
        const int lhs = actions[r.g2][actions[r.g1][x]];
        const int rhs = r.h1 < 0 ? x : actions[r.h2][actions[r.h1][x]];
        if (lhs != rhs) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, int g) -> void {
      if (g == ng) {
        try {
          FinitePresheaf x(cat, sz, actions);
          auto key = canonical_key(x);
          found.emplace(std::move(key), std::move(x));
        } catch (const InputError&) {
        }
        return;
      }
      const auto& m = C.morphism(gens[g].morphism);
      const int limit = sz[m.source];
      auto& t = actions[g];
      t.assign(sz[m.target], 0);
      while (true) {
        bool ok = true;
        for (const auto& r : relations)
          if (r.last == g && !holds(r)) {
            ok = false;
            break;
          }
        if (ok) self(self, g + 1);
        std::size_t e = 0;
        for (; e < t.size(); ++e) {
          if (++t[e] < limit) break;
          t[e] = 0;
        }
        if (e == t.size()) break;
      }
    };
    rec(rec, 0);
  };
  auto rec = [&](auto&& self, int c, int remaining) -> void {
    if (c == n) {
      fill_actions(sizes);
      return;
    }
    for (int s = 0; s <= remaining; ++s) {
      sizes[c] = s;
      self(self, c + 1, remaining - s);
    }
    sizes[c] = 0;
  };
  rec(rec, 0, max_total);

  std::vector<std::pair<std::vector<int>, FinitePresheaf>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.second.total_size() < b.second.total_size();
  });
  std::vector<FinitePresheaf> out;
  for (auto& [k, x] : sorted) out.push_back(std::move(x));
  return out;
}

}  // namespace lawvere
