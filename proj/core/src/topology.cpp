#include "lawvere/topology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lawvere {

CheckResult verify_topology(const OmegaObject& omega, const std::vector<std::vector<int>>& j) {
  const auto& C = omega.category();
  if (static_cast<int>(j.size()) != C.object_count()) return CheckResult::fail("shape", "one map per object required");
  for (int c = 0; c < C.object_count(); ++c) {
    if (static_cast<int>(j[c].size()) != omega.size(c))
      return CheckResult::fail("shape", "map at " + C.object_name(c) + " must cover Omega(" + C.object_name(c) + ")");
    for (int v : j[c])
      if (v < 0 || v >= omega.size(c)) return CheckResult::fail("shape", "map at " + C.object_name(c) + " leaves Omega");
  }
  for (int c = 0; c < C.object_count(); ++c) {
    const auto& L = omega.level(c);
    const std::string at = " in Omega(" + C.object_name(c) + ")";
    if (j[c][omega.top(c)] != omega.top(c))
      return CheckResult::fail("(1) j . True = True", "j(True) = " + L.name(j[c][omega.top(c)]) + at);
    for (int s = 0; s < L.size(); ++s)
      if (j[c][j[c][s]] != j[c][s]) return CheckResult::fail("(2) j . j = j", "at " + L.name(s) + at);
    for (int s = 0; s < L.size(); ++s)
      for (int t = 0; t < L.size(); ++t)
        if (j[c][L.meet(s, t)] != L.meet(j[c][s], j[c][t]))
          return CheckResult::fail("(3) j preserves meets", "at (" + L.name(s) + ", " + L.name(t) + ")" + at);
  }
  for (const auto& g : C.generators()) {
    const auto& m = C.morphism(g.morphism);
    const auto& Lc = omega.level(m.target);
    const auto& La = omega.level(m.source);
    for (int s = 0; s < Lc.size(); ++s) {
      const int lhs = j[m.source][omega.act(g.morphism, s)];
      const int rhs = omega.act(g.morphism, j[m.target][s]);
      if (lhs != rhs)
        return CheckResult::fail("naturality", "with " + m.name + " fails at " + Lc.name(s) + " in Omega(" +
                                                   C.object_name(m.target) + "): j(" + m.name + "(" + Lc.name(s) +
                                                   ")) = " + La.name(lhs) + " but " + m.name + "(j(" + Lc.name(s) +
                                                   ")) = " + La.name(rhs));
    }
  }
  return CheckResult::pass();
}

LTTopology discrete_topology(const OmegaPtr& omega) {
  LTTopology j{omega, {}, std::nullopt};
  for (int c = 0; c < omega->level_count(); ++c) {
    std::vector<int> id(omega->size(c));
    std::iota(id.begin(), id.end(), 0);
    j.level_map.push_back(std::move(id));
  }
  j.tag = behavioural_tag(j);
  return j;
}

LTTopology trivial_topology(const OmegaPtr& omega) {
  LTTopology j{omega, {}, std::nullopt};
  for (int c = 0; c < omega->level_count(); ++c) j.level_map.emplace_back(omega->size(c), omega->top(c));
  j.tag = behavioural_tag(j);
  return j;
}

std::vector<bool> bits_from_tag(const FiniteIndexCategory& cat, std::string_view tag) {
  if (cat.kind() == CategoryKind::BiColGraph) {
    if (tag.size() != 2 || (tag[0] != '0' && tag[0] != '1') || tag[1] < '0' || tag[1] > '3')
      throw InputError("bicolor topologies are labelled 00..03 and 10..13, got '" + std::string(tag) + "'");
    const int b = tag[1] - '0';
    return {tag[0] == '1', (b & 1) != 0, (b & 2) != 0};
  }
  if (static_cast<int>(tag.size()) != cat.object_count())
    throw InputError("tag for " + cat.spec() + " needs " + std::to_string(cat.object_count()) + " bits, got '" +
                     std::string(tag) + "'");
  std::vector<bool> bits;
  for (char ch : tag) {
    if (ch != '0' && ch != '1') throw InputError("tag must consist of 0 and 1, got '" + std::string(tag) + "'");
    bits.push_back(ch == '1');
  }
  return bits;
}

std::string tag_from_bits(const FiniteIndexCategory& cat, const std::vector<bool>& bits) {
  if (static_cast<int>(bits.size()) != cat.object_count()) throw InputError("one bit per object required");
  if (cat.kind() == CategoryKind::BiColGraph) {
    std::string s(1, bits[0] ? '1' : '0');
    s += static_cast<char>('0' + (bits[1] ? 1 : 0) + (bits[2] ? 2 : 0));
    return s;
  }
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

std::vector<std::string> all_tags(const FiniteIndexCategory& cat) {
  std::vector<std::string> out;
  const int n = cat.object_count();
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<bool> bits(n);
    for (int c = 0; c < n; ++c) bits[c] = mask >> c & 1;
    out.push_back(tag_from_bits(cat, bits));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int> objects_by_dimension(const FiniteIndexCategory& C) {
  std::vector<int> order(C.object_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return C.dimension(a) < C.dimension(b); });
  return order;
}

}  // namespace

LTTopology construct_from_bits(const OmegaPtr& omega, const std::vector<bool>& bits) {
  const auto& C = omega->category();
  if (static_cast<int>(bits.size()) != C.object_count()) throw InputError("one bit per object required");
  LTTopology j{omega, std::vector<std::vector<int>>(C.object_count()), tag_from_bits(C, bits)};
  for (int c : objects_by_dimension(C)) {
    auto& map = j.level_map[c];
    map.resize(omega->size(c));
    const int top = omega->top(c);
    auto faces = C.faces(c);
    if (faces.empty()) {
      for (int s = 0; s < omega->size(c); ++s) map[s] = bits[c] ? top : s;
      continue;
    }
    const int hollow = omega->boundary_index(c);
    const int filled_hollow = bits[c] ? top : hollow;
    for (int s = 0; s < omega->size(c); ++s) {
      if (s == top) {
        map[s] = top;
        continue;
      }
      if (s == hollow) {
        map[s] = filled_hollow;
        continue;
      }
      std::vector<int> z;
      bool all_top = true;
      for (int d : faces) {
        const int below = C.morphism(d).source;
        const int v = j.level_map[below][omega->act(d, s)];
        z.push_back(v);
        all_top = all_top && v == omega->top(below);
      }
      if (all_top) {
        map[s] = filled_hollow;
        continue;
      }
      auto fiber = omega->incidence_fiber(c, z);
      if (fiber.size() != 1)
        throw InputError("incidence tuple of j(" + omega->label(c, s) + ") in Omega(" + C.object_name(c) +
                         ") has " + std::to_string(fiber.size()) + " preimages");
      map[s] = fiber[0];
    }
  }
  return j;
}

LTTopology construct_jw(const OmegaPtr& omega, std::string_view w) {
  const auto& C = omega->category();
  auto bits = bits_from_tag(C, w);
  auto j = construct_from_bits(omega, bits);
  if (C.has_degeneracies() && std::string_view(w).find("10") != std::string_view::npos) {
    auto r = verify_topology(j);
    throw InputError("tag '" + std::string(w) + "' contains 10, which no topology with degeneracies admits" +
                     (r ? std::string() : ": " + r.describe()));
  }
  if (auto r = verify_topology(j); !r)
    throw InputError("j^" + std::string(w) + " on " + C.spec() + " is not a topology: " + r.describe());
  return j;
}

std::vector<bool> behavioural_bits(const LTTopology& j) {
  const auto& omega = *j.omega;
  const auto& C = omega.category();
  std::vector<bool> bits(C.object_count());
  for (int c = 0; c < C.object_count(); ++c) {
    const int probe = C.faces(c).empty() ? omega.bottom(c) : omega.boundary_index(c);
    bits[c] = j(c, probe) == omega.top(c);
  }
  return bits;
}

std::string behavioural_tag(const LTTopology& j) { return tag_from_bits(j.omega->category(), behavioural_bits(j)); }

namespace {

class BruteSearch {
 public:
  BruteSearch(const OmegaObject& omega, std::uint64_t budget) : omega_(omega), C_(omega.category()), budget_(budget) {
    const int n = C_.object_count();
    j_.resize(n);
    meet_pairs_.resize(n);
    for (int c = 0; c < n; ++c) {
      j_[c].assign(omega.size(c), -1);
      const auto& L = omega.level(c);
      meet_pairs_[c].resize(L.size());
      for (int s = 0; s < L.size(); ++s)
        for (int t = s; t < L.size(); ++t) meet_pairs_[c][L.meet(s, t)].emplace_back(s, t);
    }
    for (int c : objects_by_dimension(C_))
      for (int s = 0; s < omega.size(c); ++s) slots_.emplace_back(c, s);
  }

  std::vector<std::vector<std::vector<int>>> run() {
    rec(0);
    return found_;
  }

 private:
  bool consistent(int c, int s) const {
    const auto& L = omega_.level(c);
    const int v = j_[c][s];
    if (s == omega_.top(c) && v != omega_.top(c)) return false;
    // (2): j(j(s)) = j(s) from both sides.
    if (j_[c][v] != -1 && j_[c][v] != v) return false;
    for (int t = 0; t < L.size(); ++t)
      if (j_[c][t] == s && v != s) return false;
    // (3) with s as an operand.
    for (int t = 0; t < L.size(); ++t) {
      if (j_[c][t] == -1) continue;
      const int m = L.meet(s, t);
      if (j_[c][m] != -1 && j_[c][m] != L.meet(v, j_[c][t])) return false;
    }
    // (3) with s as the meet.
    for (auto [a, b] : meet_pairs_[c][s])
      if (j_[c][a] != -1 && j_[c][b] != -1 && v != L.meet(j_[c][a], j_[c][b])) return false;
    // Naturality with generators into or out of c.
    for (const auto& g : C_.generators()) {
      const auto& m = C_.morphism(g.morphism);
      if (m.target == c) {
        const int lhs = j_[m.source][omega_.act(g.morphism, s)];
        if (lhs != -1 && lhs != omega_.act(g.morphism, v)) return false;
      }
      if (m.source == c) {
        for (int t = 0; t < omega_.size(m.target); ++t) {
          if (omega_.act(g.morphism, t) != s || j_[m.target][t] == -1) continue;
          if (v != omega_.act(g.morphism, j_[m.target][t])) return false;
        }
      }
    }
    return true;
  }

  void rec(std::size_t pos) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("brute-force topology search exceeded " + std::to_string(budget_) +
                           " nodes; use the constrained method");
    if (pos == slots_.size()) {
      found_.push_back(j_);
      return;
    }
    auto [c, s] = slots_[pos];
    for (int v = 0; v < omega_.size(c); ++v) {
      j_[c][s] = v;
      if (consistent(c, s)) rec(pos + 1);
    }
    j_[c][s] = -1;
  }

  const OmegaObject& omega_;
  const FiniteIndexCategory& C_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<int>> j_;
  std::vector<std::vector<std::vector<std::pair<int, int>>>> meet_pairs_;
  std::vector<std::pair<int, int>> slots_;
  std::vector<std::vector<std::vector<int>>> found_;
};

}  // namespace

std::vector<LTTopology> enumerate_topologies(const OmegaPtr& omega, EnumerationMethod method,
                                             std::uint64_t node_budget) {
  const auto& C = omega->category();
  std::vector<LTTopology> out;
  if (method == EnumerationMethod::Brute) {
    BruteSearch search(*omega, node_budget);
    for (auto& maps : search.run()) {
      LTTopology j{omega, std::move(maps), std::nullopt};
      if (!verify_topology(j)) continue;  // every leaf satisfies all constraints; kept as a guard
      j.tag = behavioural_tag(j);
      out.push_back(std::move(j));
    }
  } else {
    const int n = C.object_count();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<bool> bits(n);
      for (int c = 0; c < n; ++c) bits[c] = mask >> c & 1;
      LTTopology j;
      try {
        j = construct_from_bits(omega, bits);
      } catch (const InputError&) {
        continue;
      }
      if (verify_topology(j)) out.push_back(std::move(j));
    }
  }
  std::sort(out.begin(), out.end(), [](const LTTopology& a, const LTTopology& b) {
    if (a.tag != b.tag) return a.tag < b.tag;
    return a.level_map < b.level_map;
  });
  return out;
}

CategoryPtr degeneracy_partner(const FiniteIndexCategory& cat) {
  switch (cat.kind()) {
    case CategoryKind::Graph:
      return FiniteIndexCategory::build("reflgraph");
    case CategoryKind::SemiSimplex:
      return FiniteIndexCategory::make(CategoryKind::Simplex, cat.truncation(),
                                       std::max(kDefaultMaxDimension, cat.truncation()));
    default:
      return nullptr;
  }
}

CheckResult degeneracy_compatible(const LTTopology& j, const OmegaObject& simplex_omega) {
  const auto& semi = *j.omega;
  const auto& C = semi.category();
  const auto& S = simplex_omega.category();
  if (C.has_degeneracies() || !S.has_degeneracies() || C.truncation() != S.truncation() ||
      C.object_count() != S.object_count())
    throw InputError("degeneracy_compatible needs a face-only Omega and its partner with degeneracies");
  std::vector<std::vector<int>> F(C.object_count());
  for (int k = 0; k < C.object_count(); ++k) {
    for (const auto& s : semi.sieves(k))
      F[k].push_back(simplex_omega.index_of(
          k, add_degeneracies(semi.representable(k), s, simplex_omega.representable(k))));
  }
  std::vector<std::vector<int>> transported(C.object_count());
  for (int k = 0; k < C.object_count(); ++k) {
    if (semi.size(k) != simplex_omega.size(k)) return CheckResult::fail("F", "levels differ in size");
    transported[k].assign(simplex_omega.size(k), -1);
    for (int s = 0; s < semi.size(k); ++s) transported[k][F[k][s]] = F[k][j(k, s)];
  }
  return verify_topology(simplex_omega, transported);
}

LTTopology restrict_levels(const LTTopology& j, const OmegaPtr& lower) {
  const auto& L = lower->category();
  const auto& H = j.omega->category();
  if (L.object_count() > H.object_count()) throw InputError("restriction target has more levels");
  LTTopology out{lower, {}, std::nullopt};
  for (int c = 0; c < L.object_count(); ++c) {
    if (L.object_name(c) != H.object_name(c) || lower->size(c) != j.omega->size(c))
      throw InputError("levels do not match at " + L.object_name(c));
    // A sieve is determined by its elements at the lower objects, which come
    // first in the global numbering.
    const int width = lower->representable(c).total_size();
    std::vector<int> to_lower(j.omega->size(c));
    for (int s = 0; s < j.omega->size(c); ++s) {
      ElementSet cut(width);
      const auto& e = j.omega->sieve(c, s).elements;
      for (int b = 0; b < width; ++b) cut[b] = e[b];
      to_lower[s] = lower->index_of(c, {cut});
    }
    std::vector<int> map(lower->size(c), -1);
    for (int s = 0; s < j.omega->size(c); ++s) map[to_lower[s]] = to_lower[j(c, s)];
    if (std::count(map.begin(), map.end(), -1) != 0) throw InputError("sieves do not correspond at " + L.object_name(c));
    out.level_map.push_back(std::move(map));
  }
  out.tag = behavioural_tag(out);
  return out;
}

std::string describe(const LTTopology& j) {
  const auto& omega = *j.omega;
  const auto& C = omega.category();
  std::ostringstream os;
  os << "j^" << j.tag.value_or("?") << " on " << C.spec() << "\n";
  for (int c = 0; c < C.object_count(); ++c) {
    os << "  " << C.object_name(c) << ":";
    for (int s = 0; s < omega.size(c); ++s)
      if (j(c, s) != s) os << " " << omega.label(c, s) << "->" << omega.label(c, j(c, s));
    os << "\n";
  }
  return os.str();
}

}  // namespace lawvere
