#include "lawvere/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lawvere {

namespace {

std::string nm(const std::vector<std::string>& names, int i) {
  return i < static_cast<int>(names.size()) ? names[i] : std::to_string(i);
}

// Greatest element of `candidates` above all others, if any.
std::optional<int> greatest(const OrderRelation& leq, const std::vector<int>& candidates) {
  if (candidates.empty()) return std::nullopt;
  int best = candidates[0];
  for (int c : candidates)
    if (leq[best][c]) best = c;
  for (int c : candidates)
    if (!leq[c][best]) return std::nullopt;
  return best;
}

std::optional<int> least(const OrderRelation& leq, const std::vector<int>& candidates) {
  if (candidates.empty()) return std::nullopt;
  int best = candidates[0];
  for (int c : candidates)
    if (leq[c][best]) best = c;
  for (int c : candidates)
    if (!leq[best][c]) return std::nullopt;
  return best;
}

std::optional<int> glb(const OrderRelation& leq, int a, int b) {
  std::vector<int> lower;
  for (int c = 0; c < static_cast<int>(leq.size()); ++c)
    if (leq[c][a] && leq[c][b]) lower.push_back(c);
  return greatest(leq, lower);
}

std::optional<int> lub(const OrderRelation& leq, int a, int b) {
  std::vector<int> upper;
  for (int c = 0; c < static_cast<int>(leq.size()); ++c)
    if (leq[a][c] && leq[b][c]) upper.push_back(c);
  return least(leq, upper);
}

std::string fraction_name(int p, int q) {
  if (p == 0) return "0";
  if (p == q) return "1";
  int g = std::gcd(p, q);
  return std::to_string(p / g) + "/" + std::to_string(q / g);
}

}  // namespace

OrderRelation order_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  if (n <= 0) throw InputError("an algebra needs at least one element");
  OrderRelation leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n) throw InputError("cover references an unknown element");
    leq[lo][hi] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq[i][j] && leq[j][i]) throw InputError("covers contain a cycle through elements " + std::to_string(i) +
                                                   " and " + std::to_string(j));
  return leq;
}

CheckResult verify_heyting(const OrderRelation& leq, const std::vector<std::string>& names) {
  const int n = static_cast<int>(leq.size());
  if (n == 0) return CheckResult::fail("nonempty", "the order has no elements");
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != n) return CheckResult::fail("square", "order matrix is not square");
  for (int a = 0; a < n; ++a)
    if (!leq[a][a]) return CheckResult::fail("reflexivity", nm(names, a) + " <= " + nm(names, a) + " fails");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (leq[a][b] && leq[b][a])
        return CheckResult::fail("antisymmetry", nm(names, a) + " and " + nm(names, b) + " are mutually below");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c])
          return CheckResult::fail("transitivity", nm(names, a) + " <= " + nm(names, b) + " <= " + nm(names, c));
  std::vector<int> meet(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto m = glb(leq, a, b);
      if (!m) return CheckResult::fail("meet", "no greatest lower bound of (" + nm(names, a) + ", " + nm(names, b) + ")");
      if (!lub(leq, a, b))
        return CheckResult::fail("join", "no least upper bound of (" + nm(names, a) + ", " + nm(names, b) + ")");
      meet[a * n + b] = *m;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> cs;
      for (int c = 0; c < n; ++c)
        if (leq[meet[c * n + a]][b]) cs.push_back(c);
      if (!greatest(leq, cs))
        return CheckResult::fail("implication", "no largest c with c /\\ " + nm(names, a) + " <= " + nm(names, b));
    }
  return CheckResult::pass();
}

FiniteHeytingAlgebra FiniteHeytingAlgebra::from_order(std::vector<std::string> names, const OrderRelation& leq) {
  const int n = static_cast<int>(leq.size());
  if (static_cast<int>(names.size()) != n) throw InputError("one name per element required");
  std::set<std::string> seen(names.begin(), names.end());
  if (static_cast<int>(seen.size()) != n) throw InputError("element names must be distinct");
  if (auto r = verify_heyting(leq, names); !r) throw InputError("not a Heyting algebra: " + r.describe());

  FiniteHeytingAlgebra L;
  L.n_ = n;
  L.names_ = std::move(names);
  L.leq_.resize(n * n);
  L.meet_.resize(n * n);
  L.join_.resize(n * n);
  L.impl_.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) L.leq_[a * n + b] = leq[a][b];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      L.meet_[a * n + b] = *glb(leq, a, b);
      L.join_[a * n + b] = *lub(leq, a, b);
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> cs;
      for (int c = 0; c < n; ++c)
        if (leq[L.meet_[c * n + a]][b]) cs.push_back(c);
      L.impl_[a * n + b] = *greatest(leq, cs);
    }
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  L.bottom_ = *least(leq, all);
  L.top_ = *greatest(leq, all);
  return L;
}

FiniteHeytingAlgebra FiniteHeytingAlgebra::from_covers(std::vector<std::string> names,
                                                       const std::vector<std::pair<int, int>>& covers) {
  const int n = static_cast<int>(names.size());
  return from_order(std::move(names), order_from_covers(n, covers));
}

FiniteHeytingAlgebra FiniteHeytingAlgebra::chain(int n) {
  if (n < 1) throw InputError("a chain needs at least one element");
  std::vector<std::string> names;
  OrderRelation leq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back(n == 1 ? "0" : fraction_name(i, n - 1));
    for (int j = 0; j < n; ++j) leq[i][j] = i <= j;
  }
  return from_order(std::move(names), leq);
}

FiniteHeytingAlgebra FiniteHeytingAlgebra::boolean(int atoms) {
  if (atoms < 0 || atoms > 5) throw InputError("boolean algebra supports 0..5 atoms");
  const int n = 1 << atoms;
  std::vector<std::string> names;
  OrderRelation leq(n, std::vector<bool>(n));
  for (int m = 0; m < n; ++m) {
    if (m == 0) {
      names.push_back("0");
    } else if (m == n - 1) {
      names.push_back("1");
    } else {
      std::string s;
      for (int i = 0; i < atoms; ++i)
        if (m >> i & 1) s += static_cast<char>('a' + i);
      names.push_back(s);
    }
    for (int k = 0; k < n; ++k) leq[m][k] = (m & k) == m;
  }
  return from_order(std::move(names), leq);
}

std::optional<int> FiniteHeytingAlgebra::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

std::vector<std::pair<int, int>> FiniteHeytingAlgebra::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < n_ && direct; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
      if (direct) out.emplace_back(a, b);
    }
  return out;
}

OrderRelation FiniteHeytingAlgebra::order() const {
  OrderRelation r(n_, std::vector<bool>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) r[a][b] = leq(a, b);
  return r;
}

CheckResult verify_tables(const FiniteHeytingAlgebra& L) {
  const int n = L.size();
  auto nm = [&](int a) { return L.name(a); };
  for (int a = 0; a < n; ++a) {
    if (!L.leq(L.bottom(), a) || !L.leq(a, L.top())) return CheckResult::fail("bounds", nm(a) + " escapes the bounds");
    if (L.neg(a) != L.implies(a, L.bottom())) return CheckResult::fail("negation", nm(a));
    for (int b = 0; b < n; ++b) {
      const int m = L.meet(a, b), j = L.join(a, b);
      if (m != L.meet(b, a) || j != L.join(b, a)) return CheckResult::fail("commutativity", nm(a) + ", " + nm(b));
      if (!L.leq(m, a) || !L.leq(m, b) || !L.leq(a, j) || !L.leq(b, j))
        return CheckResult::fail("bounds of meet/join", nm(a) + ", " + nm(b));
      if (L.leq(a, b) != (m == a)) return CheckResult::fail("order vs meet", nm(a) + ", " + nm(b));
      for (int c = 0; c < n; ++c) {
        if (L.leq(L.meet(a, b), c) != L.leq(a, L.implies(b, c)))
          return CheckResult::fail("adjunction", "(" + nm(a) + ", " + nm(b) + ", " + nm(c) + ")");
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
          return CheckResult::fail("distributivity", "(" + nm(a) + ", " + nm(b) + ", " + nm(c) + ")");
        if (L.meet(L.meet(a, b), c) != L.meet(a, L.meet(b, c)))
          return CheckResult::fail("associativity", "(" + nm(a) + ", " + nm(b) + ", " + nm(c) + ")");
      }
    }
  }
  return CheckResult::pass();
}

namespace {

CheckResult check_shape(const FiniteHeytingAlgebra& L, const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != L.size()) return CheckResult::fail("shape", "map must cover every element");
  for (int v : phi)
    if (v < 0 || v >= L.size()) return CheckResult::fail("shape", "map leaves the algebra");
  return CheckResult::pass();
}

}  // namespace

CheckResult verify_nucleus(const FiniteHeytingAlgebra& L, const std::vector<int>& phi) {
  if (auto r = check_shape(L, phi); !r) return r;
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (phi[L.meet(a, b)] != L.meet(phi[a], phi[b]))
        return CheckResult::fail("(A) meet preservation", "at (" + L.name(a) + ", " + L.name(b) + ")");
  for (int a = 0; a < n; ++a)
    if (!L.leq(a, phi[a])) return CheckResult::fail("(B) increasing", "at " + L.name(a));
  for (int a = 0; a < n; ++a)
    if (!L.leq(phi[phi[a]], phi[a])) return CheckResult::fail("(C) idempotent", "at " + L.name(a));
  return CheckResult::pass();
}

CheckResult verify_nucleus_derived(const FiniteHeytingAlgebra& L, const std::vector<int>& phi) {
  if (auto r = check_shape(L, phi); !r) return r;
  const int n = L.size();
  if (phi[L.top()] != L.top()) return CheckResult::fail("(D) top", "phi(top) = " + L.name(phi[L.top()]));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (L.leq(a, b) && !L.leq(phi[a], phi[b]))
        return CheckResult::fail("(E) monotone", L.name(a) + " <= " + L.name(b));
  for (int a = 0; a < n; ++a)
    if (phi[phi[a]] != phi[a]) return CheckResult::fail("(F) idempotent", "at " + L.name(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!L.leq(L.meet(phi[a], b), phi[L.meet(a, b)]))
        return CheckResult::fail("(G) phi(a) /\\ b <= phi(a /\\ b)", "at (" + L.name(a) + ", " + L.name(b) + ")");
  return CheckResult::pass();
}

std::vector<Nucleus> enumerate_nuclei(const HeytingPtr& Lp, int max_size) {
  const auto& L = *Lp;
  const int n = L.size();
  if (n > max_size)
    throw BudgetExceeded("nucleus enumeration limited to " + std::to_string(max_size) + " elements, got " +
                         std::to_string(n));
  // Ascending linear extension: strictly smaller elements have strictly smaller down-sets.
  std::vector<int> order(n), down(n, 0);
  std::iota(order.begin(), order.end(), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (L.leq(b, a)) ++down[a];
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return down[a] < down[b]; });

  std::vector<Nucleus> out;
  std::vector<int> phi(n, -1);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (verify_nucleus(L, phi)) out.push_back({Lp, phi});
      return;
    }
    const int a = order[pos];
    for (int c = 0; c < n; ++c) {
      if (!L.leq(a, c)) continue;
      if (a == L.top() && c != L.top()) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        const int b = order[q];
        if (L.leq(b, a) && !L.leq(phi[b], c)) ok = false;
      }
      if (!ok) continue;
      phi[a] = c;
      self(self, pos + 1);
      phi[a] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Nucleus& x, const Nucleus& y) { return x.map < y.map; });
  return out;
}

std::vector<int> double_negation_map(const FiniteHeytingAlgebra& L) {
  std::vector<int> out(L.size());
  for (int a = 0; a < L.size(); ++a) out[a] = L.neg(L.neg(a));
  return out;
}

bool is_de_morgan(const FiniteHeytingAlgebra& L) {
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) {
      if (L.neg(L.join(a, b)) != L.meet(L.neg(a), L.neg(b))) return false;
      if (L.neg(L.meet(a, b)) != L.join(L.neg(a), L.neg(b))) return false;
    }
  return true;
}

CheckResult verify_closure_map(const FiniteHeytingAlgebra& L, const std::vector<int>& f) {
  if (auto r = check_shape(L, f); !r) return r;
  for (int a = 0; a < L.size(); ++a) {
    if (!L.leq(a, f[a])) return CheckResult::fail("increasing", "at " + L.name(a));
    if (f[f[a]] != f[a]) return CheckResult::fail("idempotent", "at " + L.name(a));
    for (int b = 0; b < L.size(); ++b)
      if (L.leq(a, b) && !L.leq(f[a], f[b])) return CheckResult::fail("monotone", L.name(a) + " <= " + L.name(b));
  }
  return CheckResult::pass();
}

std::vector<FiniteHeytingAlgebra> enumerate_heyting_algebras(int max_size) {
  if (max_size > 7) throw BudgetExceeded("algebra corpus limited to 7 elements");
  std::vector<FiniteHeytingAlgebra> out;
  if (max_size >= 1) out.push_back(FiniteHeytingAlgebra::chain(1));
  for (int n = 2; n <= max_size; ++n) {
    const int mid = n - 2;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= mid; ++i)
      for (int j = i + 1; j <= mid; ++j) pairs.emplace_back(i, j);
    std::vector<std::string> names{"0"};
    for (int i = 0; i < mid; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    names.push_back("1");

    std::set<std::vector<bool>> seen;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      // Natural labelling: i <= j only if i < j numerically, so every poset
      // with bottom 0 and top n-1 appears for some mask.
      OrderRelation leq(n, std::vector<bool>(n, false));
      for (int i = 0; i < n; ++i) {
        leq[i][i] = true;
        leq[0][i] = true;
        leq[i][n - 1] = true;
      }
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if (mask >> p & 1) leq[pairs[p].first][pairs[p].second] = true;
      bool transitive = true;
      for (int a = 0; a < n && transitive; ++a)
        for (int b = 0; b < n && transitive; ++b)
          for (int c = 0; c < n && transitive; ++c)
            if (leq[a][b] && leq[b][c] && !leq[a][c]) transitive = false;
      if (!transitive || !verify_heyting(leq)) continue;

      std::vector<int> perm(mid);
      std::iota(perm.begin(), perm.end(), 1);
      std::vector<bool> best;
      do {
        std::vector<int> relabel(n);
        relabel[0] = 0;
        relabel[n - 1] = n - 1;
        for (int i = 0; i < mid; ++i) relabel[i + 1] = perm[i];
        std::vector<bool> key;
        key.reserve(n * n);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) key.push_back(leq[relabel[a]][relabel[b]]);
        if (best.empty() || key < best) best = std::move(key);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!seen.insert(best).second) continue;
      out.push_back(FiniteHeytingAlgebra::from_order(names, leq));
    }
  }
  return out;
}

std::string describe_map(const FiniteHeytingAlgebra& L, const std::vector<int>& f) {
  std::ostringstream os;
  for (int a = 0; a < L.size(); ++a) os << (a ? " " : "") << L.name(a) << "->" << L.name(f.at(a));
  return os.str();
}

}  // namespace lawvere
