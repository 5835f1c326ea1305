#include "lawvere/fuzzy.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lawvere {

namespace {

const FiniteHeytingAlgebra& algebra_of(const QClosureOperator& op) {
  if (!op.algebra) throw InputError("closure operator without an algebra");
  return *op.algebra;
}

void require_same_algebra(const QClosureOperator& op, const FuzzySet& A) {
  if (op.algebra != A.algebra && (op.algebra->names() != A.algebra->names() ||
                                  op.algebra->covers() != A.algebra->covers()))
    throw InputError("fuzzy set and closure operator use different algebras");
}

// Calls visit on every function {0..n-1} -> {0..m-1}; stops when visit
// returns false.
void for_each_function(int n, int m, const std::function<bool(const std::vector<int>&)>& visit) {
  if (n > 0 && m == 0) return;
  std::vector<int> f(n, 0);
  while (true) {
    if (!visit(f)) return;
    int i = 0;
    for (; i < n; ++i) {
      if (++f[i] < m) break;
      f[i] = 0;
    }
    if (i == n) return;
  }
}

std::string describe_function(const FuzzySet& A, const FuzzySet& B, const std::vector<int>& f) {
  std::string out = "{";
  for (int a = 0; a < A.size(); ++a) {
    if (a) out += ", ";
    out += A.carrier[a] + "->" + B.carrier[f[a]];
  }
  return out + "}";
}

}  // namespace

void FuzzySet::validate() const {
  if (!algebra) throw InputError("fuzzy set without an algebra");
  if (membership.size() != carrier.size()) throw InputError("membership must list every carrier element");
  for (std::size_t a = 0; a < membership.size(); ++a)
    if (membership[a] < 0 || membership[a] >= algebra->size())
      throw InputError("membership of " + carrier[a] + " is not an algebra element");
}

FuzzySet make_fuzzy_set(HeytingPtr algebra, std::vector<int> membership) {
  FuzzySet A{std::move(algebra), {}, std::move(membership)};
  for (std::size_t a = 0; a < A.membership.size(); ++a) A.carrier.push_back("x" + std::to_string(a));
  A.validate();
  return A;
}

void validate_subset(const FuzzySet& A, const FuzzySubset& sub) {
  if (static_cast<int>(sub.level.size()) != A.size()) throw InputError("subset has the wrong carrier");
  for (int a = 0; a < A.size(); ++a) {
    const int x = sub.level[a];
    if (x < 0) continue;
    if (x >= A.algebra->size()) throw InputError("subset membership of " + A.carrier[a] + " out of range");
    if (!A.algebra->leq(x, A.membership[a]))
      throw InputError("subset membership of " + A.carrier[a] + " exceeds the ambient membership");
  }
}

FuzzySubset whole_subset(const FuzzySet& A) { return {A.membership}; }

FuzzySubset empty_fuzzy_subset(const FuzzySet& A) { return {std::vector<int>(A.size(), -1)}; }

bool is_strong(const FuzzySet& A, const FuzzySubset& sub) {
  for (int a = 0; a < A.size(); ++a)
    if (sub.level[a] >= 0 && sub.level[a] != A.membership[a]) return false;
  return true;
}

bool subset_leq(const FiniteHeytingAlgebra& L, const FuzzySubset& a, const FuzzySubset& b) {
  for (std::size_t e = 0; e < a.level.size(); ++e) {
    if (a.level[e] < 0) continue;
    if (b.level[e] < 0 || !L.leq(a.level[e], b.level[e])) return false;
  }
  return true;
}

std::vector<FuzzySubset> enumerate_fuzzy_subsets(const FuzzySet& A) {
  const auto& L = *A.algebra;
  std::vector<std::vector<int>> options(A.size());
  for (int a = 0; a < A.size(); ++a) {
    options[a].push_back(-1);
    for (int x = 0; x < L.size(); ++x)
      if (L.leq(x, A.membership[a])) options[a].push_back(x);
  }
  std::vector<FuzzySubset> out;
  FuzzySubset cur{std::vector<int>(A.size(), -1)};
  auto rec = [&](auto&& self, int a) -> void {
    if (a == A.size()) {
      out.push_back(cur);
      return;
    }
    for (int x : options[a]) {
      cur.level[a] = x;
      self(self, a + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::pair<FuzzySet, std::vector<int>> subset_object(const FuzzySet& A, const FuzzySubset& sub) {
  FuzzySet S{A.algebra, {}, {}};
  std::vector<int> incl;
  for (int a = 0; a < A.size(); ++a) {
    if (sub.level[a] < 0) continue;
    S.carrier.push_back(A.carrier[a]);
    S.membership.push_back(sub.level[a]);
    incl.push_back(a);
  }
  return {std::move(S), std::move(incl)};
}

bool is_fuzzy_morphism(const FuzzySet& A, const FuzzySet& B, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != A.size()) return false;
  for (int a = 0; a < A.size(); ++a) {
    if (f[a] < 0 || f[a] >= B.size()) return false;
    if (!A.algebra->leq(A.membership[a], B.membership[f[a]])) return false;
  }
  return true;
}

FuzzySubset pullback(const FuzzySet& B, const std::vector<int>& f, const FiniteHeytingAlgebra& L,
                     const FuzzySubset& sub) {
  FuzzySubset out{std::vector<int>(B.size(), -1)};
  for (int b = 0; b < B.size(); ++b)
    if (sub.level[f[b]] >= 0) out.level[b] = L.meet(B.membership[b], sub.level[f[b]]);
  return out;
}

QClosureOperator QClosureOperator::trivial(HeytingPtr algebra) {
  if (!algebra) throw InputError("closure operator without an algebra");
  return {Kind::Trivial, std::move(algebra), {}};
}

QClosureOperator QClosureOperator::induced(HeytingPtr algebra, std::vector<int> phi) {
  if (!algebra) throw InputError("closure operator without an algebra");
  if (static_cast<int>(phi.size()) != algebra->size()) throw InputError("map must have one value per element");
  for (int v : phi)
    if (v < 0 || v >= algebra->size()) throw InputError("map value out of range");
  return {Kind::NucleusInduced, std::move(algebra), std::move(phi)};
}

std::string describe(const QClosureOperator& op) {
  if (op.kind == QClosureOperator::Kind::Trivial) return "trivial";
  return "induced by " + describe_map(*op.algebra, op.phi);
}

FuzzySubset fuzzy_closure(const QClosureOperator& op, const FuzzySet& A, const FuzzySubset& sub) {
  require_same_algebra(op, A);
  validate_subset(A, sub);
  if (op.kind == QClosureOperator::Kind::Trivial) return whole_subset(A);
  const auto& L = algebra_of(op);
  FuzzySubset out = sub;
  for (int a = 0; a < A.size(); ++a)
    if (sub.level[a] >= 0) out.level[a] = L.meet(op.phi[sub.level[a]], A.membership[a]);
  return out;
}

bool is_dense(const QClosureOperator& op, const FuzzySet& A, const FuzzySubset& sub) {
  return fuzzy_closure(op, A, sub) == whole_subset(A);
}

std::vector<FuzzySet> fuzzy_corpus(const HeytingPtr& L, int max_carrier) {
  std::vector<FuzzySet> out;
  std::vector<int> m;
  auto rec = [&](auto&& self, int remaining, int from) -> void {
    out.push_back(make_fuzzy_set(L, m));
    if (remaining == 0) return;
    for (int x = from; x < L->size(); ++x) {
      m.push_back(x);
      self(self, remaining - 1, x);
      m.pop_back();
    }
  };
  rec(rec, max_carrier, 0);
  std::stable_sort(out.begin(), out.end(), [](const FuzzySet& a, const FuzzySet& b) { return a.size() < b.size(); });
  return out;
}

CheckResult verify_qclosure(const QClosureOperator& op, const std::vector<FuzzySet>& corpus, int pullback_carrier) {
  const auto& L = algebra_of(op);
  std::vector<std::vector<FuzzySubset>> subs;
  for (const auto& A : corpus) {
    require_same_algebra(op, A);
    subs.push_back(enumerate_fuzzy_subsets(A));
  }

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& A = corpus[i];
    std::vector<FuzzySubset> closed;
    for (const auto& s : subs[i]) closed.push_back(fuzzy_closure(op, A, s));
    for (std::size_t k = 0; k < subs[i].size(); ++k) {
      const auto& s = subs[i][k];
      const auto& c = closed[k];
      if (!subset_leq(L, s, c)) return CheckResult::fail("(i) increasing", describe(A, s));
      if (!(fuzzy_closure(op, A, c) == c)) return CheckResult::fail("(ii) idempotent", describe(A, s));
      if (is_strong(A, s) && !is_strong(A, c))
        return CheckResult::fail("(v) preserves strongness", describe(A, s) + " closes to " + describe(A, c));
    }
    for (std::size_t k = 0; k < subs[i].size(); ++k)
      for (std::size_t l = 0; l < subs[i].size(); ++l)
        if (subset_leq(L, subs[i][k], subs[i][l]) && !subset_leq(L, closed[k], closed[l]))
          return CheckResult::fail("(iii) monotone", describe(A, subs[i][k]) + " below " + describe(A, subs[i][l]));
  }

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& A = corpus[i];
    for (const auto& B : corpus) {
      const bool small = A.size() <= pullback_carrier && B.size() <= pullback_carrier;
      if (!small && B.size() > A.size()) continue;
      std::optional<CheckResult> failure;
      for_each_function(B.size(), A.size(), [&](const std::vector<int>& f) {
        if (!small) {
          std::vector<bool> hit(A.size());
          for (int v : f) {
            if (hit[v]) return true;
            hit[v] = true;
          }
        }
        if (!is_fuzzy_morphism(B, A, f)) return true;
        for (const auto& s : subs[i]) {
          auto lhs = fuzzy_closure(op, B, pullback(B, f, L, s));
          auto rhs = pullback(B, f, L, fuzzy_closure(op, A, s));
          if (!(lhs == rhs)) {
            failure = CheckResult::fail("(iv) stable under pullback",
                                        "pulling " + describe(A, s) + " back along " + describe_function(B, A, f) +
                                            " from " + describe(B) + ": closure of pullback " + describe(B, lhs) +
                                            ", pullback of closure " + describe(B, rhs));
            return false;
          }
        }
        return true;
      });
      if (failure) return *failure;
    }
  }
  return CheckResult::pass();
}

FuzzyFactorizationReport fuzzy_factorization_check(const FuzzySet& B, const QClosureOperator& op,
                                                   const std::vector<FuzzySet>& corpus) {
  require_same_algebra(op, B);
  FuzzyFactorizationReport r;
  for (const auto& A : corpus) {
    for (const auto& s : enumerate_fuzzy_subsets(A)) {
      if (!is_dense(op, A, s)) continue;
      ++r.dense_monos;
      auto [S, incl] = subset_object(A, s);
      std::vector<int> rest;
      for (int a = 0; a < A.size(); ++a)
        if (s.level[a] < 0) rest.push_back(a);
      for_each_function(S.size(), B.size(), [&](const std::vector<int>& f) {
        if (!is_fuzzy_morphism(S, B, f)) return true;
        ++r.maps_checked;
        std::vector<int> g(A.size(), 0);
        for (int p = 0; p < S.size(); ++p) g[incl[p]] = f[p];
        int extensions = 0;
        for_each_function(static_cast<int>(rest.size()), B.size(), [&](const std::vector<int>& h) {
          for (std::size_t q = 0; q < rest.size(); ++q) g[rest[q]] = h[q];
          if (is_fuzzy_morphism(A, B, g)) ++extensions;
          return extensions < 2;
        });
        const std::string where = describe(S, whole_subset(S)) + " -> " + describe(B) + " via " +
                                  describe_function(S, B, f) + ", dense in " + describe(A);
        if (extensions > 1 && r.separated) {
          r.separated = false;
          r.separation_witness = where;
        }
        if (extensions == 0 && r.complete) {
          r.complete = false;
          r.completeness_witness = where;
        }
        return r.separated || r.complete;
      });
      if (!r.separated && !r.complete) return r;
    }
  }
  return r;
}

FuzzyClassification classify_fuzzy(const FuzzySet& B, const QClosureOperator& op, const std::vector<FuzzySet>& corpus) {
  require_same_algebra(op, B);
  B.validate();
  FuzzyClassification c;
  if (op.kind == QClosureOperator::Kind::Trivial) {
    auto r = fuzzy_factorization_check(B, op, corpus);
    c.separated = r.separated;
    c.sheaf = r.sheaf();
    c.reason = "factorization oracle over " + std::to_string(r.dense_monos) + " dense monos";
    if (r.separation_witness) c.reason += "; two factorizations of " + *r.separation_witness;
    if (r.completeness_witness) c.reason += "; no factorization of " + *r.completeness_witness;
    return c;
  }
  const auto& L = algebra_of(op);
  std::vector<bool> image(L.size());
  for (int v : op.phi) image[v] = true;
  for (int b = 0; b < B.size(); ++b)
    if (!image[B.membership[b]]) {
      c.sheaf = false;
      c.reason = "membership " + L.name(B.membership[b]) + " of " + B.carrier[b] + " is not in the image of phi";
      return c;
    }
  c.reason = "every membership is in the image of phi";
  return c;
}

std::vector<int> nucleus_from_operator(const QClosureOperator& op) {
  const auto& L = algebra_of(op);
  auto one = make_fuzzy_set(op.algebra, {L.top()});
  if (!(fuzzy_closure(op, one, empty_fuzzy_subset(one)) == empty_fuzzy_subset(one)))
    throw InputError("operator adds elements; it corresponds to no nucleus");
  std::vector<int> phi(L.size());
  for (int x = 0; x < L.size(); ++x) phi[x] = fuzzy_closure(op, one, FuzzySubset{{x}}).level[0];
  return phi;
}

bool same_operator(const QClosureOperator& a, const QClosureOperator& b, const std::vector<FuzzySet>& corpus) {
  for (const auto& A : corpus)
    for (const auto& s : enumerate_fuzzy_subsets(A))
      if (!(fuzzy_closure(a, A, s) == fuzzy_closure(b, A, s))) return false;
  return true;
}

std::string describe(const FuzzySet& A) { return describe(A, whole_subset(A)); }

std::string describe(const FuzzySet& A, const FuzzySubset& sub) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int a = 0; a < A.size(); ++a) {
    if (sub.level[a] < 0) continue;
    if (!first) os << ", ";
    first = false;
    os << A.carrier[a] << ":" << A.algebra->name(sub.level[a]);
  }
  os << "}";
  return os.str();
}

}  // namespace lawvere
