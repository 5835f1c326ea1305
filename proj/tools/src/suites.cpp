#include "lawvere/tools/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "lawvere/fuzzy.hpp"
#include "lawvere/lattice.hpp"
#include "lawvere/topology.hpp"

namespace lawvere::suites {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> tags_of(const std::vector<LTTopology>& js) {
  std::vector<std::string> out;
  for (const auto& j : js) out.push_back(j.tag.value_or("?"));
  return out;
}

struct Shape {
  std::string spec;
  std::string label;
  std::vector<std::string> expected;
};

// Expected tag lists: every bit string on the face-only shapes, the
// 0^m 1^(n+1-m) strings with degeneracies, one vertex digit by one
// edge-colour digit on the bicoloured shape.
std::vector<Shape> count_shapes() {
  return {
      {"set", "Set", {"0", "1"}},
      {"graph", "Graph", {"00", "01", "10", "11"}},
      {"reflgraph", "ReflGraph", {"00", "01", "11"}},
      {"bicolor", "BiColGraph", {"00", "01", "02", "03", "10", "11", "12", "13"}},
      {"semi2", "Semi2", {"000", "001", "010", "011", "100", "101", "110", "111"}},
      {"sset2", "Sset2", {"000", "001", "011", "111"}},
  };
}

bool same_topologies(const std::vector<LTTopology>& a, const std::vector<LTTopology>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& j : a)
    if (std::find(b.begin(), b.end(), j) == b.end()) return false;
  return true;
}

std::set<std::vector<int>> brute_nuclei_maps(const FiniteHeytingAlgebra& L) {
  // Every one of the n^n endomaps, kept when it satisfies (A)-(C).
  const int n = L.size();
  std::vector<int> f(n, 0);
  std::set<std::vector<int>> found;
  while (true) {
    if (verify_nucleus(L, f)) found.insert(f);
    int i = 0;
    for (; i < n; ++i) {
      if (++f[i] < n) break;
      f[i] = 0;
    }
    if (i == n) break;
  }
  return found;
}

}  // namespace

bool CriterionReport::pass() const {
  if (!within_budget()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

std::string counts_line() {
  std::vector<std::string> parts;
  for (const auto& s : count_shapes()) {
    auto omega = OmegaObject::build(FiniteIndexCategory::build(s.spec));
    parts.push_back(s.label + ":" +
                    std::to_string(enumerate_topologies(omega, EnumerationMethod::Constrained).size()));
  }
  return join(parts, " ");
}

CriterionReport topology_counts(const Options&) {
  Timer t;
  CriterionReport r{1, "topology counts", {}, 0, 60, {}};
  std::vector<std::string> counts;
  for (const auto& s : count_shapes()) {
    auto omega = OmegaObject::build(FiniteIndexCategory::build(s.spec));
    auto constrained = enumerate_topologies(omega, EnumerationMethod::Constrained);
    auto brute = enumerate_topologies(omega, EnumerationMethod::Brute);
    counts.push_back(s.label + ":" + std::to_string(constrained.size()));
    r.checks.push_back({s.label + " count", constrained.size() == s.expected.size(),
                        std::to_string(constrained.size()) + " topologies, expected " +
                            std::to_string(s.expected.size())});
    r.checks.push_back({s.label + " tags", tags_of(constrained) == s.expected, join(tags_of(constrained), " ")});
    r.checks.push_back({s.label + " brute = constrained", same_topologies(brute, constrained),
                        "brute found " + std::to_string(brute.size()) + ": " + join(tags_of(brute), " ")});
    bool valid = true;
    for (const auto& j : constrained) valid = valid && verify_topology(j).ok();
    r.checks.push_back({s.label + " axioms", valid, "every enumerated map passes (1)-(3) and naturality"});
  }
  r.summary = join(counts, " ");
  r.seconds = t.seconds();
  return r;
}

CriterionReport omega_structure(const Options&) {
  Timer t;
  CriterionReport r{2, "Omega structure", {}, 0, 30, {}};
  const std::vector<std::pair<std::string, std::vector<int>>> expected = {
      {"graph", {2, 5}}, {"reflgraph", {2, 5}}, {"semi2", {2, 5, 19}}};
  std::vector<std::string> summary;
  for (const auto& [spec, sizes] : expected) {
    auto omega = OmegaObject::build(FiniteIndexCategory::build(spec));
    const auto& C = omega->category();
    std::vector<int> got;
    for (int c = 0; c < C.object_count(); ++c) got.push_back(omega->size(c));
    std::vector<std::string> gs;
    for (int v : got) gs.push_back(std::to_string(v));
    r.checks.push_back({spec + " level sizes", got == sizes, join(gs, ", ")});

    for (int c = 0; c < C.object_count(); ++c) {
      const auto& L = omega->level(c);
      auto h = verify_heyting(L.order(), L.names());
      auto tb = h ? verify_tables(L) : h;
      r.checks.push_back({spec + " Omega(" + C.object_name(c) + ") Heyting laws", h.ok() && tb.ok(),
                          h ? tb.describe() : h.describe()});
    }
    for (int c = 0; c < C.object_count(); ++c) {
      if (C.dimension(c) > 2) continue;
      for (int d : C.faces(c)) {
        auto iso = verify_face_downset_iso(*omega, d);
        r.checks.push_back({spec + " Omega(" + C.object_name(C.morphism(d).source) + ") ~ down-set of " +
                                C.morphism(d).name,
                            iso.ok(), iso.describe()});
      }
    }
    for (int c = 0; c < C.object_count(); ++c) {
      if (C.faces(c).empty() || C.dimension(c) > 2) continue;
      auto inc = analyze_incidence(*omega, c);
      std::vector<int> expected_collision = {omega->boundary_index(c), omega->top(c)};
      const bool single = inc.collisions.size() == 1 && inc.collisions[0] == expected_collision;
      std::ostringstream os;
      os << inc.hit << " of " << inc.tuples << " tuples hit; onto the " << inc.compatible_tuples
         << " compatible tuples: " << (inc.surjective_on_compatible ? "yes" : "no") << "; collisions: "
         << inc.collisions.size();
      r.checks.push_back({spec + " incidence map at " + C.object_name(c) + " surjective", inc.surjective, os.str()});
      r.checks.push_back({spec + " incidence collision at " + C.object_name(c) + " is boundary/top", single,
                          single ? "single fiber {boundary, y}" : "unexpected fibers"});
    }
    summary.push_back(spec + " (" + join(gs, ",") + ")");
  }
  r.summary = join(summary, " ");
  r.seconds = t.seconds();
  return r;
}

CriterionReport closure_equivalence(const Options& opt) {
  Timer t;
  CriterionReport r{3, "closure equivalence", {}, 0, 300, {}};
  std::size_t total = 0;
  for (const auto* spec : {"set", "graph", "reflgraph", "bicolor", "semi2", "sset2"}) {
    auto cat = FiniteIndexCategory::build(spec);
    auto omega = OmegaObject::build(cat);
    auto corpus = enumerate_presheaves(cat, opt.corpus_bound);
    for (const auto& j : enumerate_topologies(omega, EnumerationMethod::Constrained)) {
      const auto bits = bits_from_tag(*cat, *j.tag);
      std::size_t compared = 0;
      std::string mismatch;
      for (const auto& A : corpus) {
        for (const auto& sub : enumerate_subpresheaves(A)) {
          ++compared;
          auto a = closure_via_chi(j, A, sub).closed;
          auto b = closure_recursive(bits, A, sub).closed;
          if (!(a == b) && mismatch.empty())
            mismatch = describe(A, sub) + " in " + describe(A) + ": chi gives " + describe(A, a) +
                       ", recursion gives " + describe(A, b);
        }
      }
      total += compared;
      r.checks.push_back({std::string(spec) + " j^" + *j.tag + " chi = recursive", mismatch.empty(),
                          mismatch.empty() ? std::to_string(compared) + " subobjects" : mismatch});
    }
  }

  // Double negation on Graph, computed levelwise from the Heyting
  // negation, against the pointwise edge formula.
  auto cat = FiniteIndexCategory::build("graph");
  auto omega = OmegaObject::build(cat);
  LTTopology nn{omega, {}, std::string("not not")};
  for (int c = 0; c < omega->level_count(); ++c) nn.level_map.push_back(double_negation_map(omega->level(c)));
  auto jw = construct_jw(omega, "01");
  r.checks.push_back({"Graph not-not is a topology", verify_topology(nn).ok(), verify_topology(nn).describe()});
  r.checks.push_back({"Graph not-not = j^01", nn == jw, nn == jw ? "equal on every level" : describe(nn)});
  const int V = *cat->find_object("V");
  const int E = *cat->find_object("E");
  const int s = *cat->find_generator("s");
  const int tt = *cat->find_generator("t");
  std::string bad;
  std::size_t compared = 0;
  for (const auto& A : enumerate_presheaves(cat, opt.corpus_bound)) {
    for (const auto& sub : enumerate_subpresheaves(A)) {
      ++compared;
      Subpresheaf expect = sub;
      for (int e = 0; e < A.size(E); ++e)
        if (sub.contains(A, V, A.act(s, e)) && sub.contains(A, V, A.act(tt, e))) expect.elements.set(A.global(E, e));
      auto got = closure_via_chi(nn, A, sub).closed;
      if (!(got == expect) && bad.empty()) bad = describe(A, sub) + " in " + describe(A) + " closes to " + describe(A, got);
    }
  }
  r.checks.push_back({"Graph not-not closure = endpoint formula", bad.empty(),
                      bad.empty() ? std::to_string(compared) + " subobjects" : bad});
  r.summary = std::to_string(total) + " closures compared";
  r.seconds = t.seconds();
  return r;
}

CriterionReport sheaf_criteria(const Options& opt) {
  Timer t;
  CriterionReport r{4, "separated/complete/sheaf criteria", {}, 0, 600, {}};
  std::size_t compared = 0;
  for (const auto* spec : {"graph", "reflgraph", "semi2"}) {
    auto cat = FiniteIndexCategory::build(spec);
    auto omega = OmegaObject::build(cat);
    auto corpus = factorization_corpus(cat, opt.corpus_bound);
    for (const auto& j : enumerate_topologies(omega, EnumerationMethod::Constrained)) {
      auto dense = dense_pairs(j, corpus);
      std::string bad;
      for (const auto& B : corpus) {
        auto c = classify(B, *j.tag);
        auto o = brute_factorization_check(B, corpus, dense);
        ++compared;
        if ((c.separated != o.separated || c.complete != o.complete) && bad.empty()) {
          std::ostringstream os;
          os << describe(B) << ": classify sep=" << c.separated << " comp=" << c.complete
             << ", oracle sep=" << o.separated << " comp=" << o.complete;
          bad = os.str();
        }
      }
      r.checks.push_back({std::string(spec) + " j^" + *j.tag + " classify = oracle", bad.empty(),
                          bad.empty() ? std::to_string(corpus.size()) + " presheaves, " +
                                            std::to_string(dense.size()) + " dense monos"
                                      : bad});
    }
  }

  auto cat = FiniteIndexCategory::build("graph");
  const int E = *cat->find_object("E");
  const int s = *cat->find_generator("s");
  const int tt = *cat->find_generator("t");
  std::string bad;
  int simple = 0;
  const auto corpus = enumerate_presheaves(cat, opt.corpus_bound);
  for (const auto& B : corpus) {
    std::set<std::pair<int, int>> ends;
    bool is_simple = true;
    for (int e = 0; e < B.size(E); ++e) is_simple = ends.insert({B.act(s, e), B.act(tt, e)}).second && is_simple;
    simple += is_simple;
    if (classify(B, "01").separated != is_simple && bad.empty()) bad = describe(B);
  }
  r.checks.push_back({"Graph j^01-separated = simple", bad.empty(),
                      bad.empty() ? std::to_string(simple) + " of " + std::to_string(corpus.size()) + " graphs simple"
                                  : bad});
  r.summary = std::to_string(compared) + " classifications compared";
  r.seconds = t.seconds();
  return r;
}

CriterionReport degeneracy_filter(const Options&) {
  Timer t;
  CriterionReport r{5, "degeneracy filter", {}, 0, 60, {}};
  const std::string expected_witness =
      "naturality: with refl fails at empty in Omega(V): j(refl(empty)) = (0)+(1) but refl(j(empty)) = (0,1)";
  auto omega = OmegaObject::build(FiniteIndexCategory::build("graph"));
  auto refl = OmegaObject::build(degeneracy_partner(omega->category()));
  std::vector<std::string> ok;
  for (const auto& j : enumerate_topologies(omega, EnumerationMethod::Constrained)) {
    auto res = degeneracy_compatible(j, *refl);
    const bool want = *j.tag != "10";
    if (res.ok()) ok.push_back(*j.tag);
    r.checks.push_back({"j^" + *j.tag + (want ? " compatible" : " incompatible"), res.ok() == want, res.describe()});
    if (!want)
      r.checks.push_back({"j^10 witness", res.describe() == expected_witness, res.describe()});
  }
  r.summary = "compatible: " + join(ok, " ");
  r.seconds = t.seconds();
  return r;
}

CriterionReport nuclei_and_fuzzy(const Options&) {
  Timer t;
  CriterionReport r{6, "nuclei and fuzzy sets", {}, 0, 120, {}};
  struct Case {
    std::string name;
    HeytingPtr L;
    std::size_t expected;
  };
  const std::vector<Case> cases = {
      {"2-chain", std::make_shared<const FiniteHeytingAlgebra>(FiniteHeytingAlgebra::chain(2)), 2},
      {"3-chain", std::make_shared<const FiniteHeytingAlgebra>(FiniteHeytingAlgebra::chain(3)), 3},
      {"Boolean diamond", std::make_shared<const FiniteHeytingAlgebra>(FiniteHeytingAlgebra::boolean(2)), 4},
  };
  std::vector<std::string> counts;
  for (const auto& c : cases) {
    auto ns = enumerate_nuclei(c.L);
    std::set<std::vector<int>> maps;
    std::vector<std::string> listed;
    for (const auto& n : ns) {
      maps.insert(n.map);
      listed.push_back("[" + describe_map(*c.L, n.map) + "]");
    }
    r.checks.push_back({c.name + " nuclei = exhaustive oracle", maps.size() == ns.size() && maps == brute_nuclei_maps(*c.L),
                        std::to_string(ns.size()) + " nuclei"});
    r.checks.push_back({c.name + " nucleus count", ns.size() == c.expected,
                        std::to_string(ns.size()) + " (expected " + std::to_string(c.expected) + "): " + join(listed, " ")});
    counts.push_back(c.name + ":" + std::to_string(ns.size()));
  }

  std::size_t operators = 0;
  std::string axioms_bad;
  std::string classify_bad;
  std::string roundtrip_bad;
  for (const auto& alg : enumerate_heyting_algebras(5)) {
    auto L = std::make_shared<const FiniteHeytingAlgebra>(alg);
    const auto corpus = fuzzy_corpus(L, kFuzzyCorpusCarrier);
    const auto oracle_corpus = fuzzy_corpus(L, kFuzzyPullbackCarrier);
    for (const auto& n : enumerate_nuclei(L)) {
      ++operators;
      auto op = QClosureOperator::induced(n);
      const std::string where = "|L|=" + std::to_string(L->size()) + " phi=[" + describe_map(*L, n.map) + "]";
      if (auto v = verify_qclosure(op, corpus); !v && axioms_bad.empty()) axioms_bad = where + ": " + v.describe();
      for (const auto& B : corpus) {
        auto c = classify_fuzzy(B, op, oracle_corpus);
        auto o = fuzzy_factorization_check(B, op, oracle_corpus);
        if ((c.separated != o.separated || c.sheaf != o.sheaf()) && classify_bad.empty())
          classify_bad = where + " B=" + describe(B);
      }
      auto back = nucleus_from_operator(op);
      auto again = QClosureOperator::induced(L, back);
      if ((back != n.map || !same_operator(op, again, corpus)) && roundtrip_bad.empty()) roundtrip_bad = where;
    }
  }
  r.checks.push_back({"nucleus-induced operators satisfy (i)-(v)", axioms_bad.empty(),
                      axioms_bad.empty() ? std::to_string(operators) + " operators over algebras of size <= 5" : axioms_bad});
  r.checks.push_back({"classify_fuzzy = factorization oracle", classify_bad.empty(),
                      classify_bad.empty() ? "all corpus fuzzy sets" : classify_bad});
  r.checks.push_back({"nucleus round trip", roundtrip_bad.empty(), roundtrip_bad.empty() ? "identity" : roundtrip_bad});

  {
    auto L = std::make_shared<const FiniteHeytingAlgebra>(FiniteHeytingAlgebra::boolean(2));
    const int a = *L->find("a");
    const int b = *L->find("b");
    std::vector<int> phi(L->size());
    phi[L->bottom()] = L->bottom();
    phi[a] = L->top();
    phi[b] = b;
    phi[L->top()] = L->top();
    auto g = verify_nucleus_derived(*L, phi);
    auto v = verify_qclosure(QClosureOperator::induced(L, phi), fuzzy_corpus(L, kFuzzyCorpusCarrier));
    r.checks.push_back({"non-nucleus failing (G) breaks pullback stability",
                        !g.ok() && g.law().rfind("(G)", 0) == 0 && !v.ok() && v.law() == "(iv) stable under pullback",
                        v.describe()});
  }

  {
    auto L = std::make_shared<const FiniteHeytingAlgebra>(FiniteHeytingAlgebra::chain(5));
    const int half = *L->find("1/2");
    const int quarter = *L->find("1/4");
    std::vector<int> phi(L->size());
    for (int x = 0; x < L->size(); ++x) phi[x] = L->join(x, half);
    auto op = QClosureOperator::induced(L, phi);
    const auto oracle_corpus = fuzzy_corpus(L, kFuzzyPullbackCarrier);
    std::string bad;
    int sheaves = 0;
    const auto corpus = fuzzy_corpus(L, kFuzzyCorpusCarrier);
    for (const auto& B : corpus) {
      bool upper = true;
      bool has_quarter = false;
      for (int m : B.membership) {
        upper = upper && L->leq(half, m);
        has_quarter = has_quarter || m == quarter;
      }
      auto c = classify_fuzzy(B, op, oracle_corpus);
      auto o = fuzzy_factorization_check(B, op, oracle_corpus);
      sheaves += c.sheaf;
      if ((c.sheaf != upper || (has_quarter && c.sheaf) || o.sheaf() != upper) && bad.empty()) bad = describe(B);
    }
    r.checks.push_back({"5-chain x v 1/2: sheaf iff memberships in {1/2,3/4,1}", bad.empty(),
                        bad.empty() ? std::to_string(sheaves) + " of " + std::to_string(corpus.size()) + " sheaves" : bad});
  }
  r.summary = join(counts, " ");
  r.seconds = t.seconds();
  return r;
}

CriterionReport double_negation_nucleus(const Options&) {
  Timer t;
  CriterionReport r{7, "double negation nucleus", {}, 0, 60, {}};
  int algebras = 0;
  int de_morgan = 0;
  std::string closure_bad;
  std::string nucleus_bad;
  for (const auto& L : enumerate_heyting_algebras(7)) {
    ++algebras;
    auto nn = double_negation_map(L);
    if (auto c = verify_closure_map(L, nn); !c && closure_bad.empty())
      closure_bad = "|L|=" + std::to_string(L.size()) + ": " + c.describe();
    if (is_de_morgan(L)) {
      ++de_morgan;
      if (auto n = verify_nucleus(L, nn); !n && nucleus_bad.empty())
        nucleus_bad = "|L|=" + std::to_string(L.size()) + ": " + n.describe();
    }
  }
  r.checks.push_back({"not-not monotone, increasing, idempotent", closure_bad.empty(),
                      closure_bad.empty() ? std::to_string(algebras) + " algebras" : closure_bad});
  r.checks.push_back({"not-not is a nucleus on De Morgan algebras", nucleus_bad.empty(),
                      nucleus_bad.empty() ? std::to_string(de_morgan) + " De Morgan algebras" : nucleus_bad});
  r.summary = std::to_string(algebras) + " algebras, " + std::to_string(de_morgan) + " De Morgan";
  r.seconds = t.seconds();
  return r;
}

CriterionReport run_criterion(int id, const Options& opt) {
  switch (id) {
    case 1: return topology_counts(opt);
    case 2: return omega_structure(opt);
    case 3: return closure_equivalence(opt);
    case 4: return sheaf_criteria(opt);
    case 5: return degeneracy_filter(opt);
    case 6: return nuclei_and_fuzzy(opt);
    case 7: return double_negation_nucleus(opt);
    default: throw InputError("no criterion " + std::to_string(id));
  }
}

std::vector<int> suite_members(std::string_view suite) {
  if (suite == "counts") return {1, 2, 5};
  if (suite == "closures") return {3};
  if (suite == "criteria") return {4};
  if (suite == "fuzzy") return {6, 7};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7};
  throw InputError("unknown suite '" + std::string(suite) + "' (counts, closures, criteria, fuzzy, all)");
}

}  // namespace lawvere::suites
