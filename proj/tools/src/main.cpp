#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lawvere/closure.hpp"
#include "lawvere/fuzzy.hpp"
#include "lawvere/omega.hpp"
#include "lawvere/tools/documents.hpp"
#include "lawvere/tools/suites.hpp"
#include "lawvere/topology.hpp"

namespace fs = std::filesystem;
using namespace lawvere;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

// A failed verification that is not an input problem.
struct VerificationFailure {
  std::string reason;
};

std::string names_of(const FinitePresheaf& A, int c, const std::vector<int>& xs) {
  if (xs.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + A.name(c, xs[i]);
  return out;
}

std::string indented(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (!line.empty()) out += "  " + line + "\n";
  return out;
}

int cmd_omega(const std::string& spec, const std::string& level, bool dot, int level_bound, int max_dim) {
  auto cat = FiniteIndexCategory::build(spec, max_dim);
  auto omega = OmegaObject::build(cat, level_bound);
  const auto& C = *cat;
  std::vector<int> which;
  if (level.empty()) {
    for (int c = 0; c < C.object_count(); ++c) which.push_back(c);
  } else {
    auto c = C.find_object(level);
    if (!c) throw InputError("unknown object '" + level + "' for " + C.spec());
    which.push_back(*c);
  }
  if (dot) {
    for (int c : which) std::cout << omega->to_dot(c);
    return kExitOk;
  }
  std::cout << "category: " << C.spec() << "\nlevels: ";
  for (int c = 0; c < C.object_count(); ++c) std::cout << (c ? ", " : "") << omega->size(c);
  std::cout << "\n";
  for (int c : which) {
    const auto& L = omega->level(c);
    std::cout << "Omega(" << C.object_name(c) << "): " << L.size() << " sieves, boundary "
              << omega->label(c, omega->boundary_index(c)) << "\n";
    for (auto [lo, hi] : L.covers()) std::cout << "  " << L.name(lo) << " < " << L.name(hi) << "\n";
  }
  return kExitOk;
}

int cmd_topologies(const std::string& spec, const std::string& method, std::uint64_t budget, int max_dim) {
  auto cat = FiniteIndexCategory::build(spec, max_dim);
  auto omega = OmegaObject::build(cat);
  EnumerationMethod m;
  if (method == "constrained")
    m = EnumerationMethod::Constrained;
  else if (method == "brute")
    m = EnumerationMethod::Brute;
  else
    throw InputError("unknown method '" + method + "' (brute, constrained)");
  auto js = enumerate_topologies(omega, m, budget);
  std::cout << cat->spec() << ": " << js.size() << " topologies (" << method << ")\n";
  for (const auto& j : js) {
    auto bits = bits_from_tag(*cat, *j.tag);
    std::string fills;
    for (int c = 0; c < cat->object_count(); ++c)
      if (bits[c]) fills += (fills.empty() ? "" : ",") + cat->object_name(c);
    std::cout << "j^" << *j.tag << "  fills: " << (fills.empty() ? "-" : fills) << "\n";
  }
  return kExitOk;
}

struct Loaded {
  FinitePresheaf presheaf;
  fs::path base;
};

Loaded load_presheaf(const std::string& path) {
  return {io::presheaf_from_json(io::load_json(path)), fs::path(path).parent_path()};
}

int cmd_closure(const std::string& w, const std::string& input, const std::string& sub_path) {
  auto [A, base] = load_presheaf(input);
  auto sub = io::subobject_from_json(io::load_json(sub_path), A);
  auto omega = OmegaObject::build(A.category_ptr());
  auto j = construct_jw(omega, w);
  auto res = closure_via_chi(j, A, sub);
  const auto& C = A.category();
  std::cout << "topology: j^" << w << " on " << C.spec() << "\n";
  std::cout << "subobject:\n" << indented(describe(A, sub));
  std::cout << "closure:\n" << indented(describe(A, res.closed));
  for (int c = 0; c < C.object_count(); ++c)
    std::cout << "added " << C.object_name(c) << ": " << names_of(A, c, res.added[c]) << "\n";
  std::cout << "dense: " << (res.closed.count() == static_cast<std::size_t>(A.total_size()) ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_classify_presheaf(const std::string& w, const std::string& input, bool oracle, int corpus_bound) {
  auto [B, base] = load_presheaf(input);
  auto omega = OmegaObject::build(B.category_ptr());
  construct_jw(omega, w);  // rejects tags that are not topologies
  auto c = classify(B, w);
  std::cout << "topology: j^" << w << " on " << B.category().spec() << "\n";
  std::cout << "separated=" << (c.separated ? "true" : "false") << "\n";
  std::cout << "complete=" << (c.complete ? "true" : "false") << "\n";
  std::cout << "sheaf=" << (c.sheaf ? "true" : "false") << "\n";
  for (const auto& n : c.notes) std::cout << "witness: " << n << "\n";
  if (!oracle) return kExitOk;
  auto j = construct_jw(omega, w);
  auto corpus = factorization_corpus(B.category_ptr(), corpus_bound);
  auto r = brute_factorization_check(B, corpus, dense_pairs(j, corpus));
  std::cout << "oracle: separated=" << (r.separated ? "true" : "false")
            << " complete=" << (r.complete ? "true" : "false") << " over " << r.dense_monos << " dense monos\n";
  if (r.separation_witness) std::cout << "oracle witness (two factorizations): " << *r.separation_witness << "\n";
  if (r.completeness_witness) std::cout << "oracle witness (no factorization): " << *r.completeness_witness << "\n";
  if (r.separated != c.separated || r.complete != c.complete)
    throw VerificationFailure{"classification disagrees with the factorization oracle"};
  return kExitOk;
}

int cmd_classify_fuzzy(const std::string& nucleus_path, bool trivial, const std::string& input, bool oracle,
                       int carrier) {
  auto B = io::fuzzyset_from_json(io::load_json(input), fs::path(input).parent_path());
  QClosureOperator op;
  if (trivial) {
    op = QClosureOperator::trivial(B.algebra);
  } else {
    auto n = io::nucleus_from_json(io::load_json(nucleus_path), fs::path(nucleus_path).parent_path());
    if (auto v = verify_nucleus(*n.algebra, n.map); !v) throw InputError("not a nucleus: " + v.describe());
    op = QClosureOperator::induced(n);
  }
  const auto corpus = fuzzy_corpus(B.algebra, carrier);
  auto c = classify_fuzzy(B, op, corpus);
  std::cout << "operator: " << describe(op) << "\n";
  std::cout << "separated=" << (c.separated ? "true" : "false") << "\n";
  std::cout << "sheaf=" << (c.sheaf ? "true" : "false") << "\n";
  std::cout << "reason: " << c.reason << "\n";
  if (!oracle) return kExitOk;
  auto r = fuzzy_factorization_check(B, op, corpus);
  std::cout << "oracle: separated=" << (r.separated ? "true" : "false") << " sheaf=" << (r.sheaf() ? "true" : "false")
            << " over " << r.dense_monos << " dense monos\n";
  if (r.separated != c.separated || r.sheaf() != c.sheaf)
    throw VerificationFailure{"classification disagrees with the factorization oracle"};
  return kExitOk;
}

int cmd_verify(const std::string& suite, int corpus_bound) {
  suites::Options opt;
  opt.corpus_bound = corpus_bound;
  bool all = true;
  for (int id : suites::suite_members(suite)) {
    auto r = suites::run_criterion(id, opt);
    all = all && r.pass();
    std::cout << (r.pass() ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.summary << " ("
              << r.seconds << "s, budget " << r.budget_seconds << "s)\n";
    for (const auto& ch : r.checks)
      std::cout << "  " << (ch.pass ? "ok  " : "FAIL") << " " << ch.name << ": " << ch.detail << "\n";
    std::cout.flush();
  }
  std::cout << (all ? "PASS" : "FAIL") << "\n";
  return all ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lawvere-Tierney topologies on finite presheaf categories and fuzzy sets"};
  app.require_subcommand(1);

  std::string spec, level, method = "constrained", w, input, sub, nucleus, suite = "all";
  bool dot = false, oracle = false, trivial = false;
  int level_bound = kDefaultOmegaLevelBound;
  int max_dim = kDefaultMaxDimension;
  int corpus_bound = kDefaultCorpusBound;
  int carrier = kFuzzyPullbackCarrier;
  std::uint64_t budget = kDefaultBruteNodeBudget;

  auto* omega = app.add_subcommand("omega", "Print the levels of Omega or export them as DOT");
  omega->add_option("category", spec, "set, graph, reflgraph, bicolor, semiN or ssetN")->required();
  omega->add_option("--level", level, "Object name of a single level");
  omega->add_flag("--dot", dot, "Emit DOT instead of text");
  omega->add_option("--level-bound", level_bound, "Maximum number of sieves per level");
  omega->add_option("--max-dim", max_dim, "Largest admissible truncation dimension");

  auto* tops = app.add_subcommand("topologies", "Enumerate all Lawvere-Tierney topologies");
  tops->add_option("category", spec, "set, graph, reflgraph, bicolor, semiN or ssetN")->required();
  tops->add_option("--method", method, "brute or constrained");
  tops->add_option("--budget", budget, "Node budget of the brute search");
  tops->add_option("--max-dim", max_dim, "Largest admissible truncation dimension");

  auto* clo = app.add_subcommand("closure", "Close a subobject under j^w");
  clo->add_option("--topology", w, "Bit string, or a bicolor label 00..13")->required();
  clo->add_option("--input", input, "Presheaf document")->required();
  clo->add_option("--sub", sub, "Subobject document")->required();

  auto* cls = app.add_subcommand("classify", "Separated, complete and sheaf flags");
  auto* topt = cls->add_option("--topology", w, "Bit string, or a bicolor label 00..13");
  auto* nopt = cls->add_option("--nucleus", nucleus, "Nucleus document (input is a fuzzy set)");
  auto* fopt = cls->add_flag("--trivial", trivial, "Trivial operator on fuzzy sets (input is a fuzzy set)");
  topt->excludes(nopt)->excludes(fopt);
  nopt->excludes(fopt);
  cls->add_option("--input", input, "Presheaf or fuzzy set document")->required();
  cls->add_flag("--oracle", oracle, "Also run the factorization oracle");
  cls->add_option("--corpus", corpus_bound, "Total carrier bound of the presheaf oracle corpus");
  cls->add_option("--carrier", carrier, "Carrier bound of the fuzzy oracle corpus");

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", suite, "counts, closures, criteria, fuzzy or all");
  ver->add_option("--corpus", corpus_bound, "Total carrier bound of the presheaf corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*omega) return cmd_omega(spec, level, dot, level_bound, max_dim);
    if (*tops) return cmd_topologies(spec, method, budget, max_dim);
    if (*clo) return cmd_closure(w, input, sub);
    if (*cls) {
      if (!w.empty()) return cmd_classify_presheaf(w, input, oracle, corpus_bound);
      if (!nucleus.empty() || trivial) return cmd_classify_fuzzy(nucleus, trivial, input, oracle, carrier);
      throw InputError("classify needs --topology, --nucleus or --trivial");
    }
    if (*ver) return cmd_verify(suite, corpus_bound);
  } catch (const VerificationFailure& e) {
    std::cerr << "error: verification: " << e.reason << "\n";
    return kExitVerification;
  } catch (const InputError& e) {
    std::cerr << "error: input: " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitOk;
}
