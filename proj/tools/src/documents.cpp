#include "lawvere/tools/documents.hpp"

#include <fstream>
#include <set>

#include "lawvere/check.hpp"

namespace lawvere::io {

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object()) throw InputError("document must be a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("document lacks \"") + key + "\"");
  return *it;
}

std::string as_string(const json& v, const std::string& what) {
  if (!v.is_string()) throw InputError(what + " must be a string");
  return v.get<std::string>();
}

int element_index(const FiniteHeytingAlgebra& L, const json& v, const std::string& what) {
  auto name = as_string(v, what);
  auto a = L.find(name);
  if (!a) throw InputError(what + " names unknown algebra element '" + name + "'");
  return *a;
}

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

FinitePresheaf presheaf_from_json(const json& doc) {
  auto cat = FiniteIndexCategory::build(as_string(field(doc, "category"), "category"));
  const auto& C = *cat;
  const int n = C.object_count();

  std::vector<std::vector<std::string>> names(n);
  const auto& levels = field(doc, "levels");
  if (!levels.is_object()) throw InputError("\"levels\" must map object names to element lists");
  for (auto it = levels.begin(); it != levels.end(); ++it) {
    auto c = C.find_object(it.key());
    if (!c) throw InputError("unknown object '" + it.key() + "' for " + C.spec());
    if (!it->is_array()) throw InputError("level " + it.key() + " must be a list of element names");
    std::set<std::string> seen;
    for (const auto& e : *it) {
      auto name = as_string(e, "element name");
      if (!seen.insert(name).second) throw InputError("duplicate element '" + name + "' in level " + it.key());
      names[*c].push_back(name);
    }
  }
  std::vector<int> sizes(n);
  for (int c = 0; c < n; ++c) sizes[c] = static_cast<int>(names[c].size());

  auto lookup = [&](int c, const std::string& name) {
    for (int x = 0; x < sizes[c]; ++x)
      if (names[c][x] == name) return x;
    throw InputError("unknown element '" + name + "' in level " + C.object_name(c));
  };

  const auto gens = C.generators();
  std::vector<std::vector<int>> actions(gens.size());
  std::vector<bool> given(gens.size());
  const json empty = json::object();
  const auto& acts = doc.contains("actions") ? doc.at("actions") : empty;
  if (!acts.is_object()) throw InputError("\"actions\" must map generator names to tables");
  for (auto it = acts.begin(); it != acts.end(); ++it) {
    auto m = C.find_generator(it.key());
    if (!m) throw InputError("unknown generator '" + it.key() + "' for " + C.spec());
    std::size_t g = 0;
    while (gens[g].morphism != *m) ++g;
    if (given[g]) throw InputError("generator '" + it.key() + "' given twice");
    given[g] = true;
    const auto& mor = C.morphism(*m);
    if (!it->is_object()) throw InputError("action of " + it.key() + " must map elements to elements");
    actions[g].assign(sizes[mor.target], -1);
    for (auto e = it->begin(); e != it->end(); ++e) {
      const int x = lookup(mor.target, e.key());
      actions[g][x] = lookup(mor.source, as_string(*e, "image of " + e.key()));
    }
    for (int x = 0; x < sizes[mor.target]; ++x)
      if (actions[g][x] < 0)
        throw InputError("action of " + it.key() + " misses element " + names[mor.target][x]);
  }
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& mor = C.morphism(gens[g].morphism);
    if (!given[g] && sizes[mor.target] > 0) throw InputError("missing action for generator " + mor.name);
    if (!given[g]) actions[g].clear();
  }
  return FinitePresheaf(cat, sizes, actions, names);
}

json presheaf_to_json(const FinitePresheaf& x) {
  const auto& C = x.category();
  json doc;
  doc["category"] = C.spec();
  json levels = json::object();
  for (int c = 0; c < C.object_count(); ++c) {
    json l = json::array();
    for (int e = 0; e < x.size(c); ++e) l.push_back(x.name(c, e));
    levels[C.object_name(c)] = l;
  }
  doc["levels"] = levels;
  json acts = json::object();
  const auto gens = C.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& m = C.morphism(gens[g].morphism);
    json t = json::object();
    for (int e = 0; e < x.size(m.target); ++e) t[x.name(m.target, e)] = x.name(m.source, x.act(gens[g].morphism, e));
    acts[m.name] = t;
  }
  doc["actions"] = acts;
  return doc;
}

Subpresheaf subobject_from_json(const json& doc, const FinitePresheaf& ambient) {
  const auto& C = ambient.category();
  std::vector<std::vector<int>> levels(C.object_count());
  const auto& ls = field(doc, "levels");
  if (!ls.is_object()) throw InputError("\"levels\" must map object names to element lists");
  for (auto it = ls.begin(); it != ls.end(); ++it) {
    auto c = C.find_object(it.key());
    if (!c) throw InputError("unknown object '" + it.key() + "' for " + C.spec());
    if (!it->is_array()) throw InputError("level " + it.key() + " must be a list of element names");
    for (const auto& e : *it) {
      auto name = as_string(e, "element name");
      auto x = ambient.find_element(*c, name);
      if (!x) throw InputError("subobject names '" + name + "', which is not in level " + it.key());
      levels[*c].push_back(*x);
    }
  }
  return make_subpresheaf(ambient, levels);
}

json subobject_to_json(const FinitePresheaf& ambient, const Subpresheaf& s, const std::string& of) {
  const auto& C = ambient.category();
  json doc;
  doc["of"] = of;
  json levels = json::object();
  for (int c = 0; c < C.object_count(); ++c) {
    json l = json::array();
    for (int x : level_elements(ambient, s, c)) l.push_back(ambient.name(c, x));
    levels[C.object_name(c)] = l;
  }
  doc["levels"] = levels;
  return doc;
}

HeytingPtr heyting_from_json(const json& doc) {
  std::vector<std::string> names;
  const auto& els = field(doc, "elements");
  if (!els.is_array() || els.empty()) throw InputError("\"elements\" must be a nonempty list");
  for (const auto& e : els) names.push_back(as_string(e, "element name"));
  auto index = [&](const json& v) {
    auto name = as_string(v, "cover endpoint");
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    throw InputError("cover names unknown element '" + name + "'");
  };
  std::vector<std::pair<int, int>> covers;
  const json none = json::array();
  const auto& cs = doc.contains("covers") ? doc.at("covers") : none;
  if (!cs.is_array()) throw InputError("\"covers\" must be a list of [lower, upper] pairs");
  for (const auto& c : cs) {
    if (!c.is_array() || c.size() != 2) throw InputError("each cover is a [lower, upper] pair");
    covers.emplace_back(index(c[0]), index(c[1]));
  }
  return std::make_shared<const FiniteHeytingAlgebra>(FiniteHeytingAlgebra::from_covers(names, covers));
}

json heyting_to_json(const FiniteHeytingAlgebra& L) {
  json doc;
  doc["elements"] = L.names();
  json cs = json::array();
  for (auto [lo, hi] : L.covers()) cs.push_back({L.name(lo), L.name(hi)});
  doc["covers"] = cs;
  return doc;
}

HeytingPtr resolve_algebra(const json& ref, const std::filesystem::path& base) {
  if (ref.is_object()) return heyting_from_json(ref);
  auto s = as_string(ref, "algebra reference");
  auto builtin = [&](const std::string& prefix) -> std::optional<int> {
    if (s.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      std::size_t used = 0;
      const int n = std::stoi(s.substr(prefix.size()), &used);
      if (used + prefix.size() == s.size()) return n;
    } catch (const std::exception&) {
    }
    throw InputError("malformed built-in algebra '" + s + "'");
  };
  if (auto n = builtin("chain:")) {
    if (*n < 1 || *n > 64) throw InputError("chain length must lie in 1..64");
    return std::make_shared<const FiniteHeytingAlgebra>(FiniteHeytingAlgebra::chain(*n));
  }
  if (auto k = builtin("boolean:")) {
    if (*k < 0 || *k > 4) throw InputError("boolean algebras take 0..4 atoms");
    return std::make_shared<const FiniteHeytingAlgebra>(FiniteHeytingAlgebra::boolean(*k));
  }
  return heyting_from_json(load_json(base / s));
}

FuzzySet fuzzyset_from_json(const json& doc, const std::filesystem::path& base) {
  FuzzySet A{resolve_algebra(field(doc, "algebra"), base), {}, {}};
  const auto& carrier = field(doc, "carrier");
  if (!carrier.is_array()) throw InputError("\"carrier\" must be a list of names");
  std::set<std::string> seen;
  for (const auto& e : carrier) {
    auto name = as_string(e, "carrier element");
    if (!seen.insert(name).second) throw InputError("duplicate carrier element '" + name + "'");
    A.carrier.push_back(name);
  }
  const auto& m = field(doc, "membership");
  if (!m.is_object()) throw InputError("\"membership\" must map carrier elements to algebra elements");
  A.membership.assign(A.carrier.size(), -1);
  for (auto it = m.begin(); it != m.end(); ++it) {
    std::size_t a = 0;
    while (a < A.carrier.size() && A.carrier[a] != it.key()) ++a;
    if (a == A.carrier.size()) throw InputError("membership given for unknown element '" + it.key() + "'");
    A.membership[a] = element_index(*A.algebra, *it, "membership of " + it.key());
  }
  for (std::size_t a = 0; a < A.carrier.size(); ++a)
    if (A.membership[a] < 0) throw InputError("no membership for " + A.carrier[a]);
  A.validate();
  return A;
}

json fuzzyset_to_json(const FuzzySet& A, const json& algebra_ref) {
  json doc;
  doc["algebra"] = algebra_ref;
  doc["carrier"] = A.carrier;
  json m = json::object();
  for (int a = 0; a < A.size(); ++a) m[A.carrier[a]] = A.algebra->name(A.membership[a]);
  doc["membership"] = m;
  return doc;
}

Nucleus nucleus_from_json(const json& doc, const std::filesystem::path& base) {
  Nucleus n{resolve_algebra(field(doc, "algebra"), base), {}};
  const auto& L = *n.algebra;
  const auto& m = field(doc, "map");
  if (!m.is_object()) throw InputError("\"map\" must send every algebra element to one");
  n.map.assign(L.size(), -1);
  for (auto it = m.begin(); it != m.end(); ++it) {
    auto a = L.find(it.key());
    if (!a) throw InputError("map names unknown algebra element '" + it.key() + "'");
    n.map[*a] = element_index(L, *it, "image of " + it.key());
  }
  for (int a = 0; a < L.size(); ++a)
    if (n.map[a] < 0) throw InputError("map misses element " + L.name(a));
  return n;
}

}  // namespace lawvere::io
