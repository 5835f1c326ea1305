#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "lawvere/fuzzy.hpp"
#include "lawvere/lattice.hpp"
#include "lawvere/presheaf.hpp"

namespace lawvere::io {

using json = nlohmann::json;

/// Parses a file; malformed or missing files throw InputError.
json load_json(const std::filesystem::path& path);

// Presheaf document:
//   {"category": "graph",
//    "levels": {"V": ["a", "b"], "E": ["e"]},
//    "actions": {"s": {"e": "a"}, "t": {"e": "b"}}}
// Objects missing from "levels" are empty. Every generator with a nonempty
// domain needs a total action.
FinitePresheaf presheaf_from_json(const json& doc);
json presheaf_to_json(const FinitePresheaf& x);

// Subobject document: {"of": "graph.json", "levels": {"V": ["a"], "E": []}}.
// "of" is informational when the ambient is given separately.
Subpresheaf subobject_from_json(const json& doc, const FinitePresheaf& ambient);
json subobject_to_json(const FinitePresheaf& ambient, const Subpresheaf& s, const std::string& of);

// Heyting document: {"elements": ["0", "a", "b", "1"],
//                    "covers": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]]}
HeytingPtr heyting_from_json(const json& doc);
json heyting_to_json(const FiniteHeytingAlgebra& L);

/// An algebra reference: an inline heyting document, a built-in name
/// ("chain:N", "boolean:K"), or a path relative to `base`.
HeytingPtr resolve_algebra(const json& ref, const std::filesystem::path& base);

// Fuzzy set document: {"algebra": ref, "carrier": ["p", "q"],
//                      "membership": {"p": "1/2", "q": "1"}}
FuzzySet fuzzyset_from_json(const json& doc, const std::filesystem::path& base);
json fuzzyset_to_json(const FuzzySet& A, const json& algebra_ref);

// Nucleus document: {"algebra": ref, "map": {"0": "1/2", ...}}. The map is
// returned unchecked; callers decide whether it has to be a nucleus.
Nucleus nucleus_from_json(const json& doc, const std::filesystem::path& base);

}  // namespace lawvere::io
