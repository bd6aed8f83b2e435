// JSON and CSV emission for geometries, scheme reports, and search
// results.  Everything here is deterministic: key order is fixed,
// arrays are sorted by construction, and rationals print as canonical
// fraction strings, so identical inputs serialize to identical bytes.
#pragma once

#include "json.hpp"

#include "benz/scheme.hpp"
#include "benz/search.hpp"

namespace benz {

using Json = nlohmann::ordered_json;

// "a" for integers, "a/b" otherwise, with the sign on the numerator.
std::string rational_str(const Rational& r);

// FNV-1a over order, kind, and the circle lists, as fixed-width hex.
std::string geometry_hash(const CircleGeometry& g);

Json geometry_json(const CircleGeometry& g);

Json scheme_json(const RelationSet& r, const SchemeCheck& s);

Json eigen_json(const EigenData& e);

Json witness_json(const FamilyWitness& w, bool with_timings = true);

Json enumeration_json(const EnumerationResult& res, bool with_timings = true);

// Header then rows, comma separated, LF endings, no quoting (emitted
// fields never contain commas).
std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

}  // namespace benz
