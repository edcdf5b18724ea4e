#pragma once

#include "drgt/catalog.hpp"
#include "drgt/scalar.hpp"
#include "drgt/search.hpp"
#include "drgt/spectrum.hpp"
#include "drgt/tightness.hpp"

#include <json.hpp>

namespace drgt {

using Json = nlohmann::ordered_json;

/// Exact rationals serialize as "p/q" strings (plain "p" for integers);
/// approximate values as {"value": ..., "error": ...}.
Json scalar_json(const Scalar& s);

Json spectrum_json(const Spectrum& s);

Json report_json(const IntersectionArray& g, const Spectrum& s, const TightnessReport& rep);

Json search_hit_json(const SearchHit& hit);

Json catalog_entry_json(const CatalogEntry& e);
Json catalog_json();

Json validation_json(const std::vector<ValidationReport>& reports);

} // namespace drgt
