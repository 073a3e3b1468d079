#pragma once

#include <string>

#include "syncert/certify.hpp"
#include "syncert/simulate.hpp"

namespace syncert {

// Stable, human-readable renderings with a fixed field order; identical
// inputs render to identical bytes.
std::string render_certificate(const Certificate& cert, const std::string& heading);
std::string render_bound_report(const BoundForm& bound, const BoundReport& report,
                                const std::string& heading);
std::string render_weight_search(const WeightSearchResult& result);

std::string format_double(double v);          // %.17g, canonical
std::string format_vec(const Vec& v);         // [a, b, ...]
std::string norm_label(const NormSpec& norm); // "1" | "2" | "inf" plus weights

}  // namespace syncert
