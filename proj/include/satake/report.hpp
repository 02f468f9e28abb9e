#pragma once

// JSON serialization of library results.  Every document carries "schema"
// and "version"; rationals are "p/q" strings and vectors are arrays of them.

#include <json.hpp>

#include "satake/analysis.hpp"
#include "satake/orbits.hpp"
#include "satake/repweights.hpp"
#include "satake/rootdata.hpp"
#include "satake/unitarity.hpp"

namespace satake::report {

using nlohmann::json;

inline constexpr int kVersion = 1;

json document(const std::string& schema);

json to_json(const Rational& r);
json to_json(const RationalVector& v);
Rational rational_from_json(const json& j);
RationalVector vector_from_json(const json& j);

json to_json(const ChamberPoint& p);
json to_json(const WeightPattern& p);
json to_json(const PropertyAVerdict& v);
json to_json(const NilpotentOrbit& o);

json root_datum_report(const RootDatum& d);
json orbits_report(const SimpleType& dual);
json filtration_report(const SimpleType& dual);
json half_integral_report(const SimpleType& t, const HalfIntegralResult& r);
json extraneous_report(const SimpleType& dual, const std::vector<ExtraneousCatalogEntry>& entries);
json azs_report(const std::vector<AzsRow>& rows);
json quasi_split_report(const SimpleType& source, int tau_order, const QuasiSplitResult& r);

// "3*a1 + 2*a2"
std::string format_coroot_combination(const std::vector<int>& c);

}  // namespace satake::report
