#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pqhopf/analysis.hpp"
#include "pqhopf/catalog.hpp"
#include "pqhopf/hopf.hpp"
#include "pqhopf/integrals.hpp"

namespace pqhopf {

using Json = nlohmann::json;

Json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const Json& j);
Json elem_to_json(const Field& f, Elem e);
Elem elem_from_json(const Field& f, const Json& j);

/// Field spec, dim, basis labels, sparse [a, b, c, coeff] triples for
/// mult and [i, j, k, coeff] for comult, dense unit/counit, dense antipode
/// (row-major). Elements are coefficient lists. Round-trips exactly.
Json hopf_to_json(const HopfData& h);
HopfData hopf_from_json(const Json& j);

Json presentation_to_json(const Presentation& pres);
Json integrals_to_json(const HopfData& h, const IntegralPair& pair);
Json report_to_json(const IndicatorReport& report);
Json theorem_to_json(const TheoremReport& report);
Json properties_to_json(const std::vector<PropertyCheck>& checks);

/// Header: n,value,residue,predicted,methods_agree,match
std::string render_csv(const IndicatorReport& report);
std::string render_table(const IndicatorReport& report);

}  // namespace pqhopf
