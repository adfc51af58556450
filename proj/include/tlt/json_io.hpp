#pragma once

#include <json.hpp>

#include "tlt/extremal_graph.hpp"
#include "tlt/family.hpp"
#include "tlt/harness.hpp"
#include "tlt/separability.hpp"

namespace tlt
{

using json = nlohmann::ordered_json;

json to_json( point const& p );
json to_json( std::vector<point> const& pts );
json to_json( threshold_cert const& cert );
json to_json( summability_cert const& cert );
json to_json( extremal_graph const& g );
json to_json( verification_report const& report, bool timings = false );
json to_json( std::vector<verification_report> const& reports, bool timings = false );

/* bundle of a verified family member; `verdict` supplies the computed essential set */
json to_json( family_instance const& inst, family_verdict const& verdict );

/* inverse of to_json for the two certificates; throws parse_error */
threshold_cert threshold_cert_from_json( json const& j );
summability_cert summability_cert_from_json( json const& j );

} // namespace tlt
