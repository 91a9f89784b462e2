#pragma once

// JSON forms of the library types. Angles are "p/q" strings, complex numbers
// [re, im] pairs.

#include "pgrowth/circle.hpp"
#include "pgrowth/itinerary.hpp"
#include "pgrowth/noncrossing.hpp"
#include "pgrowth/rate.hpp"
#include "pgrowth/rays.hpp"
#include "pgrowth/stars.hpp"

#include <json.hpp>

namespace pgrowth {

using nlohmann::json;

void to_json(json& j, const Angle& a);
void from_json(const json& j, Angle& a);

json complex_json(cplx z);

/// {"d": int, "points": ["p/q", ...]}
json star_json(const Star& s);
Star star_from_json(const json& j);

/// Array of star objects; all must share one degree.
json star_set_json(const StarSet& s);
StarSet star_set_from_json(const json& j, long degree);

/// {"n": int, "blocks": [[int, ...], ...]}
json relation_json(const NCRelation& r);
NCRelation relation_from_json(const json& j);

json ray_json(const RayTrace& t, bool with_points = true);
json classification_json(const LandingClassification& c);
json itinerary_json(const ItineraryResult& r);
json periodic_count_json(const PeriodicCount& p, const HypothesisReport& h);
json rate_json(const RateEstimate& r);

}  // namespace pgrowth
