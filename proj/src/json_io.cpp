#include "pgrowth/json_io.hpp"

#include <sstream>

namespace pgrowth {

void to_json(json& j, const Angle& a) { j = a.str(); }

void from_json(const json& j, Angle& a) {
  if (!j.is_string()) throw std::invalid_argument("angle must be a \"p/q\" string");
  a = Angle::parse(j.get<std::string>());
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json star_json(const Star& s) { return {{"d", s.degree()}, {"points", s.points()}}; }

Star star_from_json(const json& j) {
  return Star(j.at("d").get<long>(), j.at("points").get<std::vector<Angle>>());
}

json star_set_json(const StarSet& s) {
  json arr = json::array();
  for (const Star& star : s.stars) arr.push_back(star_json(star));
  return arr;
}

StarSet star_set_from_json(const json& j, long degree) {
  StarSet out{degree, {}};
  for (const json& item : j) {
    Star s = star_from_json(item);
    if (s.degree() != degree) throw std::invalid_argument("star degree differs from the set degree");
    out.stars.push_back(std::move(s));
  }
  return out;
}

json relation_json(const NCRelation& r) { return {{"n", r.n()}, {"blocks", r.blocks()}}; }

NCRelation relation_from_json(const json& j) {
  return validate(j.at("n").get<int>(), j.at("blocks").get<std::vector<Block>>());
}

json ray_json(const RayTrace& t, bool with_points) {
  json j = {{"angle", t.angle},
            {"converged", t.converged},
            {"status", to_string(t.status)},
            {"residual", t.residual},
            {"levels", t.levels},
            {"max_step_residual", t.max_step_residual},
            {"polished", t.polished},
            {"landing", t.landing ? complex_json(*t.landing) : json(nullptr)}};
  if (with_points) {
    json pts = json::array();
    for (cplx z : t.points) pts.push_back(complex_json(z));
    j["points"] = std::move(pts);
  }
  return j;
}

json classification_json(const LandingClassification& c) {
  json reps = json::array();
  for (cplx z : c.representatives) reps.push_back(complex_json(z));
  return {{"d", c.d},
          {"c", complex_json(c.c)},
          {"nu", c.nu},
          {"class_count", c.classes.size()},
          {"classes", c.classes},
          {"representatives", reps},
          {"unresolved", c.unresolved},
          {"max_class_diameter", c.max_class_diameter},
          {"reliable", c.reliable}};
}

json itinerary_json(const ItineraryResult& r) {
  std::ostringstream re;
  std::ostringstream im;
  re << std::setprecision(34) << r.point.real();
  im << std::setprecision(34) << r.point.imag();
  return {{"word", r.word},
          {"point", complex_json(r.point_d())},
          {"point_hp", {re.str(), im.str()}},
          {"residual", r.residual},
          {"converged", r.converged},
          {"cycles", r.displacements.size()}};
}

json periodic_count_json(const PeriodicCount& p, const HypothesisReport& h) {
  json pts = json::array();
  for (const auto& r : p.points) pts.push_back(itinerary_json(r));
  return {{"k", p.k},
          {"count", p.count},
          {"all_converged", p.all_converged},
          {"inside_disk", p.inside_disk},
          {"hypothesis",
           {{"holds", h.holds},
            {"critical_value_margin", h.critical_value_margin},
            {"preimage_margin", h.preimage_margin}}},
          {"points", pts}};
}

json rate_json(const RateEstimate& r) {
  json samples = json::array();
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    samples.push_back({{"nu", r.samples[i].nu}, {"count", r.samples[i].count}, {"rate", r.per_sample[i]}});
  }
  return {{"d", r.d},
          {"samples", samples},
          {"estimate", r.estimate},
          {"target", r.target},
          {"margin", r.margin}};
}

}  // namespace pgrowth
