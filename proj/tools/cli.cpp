#include "cli.hpp"

#include "pgrowth/json_io.hpp"
#include "pgrowth/svg.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace pgrowth::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + cfg.output + "'");
  f << text;
  if (!f) throw UsageError("failed writing output file '" + cfg.output + "'");
}

std::string resolve_format(const RunConfig& cfg, const std::string& fallback,
                           std::initializer_list<const char*> allowed) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw UsageError("format '" + f + "' is not available for verb '" + cfg.verb + "'");
}

void check_tolerances(const RunConfig& cfg) {
  if (!(cfg.landing_tol > 0) || !(cfg.grouping_tol > 0) || !(cfg.itinerary_tol > 0)) {
    throw UsageError("tolerances must be strictly positive");
  }
}

UnicriticalMap make_map(const RunConfig& cfg) {
  if (cfg.d < 2) throw UsageError("the numerical verbs need d >= 2");
  return UnicriticalMap(static_cast<int>(cfg.d), cfg.c);
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  }
  return out;
}

// Top-level comma split of "a,{b,c},d".
std::vector<std::string> split_items(const std::string& body) {
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  for (char ch : body) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (depth < 0) throw UsageError("unbalanced braces in star set");
    if (ch == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw UsageError("unbalanced braces in star set");
  if (!cur.empty()) items.push_back(cur);
  return items;
}

// The d = 4 stars of the worked example, addressable by name.
const std::map<std::string, std::vector<std::string>>& named_stars() {
  static const std::map<std::string, std::vector<std::string>> names = {
      {"E1", {"0", "1/4"}}, {"E2", {"1/4", "1/2"}}, {"E3", {"1/2", "3/4"}},
      {"E4", {"0", "1/2"}}, {"E5", {"3/4", "0"}}};
  return names;
}

StarSet parse_star_set(const std::string& literal, long d) {
  const std::string s = strip_spaces(literal);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw UsageError("star set must look like {{0,1/4},{1/4,1/2}} or {E1,E2}");
  }
  StarSet set{d, {}};
  for (const std::string& item : split_items(s.substr(1, s.size() - 2))) {
    std::vector<Angle> pts;
    if (!item.empty() && item.front() == '{') {
      if (item.back() != '}') throw UsageError("malformed star '" + item + "'");
      for (const std::string& a : split_items(item.substr(1, item.size() - 2))) pts.push_back(Angle::parse(a));
    } else {
      auto it = named_stars().find(item);
      if (it == named_stars().end()) throw UsageError("unknown star name '" + item + "'");
      if (d != 4) throw UsageError("named stars E1..E5 are degree-4 stars");
      for (const std::string& a : it->second) pts.push_back(Angle::parse(a));
    }
    set.stars.emplace_back(d, std::move(pts));
  }
  return set;
}

json star_report(const StarSet& set, unsigned grid) {
  json j;
  j["d"] = set.degree;
  j["stars"] = star_set_json(set);
  const bool dis = pairwise_disjoint(set);
  j["pairwise_disjoint"] = dis;
  j["sum_multiplicities"] = sum_multiplicities(set);
  j["maximal"] = is_maximal(set);
  if (dis) {
    const bool cyc = has_cycle(set);
    j["has_cycle"] = cyc;
    if (!cyc) {
      auto witness = find_extension(set, grid);
      j["bruteforce_grid"] = "k/" + std::to_string(set.degree * static_cast<long>(grid));
      j["bruteforce_maximal"] = !witness;
      j["extension_witness"] = witness ? star_json(*witness) : json(nullptr);
    }
  } else {
    j["has_cycle"] = nullptr;
  }
  return j;
}

int verb_stars(const RunConfig& cfg, std::ostream& out) {
  resolve_format(cfg, "json", {"json"});
  if (cfg.grid == 0) throw UsageError("--grid must be positive");
  StarSet set;
  if (!cfg.check.empty()) {
    set = parse_star_set(cfg.check, cfg.d);
  } else if (!cfg.stars_json.empty()) {
    set = star_set_from_json(json::parse(cfg.stars_json), cfg.d);
  } else {
    throw UsageError("stars needs --check or --json");
  }
  emit(cfg, out, dump(star_report(set, cfg.grid)));
  return kOk;
}

int verb_ncp(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 1) throw UsageError("--n must be positive");
  if (cfg.exhaustive) {
    const std::string fmt = resolve_format(cfg, "csv", {"csv", "json"});
    bool ok = true;
    std::string csv = "n,valid_relations,min_classes,bound,status\n";
    json rows = json::array();
    for (int n = 1; n <= cfg.n; ++n) {
      std::size_t count = 0;
      std::size_t least = SIZE_MAX;
      enumerate_valid(n, [&](const NCRelation& r) {
        ++count;
        least = std::min(least, class_count(r));
      });
      const std::size_t bound = class_lower_bound(n);
      const bool pass = least == bound;
      ok = ok && pass;
      csv += std::to_string(n) + "," + std::to_string(count) + "," + std::to_string(least) + "," +
             std::to_string(bound) + "," + (pass ? "PASS" : "FAIL") + "\n";
      rows.push_back({{"n", n}, {"valid_relations", count}, {"min_classes", least}, {"bound", bound}, {"pass", pass}});
    }
    emit(cfg, out, fmt == "csv" ? csv : dump(rows));
    return ok ? kOk : kValidationFailure;
  }
  resolve_format(cfg, "json", {"json"});
  if (!cfg.blocks.empty()) {
    auto blocks = json::parse(cfg.blocks).get<std::vector<Block>>();
    json j = {{"n", cfg.n}, {"blocks", blocks}, {"bound", class_lower_bound(cfg.n)}};
    try {
      if (auto v = find_violation(cfg.n, blocks)) {
        j["valid"] = false;
        j["violation"] = {{"kind", v->kind == NCViolation::Kind::adjacency ? "adjacency" : "crossing"},
                          {"witness", v->witness}};
        emit(cfg, out, dump(j));
        return kValidationFailure;
      }
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    j["valid"] = true;
    j["class_count"] = blocks.size();
    emit(cfg, out, dump(j));
    return kOk;
  }
  const NCRelation r = extremal_example(cfg.n);
  json j = relation_json(r);
  j["class_count"] = class_count(r);
  j["bound"] = class_lower_bound(cfg.n);
  emit(cfg, out, dump(j));
  return kOk;
}

RayConfig ray_config(const RunConfig& cfg) {
  RayConfig rc;
  rc.depth = cfg.depth;
  rc.landing_tol = cfg.landing_tol;
  return rc;
}

ClassifyConfig classify_config(const RunConfig& cfg) {
  ClassifyConfig cc;
  cc.ray = ray_config(cfg);
  cc.grouping_tol = cfg.grouping_tol;
  return cc;
}

int verb_rays(const RunConfig& cfg, std::ostream& out) {
  const std::string fmt = resolve_format(cfg, "json", {"json", "svg"});
  const UnicriticalMap m = make_map(cfg);
  if (cfg.depth == 0) throw UsageError("--depth must be positive");
  const RayTrace t = trace_ray(m, Angle::parse(cfg.angle), cfg.depth, ray_config(cfg));
  emit(cfg, out, fmt == "svg" ? render_svg(m, {t}) : dump(ray_json(t)));
  return t.converged ? kOk : kNonConvergence;
}

json classification_report(const LandingClassification& cl) {
  json j = classification_json(cl);
  j["noncrossing"] = classes_noncrossing(cl.classes);
  j["class_images_consistent"] = class_images_consistent(cl.classes, cl.d);
  return j;
}

int verb_classes(const RunConfig& cfg, std::ostream& out) {
  const std::string fmt = resolve_format(cfg, "json", {"json", "csv", "svg"});
  const UnicriticalMap m = make_map(cfg);
  if (cfg.nu == 0 || cfg.depth == 0) throw UsageError("--nu and --depth must be positive");
  const LandingClassification cl = classify_landing(m, cfg.nu, classify_config(cfg));
  if (fmt == "json") {
    emit(cfg, out, dump(classification_report(cl)));
  } else if (fmt == "csv") {
    std::map<Angle, std::size_t> owner;
    for (std::size_t i = 0; i < cl.classes.size(); ++i) {
      for (const Angle& a : cl.classes[i]) owner[a] = i;
    }
    std::string csv = "angle,class,landing_re,landing_im,status\n";
    for (const RayTrace& t : cl.traces) {
      auto it = owner.find(t.angle);
      csv += t.angle.str() + "," + (it == owner.end() ? std::string() : std::to_string(it->second)) + "," +
             (t.landing ? num(t.landing->real()) : "") + "," + (t.landing ? num(t.landing->imag()) : "") + "," +
             to_string(t.status) + "\n";
    }
    emit(cfg, out, csv);
  } else {
    emit(cfg, out, render_svg(m, cl.traces));
  }
  return cl.reliable ? kOk : kNonConvergence;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> word;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      word.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("malformed itinerary word '" + text + "'");
    }
  }
  return word;
}

json hypothesis_json(const HypothesisReport& h) {
  return {{"holds", h.holds},
          {"critical_value_margin", h.critical_value_margin},
          {"preimage_margin", h.preimage_margin}};
}

int verb_itinerary(const RunConfig& cfg, std::ostream& out) {
  resolve_format(cfg, "json", {"json"});
  const UnicriticalMap m = make_map(cfg);
  if (!(cfg.radius > 0)) throw UsageError("--radius must be positive");
  const HypothesisReport h = verify_U_hypothesis(m, cfg.radius);
  if (!h.holds) {
    emit(cfg, out, dump({{"hypothesis", hypothesis_json(h)}}));
    return kValidationFailure;
  }
  ItineraryConfig ic;
  ic.radius = cfg.radius;
  ic.tol = cfg.itinerary_tol;
  if (!cfg.word.empty()) {
    const std::vector<int> word = parse_word(cfg.word);
    ItineraryResult r;
    try {
      r = itinerary_point(m, word, ic);
    } catch (const HypothesisError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    json j = itinerary_json(r);
    j["hypothesis"] = hypothesis_json(h);
    emit(cfg, out, dump(j));
    return r.converged ? kOk : kNonConvergence;
  }
  if (cfg.k == 0) throw UsageError("--k must be positive");
  const PeriodicCount pc = count_periodic(m, cfg.k, ic);
  emit(cfg, out, dump(periodic_count_json(pc, h)));
  return pc.all_converged ? kOk : kNonConvergence;
}

std::vector<RateSample> parse_samples(const std::string& text) {
  std::vector<RateSample> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw UsageError("samples must look like nu:count,nu:count");
    try {
      out.push_back({static_cast<unsigned>(std::stoul(tok.substr(0, colon))), std::stod(tok.substr(colon + 1))});
    } catch (const std::exception&) {
      throw UsageError("malformed sample '" + tok + "'");
    }
  }
  return out;
}

int verb_rate(const RunConfig& cfg, std::ostream& out) {
  const std::string fmt = resolve_format(cfg, "csv", {"csv", "json"});
  std::vector<RateSample> samples;
  int status = kOk;
  if (cfg.source == "samples") {
    samples = parse_samples(cfg.samples);
  } else if (cfg.source == "classes") {
    const UnicriticalMap m = make_map(cfg);
    if (cfg.nu_min == 0 || cfg.nu_min > cfg.nu_max) throw UsageError("need 1 <= --nu-min <= --nu-max");
    for (unsigned nu = cfg.nu_min; nu <= cfg.nu_max; ++nu) {
      const LandingClassification cl = classify_landing(m, nu, classify_config(cfg));
      if (!cl.reliable) status = kNonConvergence;
      samples.push_back({nu, static_cast<double>(cl.classes.size())});
    }
  } else if (cfg.source == "itinerary") {
    const UnicriticalMap m = make_map(cfg);
    if (cfg.nu_min == 0 || cfg.nu_min > cfg.nu_max) throw UsageError("need 1 <= --nu-min <= --nu-max");
    if (!verify_U_hypothesis(m, cfg.radius).holds) return kValidationFailure;
    ItineraryConfig ic;
    ic.radius = cfg.radius;
    ic.tol = cfg.itinerary_tol;
    for (unsigned k = cfg.nu_min; k <= cfg.nu_max; ++k) {
      const PeriodicCount pc = count_periodic(m, k, ic);
      if (!pc.all_converged) status = kNonConvergence;
      samples.push_back({k, static_cast<double>(pc.count)});
    }
  } else {
    throw UsageError("unknown rate source '" + cfg.source + "'");
  }
  RateEstimate r;
  try {
    r = rate_estimate(cfg.d, samples);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (fmt == "json") {
    emit(cfg, out, dump(rate_json(r)));
  } else {
    std::string csv = "nu,count,rate,target,margin\n";
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
      csv += std::to_string(r.samples[i].nu) + "," + num(r.samples[i].count) + "," + num(r.per_sample[i]) + "," +
             num(r.target) + "," + num(r.per_sample[i] - r.target) + "\n";
    }
    emit(cfg, out, csv);
  }
  return status;
}

int repro_figure1(const RunConfig& cfg, std::ostream& out) {
  const UnicriticalMap m(2, {-0.110, 0.6557});
  ClassifyConfig cc;
  cc.ray.depth = cfg.depth;
  cc.grouping_tol = 1e-4;
  const LandingClassification cl = classify_landing(m, 3, cc);
  const std::vector<Angle> orbit = {Angle(1, 7), Angle(2, 7), Angle(4, 7)};
  json found = nullptr;
  bool grouped = false;
  for (const auto& cls : cl.classes) {
    if (std::find(cls.begin(), cls.end(), orbit.front()) == cls.end()) continue;
    found = cls;
    grouped = std::all_of(orbit.begin(), orbit.end(),
                          [&](const Angle& a) { return std::find(cls.begin(), cls.end(), a) != cls.end(); });
  }
  json j = classification_report(cl);
  j["figure"] = 1;
  j["orbit_class"] = found;
  j["orbit_grouped"] = grouped;
  emit(cfg, out, dump(j));
  if (!cl.reliable) return kNonConvergence;
  return grouped && classes_noncrossing(cl.classes) ? kOk : kValidationFailure;
}

int repro_chebyshev(const RunConfig& cfg, std::ostream& out) {
  const UnicriticalMap m(2, {-2.0, 0.0});
  ClassifyConfig cc;
  cc.ray.depth = cfg.depth;
  json rows = json::array();
  bool ok = true;
  for (unsigned nu : {2u, 3u, 5u, 7u}) {
    const LandingClassification cl = classify_landing(m, nu, cc);
    double worst = 0.0;
    for (const RayTrace& t : cl.traces) {
      if (t.landing) worst = std::max(worst, std::abs(*t.landing - chebyshev_oracle(t.angle)));
    }
    const std::size_t expected = std::size_t{1} << (nu - 1);
    const bool pass = cl.unresolved.empty() && worst < 1e-6 && cl.classes.size() == expected;
    ok = ok && pass;
    rows.push_back({{"nu", nu},
                    {"classes", cl.classes.size()},
                    {"expected_classes", expected},
                    {"max_oracle_error", worst},
                    {"pass", pass}});
  }
  emit(cfg, out, dump({{"example", "chebyshev"}, {"c", complex_json(m.c())}, {"rows", rows}}));
  return ok ? kOk : kValidationFailure;
}

int repro_stars4(const RunConfig& cfg, std::ostream& out) {
  json j;
  j["example"] = "stars4";
  j["E1,E2,E3"] = star_report(parse_star_set("{E1,E2,E3}", 4), cfg.grid);
  j["E1,E2,E3,E5"] = star_report(parse_star_set("{E1,E2,E3,E5}", 4), cfg.grid);
  j["E3,E4"] = star_report(parse_star_set("{E3,E4}", 4), cfg.grid);
  const bool ok = j["E1,E2,E3"]["maximal"] == true && j["E1,E2,E3,E5"]["has_cycle"] == true &&
                  j["E3,E4"]["has_cycle"] == false && j["E3,E4"]["maximal"] == false;
  emit(cfg, out, dump(j));
  return ok ? kOk : kValidationFailure;
}

int repro_cantor(const RunConfig& cfg, std::ostream& out) {
  const UnicriticalMap m(2, {-6.0, 0.0});
  const HypothesisReport h = verify_U_hypothesis(m, 4.0);
  ItineraryConfig ic;
  ic.radius = 4.0;
  ic.tol = cfg.itinerary_tol;
  json rows = json::array();
  bool ok = h.holds;
  int status = kOk;
  const unsigned kmax = std::max(1u, cfg.k_max);
  for (unsigned k = 1; ok && k <= kmax; ++k) {
    const PeriodicCount pc = count_periodic(m, k, ic);
    double worst = 0.0;
    for (const auto& r : pc.points) worst = std::max(worst, r.residual);
    const bool pass = pc.count == (std::size_t{1} << k) && pc.all_converged && pc.inside_disk;
    if (!pc.all_converged) status = kNonConvergence;
    ok = ok && pass;
    rows.push_back({{"k", k}, {"count", pc.count}, {"expected", std::size_t{1} << k}, {"max_residual", worst}, {"pass", pass}});
  }
  emit(cfg, out, dump({{"example", "cantor"}, {"c", complex_json(m.c())}, {"radius", 4.0},
                       {"hypothesis", hypothesis_json(h)}, {"rows", rows}}));
  if (status != kOk) return status;
  return ok ? kOk : kValidationFailure;
}

int verb_repro(const RunConfig& cfg, std::ostream& out) {
  resolve_format(cfg, "json", {"json"});
  if (cfg.figure == 1) return repro_figure1(cfg, out);
  if (cfg.figure != 0) throw UsageError("only --figure 1 is reproducible");
  if (cfg.example == "chebyshev") return repro_chebyshev(cfg, out);
  if (cfg.example == "stars4") return repro_stars4(cfg, out);
  if (cfg.example == "cantor") return repro_cantor(cfg, out);
  throw UsageError("repro needs --figure 1 or --example chebyshev|stars4|cantor");
}

}  // namespace

cplx parse_complex(const std::string& text) {
  const std::string s = strip_spaces(text);
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    const std::string a = s.substr(0, comma);
    const std::string b = s.substr(comma + 1);
    const double re = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    const double im = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed complex number '" + text + "' (expected re,im)");
  }
}

namespace {

void build_app(CLI::App& app, RunConfig& cfg, std::string& c_text) {
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", cfg.output, "Output path (default stdout)");
    sub->add_option("--format", cfg.format, "json, csv or svg");
  };
  auto numerical = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "Degree");
    sub->add_option("--c", c_text, "Parameter c as re,im");
    sub->add_option("--depth", cfg.depth, "Böttcher levels per ray");
    sub->add_option("--landing-tol", cfg.landing_tol);
    sub->add_option("--grouping-tol", cfg.grouping_tol);
    sub->add_option("--itinerary-tol", cfg.itinerary_tol);
  };

  auto* stars = app.add_subcommand("stars", "Check a set of d-stars");
  common(stars);
  stars->add_option("--d", cfg.d, "Degree");
  stars->add_option("--check", cfg.check, "Star set literal, e.g. {E1,E2,E3} or {{0,1/4},{1/4,1/2}}");
  stars->add_option("--json", cfg.stars_json, "Star set as a JSON array");
  stars->add_option("--grid", cfg.grid, "Refinement of the extension-search grid {k/(d*grid)}");

  auto* ncp = app.add_subcommand("ncp", "Non-crossing relations without adjacent pairs");
  common(ncp);
  ncp->add_option("--n", cfg.n);
  ncp->add_flag("--exhaustive", cfg.exhaustive, "Enumerate n = 1..N and compare with floor(n/2)+1");
  ncp->add_option("--blocks", cfg.blocks, "Relation to validate, as JSON [[1,3],[2],[4]]");

  auto* rays = app.add_subcommand("rays", "Trace one external ray");
  common(rays);
  numerical(rays);
  rays->add_option("--angle", cfg.angle, "Angle p/q");

  auto* classes = app.add_subcommand("classes", "Group the period-nu angles by landing point");
  common(classes);
  numerical(classes);
  classes->add_option("--nu", cfg.nu);

  auto* itin = app.add_subcommand("itinerary", "Periodic points from inverse-branch itineraries");
  common(itin);
  numerical(itin);
  itin->add_option("--radius,--R", cfg.radius, "Radius of the disk U");
  itin->add_option("--k", cfg.k, "Period: all d^k words");
  itin->add_option("--word", cfg.word, "Single word, e.g. 1,2");

  auto* rate = app.add_subcommand("rate", "Growth-rate estimate from periodic counts");
  common(rate);
  numerical(rate);
  rate->add_option("--source", cfg.source, "classes, itinerary or samples");
  rate->add_option("--nu-min", cfg.nu_min);
  rate->add_option("--nu-max", cfg.nu_max);
  rate->add_option("--samples", cfg.samples, "nu:count,nu:count");
  rate->add_option("--radius,--R", cfg.radius);

  auto* repro = app.add_subcommand("repro", "Reproduce the worked examples");
  common(repro);
  repro->add_option("--figure", cfg.figure);
  repro->add_option("--example", cfg.example, "chebyshev, stars4 or cantor");
  repro->add_option("--depth", cfg.depth);
  repro->add_option("--k", cfg.k_max, "Largest period for cantor");
  repro->add_option("--grid", cfg.grid);

}

void finish(const CLI::App& app, RunConfig& cfg, const std::string& c_text) {
  cfg.verb = app.get_subcommands().front()->get_name();
  try {
    cfg.c = parse_complex(c_text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--c", e.what());
  }
}

constexpr const char* kDescription = "Periodic-point growth toolkit for degree-d maps";

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig cfg;
  std::string c_text = "0,0";
  CLI::App app{kDescription};
  build_app(app, cfg, c_text);
  app.parse(argc, argv);
  finish(app, cfg, c_text);
  return cfg;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string c_text = "0,0";
  CLI::App app{kDescription};
  build_app(app, cfg, c_text);
  try {
    app.parse(argc, argv);
    finish(app, cfg, c_text);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }
  return run(cfg, out, err);
}


int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    check_tolerances(cfg);
    if (cfg.verb == "stars") return verb_stars(cfg, out);
    if (cfg.verb == "ncp") return verb_ncp(cfg, out);
    if (cfg.verb == "rays") return verb_rays(cfg, out);
    if (cfg.verb == "classes") return verb_classes(cfg, out);
    if (cfg.verb == "itinerary") return verb_itinerary(cfg, out);
    if (cfg.verb == "rate") return verb_rate(cfg, out);
    if (cfg.verb == "repro") return verb_repro(cfg, out);
    throw UsageError("unknown verb '" + cfg.verb + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
}

}  // namespace pgrowth::cli
