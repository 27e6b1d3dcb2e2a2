#pragma once

// JSON and CSV renderings of results. Needs nlohmann/json (vendor/json.hpp).

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wml/invariants.hpp"
#include "wml/montecarlo.hpp"
#include "wml/parser.hpp"
#include "wml/surfaces.hpp"
#include "wml/verify.hpp"

namespace wml {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "wml-1.0.0";

inline Json extended_json(const Extended& e) {
  if (e.is_finite()) return e.value;
  return e.to_string();
}

inline Json word_json(const Word& w) {
  CyclicReduction cr = cyclic_reduce(w);
  return Json{{"text", to_string(w)},
              {"pretty", to_pretty_string(w)},
              {"length", w.size()},
              {"cyclic_core", to_string(cr.core)},
              {"conjugator", to_string(cr.conjugator)},
              {"cyclic_normal_form", to_string(least_rotation(cr.core))}};
}

inline Json graph_json(const LabeledGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.src, e.dst, e.label});
  return Json{{"vertices", g.num_vertices()}, {"rank", g.subgroup_rank()}, {"marked", g.marked()}, {"edges", edges}};
}

inline Json invariants_json(const InvariantReport& r) {
  Json witnesses = Json::array(), details = Json::array(), cc = Json::array();
  for (const auto& w : r.pi_witnesses) {
    witnesses.push_back(w.key);
    Json basis = Json::array();
    for (const Word& b : extract_basis(w.graph)) basis.push_back(to_string(b));
    details.push_back({{"graph", graph_json(w.graph)}, {"basis", basis}, {"rewritten", to_string(w.rewritten)}});
  }
  for (const auto& w : r.comm_crit.subgroups) cc.push_back(w.key);
  Json cl_notes = r.cl.notes;
  return Json{{"version", kVersion},
              {"word", word_json(r.word)},
              {"rank", r.rank},
              {"pi", extended_json(r.pi)},
              {"pi_reason", r.pi.reason},
              {"cl", extended_json(r.cl.cl)},
              {"cl_subdivision", r.cl.best_subdivision},
              {"cl_improved_by_subdivision", r.cl.improved_by_subdivision},
              {"cl_notes", cl_notes},
              {"comm_crit_count", r.comm_crit.decided ? Json(r.comm_crit.count()) : Json("undecided")},
              {"comm_crit", cc},
              {"witnesses", witnesses},
              {"witness_details", details},
              {"proper_power",
               {{"proper", r.proper_power.proper},
                {"root", to_string(r.proper_power.root)},
                {"exponent", r.proper_power.exponent}}},
              {"undecided", r.undecided()}};
}

inline Json laurent_json(const LaurentSeries& s) {
  Json c = Json::array();
  for (const auto& q : s.coeffs) c.push_back(q.str());
  return Json{{"zero", s.zero}, {"e0", s.zero ? Json(nullptr) : Json(s.leading_exponent)}, {"coeffs", c},
              {"text", s.serialize()}};
}

inline Json rational_json(const RationalFunction& f) {
  Json num = Json::array(), den = Json::array();
  for (const auto& c : f.numerator_poly().coefficients()) num.push_back(c.str());
  for (const auto& c : f.denominator_poly().coefficients()) den.push_back(c.str());
  return Json{{"text", f.to_string()}, {"serialized", f.serialize()}, {"num", num}, {"den", den}};
}

inline Json moment_json(const Word& w, const TraceMonomial& t, const Moment& m, int depth) {
  return Json{{"version", kVersion},
              {"word", word_json(w)},
              {"T", t.exponents},
              {"value", rational_json(m.value)},
              {"n_min", m.n_min},
              {"laurent", laurent_json(laurent(m.value, depth))}};
}

inline Json estimate_json(const Word& w, const TraceMonomial& t, const Estimate& e) {
  return Json{{"version", kVersion},
              {"word", word_json(w)},
              {"T", t.exponents},
              {"n", e.n},
              {"mean_re", e.mean.real()},
              {"mean_im", e.mean.imag()},
              {"standard_error", e.standard_error},
              {"samples", e.samples},
              {"seed", e.seed},
              {"rng", e.rng},
              {"max_unitarity_defect", e.max_unitarity_defect}};
}

inline Json surface_json(const SurfaceComplex& s) {
  Json annuli = Json::array(), gluings = Json::array(), comps = Json::array();
  for (std::size_t m = 0; m < s.words.size(); ++m) {
    Json segs = Json::array();
    for (const auto& sg : s.segments[m]) segs.push_back({{"generator", sg.generator}, {"sign", sg.sign}, {"sub", sg.sub}});
    annuli.push_back({{"word", to_string(s.words[m])},
                      {"faces", s.segments[m].size()},
                      {"segments", segs},
                      {"component", s.annulus_component[m]}});
  }
  for (const auto& g : s.gluings)
    gluings.push_back({{"generator", g.generator},
                       {"sub", g.sub},
                       {"positive", {g.positive_annulus, g.positive_segment}},
                       {"negative", {g.negative_annulus, g.negative_segment}}});
  for (std::size_t c = 0; c < s.components.size(); ++c) {
    const auto& comp = s.components[c];
    LabeledGraph img = image_subgroup(s, static_cast<int>(c));
    comps.push_back({{"annuli", comp.annuli},
                     {"V", comp.vertices},
                     {"E", comp.edges},
                     {"F", comp.faces},
                     {"chi", comp.chi},
                     {"boundaries", comp.boundaries},
                     {"genus", comp.genus},
                     {"image_rank", img.subgroup_rank()},
                     {"image_subgroup", serialize(img)}});
  }
  return Json{{"annuli", annuli}, {"gluings", gluings}, {"components", comps}};
}

inline Json prediction_json(const ExpansionPrediction& p) {
  return Json{{"constant", p.constant.str()},
              {"exponent", p.exponent ? Json(*p.exponent) : Json(nullptr)},
              {"coefficient", p.coefficient.str()},
              {"remainder_bound", p.remainder_bound ? Json(*p.remainder_bound) : Json(nullptr)}};
}

inline Json verify_json(const VerifyReport& r, bool with_timings) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"theorem", c.name}, {"applicable", c.applicable}, {"pass", c.pass}, {"detail", c.detail}});
  Json j{{"version", kVersion},
         {"word", word_json(r.word)},
         {"T", r.t.exponents},
         {"value", rational_json(r.exact.value)},
         {"n_min", r.exact.n_min},
         {"laurent", laurent_json(r.expansion)},
         {"pi", extended_json(r.pi)},
         {"comm_crit_count", r.comm_crit_count},
         {"prediction", r.prediction ? prediction_json(*r.prediction) : Json(nullptr)},
         {"checks", checks}};
  if (with_timings) j["timings"] = {{"invariants_s", r.seconds_invariants}, {"moment_s", r.seconds_moment}};
  return j;
}

/// One CSV row per theorem check.
inline std::string verify_csv(const std::vector<VerifyReport>& reports) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream os;
  os << "word,T,value,pi,comm_crit_count,theorem,applicable,pass,detail\n";
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      os << quote(to_string(r.word)) << ',' << quote(r.t.to_string()) << ',' << quote(r.exact.value.to_string()) << ','
         << r.pi.to_string() << ',' << r.comm_crit_count << ',' << c.name << ',' << (c.applicable ? "yes" : "no")
         << ',' << (c.pass ? "pass" : "fail") << ',' << quote(c.detail) << '\n';
  return os.str();
}

}  // namespace wml
