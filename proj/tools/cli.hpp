#pragma once

// Command-line front end: parse | invariants | moment | surfaces | verify.
// Exit codes: 0 ok, 2 parse error, 3 undecided at a resource cap, 4 internal.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wml/cache.hpp"
#include "wml/report.hpp"
#include "wml/wml.hpp"

namespace wml::cli {

enum ExitCode : int { kOk = 0, kParse = 2, kUndecided = 3, kInternal = 4 };

struct Settings {
  int rank = 2;
  std::string cache_dir;
  bool csv = false;
  std::string format = "json";
  int fringe_cap = 12;
  bool force = false;
  int genus_cap = 3;
  int max_subdivision = 2;
  std::size_t orbit_cap = 1'000'000;
  std::uint64_t term_cap = 100'000'000;
  std::uint64_t spec_cap = 200'000;

  InvariantOptions invariant_options() const {
    InvariantOptions o;
    o.fringe.vertex_cap = fringe_cap;
    o.fringe.force = force;
    o.whitehead.orbit_cap = orbit_cap;
    o.genus_cap = genus_cap;
    o.max_subdivision = max_subdivision;
    o.matching.spec_cap = spec_cap;
    return o;
  }
  MomentOptions moment_options() const {
    MomentOptions o;
    o.term_cap = term_cap;
    return o;
  }
  std::string caps_key() const {
    std::ostringstream os;
    os << "fringe=" << fringe_cap << (force ? "f" : "") << ";genus=" << genus_cap << ";K=" << max_subdivision
       << ";orbit=" << orbit_cap << ";specs=" << spec_cap << ";terms=" << term_cap;
    return os.str();
  }
};

/// "1,-1" -> (1,-1)
inline TraceMonomial parse_exponents(const std::string& text) {
  std::vector<int> e;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad exponent list '" + text + "'", 0);
    }
    if (used != tok.size()) throw ParseError("bad exponent list '" + text + "'", used);
    e.push_back(v);
  }
  try {
    return TraceMonomial(std::move(e));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what(), 0);
  }
}

inline Word parse_word_arg(const std::string& text, int rank) {
  try {
    return word_from_text(text, rank);
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what(), 0);
  }
}

inline std::optional<ResultCache> open_cache(const Settings& s) {
  if (!s.cache_dir.empty()) return ResultCache(s.cache_dir);
  if (const char* env = std::getenv("WML_CACHE"); env && *env) return ResultCache(env);
  return std::nullopt;
}

inline std::string invariants_key(const Word& w, const Settings& s) {
  CyclicReduction cr = cyclic_reduce(w);
  return std::string(kVersion) + "|invariants|rank=" + std::to_string(s.rank) + "|core=" +
         to_string(least_rotation(cr.core)) + "|word=" + to_string(w) + "|" + s.caps_key();
}

inline int cmd_parse(const std::string& text, const Settings& s, std::ostream& out) {
  WordExprPtr expr = parse_word(text, s.rank);
  Word w = expr->evaluate(s.rank);
  CyclicReduction cr = cyclic_reduce(w);
  PowerDecomposition pp = is_proper_power(w);
  Json j{{"version", kVersion},
         {"input", text},
         {"rank", s.rank},
         {"word", word_json(w)},
         {"cyclic_reduction", {{"core", to_string(cr.core)}, {"conjugator", to_string(cr.conjugator)}}},
         {"abelianization", w.exponent_sums()},
         {"proper_power", {{"proper", pp.proper}, {"root", to_string(pp.root)}, {"exponent", pp.exponent}}}};
  if (s.format == "text")
    out << to_string(w) << '\n';
  else
    out << j.dump(2) << '\n';
  return kOk;
}

inline int cmd_invariants(const std::string& text, const Settings& s, std::ostream& out) {
  Word w = parse_word_arg(text, s.rank);
  auto cache = open_cache(s);
  const std::string key = invariants_key(w, s);
  std::string payload;
  bool undecided = false;
  if (auto hit = cache ? cache->get(key) : std::nullopt) {
    payload = *hit;
    undecided = Json::parse(payload).value("undecided", false);
  } else {
    InvariantReport rep = compute_invariants(w, s.rank, s.invariant_options());
    undecided = rep.undecided();
    payload = invariants_json(rep).dump(2) + "\n";
    if (cache && !undecided) cache->put(key, payload);
  }
  if (s.csv || s.format == "csv") {
    Json j = Json::parse(payload);
    auto field = [&](const char* k) { return j[k].is_string() ? j[k].get<std::string>() : j[k].dump(); };
    out << "word,rank,pi,cl,comm_crit_count,proper_power\n"
        << j["word"]["text"].get<std::string>() << ',' << s.rank << ',' << field("pi") << ',' << field("cl") << ','
        << field("comm_crit_count") << ',' << (j["proper_power"]["proper"].get<bool>() ? "yes" : "no") << '\n';
  } else {
    out << payload;
  }
  return undecided ? kUndecided : kOk;
}

struct MomentArgs {
  std::string exponents = "1";
  bool symbolic = false, numeric = false, mc = false;
  long n = 0;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  int depth = 4;
};

inline int cmd_moment(const std::string& text, const MomentArgs& a, const Settings& s, std::ostream& out) {
  Word w = parse_word_arg(text, s.rank);
  TraceMonomial t = parse_exponents(a.exponents);
  if (a.mc) {
    if (a.n < 1) throw CLI::ValidationError("--mc requires --n");
    Estimate e = estimate_moment(w, t, static_cast<int>(a.n), a.samples, a.seed);
    if (s.format == "text")
      out << e.mean.real() << (e.mean.imag() < 0 ? " - " : " + ") << std::abs(e.mean.imag()) << "i +/- "
          << e.standard_error << '\n';
    else
      out << estimate_json(w, t, e).dump(2) << '\n';
    return kOk;
  }
  auto cache = open_cache(s);
  const std::string key = std::string(kVersion) + "|moment|word=" + to_string(w) + "|T=" + t.to_string() +
                          "|depth=" + std::to_string(a.depth) + "|" + s.caps_key();
  Json j;
  if (auto hit = cache ? cache->get(key) : std::nullopt) {
    j = Json::parse(*hit);
  } else {
    Moment m = moment(w, t, s.moment_options());
    j = moment_json(w, t, m, a.depth);
    if (cache) cache->put(key, j.dump(2) + "\n");
  }
  if (a.numeric) {
    Moment m{RationalFunction::deserialize(j["value"]["serialized"].get<std::string>()), j["n_min"].get<int>()};
    BigRational v = m.at(a.n);
    Json r{{"version", kVersion}, {"word", j["word"]}, {"T", t.exponents}, {"n", a.n},
           {"exact", v.str()}, {"value", static_cast<double>(v)}};
    if (s.format == "text")
      out << v.str() << '\n';
    else
      out << r.dump(2) << '\n';
    return kOk;
  }
  if (s.format == "text")
    out << j["value"]["text"].get<std::string>() << '\n';
  else
    out << j.dump(2) << '\n';
  return kOk;
}

struct SurfaceArgs {
  std::vector<std::string> words;
  bool list = false;
};

inline int cmd_surfaces(const SurfaceArgs& a, const Settings& s, std::ostream& out) {
  std::vector<Word> words;
  for (const auto& t : a.words) words.push_back(parse_word_arg(t, s.rank));
  MatchingOptions mo;
  mo.spec_cap = s.spec_cap;
  Json j{{"version", kVersion}, {"words", Json::array()}, {"max_subdivision", s.max_subdivision}};
  for (const Word& w : words) j["words"].push_back(to_string(w));
  if (!is_balanced(words).balanced) {
    j["balanced"] = false;
    j["spec_count"] = 0;
    out << j.dump(2) << '\n';
    return kOk;
  }
  j["balanced"] = true;
  try {
    GenusSpectrum g = genus_spectrum(words, s.max_subdivision, mo);
    j["spec_count"] = g.spec_count;
    Json spectrum = Json::array();
    for (const auto& [key, chis] : g.chi) {
      Json c = Json::object();
      for (auto [chi, count] : chis) c[std::to_string(chi)] = count;
      spectrum.push_back({{"components", key.components}, {"boundary_profile", key.boundary_profile}, {"chi", c}});
    }
    j["spectrum"] = spectrum;
    Json ranks = Json::array();
    for (auto [k, count] : g.component_chi_rank)
      ranks.push_back({{"chi", k.first}, {"image_rank", k.second}, {"count", count}});
    j["component_chi_rank"] = ranks;
    if (a.list) {
      Json surfaces = Json::array();
      for_each_matching(words, s.max_subdivision, [&](const MatchingSpec& spec) {
        Json m = Json::object();
        for (const auto& [gen, sigmas] : spec.matchings) m["x" + std::to_string(gen)] = sigmas;
        Json one = surface_json(build_surface(spec));
        one["matchings"] = m;
        surfaces.push_back(one);
      }, mo);
      j["surfaces"] = surfaces;
    }
  } catch (const ResourceLimit& e) {
    j["undecided"] = e.what();
    out << j.dump(2) << '\n';
    return kUndecided;
  }
  if (s.csv || s.format == "csv") {
    out << "components,boundary_profile,chi,count\n";
    for (const auto& row : j["spectrum"])
      for (const auto& [chi, count] : row["chi"].items()) {
        std::string profile;
        for (const auto& b : row["boundary_profile"]) profile += (profile.empty() ? "" : " ") + b.dump();
        out << row["components"].dump() << ',' << profile << ',' << chi << ',' << count.dump() << '\n';
      }
  } else {
    out << j.dump(2) << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> exponent_sets;
  bool timings = false;
};

inline int cmd_verify(const std::string& text, const VerifyArgs& a, const Settings& s, std::ostream& out) {
  Word w = parse_word_arg(text, s.rank);
  std::vector<VerifyReport> reports;
  std::vector<std::string> sets = a.exponent_sets.empty() ? std::vector<std::string>{"1"} : a.exponent_sets;
  for (const auto& e : sets) reports.push_back(verify(w, parse_exponents(e), s.rank, s.invariant_options(), s.moment_options()));
  bool undecided = false;
  for (const auto& r : reports)
    for (const auto& c : r.checks) undecided |= !c.applicable && c.detail.find("undecided") != std::string::npos;
  if (s.csv || s.format == "csv") {
    out << verify_csv(reports);
  } else {
    Json rows = Json::array();
    for (const auto& r : reports) rows.push_back(verify_json(r, a.timings));
    out << rows.dump(2) << '\n';
  }
  return undecided ? kUndecided : kOk;
}

/// Runs the command line; output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word measures on unitary groups: invariants, exact moments and checks", "wml"};
  app.set_config("--config", "", "key = value file with default settings");
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--rank,-r", s.rank, "ambient free group rank")->check(CLI::Range(1, 999));
  app.add_option("--cache-dir", s.cache_dir, "result cache directory (default: $WML_CACHE)");
  app.add_flag("--csv", s.csv, "CSV tables instead of JSON");
  app.add_option("--format", s.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--fringe-cap", s.fringe_cap, "core graph vertex cap for fringe enumeration");
  app.add_flag("--force", s.force, "ignore the fringe vertex cap");
  app.add_option("--genus-cap", s.genus_cap, "commutator length search cap");
  app.add_option("--max-subdivision,-K", s.max_subdivision, "largest subdivision count per generator")
      ->check(CLI::Range(1, 4));
  app.add_option("--orbit-cap", s.orbit_cap, "Whitehead orbit search cap");
  app.add_option("--term-cap", s.term_cap, "permutation pair cap for exact moments");
  app.add_option("--spec-cap", s.spec_cap, "matching enumeration cap");

  std::string word;
  auto* parse = app.add_subcommand("parse", "parse and reduce a word");
  parse->add_option("word", word, "word expression")->required();

  auto* inv = app.add_subcommand("invariants", "primitivity rank, commutator length, commutator-critical subgroups");
  inv->add_option("word", word, "word expression")->required();

  MomentArgs margs;
  auto* mom = app.add_subcommand("moment", "E_w[prod tr(w^m)] exactly, at an integer n, or by Monte Carlo");
  mom->add_option("word", word, "word expression")->required();
  mom->add_option("-T,--trace", margs.exponents, "trace exponents, e.g. 1,-1");
  auto* sym = mom->add_flag("--symbolic", margs.symbolic, "exact rational function of n (default)");
  auto* num = mom->add_flag("--numeric", margs.numeric, "exact value at --n");
  auto* mcf = mom->add_flag("--mc", margs.mc, "Monte Carlo estimate at --n");
  sym->excludes(num)->excludes(mcf);
  num->excludes(mcf);
  mom->add_option("--n", margs.n, "matrix size");
  mom->add_option("--samples", margs.samples, "Monte Carlo samples");
  mom->add_option("--seed", margs.seed, "Monte Carlo seed");
  mom->add_option("--depth", margs.depth, "Laurent terms after the leading one");

  SurfaceArgs sargs;
  auto* surf = app.add_subcommand("surfaces", "genus spectrum of matching surfaces");
  // Boundary words are collected verbatim from the leftover arguments: a
  // vector option would read "[x,y]" as a bracketed list.
  app.allow_extras();
  surf->footer("Arguments: one or more boundary words.");
  surf->add_flag("--list", sargs.list, "emit every surface (annuli, gluings, components)");

  VerifyArgs vargs;
  auto* ver = app.add_subcommand("verify", "compare exact expansions with the predicted terms");
  ver->add_option("word", word, "word expression")->required();
  ver->add_option("-T,--trace", vargs.exponent_sets, "trace exponents; repeat for several sets");
  ver->add_flag("--timings", vargs.timings, "include timings (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }
  if (s.csv) s.format = "csv";
  std::vector<std::string> extras = app.remaining();
  for (const auto& e : surf->remaining()) extras.push_back(e);
  if (*surf) {
    sargs.words = extras;
    extras.clear();
    if (sargs.words.empty()) {
      err << "error: surfaces requires at least one word\n";
      return kParse;
    }
  }
  if (!extras.empty()) {
    err << "error: unexpected argument '" << extras.front() << "'\n";
    return kParse;
  }

  try {
    if (*parse) return cmd_parse(word, s, out);
    if (*inv) return cmd_invariants(word, s, out);
    if (*mom) {
      if (margs.numeric && margs.n < 1) throw CLI::ValidationError("--numeric requires --n");
      return cmd_moment(word, margs, s, out);
    }
    if (*surf) return cmd_surfaces(sargs, s, out);
    if (*ver) return cmd_verify(word, vargs, s, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const ResourceLimit& e) {
    err << "undecided: " << e.what() << '\n';
    return kUndecided;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

}  // namespace wml::cli
