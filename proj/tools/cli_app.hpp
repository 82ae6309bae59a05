#pragma once

// Command implementations for the garside command-line tool. Kept in a
// header so the test suite can drive commands in-process.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "garside/garside.hpp"

namespace garside::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kUsage = 1, kLimit = 2 };

struct Options {
  int n = 0;
  bool json_output = false;
  int max_bfs_depth = 64;
  std::uint64_t seed = 1;
  std::size_t cap = 100000;
  bool enumerate = false;
  std::optional<std::int64_t> max_power;
  std::string curve;
  std::string comp;
  std::string method = "descent";
  int count = 200;
};

inline json braid_json(const CanonicalForm& a) {
  json factors = json::array();
  for (const PermutationBraid& f : a.factors) factors.push_back(f.word());
  return json{{"u", a.u}, {"factors", factors}, {"text", a.to_string()}};
}

inline json right_json(const RightCanonicalForm& a) {
  json factors = json::array();
  for (const PermutationBraid& f : a.factors) factors.push_back(f.word());
  return json{{"u", a.u}, {"factors", factors}, {"text", a.to_string()}};
}

inline json rational_json(const Rational& r) {
  return json{{"num", r.num}, {"den", r.den}, {"text", r.to_string()}};
}

inline json curve_json(const CurveSystem& c) {
  json comps = json::array();
  for (const auto& x : c.coords()) comps.push_back(x);
  const auto s = is_standard(c);
  return json{{"components", c.component_count()},
              {"coords", comps},
              {"standard", s ? json(s->to_string()) : json(nullptr)}};
}

inline json composition_json(const Composition& c) { return json(c.parts); }

inline json tubes_json(const TubeDecomposition& t) {
  json in = json::array();
  for (const CanonicalForm& b : t.interiors) in.push_back(braid_json(b));
  return json{{"composition", composition_json(t.composition)},
              {"exterior", braid_json(t.exterior)},
              {"interiors", in}};
}

inline json certificate_json(const MinimalityCertificate& c) {
  json layers = json::array();
  for (const LayerCheck& l : c.layers)
    layers.push_back(json{{"composition", composition_json(l.composition)},
                          {"standardizer", braid_json(l.standardizer)},
                          {"meet_with_delta_trivial", l.meet_trivial},
                          {"starting_set_preserved", l.starting_set},
                          {"np_form", l.np_form}});
  json j{{"method", c.method}, {"layers", layers}, {"holds", c.holds()}};
  if (c.bfs_depth >= 0) {
    j["bfs_depth"] = c.bfs_depth;
    j["bfs_depth_cap"] = c.bfs_depth_cap;
  }
  return j;
}

inline Composition parse_composition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad composition part '" + item + "'", 0);
    }
  }
  return Composition(parts);
}

inline void need_n(const Options& o) {
  if (o.n < 1) throw InvalidArgument("--n is required");
}

inline const char* split_name(SplitVerdict v) {
  switch (v) {
    case SplitVerdict::Split: return "split";
    case SplitVerdict::NotSplit: return "not_split";
    default: return "undecided";
  }
}

inline json split_json(const SplitResult& s) {
  json j{{"verdict", split_name(s.verdict)}};
  if (s.conjugator) j["conjugator"] = braid_json(*s.conjugator);
  if (s.composition) j["composition"] = composition_json(*s.composition);
  j["examined"] = s.examined;
  return j;
}

/// Randomized internal consistency checks, reproducible from the seed.
inline json selftest(const Options& o) {
  std::mt19937_64 rng(o.seed);
  auto random_word = [&](int n, int len) {
    std::vector<int> w;
    for (int k = 0; k < len; ++k) {
      const int g = 1 + static_cast<int>(rng() % (n - 1));
      w.push_back(rng() % 2 ? g : -g);
    }
    return BraidWord::from_ints(n, w);
  };
  int failures = 0, checks = 0;
  for (int t = 0; t < o.count; ++t) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const BraidWord w = random_word(n, 1 + static_cast<int>(rng() % 20));
    const CanonicalForm a = left_normal_form(w);
    ++checks;
    if (!(a * inverse(a)).is_identity()) ++failures;
    ++checks;
    if (!(parse_canonical(a.to_string(), n) == a)) ++failures;
    ++checks;
    const CurveSystem c = standard_curves(StandardDescription(n, {{1, 2}}));
    if (!(act(inverse(a), act(a, c)) == c)) ++failures;
  }
  return json{{"checks", checks}, {"failures", failures}};
}

/// Runs one command on one input; throws garside::Error on failure.
inline json execute(const std::string& command, const Options& o, const std::string& input) {
  if (command == "nf") {
    need_n(o);
    const CanonicalForm a = parse_canonical(input, o.n);
    return json{{"left", braid_json(a)}, {"right", right_json(right_normal_form(a))},
                {"inf", a.inf()}, {"sup", a.sup()}};
  }
  if (command == "invariants") {
    need_n(o);
    const CanonicalForm a = parse_canonical(input, o.n);
    const SummitInvariants s = summit_invariants(a);
    const TranslationNumbers t = translation_numbers(a);
    return json{{"inf", a.inf()}, {"sup", a.sup()}, {"inf_s", s.inf_s}, {"sup_s", s.sup_s},
                {"t_inf", rational_json(t.t_inf)}, {"t_sup", rational_json(t.t_sup)}};
  }
  if (command == "uss") {
    need_n(o);
    const CanonicalForm a = parse_canonical(input, o.n);
    const ConjugacyCertificate c = uss_representative(a);
    json j{{"representative", braid_json(c.representative)},
           {"conjugator", braid_json(c.conjugator)},
           {"inf_s", c.representative.inf()},
           {"sup_s", c.representative.sup()}};
    if (o.enumerate) {
      json all = json::array();
      for (const CanonicalForm& b : enumerate_uss(a, o.cap)) all.push_back(braid_json(b));
      j["count"] = all.size();
      j["elements"] = all;
    }
    return j;
  }
  if (command == "classify") {
    need_n(o);
    const CanonicalForm a = parse_canonical(input, o.n);
    const ClassificationResult r = classify(a, ClassifyOptions{o.max_power});
    if (const auto* p = std::get_if<Periodic>(&r))
      return json{{"verdict", "periodic"}, {"p", p->p}, {"m", p->m}, {"split", a.is_identity()}};
    if (const auto* u = std::get_if<Undecided>(&r)) {
      json reps = json::array();
      for (const CanonicalForm& b : u->representatives) reps.push_back(braid_json(b));
      return json{{"verdict", "undecided"}, {"powers", u->powers}, {"representatives", reps}};
    }
    const Reduced& red = std::get<Reduced>(r);
    json j{{"verdict", "reduced"},
           {"q", red.q},
           {"reduction", red.reduction.to_string()},
           {"representative", braid_json(red.certificate.representative)},
           {"conjugator", braid_json(red.certificate.conjugator)},
           {"tubes", tubes_json(red.tubes)},
           {"pulled_back", curve_json(red.pulled_back)},
           {"invariant_under_input", red.invariant_under_alpha}};
    if (red.q == 1 && red.tubes.exterior.is_identity()) {
      j["split"] = true;
    } else {
      const SplitResult s = is_split(a, o.cap);
      j["split"] = s.verdict == SplitVerdict::Undecided ? json("undecided") : json(s.verdict == SplitVerdict::Split);
    }
    return j;
  }
  if (command == "split") {
    need_n(o);
    return split_json(is_split(parse_canonical(input, o.n), o.cap));
  }
  if (command == "standardize") {
    need_n(o);
    const CurveSystem c = parse_curve(o.curve, o.n);
    StandardizerOptions so;
    so.max_bfs_depth = o.max_bfs_depth;
    if (o.method == "bfs")
      so.method = StandardizerMethod::Bfs;
    else if (o.method != "descent")
      throw InvalidArgument("unknown method '" + o.method + "'");
    const StandardizerResult r = minimal_standardizer(c, so);
    return json{{"curve", curve_json(c)}, {"minimal", braid_json(r.minimal)},
                {"image", r.image.to_string()}, {"certificate", certificate_json(r.certificate)},
                {"verified", verify_minimal(r.minimal, c)}};
  }
  if (command == "act") {
    need_n(o);
    const CanonicalForm a = parse_canonical(input, o.n);
    const CurveSystem c = parse_curve(o.curve, o.n);
    return json{{"before", curve_json(c)}, {"after", curve_json(act(a, c))}};
  }
  if (command == "cable") {
    const Composition c = parse_composition(o.comp);
    if (o.n != 0 && o.n != c.n()) throw InvalidArgument("--n disagrees with the composition");
    const CanonicalForm a0 = parse_canonical(input, c.k());
    return json{{"composition", composition_json(c)}, {"braid", braid_json(cable(a0, c))},
                {"left_composition", composition_json(act_on_composition(a0, c))}};
  }
  if (command == "dsum") {
    const Composition c = parse_composition(o.comp);
    if (o.n != 0 && o.n != c.n()) throw InvalidArgument("--n disagrees with the composition");
    std::vector<std::string> pieces;
    std::stringstream ss(input);
    std::string piece;
    while (std::getline(ss, piece, '|')) pieces.push_back(piece);
    if (input.empty()) pieces.assign(c.k(), "");
    if (static_cast<int>(pieces.size()) != c.k())
      throw InvalidArgument("expected " + std::to_string(c.k()) + " blocks separated by '|'");
    std::vector<CanonicalForm> blocks;
    for (int i = 0; i < c.k(); ++i) blocks.push_back(parse_canonical(pieces[i], c.parts[i]));
    return json{{"composition", composition_json(c)}, {"braid", braid_json(direct_sum(blocks))}};
  }
  if (command == "ext") {
    need_n(o);
    const CanonicalForm a = parse_canonical(input, o.n);
    const ExtComponent e = ext_component(a, parse_curve(o.curve, o.n));
    return json{{"exterior", braid_json(e.exterior)}, {"standardizer", braid_json(e.standardizer)},
                {"image", e.image.to_string()}, {"tubes", tubes_json(e.tubes)}};
  }
  if (command == "selftest") return selftest(o);
  throw InvalidArgument("unknown command '" + command + "'");
}

inline json limits_json(const Options& o) {
  json j{{"max_bfs_depth", o.max_bfs_depth}, {"cap", o.cap}, {"seed", o.seed}};
  j["max_power"] = o.max_power ? json(*o.max_power) : json(nullptr);
  return j;
}

inline json envelope(const std::string& command, const Options& o, const std::string& input) {
  return json{{"command", command}, {"n", o.n}, {"input", input}};
}

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ResourceLimit*>(&e)) return kLimit;
  return kUsage;
}

inline json error_json(const std::exception& e) {
  std::string type = "error";
  if (dynamic_cast<const ParseError*>(&e)) type = "parse_error";
  else if (dynamic_cast<const CapExceeded*>(&e)) type = "cap_exceeded";
  else if (dynamic_cast<const DepthLimitExceeded*>(&e)) type = "depth_limit_exceeded";
  else if (dynamic_cast<const NotTubular*>(&e)) type = "not_tubular";
  else if (dynamic_cast<const DimensionMismatch*>(&e)) type = "dimension_mismatch";
  else if (dynamic_cast<const OverflowError*>(&e)) type = "overflow";
  else if (dynamic_cast<const InvalidArgument*>(&e)) type = "invalid_argument";
  json j{{"type", type}, {"message", e.what()}};
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) j["offset"] = p->offset();
  return j;
}

/// Plain-text rendering: one "key: value" line per result field.
inline void print_human(std::ostream& out, const json& result) {
  for (const auto& [k, v] : result.items()) {
    if (v.is_object() && v.contains("text"))
      out << k << ": " << v["text"].get<std::string>() << '\n';
    else if (v.is_string())
      out << k << ": " << v.get<std::string>() << '\n';
    else
      out << k << ": " << v.dump() << '\n';
  }
}

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Garside normal forms, summit sets and reducibility for braid groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string input;
  bool have_input = false;
  app.add_option("--n", o.n, "strand count");
  app.add_flag("--json", o.json_output, "emit JSON");
  app.add_option("--max-bfs-depth", o.max_bfs_depth, "depth cap for BFS standardizers");
  app.add_option("--seed", o.seed, "seed for selftest");

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"nf", "left and right normal forms"},
      {"invariants", "inf_s, sup_s, t_inf, t_sup"},
      {"uss", "ultra summit representative and conjugator"},
      {"classify", "periodic / reduced / undecided verdict"},
      {"split", "split-braid decision"},
      {"standardize", "minimal standardizer of a curve system"},
      {"act", "image of a curve system"},
      {"cable", "tubular braid <a0>_n"},
      {"dsum", "direct sum of blocks separated by '|'"},
      {"ext", "exterior component relative to an invariant system"},
      {"selftest", "randomized consistency checks"},
  };
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    if (std::string(s.name) != "selftest" && std::string(s.name) != "standardize")
      sub->add_option("braid", input, "braid word (stdin lines if omitted)");
    const std::string name = s.name;
    if (name == "uss") {
      sub->add_flag("--enumerate", o.enumerate, "list the whole ultra summit set");
      sub->add_option("--cap", o.cap, "enumeration cap");
    }
    if (name == "classify" || name == "split") sub->add_option("--cap", o.cap, "ultra summit enumeration cap");
    if (name == "classify") sub->add_option("--max-power", o.max_power, "largest power examined");
    if (name == "standardize" || name == "act" || name == "ext")
      sub->add_option("--curve", o.curve, "curve specification")->required();
    if (name == "standardize") sub->add_option("--method", o.method, "descent or bfs");
    if (name == "cable" || name == "dsum") sub->add_option("--comp", o.comp, "composition, e.g. 2,3,1")->required();
    if (name == "selftest") sub->add_option("--count", o.count, "number of random cases");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  const CLI::App* sub = app.get_subcommands().front();
  // Commands without a braid operand run once; the rest read stdin lines when none is given.
  have_input = command == "selftest" || command == "standardize" || sub->count("braid") > 0;
  if (command == "standardize" && input.empty()) input = o.curve;

  auto one = [&](const std::string& text, bool batch) -> int {
    json env = envelope(command, o, text);
    try {
      env["result"] = execute(command, o, text);
      env["limits"] = limits_json(o);
      if (batch || o.json_output)
        out << env.dump() << '\n';
      else
        print_human(out, env["result"]);
      return kOk;
    } catch (const std::exception& e) {
      env["error"] = error_json(e);
      env["limits"] = limits_json(o);
      if (batch || o.json_output) out << env.dump() << '\n';
      if (!batch) err << "error: " << e.what() << '\n';
      return exit_code_for(e);
    }
  };

  if (have_input) return one(input, false);
  // Batch mode: one JSON line per input line, errors reported in-band.
  int worst = kOk;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    worst = std::max(worst, one(line, true));
  }
  return worst == kLimit ? kLimit : kOk;
}

}  // namespace garside::cli
