#ifndef SPINED_CLI_HPP
#define SPINED_CLI_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spined/spined.hpp"
#include "spined/sampling.hpp"

namespace spined::cli {

enum ExitCode : int { kOk = 0, kParseError = 1, kCapExceeded = 2, kValidationFailed = 3 };

enum class Format { human, json, pace };

struct Options {
  std::uint64_t seed = 0;
  Format format = Format::human;
  std::optional<std::size_t> cap;

  std::size_t limit(std::size_t default_cap) const { return cap ? std::min(*cap, default_cap) : default_cap; }
};

namespace detail {

using nlohmann::json;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

class Input {
 public:
  Input(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
      stream_ = &stdin_stream;
      return;
    }
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw Error(Errc::parse_error, "cannot open '" + path + "'");
    stream_ = file_.get();
  }

  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

inline void require_size(std::size_t size, std::size_t cap, const std::string& what) {
  if (size > cap) {
    throw Error(Errc::cap_exceeded, what + " has " + std::to_string(size) + " vertices, cap is " + std::to_string(cap));
  }
}

inline std::string tw_text(const std::optional<std::size_t>& tw) { return tw ? std::to_string(*tw) : "none"; }

inline json tw_json(const std::optional<std::size_t>& tw) { return tw ? json(*tw) : json(nullptr); }

inline json labeling_json(const Labeling& lab) {
  json out = json::array();
  for (std::size_t v = 0; v < lab.labels.size(); ++v) out.push_back({v, lab.labels[v]});
  return out;
}

struct WidthOutput {
  std::string verb;
  std::string key;  // leading key of the human summary
  std::optional<std::size_t> tw;
  std::size_t delta = 0;
  std::vector<std::pair<std::string, std::string>> extra_human;
  json extra_json = json::object();
  std::optional<Labeling> labeling;
  std::string note;  // what the certificate decomposes
  TreeDecomposition decomposition;
};

inline void emit(const WidthOutput& w, const Options& opts, std::ostream& out) {
  switch (opts.format) {
    case Format::pace:
      write_td(out, w.decomposition);
      return;
    case Format::json: {
      json j = {{"verb", w.verb}, {"tw", tw_json(w.tw)}, {"delta", w.delta}};
      for (auto& [k, v] : w.extra_json.items()) j[k] = v;
      if (w.labeling) j["labeling"] = labeling_json(*w.labeling);
      if (!w.note.empty()) j["certificate_of"] = w.note;
      j["decomposition"] = td_to_json(w.decomposition);
      out << j.dump(2) << '\n';
      return;
    }
    case Format::human:
      out << w.key << '=' << tw_text(w.tw) << " delta=" << w.delta;
      for (const auto& [k, v] : w.extra_human) out << ' ' << k << '=' << v;
      out << '\n';
      if (w.labeling) {
        out << "labeling\n";
        write_labeling(out, *w.labeling);
      }
      if (!w.note.empty()) out << "c certificate for the " << w.note << '\n';
      write_td(out, w.decomposition);
      return;
  }
}

inline int cmd_tw(const std::string& path, const Options& opts, Io io) {
  Input input(path, io.in);
  const Graph g = read_graph(input.get());
  require_size(g.order(), opts.limit(kTreewidthDpCap), "graph");
  const auto r = treewidth_dp(g);
  emit({"tw", "tw", r.treewidth, r.delta(), {}, json::object(), std::nullopt, "", r.decomposition}, opts, io.out);
  return kOk;
}

inline int cmd_hytw(const std::string& path, const Options& opts, Io io) {
  Input input(path, io.in);
  const Hypergraph h = read_hypergraph(input.get());
  require_size(h.order(), opts.limit(kTreewidthDpCap), "hypergraph");
  const auto r = hypergraph_treewidth(h);
  emit({"hytw", "tw", r.treewidth, r.delta(), {}, json::object(), std::nullopt, "", r.decomposition}, opts, io.out);
  return kOk;
}

inline int cmd_ctw(const std::string& path, const Options& opts, Io io) {
  Input input(path, io.in);
  const Graph g = read_graph(input.get());
  require_size(g.order(), opts.limit(kTreewidthDpCap), "graph");
  const auto r = treewidth_dp(complement(g));
  emit({"ctw", "tw", r.treewidth, r.delta(), {}, json::object(), std::nullopt, "complement", r.decomposition}, opts,
       io.out);
  return kOk;
}

inline int cmd_labeled(const std::string& verb, const std::string& path, const Options& opts, Io io) {
  Input input(path, io.in);
  const Graph g = read_graph(input.get());
  require_size(g.order(), opts.limit(kPartitionCap), "graph");
  WidthOutput w;
  w.verb = verb;
  w.key = verb;
  LabelingWidth best;
  if (verb == "mtw") {
    const auto m = modular_treewidth(g);
    w.extra_human.emplace_back("trivial", tw_text(m.with_trivial));
    w.extra_json["trivial"] = tw_json(m.with_trivial);
    best = m;
  } else {
    best = chromatic_treewidth(g);
  }
  const Labeling lab = best.witness ? *best.witness : identity_labeling(g);
  const auto r = treewidth_dp(quotient_graph(lab));
  w.tw = best.value;
  w.delta = r.delta();
  w.labeling = lab;
  w.note = "quotient graph";
  w.decomposition = r.decomposition;
  emit(w, opts, io.out);
  return kOk;
}

inline Labeling read_labeling(std::istream& in, const Graph& base) {
  std::vector<std::size_t> labels(base.order(), kFree);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' || line.compare(first, 8, "labeling") == 0) continue;
    std::istringstream ss(line);
    std::size_t v = 0, l = 0;
    std::string rest;
    if (!(ss >> v >> l) || (ss >> rest)) {
      throw Error(Errc::parse_error, "line " + std::to_string(lineno) + ": expected `vertex label`");
    }
    if (v >= base.order()) throw Error(Errc::parse_error, "line " + std::to_string(lineno) + ": vertex out of range");
    labels[v] = l;
  }
  if (std::find(labels.begin(), labels.end(), kFree) != labels.end()) {
    throw Error(Errc::parse_error, "labeling does not cover every vertex");
  }
  try {
    return make_labeling(base, std::move(labels));
  } catch (const Error& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

struct ValidateArgs {
  std::string object;
  std::string decomposition;
  bool hypergraph = false;
  bool complement = false;
  std::string labeling;
};

inline int cmd_validate(const ValidateArgs& a, const Options& opts, Io io) {
  Input obj(a.object, io.in);
  Input tdin(a.decomposition, io.in);
  TdVerdict verdict;
  if (a.hypergraph) {
    const Hypergraph h = read_hypergraph(obj.get());
    verdict = validate_tree_decomposition(h, read_td(tdin.get()));
  } else {
    Graph g = read_graph(obj.get());
    if (a.complement) g = complement(g);
    if (!a.labeling.empty()) {
      Input labin(a.labeling, io.in);
      g = quotient_graph(read_labeling(labin.get(), g));
    }
    verdict = validate_tree_decomposition(g, read_td(tdin.get()));
  }
  if (opts.format == Format::json) {
    json j = {{"verb", "validate"}, {"valid", verdict.valid()}, {"width", tw_json(verdict.width)}};
    if (!verdict.valid()) {
      j["violation"] = to_string(verdict.violation);
      j["detail"] = verdict.detail;
    }
    io.out << j.dump(2) << '\n';
  } else if (verdict.valid()) {
    io.out << "valid width=" << tw_text(verdict.width) << '\n';
  } else {
    io.out << "invalid " << to_string(verdict.violation) << ": " << verdict.detail << '\n';
  }
  return verdict.valid() ? kOk : kValidationFailed;
}

struct CheckArgs {
  std::string instance;
  std::size_t objects = 30;
  std::size_t spans = 30;
};

struct FunctorVerdict {
  std::string name;
  SpinalReport report;
};

struct CheckResult {
  std::size_t sc1_passed = 0;
  std::size_t sc1_total = 0;
  std::size_t sc2_passed = 0;
  std::size_t sc2_total = 0;
  std::vector<std::string> failures;
  std::vector<FunctorVerdict> functors;
};

template <class Object, class MakeObject, class MakeTarget>
CheckResult run_check(const SpinedInstance<Object>& inst, MakeObject&& make_object, MakeTarget&& make_target,
                      const std::vector<SFunctor<Object>>& functors, const CheckArgs& args, std::uint64_t seed,
                      std::size_t spine_limit) {
  CheckResult res;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < args.objects; ++i) {
    const Object x = make_object(rng);
    ++res.sc1_total;
    const auto w = check_sc1(inst, x);
    const bool least = w.index == 0 || !has_morphism(inst, x, inst.spine(w.index - 1));
    if (inst.is_morphism(w.morphism) && w.morphism.codomain == inst.spine(w.index) && least) {
      ++res.sc1_passed;
    } else {
      res.failures.push_back("sc1 object " + std::to_string(i));
    }
  }
  const auto spans = sample_spans(inst, make_object, args.spans, seed + 1);
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const auto& s = spans[i];
    const auto ext_left = random_extension(inst, s.left.codomain, make_target, rng);
    const auto ext_right = random_extension(inst, s.right.codomain, make_target, rng);
    ++res.sc2_total;
    try {
      const auto v = check_sc2(inst, s, ext_left, ext_right);
      if (v.unique && inst.is_morphism(v.mediator)) {
        ++res.sc2_passed;
      } else {
        res.failures.push_back("sc2 span " + std::to_string(i) + ": mediator not unique");
      }
    } catch (const Error& e) {
      if (e.code() != Errc::no_mediator) throw;
      res.failures.push_back("sc2 span " + std::to_string(i) + ": " + e.what());
    }
  }
  for (const auto& f : functors) res.functors.push_back({f.name, check_spinal(inst, f, spans, spine_limit)});
  return res;
}

inline CheckResult dispatch_check(const CheckArgs& args, const Options& opts) {
  const std::uint64_t seed = opts.seed;
  auto capped = [&](auto inst) {
    inst.enumeration_cap = opts.limit(inst.enumeration_cap);
    return inst;
  };
  const std::string& name = args.instance;
  if (name == "grph") {
    auto inst = capped(grph_mono_instance());
    return run_check(
        inst, [](std::mt19937_64& rng) { return random_small_graph(rng, 5); },
        [](std::mt19937_64& rng, const Graph& g) { return random_supergraph(rng, g, uniform_below(rng, 3)); },
        {clique_number_sfunctor(), triangulation_sfunctor(), order_sfunctor()}, args, seed, 6);
  }
  if (name == "rmono") {
    auto inst = capped(rmono_instance());
    SFunctor<Graph> alpha{"independence-number", [](const Graph& g) { return independence_number(g); }};
    SFunctor<Graph> delta{"complemented-delta", [](const Graph& g) { return complemented_treewidth(g); }};
    return run_check(
        inst, [](std::mt19937_64& rng) { return random_small_graph(rng, 5); },
        [](std::mt19937_64& rng, const Graph& g) { return random_reflexive_target(rng, g, uniform_below(rng, 3)); },
        {alpha, delta}, args, seed, 6);
  }
  if (name == "hgr") {
    auto inst = capped(hgr_instance());
    SFunctor<Hypergraph> delta{"delta", [](const Hypergraph& h) { return hypergraph_treewidth(h).delta(); }};
    return run_check(
        inst, [](std::mt19937_64& rng) { return random_spined_hypergraph(rng, 4, 4); },
        [](std::mt19937_64& rng, const Hypergraph& h) {
          return random_superhypergraph(rng, h, uniform_below(rng, 3), uniform_below(rng, 3));
        },
        {delta}, args, seed, 6);
  }
  if (name == "ndiv") {
    auto inst = ndiv_instance();
    return run_check(
        inst, [](std::mt19937_64& rng) { return DivObject(1 + uniform_below(rng, 10000)); },
        [](std::mt19937_64& rng, const DivObject& d) { return random_multiple(rng, d); },
        {ndiv_max_prime_exponent(), ndiv_generalized_clique()}, args, seed, 6);
  }
  if (name == "poset") {
    auto inst = capped(poset_instance());
    SFunctor<Poset> order{"order", [inst](const Poset& p) { return object_order(inst, p); }};
    return run_check(
        inst, [](std::mt19937_64& rng) { return random_small_poset(rng, 4); },
        [](std::mt19937_64& rng, const Poset& p) { return random_superposet(rng, p, uniform_below(rng, 3)); },
        {order}, args, seed, 6);
  }
  if (name == "labeled") {
    auto inst = capped(labeled_graph_instance());
    SFunctor<Labeling> delta{"delta", [](const Labeling& lab) { return labeled_triangulation(lab); }};
    return run_check(
        inst, [](std::mt19937_64& rng) { return random_small_labeling(rng, 5); },
        [](std::mt19937_64& rng, const Labeling& lab) {
          return identity_labeling(random_supergraph(rng, quotient_graph(lab), uniform_below(rng, 3)));
        },
        {delta}, args, seed, 6);
  }
  throw Error(Errc::parse_error, "unknown instance '" + name + "' (grph, rmono, hgr, ndiv, poset, labeled)");
}

inline std::string describe(const SpinalReport& r) {
  if (r.passed()) return "pass";
  std::ostringstream s;
  s << "fail";
  if (!r.sf1()) {
    s << " sf1-at";
    for (std::size_t n : r.sf1_failures) s << ' ' << n;
  }
  if (!r.sf2()) {
    const auto& f = r.sf2_failures.front();
    s << " sf2 " << r.sf2_failures.size() << '/' << r.spans_checked << " (span " << f.span << ": " << f.apex_value
      << " != max(" << f.left_value << ", " << f.right_value << "))";
  }
  if (!r.monotone()) s << " monotonicity " << r.monotonicity_failures.size();
  return s.str();
}

inline json report_json(const SpinalReport& r) {
  json sf2 = json::array();
  for (const auto& f : r.sf2_failures) {
    sf2.push_back({{"span", f.span}, {"apex", f.apex_value}, {"left", f.left_value}, {"right", f.right_value}});
  }
  return {{"passed", r.passed()},
          {"sf1_failures", r.sf1_failures},
          {"sf2_failures", sf2},
          {"monotonicity_failures", r.monotonicity_failures.size()},
          {"spans", r.spans_checked}};
}

inline int cmd_check(const CheckArgs& args, const Options& opts, Io io) {
  const CheckResult r = dispatch_check(args, opts);
  const bool ok = r.sc1_passed == r.sc1_total && r.sc2_passed == r.sc2_total;
  if (opts.format == Format::json) {
    json functors = json::object();
    for (const auto& f : r.functors) functors[f.name] = report_json(f.report);
    json j = {{"verb", "check"},
              {"instance", args.instance},
              {"seed", opts.seed},
              {"sc1", {{"passed", r.sc1_passed}, {"total", r.sc1_total}}},
              {"sc2", {{"passed", r.sc2_passed}, {"total", r.sc2_total}}},
              {"failures", r.failures},
              {"sfunctors", functors}};
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "instance " << args.instance << " seed " << opts.seed << '\n';
    io.out << "sc1 " << (r.sc1_passed == r.sc1_total ? "pass " : "fail ") << r.sc1_passed << '/' << r.sc1_total << '\n';
    io.out << "sc2 " << (r.sc2_passed == r.sc2_total ? "pass " : "fail ") << r.sc2_passed << '/' << r.sc2_total << '\n';
    for (const auto& f : r.failures) io.out << "  " << f << '\n';
    for (const auto& f : r.functors) io.out << "sfunctor " << f.name << ' ' << describe(f.report) << '\n';
  }
  return ok ? kOk : kValidationFailed;
}

inline int demo_ndiv(const Options& opts, Io io) {
  const auto r = demo_clique_failure(opts.seed);
  if (opts.format == Format::json) {
    auto row = [](const CliqueFailureRow& x) {
      return json{{"value", x.value}, {"omega", x.generalized_clique}, {"max_prime_exponent", x.max_prime_exponent}};
    };
    io.out << json{{"demo", "ndiv"},
                   {"rows", {row(r.left), row(r.right), row(r.apex)}},
                   {"spine", r.spine},
                   {"apex_is_omega_4", r.apex_is_spine},
                   {"omega_violates_sf2", r.violation},
                   {"max_prime_exponent", report_json(r.exponent_spinal)}}
                      .dump(2)
           << '\n';
    return kOk;
  }
  io.out << "value\tomega\tmax-exponent\n";
  for (const auto* x : {&r.left, &r.right, &r.apex}) {
    io.out << x->value << '\t' << x->generalized_clique << '\t' << x->max_prime_exponent << '\n';
  }
  io.out << "Omega_0..6:";
  for (const auto& s : r.spine) io.out << ' ' << s;
  io.out << '\n';
  io.out << "lcm(16, 81) = Omega_4: " << (r.apex_is_spine ? "yes" : "no") << '\n';
  io.out << "omega on the span 16 <- 1 -> 81: " << r.apex.generalized_clique
         << (r.violation ? " != " : " == ") << "max(" << r.left.generalized_clique << ", "
         << r.right.generalized_clique << ")\n";
  io.out << "max-prime-exponent on " << r.exponent_spinal.spans_checked << " spans: " << describe(r.exponent_spinal)
         << '\n';
  return kOk;
}

inline int demo_poset(const Options& opts, Io io) {
  const auto r = demo_poset_no_sfunctor();
  if (opts.format == Format::json) {
    io.out << json{{"demo", "poset"},
                   {"pushout_size", r.pushout.size()},
                   {"isomorphic_to_L4", r.isomorphism_to_chain.has_value()},
                   {"spine_index", r.spine_index},
                   {"forced", r.forced_value},
                   {"max", r.max_of_parts},
                   {"violation", r.violation},
                   {"extended_index", r.extended_index},
                   {"extended_max", r.extended_max},
                   {"extended_violation", r.extended_violation}}
                      .dump(2)
           << '\n';
    return kOk;
  }
  io.out << "pushout of L_3 <- L_1 -> L_2 (top to bottom): " << r.pushout.size() << " elements, "
         << (r.isomorphism_to_chain ? "isomorphic to L_4" : "not a chain") << '\n';
  io.out << "spine index " << r.spine_index << '\n';
  io.out << "SF2 would force " << r.forced_value << (r.violation ? " != " : " == ") << "max(3, 2) = "
         << r.max_of_parts << '\n';
  io.out << "after extending L_2 into L_3: L_" << r.extended_index << " vs max " << r.extended_max
         << (r.extended_violation ? ", still violated" : "") << '\n';
  return kOk;
}

inline int demo_order(const Options& opts, Io io) {
  const auto r = demo_order_failure();
  if (opts.format == Format::json) {
    io.out << json{{"demo", "order"},
                   {"apex_order", r.apex_order},
                   {"parts", {r.left_order, r.right_order}},
                   {"order", report_json(r.order)},
                   {"clique_number", report_json(r.clique)},
                   {"delta", report_json(r.delta)}}
                      .dump(2)
           << '\n';
    return kOk;
  }
  io.out << "K_2 glued to K_2 at one vertex: order " << r.apex_order << " vs max(" << r.left_order << ", "
         << r.right_order << ") = " << std::max(r.left_order, r.right_order) << '\n';
  io.out << "order " << describe(r.order) << '\n';
  io.out << "clique-number " << describe(r.clique) << '\n';
  io.out << "delta " << describe(r.delta) << '\n';
  return kOk;
}

inline int demo_pseudochordal(std::size_t n, const Options& opts, Io io) {
  const auto r = pseudo_chordal_witness(n);
  if (opts.format == Format::json) {
    io.out << json{{"demo", "pseudochordal"},
                   {"n", r.n},
                   {"vertices", r.graph.order()},
                   {"chordal", r.chordal},
                   {"clique_embeds", r.from_clique.has_value()},
                   {"embeds_in_double_clique", r.into_double.has_value()},
                   {"delta", r.delta}}
                      .dump(2)
           << '\n';
    return kOk;
  }
  io.out << "K_" << n << " glued to C_" << n << " at one vertex: " << r.graph.order() << " vertices, "
         << (r.chordal ? "chordal" : "not chordal") << '\n';
  io.out << "K_" << n << " embeds: " << (r.from_clique ? "yes" : "no") << ", embeds in K_" << n << " glued to K_" << n
         << ": " << (r.into_double ? "yes" : "no") << '\n';
  io.out << "delta=" << r.delta << '\n';
  return kOk;
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spined categories, proxy pushouts and exact tree-width", "spined"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  std::string format = "human";
  std::size_t cap = 0;
  app.add_option("--seed", opts.seed, "seed for every sampling step")->capture_default_str();
  app.add_option("--format", format, "human, json or pace")
      ->check(CLI::IsMember({"human", "json", "pace"}))
      ->capture_default_str();
  auto* cap_opt = app.add_option("--cap", cap, "lower every size cap to this value");

  std::string path = "-";
  std::string verb;
  std::vector<std::pair<std::string, CLI::App*>> width_verbs;
  for (const char* name : {"tw", "hytw", "ctw", "mtw", "chtw"}) {
    static const std::map<std::string, std::string> help{
        {"tw", "exact tree-width of a graph"},
        {"hytw", "tree-width of a hypergraph"},
        {"ctw", "tree-width of the complement (R_mono triangulation)"},
        {"mtw", "modular tree-width"},
        {"chtw", "chromatic tree-width"}};
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("input", path, "input file, - for standard input")->capture_default_str();
    width_verbs.emplace_back(name, sub);
  }

  detail::ValidateArgs vargs;
  auto* validate = app.add_subcommand("validate", "check a PACE decomposition against an object");
  validate->add_option("object", vargs.object, "graph or hypergraph file")->required();
  validate->add_option("decomposition", vargs.decomposition, "PACE .td file")->required();
  auto* hyper_flag = validate->add_flag("--hypergraph", vargs.hypergraph, "object is a hypergraph");
  validate->add_flag("--complement", vargs.complement, "validate against the complement graph")->excludes(hyper_flag);
  validate->add_option("--labeling", vargs.labeling, "validate against the quotient by this labeling")
      ->excludes(hyper_flag);

  detail::CheckArgs cargs;
  auto* check = app.add_subcommand("check", "run the axiom checks on an instance");
  check->add_option("instance", cargs.instance, "grph, rmono, hgr, ndiv, poset or labeled")->required();
  check->add_option("--objects", cargs.objects, "objects for SC1")->capture_default_str();
  check->add_option("--spans", cargs.spans, "spans for SC2 and the functor checks")->capture_default_str();

  std::string demo_name;
  std::size_t demo_n = 4;
  auto* demo = app.add_subcommand("demo", "reproduce a counterexample");
  demo->add_option("name", demo_name, "ndiv, poset, order or pseudochordal")
      ->required()
      ->check(CLI::IsMember({"ndiv", "poset", "order", "pseudochordal"}));
  demo->add_option("n", demo_n, "size for pseudochordal")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  }

  opts.format = format == "json" ? Format::json : format == "pace" ? Format::pace : Format::human;
  if (cap_opt->count() > 0) opts.cap = cap;
  detail::Io io{in, out, err};
  try {
    for (const auto& [name, sub] : width_verbs) {
      if (!sub->parsed()) continue;
      if (name == "tw") return detail::cmd_tw(path, opts, io);
      if (name == "hytw") return detail::cmd_hytw(path, opts, io);
      if (name == "ctw") return detail::cmd_ctw(path, opts, io);
      return detail::cmd_labeled(name, path, opts, io);
    }
    if (validate->parsed()) return detail::cmd_validate(vargs, opts, io);
    if (check->parsed()) return detail::cmd_check(cargs, opts, io);
    if (demo->parsed()) {
      if (demo_name == "ndiv") return detail::demo_ndiv(opts, io);
      if (demo_name == "poset") return detail::demo_poset(opts, io);
      if (demo_name == "order") return detail::demo_order(opts, io);
      return detail::demo_pseudochordal(demo_n, opts, io);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::cap_exceeded: return kCapExceeded;
      case Errc::no_mediator:
      case Errc::antisymmetry_violated: return kValidationFailed;
      default: return kParseError;
    }
  }
  return kParseError;
}

}  // namespace spined::cli

#endif  // SPINED_CLI_HPP
