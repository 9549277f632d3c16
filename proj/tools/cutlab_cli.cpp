// cutlab command-line front end. Talks to the library only through cutlab.h.
#include <cstdio>
#include <deque>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cutlab/cutlab.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitSelftest = 3;

struct Globals {
  std::uint64_t seed = 1;
  std::string preset = "desk";
  std::string constants;
  std::string out;
  unsigned jobs = 1;
  bool timing = false;

  std::string options() const {
    Json o = {{"seed", seed}, {"preset", preset}, {"jobs", jobs}, {"timing", timing}};
    if (!constants.empty()) o["constants"] = constants;
    return o.dump();
  }
};

Json scalar(const std::string& s) {
  static const std::regex number(R"(-?(0|[1-9][0-9]*)(\.[0-9]+)?([eE][-+]?[0-9]+)?)");
  if (s == "true") return true;
  if (s == "false") return false;
  if (std::regex_match(s, number)) return Json::parse(s);
  return s;
}

std::vector<Json> scalars(const std::string& list) {
  std::vector<Json> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = list.find(',', pos);
    out.push_back(scalar(list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Options registered on a subcommand; only those actually given reach the
// library, so defaults stay in one place.
struct ParamSet {
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
  std::map<std::string, CLI::Option*> opts;

  void value(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    opts[key] = app->add_option("--" + flag, values[key], help);
  }
  void toggle(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    opts[key] = app->add_flag("--" + flag, flags[key], help);
  }
  Json json() const {
    Json p = Json::object();
    for (const auto& [key, opt] : opts) {
      if (opt->count() == 0) continue;
      if (flags.contains(key)) p[key] = flags.at(key);
      else p[key] = scalar(values.at(key));
    }
    return p;
  }
};

int exit_code(cutlab_status s) {
  switch (s) {
    case CUTLAB_OK: return kExitOk;
    case CUTLAB_INFEASIBLE:
    case CUTLAB_PRECONDITION:
    case CUTLAB_SIZE_CAP:
    case CUTLAB_ENCODING_FAILED: return kExitInfeasible;
    default: return kExitUsage;
  }
}

int report(cutlab_status s) {
  std::fprintf(stderr, "cutlab: %s\n", cutlab_last_error());
  return exit_code(s);
}

int write_output(const Globals& g, char* text) {
  if (g.out.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
      std::fprintf(stderr, "cutlab: cannot write %s\n", g.out.c_str());
      cutlab_string_free(text);
      return kExitUsage;
    }
    f << text;
  }
  cutlab_string_free(text);
  return kExitOk;
}

int run(const Globals& g, const std::string& command, const Json& params) {
  char* text = nullptr;
  const cutlab_status s = cutlab_run(command.c_str(), params.dump().c_str(), g.options().c_str(), &text);
  if (s != CUTLAB_OK) return report(s);
  return write_output(g, text);
}

int sweep(const Globals& g, const std::string& command, const Json& base, const Json& grid) {
  char* text = nullptr;
  const cutlab_status s = cutlab_sweep(command.c_str(), base.dump().c_str(), grid.dump().c_str(),
                                       g.options().c_str(), &text);
  if (s != CUTLAB_OK) return report(s);
  return write_output(g, text);
}

void on_criterion(void*, int, const char*, int, double, const char* line) {
  std::printf("%s\n", line);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cutlab: cut-query lower-bound gadgets and local min-cut experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--preset", g.preset, "constant preset")->check(CLI::IsMember({"desk", "paper"}));
  app.add_option("--constants", g.constants, "key=value overrides applied on top of the preset")
      ->check(CLI::ExistingFile);
  app.add_option("--out", g.out, "write output here instead of stdout");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--timing", g.timing, "add wall_ms to records");
  app.add_flag_callback("--version", [] {
    std::printf("cutlab %s\n", cutlab_version());
    throw CLI::Success();
  }, "print the library version");

  std::string command;
  std::deque<ParamSet> sets;  // one per subcommand, stable addresses
  std::function<int()> action;

  // foreach
  auto* fe = app.add_subcommand("foreach", "for-each cut-sketch gadget");
  fe->require_subcommand(1);
  for (const char* mode : {"encode", "decode", "roundtrip"}) {
    auto* sub = fe->add_subcommand(mode);
    ParamSet& params = sets.emplace_back();
    params.value(sub, "k", "k", "eps = 2^-k");
    params.value(sub, "beta", "beta", "balance parameter (perfect square)");
    params.value(sub, "n", "n", "vertices (default 2 k_block)");
    params.value(sub, "c1", "c1", "encoding threshold constant");
    params.value(sub, "c2", "c2", "noise budget constant");
    if (std::string(mode) != "encode") params.value(sub, "oracle", "oracle", "exact | noise:<e>[:mode] | sparsifier:<p>");
    if (std::string(mode) != "decode") params.value(sub, "trials", "trials", "independent strings");
    if (std::string(mode) == "encode") {
      params.value(sub, "signs", "signs", "explicit +/- string");
      params.value(sub, "graph-out", "graph_out", "write the encoded graph");
    }
    if (std::string(mode) == "decode") params.value(sub, "graph", "graph", "encoded graph file");
    sub->callback([&, sub, ps = &params] {
      command = "foreach." + sub->get_name();
      action = [&g, &command, ps] { return run(g, command, ps->json()); };
    });
  }

  // forall
  auto* fa = app.add_subcommand("forall", "for-all cut-sketch gadget");
  fa->require_subcommand(1);
  auto* far = fa->add_subcommand("roundtrip");
  ParamSet& fa_params = sets.emplace_back();
  fa_params.value(far, "d", "d", "string length 1/eps^2");
  fa_params.value(far, "beta", "beta", "balance parameter");
  fa_params.value(far, "n", "n", "vertices (default 2 beta d)");
  fa_params.value(far, "c", "c", "gap constant");
  fa_params.value(far, "c1", "c1", "decoder constant");
  fa_params.value(far, "c2", "c2", "oracle error constant");
  fa_params.value(far, "enum-cap", "enum_cap", "largest subset enumeration");
  fa_params.value(far, "oracle", "oracle", "exact | calibrated | noise:<e>[:mode] | sparsifier:<p>");
  fa_params.value(far, "trials", "trials", "independent instances");
  far->callback([&] { action = [&] { return run(g, "forall.roundtrip", fa_params.json()); }; });

  // mincut
  auto* mc = app.add_subcommand("mincut", "local-query min-cut estimator");
  mc->require_subcommand(1);
  auto* mce = mc->add_subcommand("estimate");
  ParamSet& mce_params = sets.emplace_back();
  mce_params.value(mce, "graph", "graph", "undirected edge-list file");
  mce_params.value(mce, "family", "family", "cycle-chords | clique-bridge | cycle | complete | cycle-random-chords | gnp");
  mce_params.value(mce, "n", "n", "vertices");
  mce_params.value(mce, "k", "k", "planted min cut");
  mce_params.value(mce, "m", "m", "edges (cycle-chords)");
  mce_params.value(mce, "chords", "chords", "random chords (cycle-random-chords)");
  mce_params.value(mce, "p", "p", "edge probability (gnp)");
  mce_params.value(mce, "eps", "eps", "target accuracy");
  mce_params.value(mce, "final-mode", "final_mode", "log | kappa");
  mce_params.value(mce, "trials", "trials", "seeded runs");
  mce_params.toggle(mce, "trace", "trace", "include the guess trace");
  mce->callback([&] { action = [&] { return run(g, "mincut.estimate", mce_params.json()); }; });

  auto* mcs = mc->add_subcommand("sweep", "CSV over comma lists of n, k, eps");
  std::string sw_family = "cycle-chords", sw_n = "200", sw_k = "2,4,8", sw_eps = "0.2", sw_m, sw_trials;
  mcs->add_option("--family", sw_family);
  mcs->add_option("--n", sw_n);
  mcs->add_option("--k", sw_k);
  mcs->add_option("--eps", sw_eps);
  mcs->add_option("--m", sw_m, "fixed edge count");
  mcs->add_option("--trials", sw_trials, "runs per cell");
  mcs->callback([&] {
    action = [&] {
      Json base = {{"family", sw_family}};
      if (!sw_m.empty()) base["m"] = scalar(sw_m);
      if (!sw_trials.empty()) base["trials"] = scalar(sw_trials);
      Json grid = Json::array({{{"key", "n"}, {"values", scalars(sw_n)}},
                               {{"key", "k"}, {"values", scalars(sw_k)}},
                               {{"key", "eps"}, {"values", scalars(sw_eps)}}});
      return sweep(g, "mincut.estimate", base, grid);
    };
  });

  // twosum
  auto* ts = app.add_subcommand("twosum", "2-SUM reduction");
  ts->require_subcommand(1);
  auto* tsl = ts->add_subcommand("lemma-check");
  ParamSet& tsl_params = sets.emplace_back();
  tsl_params.value(tsl, "N", "N", "string length (perfect square)");
  tsl_params.toggle(tsl, "exhaustive", "exhaustive", "all pairs with INT <= max-int");
  tsl_params.value(tsl, "trials", "trials", "random instances");
  tsl_params.value(tsl, "max-int", "max_int", "largest intersection (default floor(sqrt N / 3))");
  tsl_params.toggle(tsl, "connectivity", "connectivity", "also check all-pairs edge connectivity");
  tsl->callback([&] { action = [&] { return run(g, "twosum.lemma-check", tsl_params.json()); }; });
  auto* tsr = ts->add_subcommand("reduce");
  ParamSet& tsr_params = sets.emplace_back();
  tsr_params.value(tsr, "t", "t", "number of pairs (1/eps^2)");
  tsr_params.value(tsr, "L", "L", "pair length");
  tsr_params.value(tsr, "alpha", "alpha", "intersection size");
  tsr_params.value(tsr, "r", "r", "intersecting pairs");
  tsr_params.value(tsr, "eps", "eps", "accuracy");
  tsr_params.value(tsr, "lambda", "lambda", "min-cut scale");
  tsr_params.value(tsr, "rule", "rule", "worst | instance");
  tsr_params.value(tsr, "algo", "algo", "exact | scaled:<f> | local[:<preset>]");
  tsr_params.value(tsr, "algo-eps", "algo_eps", "accuracy handed to the local algorithm");
  tsr_params.value(tsr, "trials", "trials", "instances");
  tsr->callback([&] { action = [&] { return run(g, "twosum.reduce", tsr_params.json()); }; });

  // sweep
  auto* sw = app.add_subcommand("sweep", "grid over any command, CSV output");
  std::string sw_command;
  std::vector<std::string> sw_grid, sw_set;
  sw->add_option("--command", sw_command, "e.g. foreach.roundtrip")->required();
  sw->add_option("--grid", sw_grid, "key=v1,v2,... (repeatable)");
  sw->add_option("--set", sw_set, "key=value fixed for every cell (repeatable)");
  sw->callback([&] {
    action = [&]() -> int {
      Json base = Json::object();
      for (const auto& s : sw_set) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--set", "expects key=value");
        base[s.substr(0, eq)] = scalar(s.substr(eq + 1));
      }
      Json grid = Json::array();
      for (const auto& s : sw_grid) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq + 1 == s.size())
          throw CLI::ValidationError("--grid", "expects key=v1,v2,...");
        grid.push_back({{"key", s.substr(0, eq)}, {"values", scalars(s.substr(eq + 1))}});
      }
      return sweep(g, sw_command, base, grid);
    };
  });

  // selftest
  auto* st = app.add_subcommand("selftest", "acceptance criteria 1-9");
  bool quick = false;
  st->add_flag("--quick", quick, "reduced sizes; criterion 8 checks accuracy only");
  st->callback([&] {
    action = [&] {
      int all = 0;
      const cutlab_status s = cutlab_selftest(quick, g.jobs, on_criterion, nullptr, &all);
      if (s != CUTLAB_OK) return report(s);
      return all ? kExitOk : kExitSelftest;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
}
