#include "cutlab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "cutlab/cut_oracle.hpp"
#include "cutlab/edge_list.hpp"
#include "cutlab/error.hpp"
#include "cutlab/forall.hpp"
#include "cutlab/foreach.hpp"
#include "cutlab/graph_families.hpp"
#include "cutlab/local_query.hpp"
#include "cutlab/min_cut.hpp"
#include "cutlab/mincut_estimator.hpp"
#include "cutlab/random.hpp"
#include "cutlab/two_sum.hpp"

namespace cutlab {
namespace {

// Reads a flat parameter object, remembering which keys were consumed and the
// value actually used for each, so records carry no hidden defaults.
class Params {
 public:
  explicit Params(const Json& j) : raw_(j.is_null() ? Json::object() : j) {
    require(raw_.is_object(), ErrorCode::kInvalidArgument, "params must be a JSON object");
  }

  bool has(const std::string& key) const { return raw_.contains(key); }

  std::int64_t integer(const std::string& key, std::int64_t def) {
    const Json v = lookup(key);
    std::int64_t out = def;
    if (!v.is_null()) {
      const Json n = numeric(key, v);
      require(n.is_number_integer() || (n.is_number_float() && n.get<double>() == std::floor(n.get<double>())),
              ErrorCode::kInvalidArgument, "parameter " + key + " expects an integer");
      out = n.is_number_integer() ? n.get<std::int64_t>() : static_cast<std::int64_t>(n.get<double>());
    }
    resolved_[key] = out;
    return out;
  }

  std::size_t count(const std::string& key, std::size_t def) {
    const std::int64_t v = integer(key, static_cast<std::int64_t>(def));
    require(v >= 0, ErrorCode::kInvalidArgument, "parameter " + key + " must be non-negative");
    return static_cast<std::size_t>(v);
  }

  double real(const std::string& key, double def) {
    const Json v = lookup(key);
    const double out = v.is_null() ? def : numeric(key, v).get<double>();
    resolved_[key] = out;
    return out;
  }

  std::string text(const std::string& key, const std::string& def) {
    const Json v = lookup(key);
    std::string out = def;
    if (v.is_string()) out = v.get<std::string>();
    else if (!v.is_null()) out = v.dump();
    resolved_[key] = out;
    return out;
  }

  bool flag(const std::string& key, bool def) {
    const Json v = lookup(key);
    bool out = def;
    if (v.is_boolean()) {
      out = v.get<bool>();
    } else if (v.is_number_integer()) {
      out = v.get<std::int64_t>() != 0;
    } else if (v.is_string()) {
      const auto s = v.get<std::string>();
      require(s == "true" || s == "false" || s == "1" || s == "0", ErrorCode::kInvalidArgument,
              "parameter " + key + " expects true or false");
      out = s == "true" || s == "1";
    } else if (!v.is_null()) {
      fail(ErrorCode::kInvalidArgument, "parameter " + key + " expects true or false");
    }
    resolved_[key] = out;
    return out;
  }

  void finish(const std::string& command) const {
    for (const auto& [key, value] : raw_.items())
      if (!used_.contains(key))
        fail(ErrorCode::kInvalidArgument, "unknown parameter '" + key + "' for " + command);
  }

  const Json& resolved() const { return resolved_; }

 private:
  Json lookup(const std::string& key) {
    used_.insert(key);
    return raw_.contains(key) ? raw_.at(key) : Json();
  }

  static Json numeric(const std::string& key, const Json& v) {
    if (v.is_number()) return v;
    if (v.is_string()) {
      Json p = parse_scalar(v.get<std::string>());
      if (p.is_number()) return p;
    }
    fail(ErrorCode::kInvalidArgument, "parameter " + key + " expects a number");
  }

  Json raw_;
  Json resolved_ = Json::object();
  std::set<std::string> used_;
};

struct Context {
  std::string command;
  const RunOptions& opt;
  const RecordSink& sink;
  Json params;

  Json record(std::size_t trial, std::uint64_t trial_seed) const {
    return {{"command", command},
            {"params", params},
            {"seed", opt.seed},
            {"trial", trial},
            {"trial_seed", trial_seed},
            {"preset", opt.preset.name},
            {"constants", opt.preset.to_json()}};
  }
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void emit(const Context& ctx, Json rec, Clock::time_point start) {
  if (ctx.opt.timing) rec["wall_ms"] = elapsed_ms(start);
  ctx.sink(rec);
}

// ---- for-each ---------------------------------------------------------------

ForEachParams foreach_params(Params& in, const ConstantPreset& preset) {
  ForEachParams p;
  p.k = static_cast<int>(in.integer("k", 1));
  p.beta = static_cast<int>(in.integer("beta", 1));
  // k_block needs a valid beta; validate() reports the problem either way.
  std::size_t def_n = 0;
  if (p.beta >= 1 && p.k >= 1 && p.k <= 20) {
    const auto root = static_cast<std::size_t>(std::llround(std::sqrt(p.beta)));
    if (root * root == static_cast<std::size_t>(p.beta)) def_n = 2 * root * (std::size_t{1} << p.k);
  }
  p.n = in.count("n", def_n);
  p.c1 = in.real("c1", preset.foreach_c1);
  p.c2 = in.real("c2", preset.foreach_c2);
  p.validate();
  return p;
}

std::vector<std::int8_t> parse_signs(const std::string& s, std::size_t expected) {
  std::vector<std::int8_t> out;
  for (char ch : s) {
    require(ch == '+' || ch == '-', ErrorCode::kInvalidArgument, "signs take only + and -");
    out.push_back(ch == '+' ? 1 : -1);
  }
  require(out.size() == expected, ErrorCode::kInvalidArgument,
          "signs must have exactly " + std::to_string(expected) + " entries");
  return out;
}

std::string format_signs(const std::vector<std::int8_t>& s) {
  std::string out;
  for (auto v : s) out.push_back(v > 0 ? '+' : '-');
  return out;
}

double foreach_ratio_bound(const ForEachParams& p) {
  return 3.0 * p.c1 * p.beta * p.log_inv_eps();
}

double foreach_vmax(const ForEachParams& p) {
  double v = 0.0;
  for (std::size_t b = 0; b + 1 < p.blocks(); ++b) v = std::max(v, foreach_vmax_bound(p, b));
  return v;
}

void foreach_encode(Context& ctx, Params& in) {
  const ForEachParams p = foreach_params(in, ctx.opt.preset);
  const std::size_t trials = in.count("trials", 1);
  const std::string given = in.text("signs", "");
  const std::string graph_out = in.text("graph_out", "");
  in.finish(ctx.command);
  ctx.params = in.resolved();
  require(graph_out.empty() || trials == 1, ErrorCode::kInvalidArgument,
          "graph_out needs trials = 1");
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto start = Clock::now();
    const std::uint64_t seed = derive_seed(ctx.opt.seed, trial);
    Rng rng(seed);
    const auto s = given.empty() ? random_signs(p.capacity(), rng) : parse_signs(given, p.capacity());
    const auto enc = build_foreach_graph(s, p);
    if (!graph_out.empty()) save_edge_list(graph_out, AnyGraph(enc.graph));
    Json rec = ctx.record(trial, seed);
    rec["vertices"] = enc.graph.vertex_count();
    rec["edges"] = enc.graph.edge_count();
    rec["bit_count"] = p.capacity();
    rec["cluster_pairs"] = p.cluster_pairs();
    rec["failed_blocks"] = enc.failed_blocks();
    rec["reverse_ratio"] = edge_reverse_ratio(enc.graph);
    rec["ratio_bound"] = foreach_ratio_bound(p);
    rec["vmax_bound"] = foreach_vmax(p);
    rec["signs"] = format_signs(s);
    emit(ctx, std::move(rec), start);
  }
}

void foreach_decode(Context& ctx, Params& in) {
  const ForEachParams p = foreach_params(in, ctx.opt.preset);
  const std::string path = in.text("graph", "");
  const std::string oracle_text = in.text("oracle", "exact");
  in.finish(ctx.command);
  ctx.params = in.resolved();
  require(!path.empty(), ErrorCode::kInvalidArgument, "foreach decode needs graph=<file>");
  const auto start = Clock::now();
  const AnyGraph any = load_edge_list(path);
  const auto* g = std::get_if<DirectedWeightedGraph>(&any);
  require(g != nullptr, ErrorCode::kInvalidArgument, "foreach decode needs a directed graph");
  require(g->vertex_count() == p.n, ErrorCode::kInvalidArgument,
          "graph has " + std::to_string(g->vertex_count()) + " vertices, parameters give " +
              std::to_string(p.n));
  auto oracle = make_oracle(*g, parse_oracle_spec(oracle_text), derive_seed(ctx.opt.seed, 1));
  // The file carries no failure flags; every block is decoded.
  const std::vector<std::uint8_t> ok(p.cluster_pairs(), 1);
  std::vector<std::int8_t> bits;
  for (std::size_t q = 0; q < p.capacity(); ++q)
    bits.push_back(static_cast<std::int8_t>(decode_bit(*oracle, q, p, ok).sign));
  Json rec = ctx.record(0, ctx.opt.seed);
  rec["bit_count"] = p.capacity();
  rec["signs"] = format_signs(bits);
  rec["queries"] = oracle->query_count();
  rec["oracle"] = oracle->describe();
  emit(ctx, std::move(rec), start);
}

void foreach_roundtrip(Context& ctx, Params& in) {
  const ForEachParams p = foreach_params(in, ctx.opt.preset);
  const std::string oracle_text = in.text("oracle", "exact");
  const std::size_t trials = in.count("trials", 1);
  in.finish(ctx.command);
  ctx.params = in.resolved();
  const OracleSpec spec = parse_oracle_spec(oracle_text);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto start = Clock::now();
    const std::uint64_t seed = derive_seed(ctx.opt.seed, trial);
    Rng rng(seed);
    const auto s = random_signs(p.capacity(), rng);
    const auto enc = build_foreach_graph(s, p);
    auto oracle = make_oracle(enc.graph, spec, derive_seed(seed, 1));
    std::size_t failures = 0, correct = 0, errors = 0;
    for (std::size_t q = 0; q < p.capacity(); ++q) {
      if (!enc.block_success[locate_bit(p, q).pair]) {
        ++failures;
        continue;
      }
      if (decode_bit(*oracle, q, p, enc.block_success).sign == s[q]) ++correct;
      else ++errors;
    }
    Json rec = ctx.record(trial, seed);
    rec["bit_count"] = p.capacity();
    rec["failed_blocks"] = enc.failed_blocks();
    rec["failures"] = failures;
    rec["correct"] = correct;
    rec["errors"] = errors;
    rec["queries"] = oracle->query_count();
    rec["oracle"] = oracle->describe();
    rec["reverse_ratio"] = edge_reverse_ratio(enc.graph);
    rec["ratio_bound"] = foreach_ratio_bound(p);
    const double vmax = foreach_vmax(p);
    rec["vmax_bound"] = vmax;
    // c2 = 1/4 gives the guaranteed budget 4 eps' V_max < 1/eps.
    rec["noise_budget"] = p.c2 / (p.eps() * vmax);
    emit(ctx, std::move(rec), start);
  }
}

// ---- for-all ----------------------------------------------------------------

void forall_roundtrip(Context& ctx, Params& in) {
  const ConstantPreset& preset = ctx.opt.preset;
  ForAllParams p;
  p.d = static_cast<int>(in.integer("d", 16));
  p.beta = static_cast<int>(in.integer("beta", 1));
  p.n = in.count("n", 2 * p.k());
  p.c = in.real("c", preset.forall_c);
  p.c1 = in.real("c1", preset.forall_c1);
  p.c2 = in.real("c2", preset.forall_c2);
  p.enum_cap = static_cast<std::uint64_t>(in.integer("enum_cap", static_cast<std::int64_t>(preset.enum_cap)));
  const std::string oracle_text = in.text("oracle", "exact");
  const std::size_t trials = in.count("trials", 1);
  in.finish(ctx.command);
  ctx.params = in.resolved();
  p.validate();
  OracleSpec spec;
  if (oracle_text == "calibrated") {
    spec.kind = OracleSpec::Kind::kNoise;
    spec.noise.eps_prime = p.oracle_eps();
    spec.noise.mode = NoiseMode::kHashed;
    spec.text = oracle_text;
  } else {
    spec = parse_oracle_spec(oracle_text);
  }
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto start = Clock::now();
    const std::uint64_t seed = derive_seed(ctx.opt.seed, trial);
    const auto inst = sample_gap_hamming(p, seed);
    const auto enc = encode_forall(inst.strings, p);
    auto oracle = make_oracle(enc.graph, spec, derive_seed(seed, 1));
    const auto r = decode_forall(*oracle, {inst.block, inst.j, inst.bob_string}, inst.i, p,
                                 std::max(1u, ctx.opt.jobs));
    Json rec = ctx.record(trial, seed);
    rec["side_truth"] = inst.high ? "high" : "low";
    rec["side_decided"] = r.decided_low ? "low" : "high";
    rec["correct"] = r.decided_low != inst.high;
    rec["distance"] = inst.distance;
    rec["draws"] = inst.draws;
    rec["subsets_enumerated"] = r.subsets;
    rec["queries"] = oracle->query_count();
    rec["oracle"] = oracle->describe();
    rec["reverse_ratio"] = edge_reverse_ratio(enc.graph);
    rec["additive_tolerance"] = p.c1 * p.beta * std::pow(static_cast<double>(p.d), 1.5);
    emit(ctx, std::move(rec), start);
  }
}

// ---- local min-cut ----------------------------------------------------------

UndirectedGraph family_graph(const std::string& family, std::size_t n, std::size_t k,
                             std::size_t m, std::size_t chords, double p, std::uint64_t seed) {
  if (family == "cycle-chords") return cycle_chords(n, k, m, seed);
  if (family == "clique-bridge") return clique_bridge(n, k);
  if (family == "cycle") return cycle_graph(n);
  if (family == "complete") return complete_graph(n);
  if (family == "cycle-random-chords") return cycle_with_random_chords(n, chords, seed);
  if (family == "gnp") return random_gnp(n, p, seed);
  fail(ErrorCode::kInvalidArgument,
       "unknown family '" + family +
           "' (cycle-chords, clique-bridge, cycle, complete, cycle-random-chords, gnp)");
}

void mincut_estimate(Context& ctx, Params& in) {
  const std::string path = in.text("graph", "");
  const std::string family = path.empty() ? in.text("family", "cycle-chords") : "";
  std::size_t n = 0, k = 0, m = 0, chords = 0;
  double gnp_p = 0.0;
  if (path.empty()) {
    n = in.count("n", 200);
    k = in.count("k", 4);
    if (family == "cycle-chords") m = in.count("m", n * k / 2 + n);
    if (family == "cycle-random-chords") chords = in.count("chords", n / 10);
    if (family == "gnp") gnp_p = in.real("p", 0.1);
  }
  const double eps = in.real("eps", 0.2);
  const std::string mode = in.text("final_mode", ctx.opt.preset.final_mode);
  const std::size_t trials = in.count("trials", 1);
  const bool trace = in.flag("trace", false);
  in.finish(ctx.command);
  ctx.params = in.resolved();

  std::optional<UndirectedGraph> fixed;
  double fixed_k = 0.0;
  if (!path.empty()) {
    AnyGraph any = load_edge_list(path);
    auto* g = std::get_if<UndirectedGraph>(&any);
    require(g != nullptr, ErrorCode::kInvalidArgument, "mincut estimate needs an undirected graph");
    fixed = std::move(*g);
    fixed_k = global_min_cut(*fixed, false).value;
  }
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto start = Clock::now();
    const std::uint64_t seed = derive_seed(ctx.opt.seed, trial);
    UndirectedGraph g = fixed ? *fixed : family_graph(family, n, k, m, chords, gnp_p, derive_seed(seed, 7));
    const double truth = fixed ? fixed_k : global_min_cut(g, false).value;
    EstimatorConfig cfg = ctx.opt.preset.estimator(eps, seed);
    cfg.final_mode = parse_final_mode(mode);
    AdjacencyOracle oracle(std::move(g));
    const Estimate e = estimate_min_cut(oracle, cfg);
    Json rec = ctx.record(trial, seed);
    rec["n"] = oracle.vertex_count();
    rec["m"] = oracle.graph().edge_count();
    rec["k"] = truth;
    rec["eps"] = eps;
    rec["k_hat"] = e.k_hat;
    rec["rel_error"] = truth > 0 ? std::fabs(e.k_hat - truth) / truth : std::fabs(e.k_hat);
    rec["correct"] = std::fabs(e.k_hat - truth) <= eps * truth + 1e-9;
    rec["degree_q"] = e.counts.degree;
    rec["neighbor_q"] = e.counts.neighbor;
    rec["adjacency_q"] = e.counts.adjacency;
    rec["t_accepted"] = e.t_accepted;
    rec["t_final"] = e.t_final;
    rec["exact_fallback"] = e.exact_fallback;
    rec["kappa"] = cfg.kappa(oracle.vertex_count());
    if (trace) {
      Json steps = Json::array();
      for (const auto& t : e.trace)
        steps.push_back({{"t", t.t},
                         {"accuracy", t.accuracy},
                         {"final", t.final_call},
                         {"accepted", t.result.accepted},
                         {"early_reject", t.result.early_reject},
                         {"k_hat", t.result.k_hat},
                         {"p_hat", t.result.p_hat},
                         {"sampled_edges", t.result.sampled_edges},
                         {"neighbor_queries", t.result.neighbor_queries}});
      rec["trace"] = std::move(steps);
    }
    emit(ctx, std::move(rec), start);
  }
}

// ---- two-sum ----------------------------------------------------------------

template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i, w);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!err) err = std::current_exception();
        next = count;
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

void twosum_lemma_check(Context& ctx, Params& in) {
  const std::size_t N = in.count("N", 9);
  const bool exhaustive = in.flag("exhaustive", false);
  const std::size_t trials = exhaustive ? 0 : in.count("trials", 100);
  const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(N))));
  require(root >= 1 && root * root == N, ErrorCode::kInvalidArgument,
          "N = " + std::to_string(N) + " is not a positive perfect square");
  const std::size_t max_int = in.count("max_int", root / 3);
  const bool connectivity = in.flag("connectivity", false);
  in.finish(ctx.command);
  ctx.params = in.resolved();
  require(!exhaustive || N <= 10, ErrorCode::kSizeCap, "exhaustive lemma check is capped at N <= 10");
  require(!connectivity || N <= 64, ErrorCode::kSizeCap, "connectivity check is capped at N <= 64");

  const auto start = Clock::now();
  const unsigned jobs = std::max(1u, ctx.opt.jobs);
  std::vector<std::size_t> instances(jobs, 0), violations(jobs, 0), conn_viol(jobs, 0),
      skipped(jobs, 0);
  std::vector<std::map<std::size_t, std::size_t>> by_int(jobs);
  std::mutex first_mu;
  Json first = nullptr;
  auto check = [&](PairedStrings ps, unsigned w) {
    const auto c = check_mincut_lemma(ps);
    ++instances[w];
    ++by_int[w][c.intersection];
    bool bad = !c.holds;
    if (connectivity && !check_connectivity(ps).holds) {
      ++conn_viol[w];
      bad = true;
    }
    if (bad) {
      violations[w] += !c.holds;
      std::lock_guard lock(first_mu);
      if (first.is_null())
        first = {{"x", format_bits(ps.x)}, {"y", format_bits(ps.y)}, {"mincut", c.mincut},
                 {"intersection", c.intersection}};
    }
  };
  if (exhaustive) {
    const std::size_t side = std::size_t{1} << N;
    parallel_for(side, jobs, [&](std::size_t xm, unsigned w) {
      for (std::size_t ym = 0; ym < side; ++ym) {
        if (static_cast<std::size_t>(std::popcount(xm & ym)) > max_int) {
          ++skipped[w];
          continue;
        }
        BitString x(N), y(N);
        for (std::size_t b = 0; b < N; ++b) {
          x[b] = (xm >> b) & 1;
          y[b] = (ym >> b) & 1;
        }
        check(PairedStrings(std::move(x), std::move(y)), w);
      }
    });
  } else {
    parallel_for(trials, jobs, [&](std::size_t trial, unsigned w) {
      Rng rng(derive_seed(ctx.opt.seed, trial));
      const std::size_t gamma = rng.below(max_int + 1);
      auto [x, y] = random_pair_with_int(N, gamma, rng);
      check(PairedStrings(std::move(x), std::move(y)), w);
    });
  }
  Json rec = ctx.record(0, ctx.opt.seed);
  auto total = [](const std::vector<std::size_t>& v) {
    std::size_t s = 0;
    for (auto x : v) s += x;
    return s;
  };
  std::map<std::size_t, std::size_t> hist;
  for (const auto& m : by_int)
    for (const auto& [g, c] : m) hist[g] += c;
  Json h = Json::object();
  for (const auto& [g, c] : hist) h[std::to_string(g)] = c;
  rec["N"] = N;
  rec["mode"] = exhaustive ? "exhaustive" : "random";
  rec["instances"] = total(instances);
  rec["skipped"] = total(skipped);
  rec["violations"] = total(violations);
  if (connectivity) rec["connectivity_violations"] = total(conn_viol);
  rec["by_intersection"] = h;
  if (!first.is_null()) rec["first_violation"] = first;
  emit(ctx, std::move(rec), start);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

void twosum_reduce(Context& ctx, Params& in) {
  const std::size_t t = in.count("t", 16);
  const std::size_t L = in.count("L", 16);
  const std::size_t alpha = in.count("alpha", 1);
  const std::size_t r = in.count("r", 1);
  const double eps = in.real("eps", t > 0 ? 1.0 / std::sqrt(static_cast<double>(t)) : 0.0);
  const double lambda =
      in.real("lambda", alpha <= 1 ? 1.0 : static_cast<double>(alpha) / (eps * eps));
  const std::string rule_text = in.text("rule", "instance");
  const std::string algo = in.text("algo", "exact");
  const double algo_eps = in.real("algo_eps", eps);
  const std::size_t trials = in.count("trials", 1);
  in.finish(ctx.command);
  ctx.params = in.resolved();

  ReductionInput rin;
  rin.eps = eps;
  rin.lambda = lambda;
  if (rule_text == "instance") rin.rule = FeasibilityRule::kInstance;
  else if (rule_text == "worst") rin.rule = FeasibilityRule::kWorstCase;
  else fail(ErrorCode::kInvalidArgument, "rule must be worst or instance");
  require(alpha >= 1 && L % alpha == 0, ErrorCode::kInfeasible, "alpha must divide L");

  ConstantPreset local_preset = ctx.opt.preset;
  enum class Algo { kExact, kScaled, kLocal } kind;
  double scale = 1.0;
  if (algo == "exact") {
    kind = Algo::kExact;
  } else if (algo.rfind("scaled:", 0) == 0) {
    kind = Algo::kScaled;
    const Json s = parse_scalar(algo.substr(7));
    require(s.is_number() && s.get<double>() > 0, ErrorCode::kInvalidArgument,
            "scaled:<factor> needs a positive number");
    scale = s.get<double>();
  } else if (algo == "local" || algo.rfind("local:", 0) == 0) {
    kind = Algo::kLocal;
    if (algo.size() > 6) local_preset = preset_by_name(algo.substr(6));
  } else {
    fail(ErrorCode::kInvalidArgument, "algo must be exact, scaled:<f> or local[:<preset>]");
  }

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto start = Clock::now();
    const std::uint64_t seed = derive_seed(ctx.opt.seed, trial);
    const TwoSumInstance inst =
        alpha == 1 ? sample_two_sum(t, L, 1, r, seed, ctx.opt.preset.promise_fraction)
                   : amplify(sample_two_sum(t, L / alpha, 1, r, seed, ctx.opt.preset.promise_fraction),
                             alpha);
    QueryCounts counts;
    std::uint64_t bits = 0, transcript = 0;
    std::vector<double> reps;
    const MinCutAlgorithm run = [&](const GxyGraph& g, GxyOracle& o) {
      double value = 0.0;
      if (kind == Algo::kLocal) {
        for (std::uint64_t rep = 0; rep < std::max<std::uint64_t>(1, local_preset.repetitions); ++rep)
          reps.push_back(estimate_min_cut(o, local_preset.estimator(algo_eps, derive_seed(seed, 100 + rep))).k_hat);
        value = median(reps);
      } else {
        value = global_min_cut(g.graph, false).value * scale;
      }
      counts = o.counts();
      bits = communication_account(o);
      transcript = o.transcript_bits();
      return value;
    };
    const ReductionOutput out = reduce_two_sum(inst, run, rin);
    Json rec = ctx.record(trial, seed);
    rec["estimate"] = out.estimate;
    rec["truth"] = out.truth;
    rec["error"] = out.estimate - static_cast<double>(out.truth);
    rec["mincut"] = out.mincut_value;
    rec["total_len"] = out.total_len;
    rec["intersection"] = out.intersection;
    rec["alpha_eff"] = out.alpha_eff;
    rec["r"] = inst.r_true;
    rec["bits"] = bits;
    rec["transcript_bits"] = transcript;
    rec["degree_q"] = counts.degree;
    rec["neighbor_q"] = counts.neighbor;
    rec["adjacency_q"] = counts.adjacency;
    if (kind == Algo::kLocal) rec["algo_runs"] = reps;
    emit(ctx, std::move(rec), start);
  }
}

using Handler = void (*)(Context&, Params&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"foreach.encode", foreach_encode},
      {"foreach.decode", foreach_decode},
      {"foreach.roundtrip", foreach_roundtrip},
      {"forall.roundtrip", forall_roundtrip},
      {"mincut.estimate", mincut_estimate},
      {"twosum.lemma-check", twosum_lemma_check},
      {"twosum.reduce", twosum_reduce},
  };
  return table;
}

void flatten_into(const Json& j, const std::string& prefix, Json& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten_into(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    out[prefix] = j.dump();
  } else {
    out[prefix] = j;
  }
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [name, h] : handlers()) out.push_back(name);
  return out;
}

void run_command(const std::string& command, const Json& params, const RunOptions& opt,
                 const RecordSink& sink) {
  const auto it = handlers().find(command);
  if (it == handlers().end()) {
    std::string known;
    for (const auto& n : command_names()) known += (known.empty() ? "" : ", ") + n;
    fail(ErrorCode::kInvalidArgument, "unknown command '" + command + "' (" + known + ")");
  }
  Params in(params);
  Context ctx{command, opt, sink, Json::object()};
  it->second(ctx, in);
}

std::vector<Json> run_command(const std::string& command, const Json& params,
                              const RunOptions& opt) {
  std::vector<Json> out;
  run_command(command, params, opt, [&](const Json& r) { out.push_back(r); });
  return out;
}

std::string to_jsonl(const std::vector<Json>& records) {
  std::string out;
  for (const auto& r : records) out += r.dump() + "\n";
  return out;
}

Json parse_scalar(const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  if (!text.empty()) {
    std::size_t used = 0;
    try {
      if (text.find_first_of(".eE") == std::string::npos && text.find("inf") == std::string::npos &&
          text.find("nan") == std::string::npos) {
        const long long v = std::stoll(text, &used);
        if (used == text.size()) return v;
      }
      const double d = std::stod(text, &used);
      if (used == text.size() && std::isfinite(d)) return d;
    } catch (const std::exception&) {
    }
  }
  return text;
}

SweepAxis parse_axis(const std::string& text) {
  const auto eq = text.find('=');
  require(eq != std::string::npos && eq > 0, ErrorCode::kInvalidArgument,
          "grid axis must look like key=v1,v2,...");
  SweepAxis axis;
  axis.key = text.substr(0, eq);
  const std::string rest = text.substr(eq + 1);
  require(!rest.empty(), ErrorCode::kInvalidArgument, "grid axis " + axis.key + " has no values");
  std::size_t pos = 0;
  while (true) {
    const auto comma = rest.find(',', pos);
    const std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    require(!item.empty(), ErrorCode::kInvalidArgument, "empty value in grid axis " + axis.key);
    axis.values.push_back(parse_scalar(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return axis;
}

std::vector<Json> run_sweep(const SweepSpec& spec, const RunOptions& opt) {
  require(handlers().contains(spec.command), ErrorCode::kInvalidArgument,
          "unknown command '" + spec.command + "'");
  require(!spec.axes.empty(), ErrorCode::kInvalidArgument, "empty grid: give at least one axis");
  std::uint64_t cells = 1;
  std::set<std::string> keys;
  for (const auto& a : spec.axes) {
    require(!a.values.empty(), ErrorCode::kInvalidArgument, "empty grid axis " + a.key);
    require(keys.insert(a.key).second, ErrorCode::kInvalidArgument, "grid axis repeated: " + a.key);
    cells *= a.values.size();
    require(cells <= kSweepCellCap, ErrorCode::kSizeCap,
            "grid too large: more than " + std::to_string(kSweepCellCap) + " cells");
  }
  std::vector<std::vector<Json>> results(cells);
  RunOptions inner = opt;
  inner.jobs = 1;
  parallel_for(cells, std::max(1u, opt.jobs), [&](std::size_t cell, unsigned) {
    Json params = spec.base.is_null() ? Json::object() : spec.base;
    std::size_t rest = cell;
    Json point = Json::object();
    for (auto a = spec.axes.rbegin(); a != spec.axes.rend(); ++a) {
      const Json& v = a->values[rest % a->values.size()];
      rest /= a->values.size();
      params[a->key] = v;
      point[a->key] = v;
    }
    RunOptions o = inner;
    o.seed = derive_seed(opt.seed, cell);
    run_command(spec.command, params, o, [&](const Json& rec) {
      Json row = rec;
      row["cell"] = cell;
      row["grid"] = point;
      results[cell].push_back(std::move(row));
    });
  });
  std::vector<Json> rows;
  for (auto& r : results)
    for (auto& rec : r) rows.push_back(std::move(rec));
  return rows;
}

Json flatten_record(const Json& record) {
  Json out = Json::object();
  flatten_into(record, "", out);
  return out;
}

std::string to_csv(const std::vector<Json>& rows) {
  std::vector<Json> flat;
  std::set<std::string> columns;
  for (const auto& r : rows) {
    flat.push_back(flatten_record(r));
    for (const auto& [k, v] : flat.back().items()) columns.insert(k);
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& c : columns) {
    out << (first ? "" : ",") << csv_cell(c);
    first = false;
  }
  out << "\n";
  for (const auto& f : flat) {
    first = true;
    for (const auto& c : columns) {
      out << (first ? "" : ",") << (f.contains(c) ? csv_cell(f.at(c)) : "");
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace cutlab
