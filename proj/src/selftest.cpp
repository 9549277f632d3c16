#include "cutlab/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cutlab/cut_oracle.hpp"
#include "cutlab/error.hpp"
#include "cutlab/experiments.hpp"
#include "cutlab/forall.hpp"
#include "cutlab/foreach.hpp"
#include "cutlab/graph_families.hpp"
#include "cutlab/hadamard.hpp"
#include "cutlab/local_query.hpp"
#include "cutlab/min_cut.hpp"
#include "cutlab/mincut_estimator.hpp"
#include "cutlab/presets.hpp"
#include "cutlab/random.hpp"
#include "cutlab/two_sum.hpp"

namespace cutlab {
namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
};

std::string fmt(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

// ---- 1 ----------------------------------------------------------------------

void encoding_matrix(const SelftestOptions& opt, Outcome& out) {
  for (int k = 1; k <= 4; ++k) {
    const EncodingMatrix m(k);
    std::vector<SignVector> rows;
    for (std::size_t t = 1; t <= m.row_count(); ++t) rows.push_back(m.row(t).entries);
    std::size_t bad = 0;
    for (std::size_t a = 0; a < rows.size(); ++a) {
      std::int64_t sum = 0;
      for (auto e : rows[a]) sum += e;
      bad += sum != 0;
      for (std::size_t b = a + 1; b < rows.size(); ++b) bad += dot(rows[a], rows[b]) != 0;
    }
    if (bad) out.ok = false;
    out.detail << "k=" << k << ":" << rows.size() << " rows " << (bad ? "FAIL " : "ok ");
  }
  // k = 5, 6: rows are H_i (x) H_j, so <M_t, M_u> = <H_i, H_i'> <H_j, H_j'>.
  for (int k = 5; k <= 6; ++k) {
    const HadamardMatrix h(k);
    const EncodingMatrix m(k);
    const std::size_t s = h.order();
    std::size_t bad = 0;
    std::vector<SignVector> hr;
    for (std::size_t i = 1; i <= s; ++i) hr.push_back(h.row(i));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i; j < s; ++j)
        bad += dot(hr[i], hr[j]) != (i == j ? static_cast<std::int64_t>(s) : 0);
    for (std::size_t i = 1; i < s; ++i) {
      std::int64_t sum = 0;
      for (auto e : hr[i]) sum += e;
      bad += sum != 0;
    }
    for (std::size_t t = 1; t <= m.row_count(); ++t) {
      const auto [i, j] = m.row_index_pair(t);
      bad += i < 2 || j < 2;
      const auto row = m.row(t).entries;
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b)
          bad += row[a * s + b] != hr[i - 1][a] * hr[j - 1][b];
    }
    Rng rng(derive_seed(opt.seed, 100 + k));
    const std::size_t samples = opt.quick ? 200 : 2000;
    for (std::size_t c = 0; c < samples; ++c) {
      const std::size_t t = 1 + rng.below(m.row_count()), u = 1 + rng.below(m.row_count());
      const auto [i, j] = m.row_index_pair(t);
      const auto [i2, j2] = m.row_index_pair(u);
      bad += dot(m.row(t).entries, m.row(u).entries) !=
             dot(hr[i - 1], hr[i2 - 1]) * dot(hr[j - 1], hr[j2 - 1]);
    }
    if (bad) out.ok = false;
    out.detail << "k=" << k << ":factor " << (bad ? "FAIL " : "ok ");
  }
}

// ---- 2 and 4 (for-each part) ------------------------------------------------

struct ForEachRun {
  std::size_t bits = 0, wrong = 0, pairs = 0, failed = 0;
  double worst_ratio_slack = 0.0;  // max(ratio - bound)
  bool ratio_ok = true;
};

ForEachRun foreach_roundtrips(int k, int beta, std::size_t strings, std::uint64_t seed) {
  ForEachParams p;
  p.k = k;
  p.beta = beta;
  p.n = 2 * static_cast<std::size_t>(std::llround(std::sqrt(beta))) * (std::size_t{1} << k);
  p.c1 = desk_preset().foreach_c1;
  p.validate();
  ForEachRun run;
  run.worst_ratio_slack = -1e300;
  const double bound = 3.0 * p.c1 * p.beta * p.log_inv_eps();
  for (std::size_t s = 0; s < strings; ++s) {
    Rng rng(derive_seed(seed, s));
    const auto z = random_signs(p.capacity(), rng);
    const auto enc = build_foreach_graph(z, p);
    ExactOracle o(enc.graph);
    run.pairs += p.cluster_pairs();
    run.failed += enc.failed_blocks();
    for (std::size_t q = 0; q < p.capacity(); ++q) {
      if (!enc.block_success[locate_bit(p, q).pair]) continue;
      ++run.bits;
      run.wrong += decode_bit(o, q, p, enc.block_success).sign != z[q];
    }
    const double ratio = edge_reverse_ratio(enc.graph);
    run.worst_ratio_slack = std::max(run.worst_ratio_slack, ratio - bound);
    if (ratio > bound * (1 + 1e-12)) run.ratio_ok = false;
  }
  return run;
}

void foreach_exact(const SelftestOptions& opt, Outcome& out) {
  const std::size_t strings = opt.quick ? 10 : 50;
  for (int k = 1; k <= 3; ++k)
    for (int beta : {1, 4}) {
      const auto r = foreach_roundtrips(k, beta, strings, derive_seed(opt.seed, 200 + 10 * k + beta));
      const double rate = static_cast<double>(r.failed) / static_cast<double>(r.pairs);
      const bool ok = r.wrong == 0 && rate < 0.05;
      out.ok = out.ok && ok;
      out.detail << "(k=" << k << ",b=" << beta << ") " << r.bits - r.wrong << "/" << r.bits
                 << " fail=" << fmt(100 * rate, 2) << "% ";
    }
}

// ---- 3 ----------------------------------------------------------------------

void foreach_noisy(const SelftestOptions& opt, Outcome& out) {
  std::size_t decoded = 0, wrong = 0, flips = 0, probes = 0;
  const std::size_t strings = opt.quick ? 2 : 5;
  for (int k = 1; k <= 2; ++k)
    for (int beta : {1, 4}) {
      ForEachParams p;
      p.k = k;
      p.beta = beta;
      p.n = 2 * static_cast<std::size_t>(std::llround(std::sqrt(beta))) * (std::size_t{1} << k);
      p.validate();
      for (std::size_t s = 0; s < strings; ++s) {
        Rng rng(derive_seed(opt.seed, 300 + 10 * k + beta + 1000 * s));
        const auto z = random_signs(p.capacity(), rng);
        const auto enc = build_foreach_graph(z, p);
        for (std::size_t q = 0; q < p.capacity(); ++q) {
          const auto loc = locate_bit(p, q);
          if (!enc.block_success[loc.pair]) continue;
          const double budget = 1.0 / (4.0 * p.eps() * foreach_vmax_bound(p, loc.block));
          for (int pattern = 0; pattern < 16; ++pattern) {
            std::vector<int> signs;
            for (int b = 0; b < 4; ++b) signs.push_back((pattern >> b) & 1 ? 1 : -1);
            NoisyOracle inside(enc.graph, {0.999 * budget, NoiseMode::kSigns, signs}, 0);
            ++decoded;
            wrong += decode_bit(inside, q, p, enc.block_success).sign != z[q];
            NoisyOracle past(enc.graph, {std::min(0.999, 2.0 * budget), NoiseMode::kSigns, signs}, 0);
            ++probes;
            flips += decode_bit(past, q, p, enc.block_success).sign != z[q];
          }
        }
      }
    }
  out.ok = wrong == 0 && flips > 0;
  out.detail << "within budget " << decoded - wrong << "/" << decoded << " correct; at 2x budget "
             << flips << "/" << probes << " sign patterns flip a bit";
}

// ---- 4 ----------------------------------------------------------------------

ForAllParams forall_params(int beta, int d, const ConstantPreset& preset) {
  ForAllParams p;
  p.d = d;
  p.beta = beta;
  p.n = 2 * p.k();
  p.c = preset.forall_c;
  p.c1 = preset.forall_c1;
  p.c2 = preset.forall_c2;
  p.enum_cap = preset.enum_cap;
  p.validate();
  return p;
}

void balance(const SelftestOptions& opt, Outcome& out) {
  bool fe_ok = true;
  double worst = -1e300;
  for (int k = 1; k <= 3; ++k)
    for (int beta : {1, 4}) {
      const auto r = foreach_roundtrips(k, beta, opt.quick ? 5 : 20, derive_seed(opt.seed, 400 + 10 * k + beta));
      fe_ok = fe_ok && r.ratio_ok;
      worst = std::max(worst, r.worst_ratio_slack);
    }
  out.detail << "for-each ratio-bound max " << fmt(worst) << (fe_ok ? " ok; " : " FAIL; ");
  const ConstantPreset preset = desk_preset();
  bool fa_ok = true;
  for (auto [beta, d] : {std::pair{1, 16}, {2, 8}, {4, 4}, {1, 4}})
    for (std::uint64_t s = 0; s < (opt.quick ? 3u : 10u); ++s) {
      const auto p = forall_params(beta, d, preset);
      const auto enc = encode_forall(sample_gap_hamming(p, derive_seed(opt.seed, 450 + s)).strings, p);
      fa_ok = fa_ok && edge_reverse_ratio(enc.graph) == 2.0 * beta;
    }
  out.detail << "for-all ratio == 2beta " << (fa_ok ? "ok; " : "FAIL; ");
  // Exhaustive all-cuts balance on n = 8.
  ForEachParams fp;
  fp.k = 2;
  fp.beta = 1;
  fp.n = 8;
  Rng rng(derive_seed(opt.seed, 460));
  const auto fe = build_foreach_graph(random_signs(fp.capacity(), rng), fp);
  const bool fe_ex = is_beta_balanced_exhaustive(fe.graph, 3.0 * fp.c1 * fp.beta * fp.log_inv_eps());
  const auto ap = forall_params(1, 4, preset);
  const auto fa = encode_forall(sample_gap_hamming(ap, derive_seed(opt.seed, 461)).strings, ap);
  const bool fa_ex = is_beta_balanced_exhaustive(fa.graph, 2.0 * ap.beta);
  out.detail << "exhaustive n=8 for-each " << (fe_ex ? "ok" : "FAIL") << ", for-all "
             << (fa_ex ? "ok" : "FAIL");
  out.ok = fe_ok && fa_ok && fe_ex && fa_ex;
}

// ---- 5 ----------------------------------------------------------------------

void forall_decode(const SelftestOptions& opt, Outcome& out) {
  const ConstantPreset preset = desk_preset();
  const std::size_t instances = opt.quick ? 20 : 100;
  for (auto [beta, d] : {std::pair{1, 16}, {2, 8}, {4, 4}}) {
    const auto p = forall_params(beta, d, preset);
    std::size_t exact_ok = 0, noisy_ok = 0;
    for (std::size_t s = 0; s < instances; ++s) {
      const std::uint64_t seed = derive_seed(opt.seed, 500 + 1000 * beta + s);
      const auto inst = sample_gap_hamming(p, seed);
      const auto enc = encode_forall(inst.strings, p);
      const ForAllQuery q{inst.block, inst.j, inst.bob_string};
      ExactOracle exact(enc.graph);
      exact_ok += decode_forall(exact, q, inst.i, p, opt.jobs).decided_low != inst.high;
      NoisyOracle noisy(enc.graph, {p.oracle_eps(), NoiseMode::kHashed, {}}, derive_seed(seed, 1));
      noisy_ok += decode_forall(noisy, q, inst.i, p, opt.jobs).decided_low != inst.high;
    }
    const double e = static_cast<double>(exact_ok) / instances;
    const double n = static_cast<double>(noisy_ok) / instances;
    out.ok = out.ok && e >= 0.95 && n >= 2.0 / 3.0;
    out.detail << "(b=" << beta << ",d=" << d << ") exact " << fmt(e) << " noisy " << fmt(n) << " ";
  }
  out.detail << "[c2=" << preset.forall_c2 << "]";
}

// ---- 6 ----------------------------------------------------------------------

void kconnected(const SelftestOptions& opt, Outcome& out) {
  RunOptions ro;
  ro.seed = derive_seed(opt.seed, 600);
  ro.jobs = opt.jobs;
  std::size_t total_viol = 0;
  const Json ex = run_command("twosum.lemma-check", {{"N", 9}, {"exhaustive", true}}, ro).at(0);
  total_viol += ex["violations"].get<std::size_t>();
  out.detail << "N=9 exhaustive " << ex["instances"] << " pairs, " << ex["violations"]
             << " violations; ";
  for (int N : {16, 25, 36}) {
    ro.seed = derive_seed(opt.seed, 600 + N);
    const Json r = run_command("twosum.lemma-check", {{"N", N}, {"trials", opt.quick ? 50 : 500}}, ro).at(0);
    total_viol += r["violations"].get<std::size_t>();
    out.detail << "N=" << N << " " << r["violations"] << "/" << r["instances"] << "; ";
  }
  // All-pairs edge connectivity on N = 25 with gamma = 1.
  std::size_t conn_bad = 0;
  const std::size_t conn = opt.quick ? 5 : 20;
  Rng rng(derive_seed(opt.seed, 625));
  for (std::size_t c = 0; c < conn; ++c) {
    auto [x, y] = random_pair_with_int(25, 1, rng);
    conn_bad += !check_connectivity(PairedStrings(std::move(x), std::move(y))).holds;
  }
  out.detail << "connectivity " << conn - conn_bad << "/" << conn;
  out.ok = total_viol == 0 && conn_bad == 0;
}

// ---- 7 ----------------------------------------------------------------------

void reduction(const SelftestOptions& opt, Outcome& out) {
  const double eps = 0.25;
  std::size_t exact_bad = 0, count = 0;
  double worst = 0.0;
  const std::size_t per_alpha = opt.quick ? 10 : 50;
  auto exact = [](const GxyGraph& g, GxyOracle&) { return global_min_cut(g.graph, false).value; };
  for (std::size_t alpha : {1u, 2u}) {
    const ReductionInput in{eps, alpha == 1 ? 1.0 : alpha / (eps * eps), FeasibilityRule::kInstance};
    for (std::size_t c = 0; c < per_alpha; ++c) {
      const std::uint64_t seed = derive_seed(opt.seed, 700 + 100 * alpha + c);
      // 3 INT <= sqrt(256) = 16 bounds r by 5 (alpha 1) and 2 (alpha 2).
      const std::size_t r = 1 + c % (alpha == 1 ? 5 : 2);
      const TwoSumInstance inst = alpha == 1 ? sample_two_sum(16, 16, 1, r, seed)
                                             : amplify(sample_two_sum(16, 8, 1, r, seed), 2);
      const auto base = reduce_two_sum(inst, exact, in);
      ++count;
      exact_bad += base.estimate != static_cast<double>(base.truth);
      Rng rng(seed);
      const double factors[] = {1 - eps, 1 + eps, 1 - eps + 2 * eps * rng.uniform()};
      for (double f : factors) {
        const MinCutAlgorithm approx = [&](const GxyGraph& g, GxyOracle& o) { return f * exact(g, o); };
        const auto a = reduce_two_sum(inst, approx, in);
        worst = std::max(worst, std::fabs(a.estimate - static_cast<double>(a.truth)));
      }
    }
  }
  out.ok = exact_bad == 0 && worst <= 1.0 / eps;
  out.detail << "exact " << count - exact_bad << "/" << count << "; (1+-eps) worst error "
             << fmt(worst) << " <= " << 1.0 / eps << " [per-instance feasibility]";
}

// ---- 8 ----------------------------------------------------------------------

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

struct CellStats {
  double accuracy = 0.0;
  double median_neighbor = 0.0;
};

CellStats estimator_cell(std::size_t n, std::size_t k, double eps, std::size_t runs,
                         std::uint64_t seed) {
  const ConstantPreset preset = desk_preset();
  std::size_t good = 0;
  std::vector<double> nbr;
  for (std::size_t r = 0; r < runs; ++r) {
    const std::uint64_t s = derive_seed(seed, r);
    // Planted family: global min cut is exactly k (vertex 0 has degree k).
    AdjacencyOracle o(cycle_chords(n, k, 10 * n, derive_seed(s, 7)));
    const Estimate e = estimate_min_cut(o, preset.estimator(eps, s));
    good += std::fabs(e.k_hat - static_cast<double>(k)) <= eps * static_cast<double>(k) + 1e-9;
    nbr.push_back(static_cast<double>(e.counts.neighbor));
  }
  return {static_cast<double>(good) / static_cast<double>(runs), median_of(nbr)};
}

void local_estimator(const SelftestOptions& opt, Outcome& out) {
  const std::vector<std::size_t> ns = opt.quick ? std::vector<std::size_t>{200}
                                                : std::vector<std::size_t>{200, 500, 1000};
  const std::vector<std::size_t> ks{2, 4, 8, 16};
  const std::size_t runs = opt.quick ? 10 : 50;
  double worst_acc = 1.0;
  double k_lo = 1e300, k_hi = -1e300, e_lo = 1e300, e_hi = -1e300;
  bool scaling_ok = true;
  for (auto n : ns) {
    std::vector<CellStats> at_eps;
    for (auto k : ks) {
      const auto c = estimator_cell(n, k, 0.2, runs, derive_seed(opt.seed, 800 + 37 * n + k));
      worst_acc = std::min(worst_acc, c.accuracy);
      at_eps.push_back(c);
      if (!opt.quick) {
        const auto h = estimator_cell(n, k, 0.1, runs, derive_seed(opt.seed, 900 + 37 * n + k));
        const double ratio = h.median_neighbor / c.median_neighbor;
        e_lo = std::min(e_lo, ratio);
        e_hi = std::max(e_hi, ratio);
        scaling_ok = scaling_ok && ratio >= 2.5 && ratio <= 6.0;
      }
    }
    if (!opt.quick)
      for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
        const double ratio = at_eps[i + 1].median_neighbor / at_eps[i].median_neighbor;
        k_lo = std::min(k_lo, ratio);
        k_hi = std::max(k_hi, ratio);
        scaling_ok = scaling_ok && ratio >= 0.3 && ratio <= 0.8;
      }
  }
  const bool acc_ok = worst_acc >= 0.9;
  out.detail << "accuracy worst cell " << fmt(worst_acc) << (acc_ok ? " ok" : " FAIL");
  if (opt.quick) {
    out.detail << "; scaling not checked in quick mode (accuracy only)";
    out.ok = acc_ok;
  } else {
    out.detail << "; neighbor-query ratio k->2k in [" << fmt(k_lo) << ", " << fmt(k_hi)
               << "] (need [0.3, 0.8]); eps->eps/2 in [" << fmt(e_lo) << ", " << fmt(e_hi)
               << "] (need [2.5, 6])";
    out.ok = acc_ok && scaling_ok;
  }
}

// ---- 9 ----------------------------------------------------------------------

void communication(const SelftestOptions& opt, Outcome& out) {
  const TwoSumInstance inst = sample_two_sum(16, 16, 1, 2, derive_seed(opt.seed, 900));
  BitString x, y;
  for (std::size_t i = 0; i < inst.t; ++i) {
    x.insert(x.end(), inst.x[i].begin(), inst.x[i].end());
    y.insert(y.end(), inst.y[i].begin(), inst.y[i].end());
  }
  GxyOracle o(PairedStrings(std::move(x), std::move(y)));
  const Estimate e = estimate_min_cut(o, desk_preset().estimator(0.25, derive_seed(opt.seed, 901)));
  for (int extra = 0; extra < 5; ++extra) o.adjacent(0, static_cast<Vertex>(16 + extra));
  const QueryCounts before = o.counts();
  const std::uint64_t reported = communication_account(o);
  const std::uint64_t transcript = o.transcript_bits();
  for (Vertex v = 0; v < o.vertex_count(); ++v) o.degree(v);
  const bool degree_free = communication_account(o) == reported && o.transcript_bits() == transcript;
  const bool formula = reported == 2 * (before.neighbor + before.adjacency);
  // Every issued query needed one (x_ij, y_ij) exchange of two bits.
  const bool matches = transcript == reported;
  out.ok = formula && degree_free && matches && before.degree > 0;
  out.detail << "bits " << reported << " = 2*(" << before.neighbor << "+" << before.adjacency
             << "), transcript " << transcript << ", degree queries " << o.counts().degree
             << (degree_free ? " free" : " CHARGED") << ", k_hat " << fmt(e.k_hat);
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  void (*fn)(const SelftestOptions&, Outcome&);
};

constexpr Criterion kCriteria[] = {
    {1, "encoding matrix orthogonality", 30, encoding_matrix},
    {2, "for-each exact roundtrip", 60, foreach_exact},
    {3, "for-each guaranteed noisy recovery", 10, foreach_noisy},
    {4, "balance", 30, balance},
    {5, "for-all decode", 300, forall_decode},
    {6, "mincut equals 2 INT", 600, kconnected},
    {7, "reduction exactness", 120, reduction},
    {8, "local min-cut estimator", 600, local_estimator},
    {9, "communication accounting", 60, communication},
};

}  // namespace

std::vector<CriterionResult> run_selftest(const SelftestOptions& opt,
                                          const CriterionCallback& on_result) {
  std::vector<CriterionResult> results;
  for (const auto& c : kCriteria) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), c.id) == opt.only.end())
      continue;
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.limit_seconds = c.limit;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.fn(opt, o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " error: " << e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.detail = o.detail.str();
    r.passed = o.ok && r.seconds < r.limit_seconds;
    if (o.ok && !r.passed) r.detail += " [over time limit]";
    results.push_back(r);
    if (on_result) on_result(r);
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "[%s] %d %s (%.1fs / %.0fs): ", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.limit_seconds);
  return head + r.detail;
}

}  // namespace cutlab
