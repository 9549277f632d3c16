#include "cutlab/two_sum.hpp"

#include <cmath>

#include "cutlab/error.hpp"
#include "cutlab/min_cut.hpp"
#include "cutlab/random.hpp"

namespace cutlab {

std::size_t int_count(const BitString& x, const BitString& y) {
  require(x.size() == y.size(), ErrorCode::kInvalidArgument, "INT: length mismatch");
  std::size_t c = 0;
  for (std::size_t i = 0; i < x.size(); ++i) c += (x[i] & y[i]) != 0;
  return c;
}

int disj(const BitString& x, const BitString& y) { return int_count(x, y) == 0 ? 1 : 0; }

bool TwoSumInstance::promise_holds(double fraction) const {
  if (x.size() != t || y.size() != t) return false;
  std::size_t r = 0;
  for (std::size_t i = 0; i < t; ++i) {
    if (x[i].size() != L || y[i].size() != L) return false;
    const std::size_t c = int_count(x[i], y[i]);
    if (c != 0 && c != alpha) return false;
    r += c == alpha;
  }
  return r == r_true && r >= 1 && static_cast<double>(r) >= fraction * static_cast<double>(t);
}

TwoSumInstance amplify(const TwoSumInstance& inst, std::size_t alpha) {
  require(alpha >= 1, ErrorCode::kInvalidArgument, "alpha must be >= 1");
  TwoSumInstance out;
  out.t = inst.t;
  out.L = inst.L * alpha;
  out.alpha = inst.alpha * alpha;
  out.r_true = inst.r_true;
  for (std::size_t i = 0; i < inst.t; ++i) {
    require(int_count(inst.x[i], inst.y[i]) <= 1, ErrorCode::kPrecondition,
            "amplify needs every pair to have INT in {0, 1}");
    BitString xs, ys;
    for (std::size_t c = 0; c < alpha; ++c) {
      xs.insert(xs.end(), inst.x[i].begin(), inst.x[i].end());
      ys.insert(ys.end(), inst.y[i].begin(), inst.y[i].end());
    }
    out.x.push_back(std::move(xs));
    out.y.push_back(std::move(ys));
  }
  return out;
}

std::pair<BitString, BitString> random_pair_with_int(std::size_t n, std::size_t gamma, Rng& rng) {
  require(gamma <= n, ErrorCode::kInfeasible, "intersection larger than the string");
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[i] = i;
  rng.shuffle(std::span<std::size_t>(pos));
  BitString x(n, 0), y(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t p = pos[c];
    if (c < gamma) {
      x[p] = y[p] = 1;
    } else {
      switch (rng.below(3)) {  // 00, 01, 10
        case 1: y[p] = 1; break;
        case 2: x[p] = 1; break;
        default: break;
      }
    }
  }
  return {std::move(x), std::move(y)};
}

TwoSumInstance sample_two_sum(std::size_t t, std::size_t L, std::size_t alpha, std::size_t r,
                              std::uint64_t seed, double promise_fraction) {
  require(t >= 1 && L >= 1, ErrorCode::kInfeasible, "t and L must be positive");
  require(alpha >= 1 && alpha <= L, ErrorCode::kInfeasible, "need 1 <= alpha <= L");
  require(r <= t, ErrorCode::kInfeasible, "r cannot exceed t");
  const auto min_r = static_cast<std::size_t>(std::ceil(promise_fraction * static_cast<double>(t)));
  require(r >= std::max<std::size_t>(1, min_r), ErrorCode::kInfeasible,
          "r = " + std::to_string(r) + " violates the promise (need r >= " +
              std::to_string(std::max<std::size_t>(1, min_r)) + ")");
  Rng rng(seed);
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  rng.shuffle(std::span<std::size_t>(idx));
  std::vector<std::uint8_t> hit(t, 0);
  for (std::size_t c = 0; c < r; ++c) hit[idx[c]] = 1;
  TwoSumInstance inst;
  inst.t = t;
  inst.L = L;
  inst.alpha = alpha;
  inst.r_true = r;
  for (std::size_t i = 0; i < t; ++i) {
    auto [x, y] = random_pair_with_int(L, hit[i] ? alpha : 0, rng);
    inst.x.push_back(std::move(x));
    inst.y.push_back(std::move(y));
  }
  return inst;
}

BitString parse_bits(const std::string& s) {
  BitString b;
  for (char c : s) {
    require(c == '0' || c == '1', ErrorCode::kInvalidArgument, "bit strings use only 0 and 1");
    b.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return b;
}

std::string format_bits(const BitString& b) {
  std::string s;
  for (auto v : b) s.push_back(v ? '1' : '0');
  return s;
}

PairedStrings::PairedStrings(BitString xs, BitString ys) : x(std::move(xs)), y(std::move(ys)) {
  require(x.size() == y.size(), ErrorCode::kInvalidArgument, "x and y lengths differ");
  ell = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(x.size()))));
  require(ell >= 1 && ell * ell == x.size(), ErrorCode::kInvalidArgument,
          "N = " + std::to_string(x.size()) + " is not a positive perfect square");
  for (std::size_t i = 0; i < x.size(); ++i)
    require(x[i] <= 1 && y[i] <= 1, ErrorCode::kInvalidArgument, "strings must be binary");
}

GxyGraph build_gxy(const PairedStrings& p) {
  const GxyLayout lay{p.ell};
  GxyGraph g{UndirectedGraph(4 * p.ell), p.ell, int_count(p.x, p.y)};
  std::vector<Edge> edges;
  edges.reserve(2 * p.N());
  for (std::size_t i = 0; i < p.ell; ++i)
    for (std::size_t j = 0; j < p.ell; ++j) {
      const std::size_t q = p.index(i, j);
      if (p.x[q] && p.y[q]) {
        edges.push_back({lay.a(i), lay.b_prime(j)});
        edges.push_back({lay.b(i), lay.a_prime(j)});
      } else {
        edges.push_back({lay.a(i), lay.a_prime(j)});
        edges.push_back({lay.b(i), lay.b_prime(j)});
      }
    }
  g.graph = UndirectedGraph::from_edges(4 * p.ell, edges);
  return g;
}

std::size_t gxy_side_cut(const GxyGraph& g) {
  std::vector<Vertex> side;
  for (Vertex v = 0; v < 2 * g.ell; ++v) side.push_back(v);
  return cut_size(g.graph, NodeSet(side));
}

LemmaCheck check_mincut_lemma(const PairedStrings& p) {
  require(p.N() <= 400, ErrorCode::kSizeCap, "lemma check is capped at N <= 400");
  const GxyGraph g = build_gxy(p);
  LemmaCheck c;
  c.intersection = g.gamma;
  c.mincut = global_min_cut(g.graph, false).value;
  c.condition_met = p.ell >= 3 * g.gamma;
  c.holds = c.mincut == 2.0 * static_cast<double>(g.gamma);
  return c;
}

ConnectivityCheck check_connectivity(const PairedStrings& p) {
  require(p.N() <= 64, ErrorCode::kSizeCap, "connectivity check is capped at N <= 64");
  const GxyGraph g = build_gxy(p);
  ConnectivityCheck c;
  c.gamma = g.gamma;
  c.min_connectivity = min_pairwise_edge_connectivity(g.graph);
  c.holds = c.min_connectivity == static_cast<int>(2 * g.gamma);
  return c;
}

GxyOracle::GxyOracle(PairedStrings p) : p_(std::move(p)), lay_{p_.ell} {}

bool GxyOracle::both(std::size_t i, std::size_t j) {
  bits_.fetch_add(2, std::memory_order_relaxed);
  const std::size_t q = p_.index(i, j);
  return p_.x[q] && p_.y[q];
}

std::size_t GxyOracle::do_degree(Vertex v) {
  require(v < vertex_count(), ErrorCode::kInvalidArgument, "vertex out of range");
  return p_.ell;
}

std::optional<Vertex> GxyOracle::do_neighbor(Vertex v, std::size_t idx) {
  require(v < vertex_count(), ErrorCode::kInvalidArgument, "vertex out of range");
  if (idx == 0 || idx > p_.ell) return std::nullopt;
  const std::size_t part = v / p_.ell;
  const std::size_t me = v % p_.ell;
  const std::size_t other = idx - 1;
  switch (part) {
    case 0:  // a_i: a'_j or b'_j
      return both(me, other) ? lay_.b_prime(other) : lay_.a_prime(other);
    case 1:  // a'_j: a_i or b_i
      return both(other, me) ? lay_.b(other) : lay_.a(other);
    case 2:  // b_i: b'_j or a'_j
      return both(me, other) ? lay_.a_prime(other) : lay_.b_prime(other);
    default:  // b'_j: b_i or a_i
      return both(other, me) ? lay_.a(other) : lay_.b(other);
  }
}

bool GxyOracle::do_adjacent(Vertex u, Vertex v) {
  require(u < vertex_count() && v < vertex_count(), ErrorCode::kInvalidArgument,
          "vertex out of range");
  std::size_t pu = u / p_.ell, pv = v / p_.ell;
  if (pu == 1 || pu == 3) {
    std::swap(u, v);
    std::swap(pu, pv);
  }
  // Only left parts (A, B) against right parts (A', B') can be joined.
  if ((pu != 0 && pu != 2) || (pv != 1 && pv != 3)) return false;
  const bool crossed = both(u % p_.ell, v % p_.ell);
  const bool same_letter = (pu == 0) == (pv == 1);  // a-a' or b-b'
  return same_letter ? !crossed : crossed;
}

std::uint64_t communication_account(const LocalGraphOracle& o) {
  const QueryCounts c = o.counts();
  return 2 * (c.neighbor + c.adjacency);
}

double reduction_formula(double eps, double lambda, double mincut) {
  const double alpha = std::max(eps * eps * lambda, 1.0);
  return 1.0 / (eps * eps) - mincut / (2.0 * alpha);
}

ReductionOutput reduce_two_sum(const TwoSumInstance& inst, const MinCutAlgorithm& algo,
                               const ReductionInput& in) {
  require(in.eps > 0.0 && in.eps < 1.0, ErrorCode::kInvalidArgument, "eps must lie in (0, 1)");
  require(in.lambda > 0.0, ErrorCode::kInvalidArgument, "lambda must be positive");
  const double pairs = 1.0 / (in.eps * in.eps);
  require(std::fabs(pairs - static_cast<double>(inst.t)) <= 1e-9 * pairs, ErrorCode::kInfeasible,
          "the reduction needs t = 1/eps^2");
  ReductionOutput out;
  out.alpha_eff = std::max(in.eps * in.eps * in.lambda, 1.0);
  require(std::fabs(out.alpha_eff - static_cast<double>(inst.alpha)) <= 1e-9 * out.alpha_eff,
          ErrorCode::kInfeasible, "instance alpha must equal max(eps^2 lambda, 1)");
  require(inst.promise_holds(), ErrorCode::kInfeasible, "instance violates the 2-SUM promise");

  BitString x, y;
  for (std::size_t i = 0; i < inst.t; ++i) {
    x.insert(x.end(), inst.x[i].begin(), inst.x[i].end());
    y.insert(y.end(), inst.y[i].begin(), inst.y[i].end());
  }
  out.total_len = x.size();
  out.truth = inst.disj_sum();
  out.intersection = int_count(x, y);
  PairedStrings ps(std::move(x), std::move(y));
  const double root = static_cast<double>(ps.ell);
  if (in.rule == FeasibilityRule::kWorstCase) {
    require(root >= 3.0 * std::max(in.lambda, pairs), ErrorCode::kInfeasible,
            "sqrt(total_len) = " + std::to_string(ps.ell) + " < 3 max(lambda, 1/eps^2)");
  } else {
    require(root >= 3.0 * static_cast<double>(out.intersection), ErrorCode::kInfeasible,
            "sqrt(total_len) = " + std::to_string(ps.ell) + " < 3 INT(x, y) = " +
                std::to_string(3 * out.intersection));
  }
  const GxyGraph g = build_gxy(ps);
  GxyOracle oracle(ps);
  out.mincut_value = algo(g, oracle);
  out.estimate = reduction_formula(in.eps, in.lambda, out.mincut_value);
  return out;
}

}  // namespace cutlab
