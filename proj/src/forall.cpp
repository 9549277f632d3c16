#include "cutlab/forall.hpp"

#include <cmath>
#include <limits>
#include <thread>

#include "cutlab/error.hpp"
#include "cutlab/random.hpp"

namespace cutlab {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

double ForAllParams::gap() const { return c * std::sqrt(static_cast<double>(d)); }

double ForAllParams::oracle_eps() const { return c2 / std::sqrt(static_cast<double>(d)); }

void ForAllParams::validate() const {
  require(d >= 2 && d % 2 == 0, ErrorCode::kInfeasible, "d = 1/eps^2 must be an even integer >= 2");
  require(beta >= 1, ErrorCode::kInfeasible, "beta must be a positive integer");
  if (n % k() != 0 || n / k() < 2) {
    const std::size_t lo = std::max<std::size_t>(2, n / k()) * k();
    fail(ErrorCode::kInfeasible, "n must be a multiple of beta*d = " + std::to_string(k()) +
                                     " with at least 2 blocks; try n = " + std::to_string(lo) +
                                     " or " + std::to_string(lo + k()));
  }
  require(c >= 0.0, ErrorCode::kInvalidArgument, "gap constant c must be >= 0");
  require(gap() <= d / 2.0, ErrorCode::kInfeasible, "gap c/eps exceeds d/2");
  require(enum_cap >= 1, ErrorCode::kInvalidArgument, "enum_cap must be positive");
}

std::size_t forall_string_index(const ForAllParams& p, std::size_t block, std::size_t i, std::size_t j) {
  return (block * p.k() + i) * static_cast<std::size_t>(p.beta) + j;
}

namespace {

BitString random_half_weight(std::size_t d, Rng& rng) {
  BitString s(d, 0);
  std::fill(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(d / 2), 1);
  rng.shuffle(std::span<std::uint8_t>(s));
  return s;
}

int hamming(const BitString& a, const BitString& b) {
  int h = 0;
  for (std::size_t i = 0; i < a.size(); ++i) h += a[i] != b[i];
  return h;
}

}  // namespace

GapHammingInstance sample_gap_hamming(const ForAllParams& p, std::uint64_t seed) {
  p.validate();
  Rng rng(seed);
  GapHammingInstance inst;
  const auto d = static_cast<std::size_t>(p.d);
  inst.strings.reserve(p.string_count());
  for (std::size_t s = 0; s < p.string_count(); ++s) inst.strings.push_back(random_half_weight(d, rng));
  inst.block = rng.below(p.blocks() - 1);
  inst.i = rng.below(p.k());
  inst.j = rng.below(static_cast<std::uint64_t>(p.beta));
  inst.high = rng.bernoulli(0.5);

  const double half = p.d / 2.0;
  const double gap = p.gap();
  constexpr std::uint64_t kCap = 1000000;
  const std::size_t idx = forall_string_index(p, inst.block, inst.i, inst.j);
  while (true) {
    require(inst.draws < kCap, ErrorCode::kInfeasible,
            "gap-Hamming rejection sampling exceeded 10^6 draws");
    ++inst.draws;
    BitString s = random_half_weight(d, rng);
    BitString t = random_half_weight(d, rng);
    const int delta = hamming(s, t);
    const bool ok = inst.high ? delta >= half + gap : delta <= half - gap;
    if (ok) {
      inst.strings[idx] = std::move(s);
      inst.bob_string = std::move(t);
      inst.distance = delta;
      break;
    }
  }
  return inst;
}

std::pair<int, int> hamming_intersection_identity(const BitString& s, const BitString& t) {
  require(s.size() == t.size(), ErrorCode::kInvalidArgument, "length mismatch");
  int ws = 0, wt = 0, both = 0, diff = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    ws += s[i];
    wt += t[i];
    both += s[i] & t[i];
    diff += s[i] != t[i];
  }
  const int d = static_cast<int>(s.size());
  require(d % 2 == 0 && ws == d / 2 && wt == d / 2, ErrorCode::kInvalidArgument,
          "both strings must have weight d/2");
  require(diff == d - 2 * both, ErrorCode::kInternal, "Hamming/intersection identity violated");
  return {diff, both};
}

Vertex forall_left_vertex(const ForAllParams& p, std::size_t block, std::size_t i) {
  return static_cast<Vertex>(block * p.k() + i);
}

Vertex forall_right_vertex(const ForAllParams& p, std::size_t block, std::size_t j, std::size_t v) {
  return static_cast<Vertex>((block + 1) * p.k() + j * static_cast<std::size_t>(p.d) + v);
}

ForAllEncoding encode_forall(const std::vector<BitString>& strings, const ForAllParams& p) {
  p.validate();
  require(strings.size() == p.string_count(), ErrorCode::kInvalidArgument,
          "expected " + std::to_string(p.string_count()) + " strings, got " +
              std::to_string(strings.size()));
  ForAllEncoding enc{DirectedWeightedGraph(p.n)};
  const double back = 1.0 / p.beta;
  for (std::size_t b = 0; b + 1 < p.blocks(); ++b)
    for (std::size_t i = 0; i < p.k(); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(p.beta); ++j) {
        const BitString& s = strings[forall_string_index(p, b, i, j)];
        require(s.size() == static_cast<std::size_t>(p.d), ErrorCode::kInvalidArgument,
                "every string must have length d");
        for (std::size_t v = 0; v < s.size(); ++v) {
          require(s[v] <= 1, ErrorCode::kInvalidArgument, "strings must be binary");
          const Vertex u = forall_left_vertex(p, b, i);
          const Vertex r = forall_right_vertex(p, b, j, v);
          enc.graph.add_edge(u, r, s[v] + 1.0);
          enc.graph.add_edge(r, u, back);
        }
      }
  return enc;
}

double forall_backward_subtraction(const ForAllParams& p, std::size_t block) {
  const double k = static_cast<double>(p.k());
  const double beta = p.beta;
  const double half_d = p.d / 2.0;
  double sub = (k - half_d) * (k / 2.0) / beta;
  if (block >= 1) sub += k * (k / 2.0) / beta;
  if (block + 2 < p.blocks()) sub += k * half_d / beta;
  return sub;
}

NodeSet forall_query_set(const ForAllParams& p, const ForAllQuery& q,
                         const std::vector<std::size_t>& left) {
  std::vector<Vertex> m;
  m.reserve(p.n);
  for (std::size_t i : left) m.push_back(forall_left_vertex(p, q.block, i));
  const std::size_t lo = (q.block + 1) * p.k();
  for (std::size_t v = lo; v < lo + p.k(); ++v) {
    const std::size_t off = v - lo;
    const bool in_t = off / static_cast<std::size_t>(p.d) == q.j && q.t[off % static_cast<std::size_t>(p.d)];
    if (!in_t) m.push_back(static_cast<Vertex>(v));
  }
  for (std::size_t v = lo + p.k(); v < p.n; ++v) m.push_back(static_cast<Vertex>(v));
  return NodeSet(std::move(m));
}

std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t r) {
  std::vector<std::size_t> c;
  c.reserve(r);
  std::size_t x = 0;
  for (std::size_t slot = 0; slot < r; ++slot) {
    while (true) {
      const std::uint64_t with_x = binomial(n - x - 1, r - slot - 1);
      if (rank < with_x) break;
      rank -= with_x;
      ++x;
    }
    c.push_back(x++);
  }
  return c;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t r = c.size();
  std::size_t pos = r;
  while (pos > 0 && c[pos - 1] == n - r + pos - 1) --pos;
  if (pos == 0) return false;
  ++c[pos - 1];
  for (std::size_t q = pos; q < r; ++q) c[q] = c[q - 1] + 1;
  return true;
}

ForAllDecode decode_forall(CutOracle& oracle, const ForAllQuery& q, std::size_t i,
                           const ForAllParams& p, unsigned jobs) {
  p.validate();
  require(q.block + 1 < p.blocks() && q.j < static_cast<std::size_t>(p.beta) && i < p.k(),
          ErrorCode::kInvalidArgument, "Bob index out of range");
  require(q.t.size() == static_cast<std::size_t>(p.d), ErrorCode::kInvalidArgument,
          "Bob string must have length d");
  const std::size_t k = p.k();
  const std::uint64_t total = binomial(k, k / 2);
  require(total <= p.enum_cap, ErrorCode::kSizeCap,
          "C(" + std::to_string(k) + ", " + std::to_string(k / 2) + ") = " + std::to_string(total) +
              " exceeds enum_cap " + std::to_string(p.enum_cap));
  const double sub = forall_backward_subtraction(p, q.block);

  struct Local {
    double best = -std::numeric_limits<double>::infinity();
    std::uint64_t rank = 0;
    std::vector<std::size_t> subset;
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
  std::vector<Local> parts(jobs);
  auto work = [&](unsigned w) {
    const std::uint64_t lo = total * w / jobs;
    const std::uint64_t hi = total * (w + 1) / jobs;
    if (lo >= hi) return;
    auto comb = unrank_combination(lo, k, k / 2);
    Local& mine = parts[w];
    for (std::uint64_t r = lo; r < hi; ++r) {
      const double est = oracle.query(forall_query_set(p, q, comb)) - sub;
      if (est > mine.best) {
        mine.best = est;
        mine.rank = r;
        mine.subset = comb;
      }
      if (r + 1 < hi) next_combination(comb, k);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  // Parts cover increasing rank ranges, so strict > keeps the lexicographically first maximum.
  const Local* win = &parts[0];
  for (const Local& part : parts)
    if (part.best > win->best) win = &part;

  ForAllDecode out;
  out.best_subset = win->subset;
  out.best_estimate = win->best;
  out.subsets = total;
  out.decided_low = std::find(out.best_subset.begin(), out.best_subset.end(), i) != out.best_subset.end();
  return out;
}

LevelFractions forall_level_fractions(const GapHammingInstance& inst, const ForAllParams& p) {
  const double quarter = p.d / 4.0;
  const double half_gap = p.gap() / 2.0;
  LevelFractions f;
  for (std::size_t i = 0; i < p.k(); ++i) {
    const auto [delta, both] =
        hamming_intersection_identity(inst.strings[forall_string_index(p, inst.block, i, inst.j)], inst.bob_string);
    (void)delta;
    if (both >= quarter + half_gap) f.high += 1.0;
    if (both <= quarter - half_gap) f.low += 1.0;
  }
  f.high /= static_cast<double>(p.k());
  f.low /= static_cast<double>(p.k());
  return f;
}

}  // namespace cutlab
