#include "cutlab/cut_oracle.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "cutlab/error.hpp"

namespace cutlab {

double ExactOracle::do_query(const NodeSet& s) { return cut_weight(graph_, s); }

std::uint64_t hash_node_set(const NodeSet& s, std::uint64_t seed) {
  std::uint64_t h = splitmix64(seed ^ 0x51ed270b2b7a4f1dULL);
  std::uint64_t word = 0;
  int filled = 0;
  auto absorb = [&](std::uint64_t w) { h = splitmix64(h ^ w) + 0x9e3779b97f4a7c15ULL; };
  // Two little-endian 4-byte members per 64-bit word.
  for (Vertex v : s.members()) {
    word |= static_cast<std::uint64_t>(v) << (32 * filled);
    if (++filled == 2) {
      absorb(word);
      word = 0;
      filled = 0;
    }
  }
  if (filled) absorb(word);
  absorb(s.size());
  return h;
}

NoisyOracle::NoisyOracle(const DirectedWeightedGraph& g, NoiseSpec spec, std::uint64_t seed)
    : CutOracle(g), spec_(std::move(spec)), seed_(seed), rng_(seed) {
  require(spec_.eps_prime >= 0.0 && spec_.eps_prime < 1.0, ErrorCode::kInvalidArgument,
          "noise eps' must lie in [0, 1)");
  if (spec_.mode == NoiseMode::kSigns) {
    require(!spec_.signs.empty(), ErrorCode::kInvalidArgument, "sign mode needs a sign sequence");
    for (int s : spec_.signs)
      require(s == 1 || s == -1, ErrorCode::kInvalidArgument, "signs must be +1 or -1");
  }
}

double NoisyOracle::do_query(const NodeSet& s) {
  const double truth = cut_weight(graph_, s);
  double factor = 1.0;
  switch (spec_.mode) {
    case NoiseMode::kFresh: {
      std::lock_guard lock(mu_);
      factor = 1.0 + spec_.eps_prime * (2.0 * rng_.uniform() - 1.0);
      break;
    }
    case NoiseMode::kHashed: {
      const double u = static_cast<double>(hash_node_set(s, seed_) >> 11) * 0x1.0p-53;
      factor = 1.0 + spec_.eps_prime * (2.0 * u - 1.0);
      break;
    }
    case NoiseMode::kSigns: {
      std::lock_guard lock(mu_);
      factor = 1.0 + spec_.eps_prime * spec_.signs[sign_pos_];
      sign_pos_ = (sign_pos_ + 1) % spec_.signs.size();
      break;
    }
  }
  return truth * factor;
}

std::string NoisyOracle::describe() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "noise:%.17g", spec_.eps_prime);
  std::string out = buf;
  switch (spec_.mode) {
    case NoiseMode::kFresh: return out + ":fresh";
    case NoiseMode::kHashed: return out + ":hashed";
    case NoiseMode::kSigns: {
      out += ":signs=";
      for (int s : spec_.signs) out += (s > 0 ? '+' : '-');
      return out;
    }
  }
  return out;
}

SparsifierOracle::SparsifierOracle(const DirectedWeightedGraph& g, double p, std::uint64_t seed)
    : CutOracle(g), p_(p), sparse_(g.vertex_count()) {
  require(p > 0.0 && p <= 1.0, ErrorCode::kInvalidArgument, "sparsifier p must lie in (0, 1]");
  Rng rng(seed);
  for (const auto& e : g.edges())
    if (p == 1.0 || rng.bernoulli(p)) sparse_.add_edge(e.from, e.to, e.weight / p);
}

double SparsifierOracle::declared_eps() const {
  return p_ == 1.0 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
}

std::string SparsifierOracle::describe() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "sparsifier:%.17g", p_);
  return buf;
}

double SparsifierOracle::do_query(const NodeSet& s) { return cut_weight(sparse_, s); }

namespace {

double parse_number(const std::string& text, const std::string& whole) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == text.size() && !text.empty(), ErrorCode::kInvalidArgument,
          "bad number in oracle spec: " + whole);
  return v;
}

}  // namespace

OracleSpec parse_oracle_spec(const std::string& text) {
  OracleSpec spec;
  spec.text = text;
  if (text == "exact") return spec;
  const auto colon = text.find(':');
  require(colon != std::string::npos, ErrorCode::kInvalidArgument,
          "unknown oracle spec: " + text);
  const std::string head = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  if (head == "sparsifier") {
    spec.kind = OracleSpec::Kind::kSparsifier;
    spec.keep_probability = parse_number(rest, text);
    require(spec.keep_probability > 0.0 && spec.keep_probability <= 1.0,
            ErrorCode::kInvalidArgument, "sparsifier p must lie in (0, 1]");
    return spec;
  }
  require(head == "noise", ErrorCode::kInvalidArgument, "unknown oracle spec: " + text);
  spec.kind = OracleSpec::Kind::kNoise;
  std::string mode = "hashed";
  if (auto c2 = rest.find(':'); c2 != std::string::npos) {
    mode = rest.substr(c2 + 1);
    rest = rest.substr(0, c2);
  }
  spec.noise.eps_prime = parse_number(rest, text);
  require(spec.noise.eps_prime >= 0.0 && spec.noise.eps_prime < 1.0, ErrorCode::kInvalidArgument,
          "noise eps' must lie in [0, 1)");
  if (mode == "hashed") {
    spec.noise.mode = NoiseMode::kHashed;
  } else if (mode == "fresh") {
    spec.noise.mode = NoiseMode::kFresh;
  } else if (mode.rfind("signs=", 0) == 0) {
    spec.noise.mode = NoiseMode::kSigns;
    for (char ch : mode.substr(6)) {
      require(ch == '+' || ch == '-', ErrorCode::kInvalidArgument, "signs take only + and -");
      spec.noise.signs.push_back(ch == '+' ? 1 : -1);
    }
    require(!spec.noise.signs.empty(), ErrorCode::kInvalidArgument, "empty sign sequence");
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown noise mode: " + mode);
  }
  return spec;
}

std::unique_ptr<CutOracle> make_oracle(const DirectedWeightedGraph& g, const OracleSpec& spec,
                                       std::uint64_t seed) {
  switch (spec.kind) {
    case OracleSpec::Kind::kExact: return std::make_unique<ExactOracle>(g);
    case OracleSpec::Kind::kNoise: return std::make_unique<NoisyOracle>(g, spec.noise, seed);
    case OracleSpec::Kind::kSparsifier:
      return std::make_unique<SparsifierOracle>(g, spec.keep_probability, seed);
  }
  fail(ErrorCode::kInternal, "unreachable oracle kind");
}

}  // namespace cutlab
