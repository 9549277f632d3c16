#include "cutlab/presets.hpp"

#include <fstream>
#include <sstream>

#include "cutlab/error.hpp"

namespace cutlab {

nlohmann::json ConstantPreset::to_json() const {
  return {{"name", name},
          {"foreach_c1", foreach_c1},
          {"foreach_c2", foreach_c2},
          {"forall_c", forall_c},
          {"forall_c1", forall_c1},
          {"forall_c2", forall_c2},
          {"c_kappa", c_kappa},
          {"c_sample", c_sample},
          {"c_final", c_final},
          {"beta0", beta0},
          {"enum_cap", enum_cap},
          {"repetitions", repetitions},
          {"promise_fraction", promise_fraction},
          {"accept_fraction", accept_fraction},
          {"final_mode", final_mode}};
}

namespace {

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == v.size() && !v.empty(), ErrorCode::kInvalidArgument,
          "constant " + key + " expects a number, got '" + v + "'");
  return d;
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  unsigned long long u = 0;
  try {
    u = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == v.size() && !v.empty() && v[0] != '-', ErrorCode::kInvalidArgument,
          "constant " + key + " expects a non-negative integer, got '" + v + "'");
  return u;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void ConstantPreset::set(const std::string& key, const std::string& value) {
  if (key == "foreach_c1") foreach_c1 = to_double(key, value);
  else if (key == "foreach_c2") foreach_c2 = to_double(key, value);
  else if (key == "forall_c") forall_c = to_double(key, value);
  else if (key == "forall_c1") forall_c1 = to_double(key, value);
  else if (key == "forall_c2") forall_c2 = to_double(key, value);
  else if (key == "c_kappa") c_kappa = to_double(key, value);
  else if (key == "c_sample") c_sample = to_double(key, value);
  else if (key == "c_final") c_final = to_double(key, value);
  else if (key == "beta0") beta0 = to_double(key, value);
  else if (key == "enum_cap") enum_cap = to_u64(key, value);
  else if (key == "repetitions") repetitions = to_u64(key, value);
  else if (key == "promise_fraction") promise_fraction = to_double(key, value);
  else if (key == "accept_fraction") accept_fraction = to_double(key, value);
  else if (key == "final_mode") {
    parse_final_mode(value);
    final_mode = value;
  } else if (key == "name") name = value;
  else fail(ErrorCode::kInvalidArgument, "unknown constant '" + key + "'");
}

EstimatorConfig ConstantPreset::estimator(double eps, std::uint64_t seed) const {
  EstimatorConfig c;
  c.eps = eps;
  c.beta0 = beta0;
  c.c_kappa = c_kappa;
  c.c_sample = c_sample;
  c.c_final = c_final;
  c.accept_fraction = accept_fraction;
  c.final_mode = parse_final_mode(final_mode);
  c.seed = seed;
  c.validate();
  return c;
}

ConstantPreset desk_preset() { return ConstantPreset{}; }

ConstantPreset paper_preset() {
  ConstantPreset p;
  p.name = "paper";
  p.c_kappa = 2000.0;
  p.c_sample = 12.0;
  return p;
}

ConstantPreset preset_by_name(const std::string& name) {
  if (name == "desk") return desk_preset();
  if (name == "paper") return paper_preset();
  fail(ErrorCode::kInvalidArgument, "unknown preset '" + name + "' (expected paper or desk)");
}

void apply_constants_text(ConstantPreset& p, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool renamed = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos, ErrorCode::kInvalidArgument,
            "constants line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    p.set(key, trim(line.substr(eq + 1)));
    renamed = renamed || key == "name";
  }
  if (!renamed) p.name += "+custom";
}

void apply_constants_file(ConstantPreset& p, const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kIo, "cannot open constants file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  apply_constants_text(p, ss.str());
}

}  // namespace cutlab
