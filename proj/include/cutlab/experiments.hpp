#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cutlab/presets.hpp"

namespace cutlab {

struct RunOptions {
  ConstantPreset preset = desk_preset();
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool timing = false;
};

using Json = nlohmann::json;
using RecordSink = std::function<void(const Json&)>;

/// Dotted names: foreach.encode, foreach.decode, foreach.roundtrip, forall.roundtrip,
/// mincut.estimate, twosum.lemma-check, twosum.reduce.
std::vector<std::string> command_names();

/// Runs one command; `params` is a flat object whose values may be numbers,
/// booleans or strings. Unknown keys are rejected.
void run_command(const std::string& command, const Json& params, const RunOptions& opt,
                 const RecordSink& sink);
std::vector<Json> run_command(const std::string& command, const Json& params,
                              const RunOptions& opt);

/// Serialises records one per line.
std::string to_jsonl(const std::vector<Json>& records);

struct SweepAxis {
  std::string key;
  std::vector<Json> values;
};

struct SweepSpec {
  std::string command;
  Json base = Json::object();
  std::vector<SweepAxis> axes;
};

inline constexpr std::uint64_t kSweepCellCap = 100000;

/// `key=v1,v2,...`; numbers are parsed as numbers, the rest kept as strings.
SweepAxis parse_axis(const std::string& text);
Json parse_scalar(const std::string& text);

/// Cross product of the axes. Cell c runs with seed derive_seed(opt.seed, c);
/// rows come back in cell order whatever the worker count.
std::vector<Json> run_sweep(const SweepSpec& spec, const RunOptions& opt);

/// Nested objects become dotted columns, arrays are written as JSON text.
Json flatten_record(const Json& record);
std::string to_csv(const std::vector<Json>& rows);

}  // namespace cutlab
