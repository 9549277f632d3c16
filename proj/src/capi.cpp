#include "cutlab/cutlab.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "cutlab/cut_oracle.hpp"
#include "cutlab/edge_list.hpp"
#include "cutlab/error.hpp"
#include "cutlab/experiments.hpp"
#include "cutlab/graph.hpp"
#include "cutlab/local_query.hpp"
#include "cutlab/min_cut.hpp"
#include "cutlab/mincut_estimator.hpp"
#include "cutlab/presets.hpp"
#include "cutlab/selftest.hpp"

struct cutlab_graph {
  cutlab::DirectedWeightedGraph g;
};

struct cutlab_cut_oracle {
  std::unique_ptr<cutlab::CutOracle> o;
};

struct cutlab_local_oracle {
  std::unique_ptr<cutlab::AdjacencyOracle> o;
};

namespace {

thread_local std::string last_error;

cutlab_status to_status(cutlab::ErrorCode c) {
  switch (c) {
    case cutlab::ErrorCode::kInvalidArgument: return CUTLAB_INVALID_ARGUMENT;
    case cutlab::ErrorCode::kInfeasible: return CUTLAB_INFEASIBLE;
    case cutlab::ErrorCode::kPrecondition: return CUTLAB_PRECONDITION;
    case cutlab::ErrorCode::kSizeCap: return CUTLAB_SIZE_CAP;
    case cutlab::ErrorCode::kEncodingFailed: return CUTLAB_ENCODING_FAILED;
    case cutlab::ErrorCode::kIo: return CUTLAB_IO;
    case cutlab::ErrorCode::kInconsistentOracle: return CUTLAB_INCONSISTENT_ORACLE;
    default: return CUTLAB_INTERNAL;
  }
}

template <class Fn>
cutlab_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return CUTLAB_OK;
  } catch (const cutlab::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("bad JSON: ") + e.what();
    return CUTLAB_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CUTLAB_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CUTLAB_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return CUTLAB_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  cutlab::require(p != nullptr, cutlab::ErrorCode::kInvalidArgument,
                  std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cutlab::NodeSet node_set(const uint32_t* members, size_t count, size_t n) {
  cutlab::require(members != nullptr || count == 0, cutlab::ErrorCode::kInvalidArgument,
                  "members must not be NULL");
  std::vector<cutlab::Vertex> v(members, members + count);
  for (auto x : v)
    cutlab::require(x < n, cutlab::ErrorCode::kInvalidArgument, "member out of range");
  return cutlab::NodeSet(std::move(v));
}

nlohmann::json parse_json(const char* text) {
  if (text == nullptr || *text == '\0') return nlohmann::json::object();
  return nlohmann::json::parse(text);
}

cutlab::RunOptions run_options(const char* options_json) {
  const nlohmann::json j = parse_json(options_json);
  cutlab::require(j.is_object(), cutlab::ErrorCode::kInvalidArgument, "options must be an object");
  cutlab::RunOptions o;
  for (const auto& [key, value] : j.items()) {
    if (key == "seed") o.seed = value.get<std::uint64_t>();
    else if (key == "preset") o.preset = cutlab::preset_by_name(value.get<std::string>());
    else if (key == "jobs") o.jobs = std::max(1u, value.get<unsigned>());
    else if (key == "timing") o.timing = value.get<bool>();
    else if (key != "constants")
      cutlab::fail(cutlab::ErrorCode::kInvalidArgument, "unknown option '" + key + "'");
  }
  // Overrides apply on top of the chosen preset.
  if (j.contains("constants")) cutlab::apply_constants_file(o.preset, j.at("constants").get<std::string>());
  return o;
}

}  // namespace

extern "C" {

const char* cutlab_version(void) { return CUTLAB_VERSION; }

const char* cutlab_last_error(void) { return last_error.c_str(); }

void cutlab_string_free(char* s) { std::free(s); }

cutlab_status cutlab_graph_create(uint32_t n, cutlab_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = new cutlab_graph{cutlab::DirectedWeightedGraph(n)};
  });
}

cutlab_status cutlab_graph_load(const char* path, cutlab_graph** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    cutlab::AnyGraph any = cutlab::load_edge_list(path);
    cutlab::DirectedWeightedGraph g(0);
    if (auto* d = std::get_if<cutlab::DirectedWeightedGraph>(&any)) {
      g = std::move(*d);
    } else {
      const auto& u = std::get<cutlab::UndirectedGraph>(any);
      g = cutlab::DirectedWeightedGraph(u.vertex_count());
      for (cutlab::Vertex v = 0; v < u.vertex_count(); ++v)
        for (auto w : u.neighbors(v)) g.add_edge(v, w, 1.0);
    }
    *out = new cutlab_graph{std::move(g)};
  });
}

cutlab_status cutlab_graph_save(const cutlab_graph* g, const char* path) {
  return guarded([&] {
    need(g, "graph");
    need(path, "path");
    cutlab::save_edge_list(path, cutlab::AnyGraph(g->g));
  });
}

void cutlab_graph_free(cutlab_graph* g) { delete g; }

cutlab_status cutlab_graph_add_edge(cutlab_graph* g, uint32_t from, uint32_t to, double weight) {
  return guarded([&] {
    need(g, "graph");
    g->g.add_edge(from, to, weight);
  });
}

cutlab_status cutlab_graph_vertex_count(const cutlab_graph* g, size_t* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = g->g.vertex_count();
  });
}

cutlab_status cutlab_graph_edge_count(const cutlab_graph* g, size_t* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = g->g.edge_count();
  });
}

cutlab_status cutlab_graph_cut_weight(const cutlab_graph* g, const uint32_t* members, size_t count,
                                      double* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = cutlab::cut_weight(g->g, node_set(members, count, g->g.vertex_count()));
  });
}

cutlab_status cutlab_graph_min_cut(const cutlab_graph* g, double* value, uint8_t* side) {
  return guarded([&] {
    need(g, "graph");
    need(value, "value");
    // Symmetrise: w(u,v) + w(v,u) per unordered pair.
    std::vector<cutlab::UndirectedWeightedEdge> edges;
    for (const auto& e : g->g.edges()) edges.push_back({e.from, e.to, e.weight});
    const auto r = cutlab::global_min_cut(g->g.vertex_count(), edges, side != nullptr);
    *value = r.value;
    if (side) {
      std::memset(side, 0, g->g.vertex_count());
      for (auto v : r.witness.members()) side[v] = 1;
    }
  });
}

cutlab_status cutlab_cut_oracle_create(const cutlab_graph* g, const char* spec, uint64_t seed,
                                       cutlab_cut_oracle** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    auto o = cutlab::make_oracle(g->g, cutlab::parse_oracle_spec(spec ? spec : "exact"), seed);
    *out = new cutlab_cut_oracle{std::move(o)};
  });
}

void cutlab_cut_oracle_free(cutlab_cut_oracle* o) { delete o; }

cutlab_status cutlab_cut_oracle_query(cutlab_cut_oracle* o, const uint32_t* members, size_t count,
                                      double* out) {
  return guarded([&] {
    need(o, "oracle");
    need(out, "out");
    *out = o->o->query(node_set(members, count, o->o->vertex_count()));
  });
}

cutlab_status cutlab_cut_oracle_query_count(const cutlab_cut_oracle* o, uint64_t* out) {
  return guarded([&] {
    need(o, "oracle");
    need(out, "out");
    *out = o->o->query_count();
  });
}

cutlab_status cutlab_local_oracle_create(uint32_t n, const uint32_t* endpoints, size_t edge_count,
                                         cutlab_local_oracle** out) {
  return guarded([&] {
    need(out, "out");
    cutlab::require(endpoints != nullptr || edge_count == 0, cutlab::ErrorCode::kInvalidArgument,
                    "endpoints must not be NULL");
    std::vector<cutlab::Edge> edges;
    for (size_t i = 0; i < edge_count; ++i) edges.push_back({endpoints[2 * i], endpoints[2 * i + 1]});
    auto g = cutlab::UndirectedGraph::from_edges(n, edges);
    *out = new cutlab_local_oracle{std::make_unique<cutlab::AdjacencyOracle>(std::move(g))};
  });
}

void cutlab_local_oracle_free(cutlab_local_oracle* o) { delete o; }

cutlab_status cutlab_local_degree(cutlab_local_oracle* o, uint32_t v, size_t* out) {
  return guarded([&] {
    need(o, "oracle");
    need(out, "out");
    *out = o->o->degree(v);
  });
}

cutlab_status cutlab_local_neighbor(cutlab_local_oracle* o, uint32_t v, size_t i, uint32_t* out,
                                    int* found) {
  return guarded([&] {
    need(o, "oracle");
    need(out, "out");
    need(found, "found");
    const auto r = o->o->neighbor(v, i);
    *found = r.has_value();
    *out = r.value_or(0);
  });
}

cutlab_status cutlab_local_adjacent(cutlab_local_oracle* o, uint32_t u, uint32_t v, int* out) {
  return guarded([&] {
    need(o, "oracle");
    need(out, "out");
    *out = o->o->adjacent(u, v);
  });
}

cutlab_status cutlab_local_counts(const cutlab_local_oracle* o, uint64_t* degree, uint64_t* neighbor,
                                  uint64_t* adjacency) {
  return guarded([&] {
    need(o, "oracle");
    const auto c = o->o->counts();
    if (degree) *degree = c.degree;
    if (neighbor) *neighbor = c.neighbor;
    if (adjacency) *adjacency = c.adjacency;
  });
}

cutlab_status cutlab_local_estimate(cutlab_local_oracle* o, double eps, const char* options_json,
                                    double* k_hat) {
  return guarded([&] {
    need(o, "oracle");
    need(k_hat, "k_hat");
    const auto opt = run_options(options_json);
    *k_hat = cutlab::estimate_min_cut(*o->o, opt.preset.estimator(eps, opt.seed)).k_hat;
  });
}

cutlab_status cutlab_run(const char* command, const char* params_json, const char* options_json,
                         char** out) {
  return guarded([&] {
    need(command, "command");
    need(out, "out");
    const auto records = cutlab::run_command(command, parse_json(params_json), run_options(options_json));
    *out = dup_string(cutlab::to_jsonl(records));
  });
}

cutlab_status cutlab_sweep(const char* command, const char* base_json, const char* grid_json,
                           const char* options_json, char** out) {
  return guarded([&] {
    need(command, "command");
    need(out, "out");
    cutlab::SweepSpec spec;
    spec.command = command;
    spec.base = parse_json(base_json);
    const nlohmann::json grid = parse_json(grid_json);
    if (grid.is_array()) {
      // [{"key": k, "values": [...]}, ...] keeps the caller's axis order.
      for (const auto& a : grid)
        spec.axes.push_back({a.at("key").get<std::string>(), a.at("values").get<std::vector<nlohmann::json>>()});
    } else {
      cutlab::require(grid.is_object(), cutlab::ErrorCode::kInvalidArgument,
                      "grid must be an object or an array");
      for (const auto& [key, values] : grid.items()) {
        cutlab::require(values.is_array(), cutlab::ErrorCode::kInvalidArgument,
                        "grid axis " + key + " must be an array");
        spec.axes.push_back({key, values.get<std::vector<nlohmann::json>>()});
      }
    }
    *out = dup_string(cutlab::to_csv(cutlab::run_sweep(spec, run_options(options_json))));
  });
}

cutlab_status cutlab_commands(char** out) {
  return guarded([&] {
    need(out, "out");
    std::string s;
    for (const auto& c : cutlab::command_names()) s += c + "\n";
    *out = dup_string(s);
  });
}

cutlab_status cutlab_selftest(int quick, unsigned jobs, cutlab_criterion_cb cb, void* user,
                              int* all_passed) {
  return guarded([&] {
    need(all_passed, "all_passed");
    cutlab::SelftestOptions opt;
    opt.quick = quick != 0;
    opt.jobs = std::max(1u, jobs);
    const auto results = cutlab::run_selftest(opt, [&](const cutlab::CriterionResult& r) {
      if (cb) cb(user, r.id, r.name.c_str(), r.passed, r.seconds, cutlab::format_result(r).c_str());
    });
    bool ok = !results.empty();
    for (const auto& r : results) ok = ok && r.passed;
    *all_passed = ok;
  });
}

}  // extern "C"
