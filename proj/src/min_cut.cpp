#include "cutlab/min_cut.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "cutlab/error.hpp"

namespace cutlab {
namespace {

struct DisjointSets {
  std::vector<Vertex> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Vertex find(Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Tracks the best cut seen so far and its witness.
class BestCut {
 public:
  explicit BestCut(bool want) : want_(want) {}

  double value() const { return value_; }

  // `side` must already be sorted and contain vertex 0.
  template <typename MakeSide>
  void offer(double v, MakeSide&& make_side) {
    if (v < value_) {
      value_ = v;
      if (want_) side_ = make_side();
    } else if (want_ && v == value_) {
      auto s = make_side();
      if (std::lexicographical_compare(s.begin(), s.end(), side_.begin(), side_.end()))
        side_ = std::move(s);
    }
  }

  MinCut result() const {
    MinCut r;
    r.value = value_;
    if (want_) r.witness = NodeSet(side_);
    return r;
  }

 private:
  bool want_;
  double value_ = std::numeric_limits<double>::infinity();
  std::vector<Vertex> side_;
};

std::vector<Vertex> components_of(std::size_t n, std::span<const UndirectedWeightedEdge> edges) {
  DisjointSets ds(n);
  for (const auto& e : edges) ds.unite(e.u, e.v);
  std::vector<Vertex> id(n);
  std::vector<Vertex> remap(n, std::numeric_limits<Vertex>::max());
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = ds.find(v);
    if (remap[r] == std::numeric_limits<Vertex>::max()) remap[r] = next++;
    id[v] = remap[r];
  }
  return id;
}

struct Arc {
  Vertex to;
  double w;
};

}  // namespace

std::vector<Vertex> connected_components(const UndirectedGraph& g) {
  std::vector<UndirectedWeightedEdge> es;
  es.reserve(g.edge_count());
  for (const Edge& e : g.edges()) es.push_back({e.u, e.v, 1.0});
  return components_of(g.vertex_count(), es);
}

MinCut global_min_cut(std::size_t n, std::span<const UndirectedWeightedEdge> input,
                      bool want_witness) {
  require(n >= 2, ErrorCode::kPrecondition, "min-cut needs at least two vertices");
  for (const auto& e : input) {
    require(e.u < n && e.v < n && e.u != e.v, ErrorCode::kInvalidArgument, "bad edge");
    require(e.weight > 0.0, ErrorCode::kInvalidArgument, "min-cut weights must be positive");
  }

  auto comp = components_of(n, input);
  if (*std::max_element(comp.begin(), comp.end()) > 0) {
    MinCut r;
    r.value = 0.0;
    if (want_witness) {
      std::vector<Vertex> side;
      for (Vertex v = 0; v < n; ++v)
        if (comp[v] == 0) side.push_back(v);
      r.witness = NodeSet(std::move(side));
    }
    return r;
  }

  BestCut best(want_witness);

  // Super-vertex state.
  std::vector<std::vector<Vertex>> members(n);
  for (Vertex v = 0; v < n; ++v) members[v] = {v};
  std::vector<UndirectedWeightedEdge> edges(input.begin(), input.end());

  // Initial candidates: singletons.
  {
    std::vector<double> deg(n, 0.0);
    for (const auto& e : edges) {
      deg[e.u] += e.weight;
      deg[e.v] += e.weight;
    }
    double dmin = *std::min_element(deg.begin(), deg.end());
    if (deg[0] == dmin) {
      best.offer(dmin, [] { return std::vector<Vertex>{0}; });
    } else {
      Vertex pick = 0;
      for (Vertex v = 0; v < n; ++v)
        if (deg[v] == dmin) pick = v;
      best.offer(dmin, [&] {
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
          if (v != pick) s.push_back(v);
        return s;
      });
    }
  }

  std::size_t cur = n;
  while (cur > 2) {
    std::vector<std::vector<Arc>> adj(cur);
    std::vector<double> wdeg(cur, 0.0);
    for (const auto& e : edges) {
      adj[e.u].push_back({e.v, e.weight});
      adj[e.v].push_back({e.u, e.weight});
      wdeg[e.u] += e.weight;
      wdeg[e.v] += e.weight;
    }

    DisjointSets ds(cur);
    std::vector<double> r(cur, 0.0);
    std::vector<std::uint8_t> seen(cur, 0);
    std::vector<Vertex> order;
    order.reserve(cur);
    std::priority_queue<std::pair<double, Vertex>> pq;
    pq.push({0.0, 0});
    double prefix_cut = 0.0;
    Vertex last = 0;

    while (!pq.empty()) {
      auto [rv, x] = pq.top();
      pq.pop();
      if (seen[x] || rv != r[x]) continue;
      seen[x] = 1;
      if (!order.empty()) {
        // Last visited before x.
        last = order.back();
      }
      order.push_back(x);
      prefix_cut += wdeg[x] - 2.0 * r[x];
      if (order.size() < cur) {
        std::size_t len = order.size();
        best.offer(prefix_cut, [&] {
          std::vector<Vertex> s;
          for (std::size_t i = 0; i < len; ++i)
            s.insert(s.end(), members[order[i]].begin(), members[order[i]].end());
          std::sort(s.begin(), s.end());
          return s;
        });
      }
      for (const Arc& a : adj[x]) {
        if (seen[a.to]) continue;
        double before = r[a.to];
        r[a.to] = before + a.w;
        if (before < best.value() && r[a.to] >= best.value()) ds.unite(x, a.to);
        pq.push({r[a.to], a.to});
      }
    }
    // The final pair (s, t) of the ordering: lambda(s, t) equals the last prefix cut.
    ds.unite(last, order.back());

    // Relabel super-vertices so that the one holding vertex 0 stays at 0.
    std::vector<Vertex> label(cur, std::numeric_limits<Vertex>::max());
    Vertex next = 0;
    for (Vertex v = 0; v < cur; ++v) {
      Vertex root = ds.find(v);
      if (label[root] == std::numeric_limits<Vertex>::max()) label[root] = next++;
    }
    std::vector<std::vector<Vertex>> merged(next);
    for (Vertex v = 0; v < cur; ++v) {
      auto& dst = merged[label[ds.find(v)]];
      dst.insert(dst.end(), members[v].begin(), members[v].end());
    }
    members = std::move(merged);

    std::unordered_map<std::uint64_t, double> acc;
    acc.reserve(edges.size());
    for (const auto& e : edges) {
      Vertex a = label[ds.find(e.u)];
      Vertex b = label[ds.find(e.v)];
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      acc[(static_cast<std::uint64_t>(a) << 32) | b] += e.weight;
    }
    edges.clear();
    for (const auto& [key, w] : acc)
      edges.push_back({static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffu), w});
    std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
      return x.u != y.u ? x.u < y.u : x.v < y.v;
    });
    cur = next;
  }
  if (cur == 2) {
    double w = 0.0;
    for (const auto& e : edges) w += e.weight;
    best.offer(w, [&] {
      auto s = members[0];
      std::sort(s.begin(), s.end());
      return s;
    });
  }
  return best.result();
}

MinCut global_min_cut(const UndirectedGraph& g, bool want_witness) {
  std::vector<UndirectedWeightedEdge> es;
  es.reserve(g.edge_count());
  for (const Edge& e : g.edges()) es.push_back({e.u, e.v, 1.0});
  return global_min_cut(g.vertex_count(), es, want_witness);
}

MinCut global_min_cut(const DirectedWeightedGraph& g, bool want_witness) {
  std::unordered_map<std::uint64_t, double> w;
  for (const auto& e : g.edges()) w[(static_cast<std::uint64_t>(e.from) << 32) | e.to] = e.weight;
  std::vector<UndirectedWeightedEdge> es;
  for (const auto& e : g.edges()) {
    auto it = w.find((static_cast<std::uint64_t>(e.to) << 32) | e.from);
    require(it != w.end() && it->second == e.weight, ErrorCode::kPrecondition,
            "global_min_cut on a directed graph needs symmetric weights");
    if (e.from < e.to) es.push_back({e.from, e.to, e.weight});
  }
  return global_min_cut(g.vertex_count(), es, want_witness);
}

MinCut stoer_wagner_min_cut(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  require(n >= 2, ErrorCode::kPrecondition, "min-cut needs at least two vertices");
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (const Edge& e : g.edges()) {
    w[e.u][e.v] += 1.0;
    w[e.v][e.u] += 1.0;
  }
  std::vector<std::vector<Vertex>> members(n);
  for (Vertex v = 0; v < n; ++v) members[v] = {v};
  std::vector<std::uint8_t> alive(n, 1);
  BestCut best(true);

  auto offer_side = [&](double value, const std::vector<Vertex>& side_members) {
    best.offer(value, [&] {
      std::vector<Vertex> s = side_members;
      std::sort(s.begin(), s.end());
      if (s.front() == 0) return s;
      const NodeSet c = NodeSet(s).complement(n);
      return std::vector<Vertex>(c.members().begin(), c.members().end());
    });
  };

  for (std::size_t phase = 0; phase + 1 < n; ++phase) {
    std::vector<double> r(n, 0.0);
    std::vector<std::uint8_t> in(n, 0);
    Vertex prev = 0;
    Vertex last = 0;
    std::size_t alive_count = n - phase;
    for (std::size_t step = 0; step < alive_count; ++step) {
      Vertex sel = static_cast<Vertex>(n);
      for (Vertex v = 0; v < n; ++v)
        if (alive[v] && !in[v] && (sel == n || r[v] > r[sel])) sel = v;
      in[sel] = 1;
      prev = last;
      last = sel;
      if (step + 1 == alive_count) {
        offer_side(r[sel], members[sel]);
      } else {
        for (Vertex v = 0; v < n; ++v)
          if (alive[v] && !in[v]) r[v] += w[sel][v];
      }
    }
    // Merge last into prev.
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    alive[last] = 0;
    for (Vertex v = 0; v < n; ++v) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = 0.0;
  }
  return best.result();
}

namespace {

class Dinic {
 public:
  explicit Dinic(std::size_t n) : head_(n, -1), level_(n), it_(n) {}

  // Undirected unit edge: two arcs that are each other's reverse.
  void add_undirected(Vertex u, Vertex v) {
    arcs_.push_back({v, 1, head_[u]});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, 1, head_[v]});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow(Vertex s, Vertex t) {
    int flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (int f = dfs(s, t, std::numeric_limits<int>::max())) flow += f;
    }
    return flow;
  }

 private:
  struct A {
    Vertex to;
    int cap;
    int next;
  };

  bool bfs(Vertex s, Vertex t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<Vertex> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (int e = head_[x]; e != -1; e = arcs_[e].next) {
        if (arcs_[e].cap > 0 && level_[arcs_[e].to] < 0) {
          level_[arcs_[e].to] = level_[x] + 1;
          q.push(arcs_[e].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(Vertex x, Vertex t, int pushed) {
    if (x == t) return pushed;
    for (int& e = it_[x]; e != -1; e = arcs_[e].next) {
      A& a = arcs_[e];
      if (a.cap <= 0 || level_[a.to] != level_[x] + 1) continue;
      int f = dfs(a.to, t, std::min(pushed, a.cap));
      if (f > 0) {
        a.cap -= f;
        arcs_[e ^ 1].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<A> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
};

}  // namespace

int edge_connectivity(const UndirectedGraph& g, Vertex u, Vertex v) {
  require(u != v, ErrorCode::kPrecondition, "edge_connectivity needs u != v");
  require(u < g.vertex_count() && v < g.vertex_count(), ErrorCode::kInvalidArgument,
          "vertex out of range");
  Dinic d(g.vertex_count());
  for (const Edge& e : g.edges()) d.add_undirected(e.u, e.v);
  return d.max_flow(u, v);
}

int min_pairwise_edge_connectivity(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  require(n >= 2, ErrorCode::kPrecondition, "need at least two vertices");
  int best = std::numeric_limits<int>::max();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) best = std::min(best, edge_connectivity(g, u, v));
  return best;
}

}  // namespace cutlab
