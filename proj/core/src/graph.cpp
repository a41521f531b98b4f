#include "diagramma/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "diagramma/error.hpp"

namespace diagramma {

SimpleGraph::SimpleGraph(std::size_t vertices)
    : adjacency_(vertices, std::vector<char>(vertices, 0)), neighbors_(vertices) {}

SimpleGraph::SimpleGraph(std::size_t vertices, const std::vector<Edge>& edges)
    : SimpleGraph(vertices) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  const auto n = vertex_count();
  if (u >= n || v >= n) {
    raise(ErrorCode::invalid_graph,
          "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  if (u == v) raise(ErrorCode::invalid_graph, "loop at " + std::to_string(u));
  if (adjacency_[u][v]) {
    raise(ErrorCode::invalid_graph,
          "repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  adjacency_[u][v] = adjacency_[v][u] = 1;
  neighbors_[u].insert(std::lower_bound(neighbors_[u].begin(), neighbors_[u].end(), v), v);
  neighbors_[v].insert(std::lower_bound(neighbors_[v].begin(), neighbors_[v].end(), u), u);
  ++edge_count_;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void SimpleGraph::set_tags(std::vector<std::string> tags) {
  if (!tags.empty() && tags.size() != vertex_count()) {
    raise(ErrorCode::invalid_graph, "tag count does not match vertex count");
  }
  tags_ = std::move(tags);
}

void SubsetFamily::validate() const {
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto& s = sets[k];
    if (s.empty()) raise(ErrorCode::empty_subset, "subset " + std::to_string(k));
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end()) {
      raise(ErrorCode::duplicate_subset,
            "subset " + std::to_string(k) + " is not strictly increasing");
    }
    if (s.front() < 1 || s.back() > n) {
      raise(ErrorCode::out_of_range, "subset " + std::to_string(k));
    }
    if (!seen.insert(s).second) raise(ErrorCode::duplicate_subset, "subset " + std::to_string(k));
  }
}

namespace {

bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

}  // namespace

SimpleGraph disjointness_graph(const SubsetFamily& family) {
  SimpleGraph g(family.sets.size());
  for (std::size_t i = 0; i < family.sets.size(); ++i) {
    for (std::size_t j = i + 1; j < family.sets.size(); ++j) {
      if (disjoint(family.sets[i], family.sets[j])) g.add_edge(i, j);
    }
  }
  return g;
}

SimpleGraph opposite_graph(const SimpleGraph& g) {
  SimpleGraph out(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  out.set_tags(g.tags());
  return out;
}

Realization realize_as_disjointness(const SimpleGraph& g) {
  Realization r;
  const auto n = g.vertex_count();
  if (n == 2 && g.edge_count() == 0) {
    r.family = {2, {{1}, {1, 2}}};
    r.vertex_map = {0, 1};
    return r;
  }
  const auto opp_edges = opposite_graph(g).edges();
  const auto m = opp_edges.size();
  r.family.n = m + n;
  r.family.sets.assign(n, {});
  for (std::size_t e = 0; e < m; ++e) {
    r.family.sets[opp_edges[e].first].push_back(e + 1);
    r.family.sets[opp_edges[e].second].push_back(e + 1);
  }
  // private padding element keeps every subset nonempty and all subsets distinct
  for (Vertex v = 0; v < n; ++v) r.family.sets[v].push_back(m + 1 + v);
  r.vertex_map.resize(n);
  for (Vertex v = 0; v < n; ++v) r.vertex_map[v] = v;

  r.family.validate();
  const auto realized = disjointness_graph(r.family);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != realized.adjacent(r.vertex_map[u], r.vertex_map[v])) {
        raise(ErrorCode::realization_check_failed,
              "vertices " + std::to_string(u) + " and " + std::to_string(v));
      }
    }
  }
  return r;
}

Vertex pvt_pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j > n || i >= j) raise(ErrorCode::index_order, "need 1 <= i < j <= n");
  std::size_t before = 0;
  for (std::size_t a = 1; a < i; ++a) before += n - a;
  return before + (j - i - 1);
}

SimpleGraph pvt_graph(std::size_t n) {
  if (n < 2) raise(ErrorCode::bad_arity, "pvt_graph needs n >= 2");
  SubsetFamily family{n, {}};
  std::vector<std::string> tags;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      family.sets.push_back({i, j});
      tags.push_back(std::to_string(i) + "," + std::to_string(j));
    }
  }
  auto g = disjointness_graph(family);
  g.set_tags(std::move(tags));
  return g;
}

bool is_induced_cycle(const SimpleGraph& g, const std::vector<Vertex>& cycle) {
  const auto k = cycle.size();
  if (k < 3) return false;
  std::set<Vertex> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != k) return false;
  for (std::size_t a = 0; a < k; ++a) {
    if (cycle[a] >= g.vertex_count()) return false;
    for (std::size_t b = a + 1; b < k; ++b) {
      const bool consecutive = (b == a + 1) || (a == 0 && b == k - 1);
      if (g.adjacent(cycle[a], cycle[b]) != consecutive) return false;
    }
  }
  return true;
}

namespace {

// Extends induced paths whose smallest vertex is path.front().
class OddCycleSearch {
 public:
  OddCycleSearch(const SimpleGraph& g, std::size_t max_length)
      : g_(g), max_length_(max_length), on_path_(g.vertex_count(), 0) {}

  std::optional<std::vector<Vertex>> run() {
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      path_ = {s};
      on_path_[s] = 1;
      const bool found = extend();
      on_path_[s] = 0;
      if (found) return path_;
    }
    return std::nullopt;
  }

 private:
  bool extend() {
    const Vertex start = path_.front();
    const Vertex last = path_.back();
    for (Vertex u : g_.neighbors(last)) {
      if (u <= start || on_path_[u]) continue;
      // u may only touch `last` among the interior of the path
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path_.size(); ++i) {
        if (g_.adjacent(u, path_[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      const bool closes = path_.size() >= 2 && g_.adjacent(u, start);
      if (closes) {
        const auto len = path_.size() + 1;
        if (len >= 5 && len % 2 == 1) {
          path_.push_back(u);
          return true;
        }
        continue;
      }
      if (path_.size() + 1 >= max_length_) continue;
      path_.push_back(u);
      on_path_[u] = 1;
      if (extend()) return true;
      on_path_[u] = 0;
      path_.pop_back();
    }
    return false;
  }

  const SimpleGraph& g_;
  std::size_t max_length_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_induced_odd_cycle(const SimpleGraph& g,
                                                          std::size_t max_length) {
  auto found = OddCycleSearch(g, max_length).run();
  if (found && !is_induced_cycle(g, *found)) return std::nullopt;
  return found;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const SimpleGraph& a, const SimpleGraph& b)
      : a_(a), b_(b), map_(a.vertex_count(), npos), used_(b.vertex_count(), 0) {
    // most constrained vertices first
    order_.resize(a.vertex_count());
    for (Vertex v = 0; v < order_.size(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex x, Vertex y) { return a.degree(x) > a.degree(y); });
  }

  std::optional<std::vector<Vertex>> run() {
    if (a_.vertex_count() != b_.vertex_count() || a_.edge_count() != b_.edge_count()) {
      return std::nullopt;
    }
    std::vector<std::size_t> da, db;
    for (Vertex v = 0; v < a_.vertex_count(); ++v) {
      da.push_back(a_.degree(v));
      db.push_back(b_.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
    if (assign(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Vertex npos = static_cast<Vertex>(-1);

  bool assign(std::size_t k) {
    if (k == order_.size()) return true;
    const Vertex v = order_[k];
    for (Vertex w = 0; w < b_.vertex_count(); ++w) {
      if (used_[w] || a_.degree(v) != b_.degree(w)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const Vertex u = order_[i];
        ok = a_.adjacent(u, v) == b_.adjacent(map_[u], w);
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = 1;
      if (assign(k + 1)) return true;
      used_[w] = 0;
      map_[v] = npos;
    }
    return false;
  }

  const SimpleGraph& a_;
  const SimpleGraph& b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b) {
  return IsomorphismSearch(a, b).run();
}

SimpleGraph read_graph(std::istream& in) {
  std::optional<SimpleGraph> g;
  std::vector<std::string> tags;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "n") {
      long long v = -1;
      if (g || !(ls >> v) || v < 0) throw ParseError(lineno, "expected a single 'n <V>' line");
      g.emplace(static_cast<std::size_t>(v));
      tags.assign(static_cast<std::size_t>(v), "");
    } else if (key == "e") {
      long long u = -1, v = -1;
      if (!g) throw ParseError(lineno, "'e' before 'n'");
      if (!(ls >> u >> v) || u < 0 || v < 0) throw ParseError(lineno, "expected 'e <u> <v>'");
      try {
        g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      } catch (const Error& e) {
        throw ParseError(lineno, e.what());
      }
    } else if (key == "tag") {
      long long v = -1;
      std::string text;
      if (!g || !(ls >> v >> text) || v < 0 || static_cast<std::size_t>(v) >= tags.size()) {
        throw ParseError(lineno, "expected 'tag <v> <text>'");
      }
      tags[static_cast<std::size_t>(v)] = text;
    } else {
      throw ParseError(lineno, "unexpected '" + key + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing input '" + extra + "'");
  }
  if (!g) throw ParseError(lineno, "missing 'n <V>' line");
  if (std::any_of(tags.begin(), tags.end(), [](const auto& t) { return !t.empty(); })) {
    g->set_tags(std::move(tags));
  }
  return std::move(*g);
}

SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  for (std::size_t v = 0; v < g.tags().size(); ++v) {
    if (!g.tags()[v].empty()) out << "tag " << v << ' ' << g.tags()[v] << '\n';
  }
}

}  // namespace diagramma
