#include "hyparr/tope_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hyparr/topes.hpp"

namespace hyparr {

const char* color_name(Color c) {
  return c == Color::burnt_umber ? "burnt-umber" : "chartreuse";
}

const char* outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::exhausted: return "none";
    case SearchOutcome::budget_exceeded: return "unknown";
  }
  return "unknown";
}

TopeGraph::TopeGraph(std::vector<SignVector> topes, std::vector<Edge> edges) {
  const std::size_t n = topes.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return topes[a] < topes[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  topes_.reserve(n);
  for (auto i : order) topes_.push_back(std::move(topes[i]));
  for (std::size_t i = 1; i < n; ++i) {
    if (topes_[i] == topes_[i - 1]) throw std::invalid_argument("duplicate tope " + topes_[i].str());
  }

  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
    auto x = rank[a];
    auto y = rank[b];
    if (topes_[x].hamming_distance(topes_[y]) != 1) {
      throw std::invalid_argument("edge joins " + topes_[x].str() + " and " + topes_[y].str() +
                                  ", which differ in more than one sign");
    }
    edges_.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.assign(n, {});
  for (auto [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  colors_.reserve(n);
  for (const auto& t : topes_) {
    colors_.push_back(sigma(t) % 2 == 0 ? Color::burnt_umber : Color::chartreuse);
  }
}

bool TopeGraph::has_edge(std::size_t a, std::size_t b) const {
  if (a >= adjacency_.size()) return false;
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::optional<std::size_t> TopeGraph::index_of(const SignVector& s) const {
  auto it = std::lower_bound(topes_.begin(), topes_.end(), s);
  if (it == topes_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - topes_.begin());
}

std::size_t TopeGraph::burnt_umber_count() const {
  return static_cast<std::size_t>(std::count(colors_.begin(), colors_.end(), Color::burnt_umber));
}

std::size_t TopeGraph::chartreuse_count() const {
  return colors_.size() - burnt_umber_count();
}

TopeGraph build_graph(const Arrangement& arr) {
  auto ex = explore_topes(arr);
  return TopeGraph(std::move(ex.topes), std::move(ex.edges));
}

TopeGraph hamming_graph(std::vector<SignVector> topes) {
  std::sort(topes.begin(), topes.end());
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < topes.size(); ++v) {
    for (std::size_t i = 0; i < topes[v].size(); ++i) {
      auto f = topes[v].flipped(i);
      auto it = std::lower_bound(topes.begin(), topes.end(), f);
      if (it == topes.end() || !(*it == f)) continue;
      auto w = static_cast<std::size_t>(it - topes.begin());
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return TopeGraph(std::move(topes), std::move(edges));
}

long signed_oe(std::span<const SignVector> topes) {
  long sum = 0;
  for (const auto& t : topes) sum += sigma(t) % 2 == 0 ? 1 : -1;
  return sum;
}

std::size_t oe_invariant(const TopeGraph& g) {
  auto b = g.burnt_umber_count();
  auto c = g.chartreuse_count();
  return b > c ? b - c : c - b;
}

std::size_t oe_invariant(const Arrangement& arr) {
  auto topes = enumerate_topes(arr);
  return static_cast<std::size_t>(std::labs(signed_oe(topes)));
}

// ---------------------------------------------------------------------------
// Circuits
// ---------------------------------------------------------------------------

CircuitCheck verify_circuit(const TopeGraph& g, const Circuit& c) {
  const std::size_t n = g.vertex_count();
  const auto& order = c.order;
  if (order.size() != n) {
    return {false, "circuit has " + std::to_string(order.size()) + " entries, graph has " +
                       std::to_string(n) + " vertices"};
  }
  if (n < 2) return {false, "a circuit needs at least two vertices"};
  std::vector<char> seen(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    auto v = order[k];
    if (v >= n) return {false, "entry " + std::to_string(k) + " is not a vertex"};
    if (seen[v]) return {false, "vertex " + g.tope(v).str() + " repeated at position " +
                                    std::to_string(k)};
    seen[v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    auto a = order[k];
    auto b = order[(k + 1) % n];
    if (!g.has_edge(a, b)) {
      return {false, "positions " + std::to_string(k) + " and " + std::to_string((k + 1) % n) +
                         " (" + g.tope(a).str() + ", " + g.tope(b).str() + ") are not adjacent"};
    }
  }
  return {true, {}};
}

Circuit circuit_from_topes(const TopeGraph& g, const std::vector<SignVector>& seq) {
  Circuit c;
  c.order.reserve(seq.size());
  for (const auto& s : seq) {
    auto v = g.index_of(s);
    if (!v) throw std::invalid_argument("'" + s.str() + "' is not a tope of the graph");
    c.order.push_back(*v);
  }
  return c;
}

namespace {

class HamiltonSearch {
 public:
  HamiltonSearch(const TopeGraph& g, SearchBudget budget)
      : g_(g), budget_(budget), n_(g.vertex_count()), on_path_(n_, 0) {}

  HamiltonResult run() {
    HamiltonResult result;
    if (n_ < 2) {
      result.outcome = SearchOutcome::exhausted;
      result.reason = "fewer than two vertices";
      return result;
    }
    if (auto oe = oe_invariant(g_); oe != 0) {
      result.outcome = SearchOutcome::exhausted;
      result.reason = "odd-even invariant " + std::to_string(oe) + " != 0";
      return result;
    }
    if (n_ == 2) {
      if (g_.has_edge(0, 1)) {
        result.outcome = SearchOutcome::found;
        result.circuit = Circuit{{0, 1}};
      } else {
        result.outcome = SearchOutcome::exhausted;
        result.reason = "the two vertices are not adjacent";
      }
      return result;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (g_.neighbors(v).size() < 2) {
        result.outcome = SearchOutcome::exhausted;
        result.reason = "vertex " + g_.tope(v).str() + " has degree " +
                        std::to_string(g_.neighbors(v).size());
        return result;
      }
    }

    path_.push_back(0);
    on_path_[0] = 1;
    Status s = extend();
    result.expansions = expansions_;
    if (s == Status::found) {
      result.outcome = SearchOutcome::found;
      result.circuit = Circuit{path_};
    } else if (s == Status::exhausted) {
      result.outcome = SearchOutcome::exhausted;
      result.reason = "search space exhausted";
    } else {
      result.outcome = SearchOutcome::budget_exceeded;
      result.reason = "budget of " + std::to_string(budget_.max_expansions) +
                      " expansions exceeded";
    }
    return result;
  }

 private:
  enum class Status { found, exhausted, out_of_budget };

  std::size_t start() const { return path_.front(); }
  std::size_t end() const { return path_.back(); }

  // Neighbors of w that could still sit next to it on the finished circuit.
  std::size_t usable_degree(std::size_t w) const {
    std::size_t k = 0;
    for (auto x : g_.neighbors(w)) k += !on_path_[x] || x == end() || x == start();
    return k;
  }

  // Necessary conditions for the current path to extend to a circuit.
  // Fills `forced` when exactly one continuation is possible.
  bool viable(std::optional<std::size_t>& forced) const {
    forced.reset();
    const std::size_t remaining = n_ - path_.size();
    if (remaining == 0) return g_.has_edge(end(), start());

    // Every unvisited vertex needs two usable neighbors; one whose only
    // options include the path end must come next.
    std::size_t forced_count = 0;
    std::size_t unvisited_of[2] = {0, 0};
    for (std::size_t w = 0; w < n_; ++w) {
      if (on_path_[w]) continue;
      ++unvisited_of[g_.color(w) == Color::burnt_umber ? 0 : 1];
      auto k = usable_degree(w);
      if (k < 2) return false;
      if (k == 2 && path_.size() > 1 && g_.has_edge(w, end())) {
        // With only start and end usable, w is both next and last.
        if (g_.has_edge(w, start()) && remaining > 1) return false;
        if (++forced_count > 1) return false;
        forced = w;
      }
    }

    // The rest of the circuit alternates colors from end back to start.
    const int end_color = g_.color(end()) == Color::burnt_umber ? 0 : 1;
    const long other = static_cast<long>(unvisited_of[1 - end_color]);
    const long same = static_cast<long>(unvisited_of[end_color]);
    if (other - same != static_cast<long>(remaining % 2)) return false;

    // Unvisited vertices must be reachable from the end through unvisited
    // vertices.
    std::vector<char> reached(n_, 0);
    std::deque<std::size_t> queue;
    std::size_t count = 0;
    for (auto x : g_.neighbors(end())) {
      if (!on_path_[x] && !reached[x]) {
        reached[x] = 1;
        queue.push_back(x);
      }
    }
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      ++count;
      for (auto x : g_.neighbors(v)) {
        if (!on_path_[x] && !reached[x]) {
          reached[x] = 1;
          queue.push_back(x);
        }
      }
    }
    return count == remaining;
  }

  Status extend() {
    if (path_.size() == n_) {
      return g_.has_edge(end(), start()) ? Status::found : Status::exhausted;
    }
    std::optional<std::size_t> forced;
    if (!viable(forced)) return Status::exhausted;

    std::vector<std::size_t> candidates;
    if (forced) {
      candidates.push_back(*forced);
    } else {
      for (auto x : g_.neighbors(end())) {
        if (!on_path_[x]) candidates.push_back(x);
      }
    }
    for (auto x : candidates) {
      if (expansions_ >= budget_.max_expansions) return Status::out_of_budget;
      ++expansions_;
      path_.push_back(x);
      on_path_[x] = 1;
      Status s = extend();
      if (s != Status::exhausted) return s;
      on_path_[x] = 0;
      path_.pop_back();
    }
    return Status::exhausted;
  }

  const TopeGraph& g_;
  SearchBudget budget_;
  std::size_t n_;
  std::vector<char> on_path_;
  std::vector<std::size_t> path_;
  std::uint64_t expansions_ = 0;
};

}  // namespace

HamiltonResult find_hamiltonian(const TopeGraph& g, SearchBudget budget) {
  auto result = HamiltonSearch(g, budget).run();
  if (result.circuit) {
    auto check = verify_circuit(g, *result.circuit);
    if (!check) throw std::logic_error("search produced an invalid circuit: " + check.failure);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Matching
// ---------------------------------------------------------------------------

Matching max_matching(const TopeGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> left;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.color(v) == Color::burnt_umber) left.push_back(v);
  }
  std::vector<std::size_t> mate(n, none);
  std::vector<std::size_t> dist(n);

  auto bfs = [&]() {
    std::deque<std::size_t> queue;
    bool found = false;
    for (auto u : left) {
      if (mate[u] == none) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = none;
      }
    }
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto w : g.neighbors(u)) {
        auto m = mate[w];
        if (m == none) {
          found = true;
        } else if (dist[m] == none) {
          dist[m] = dist[u] + 1;
          queue.push_back(m);
        }
      }
    }
    return found;
  };

  // Iterative DFS along the BFS layering.
  auto augment = [&](std::size_t root) {
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      const auto& adj = g.neighbors(u);
      if (next == adj.size()) {
        dist[u] = none;
        stack.pop_back();
        continue;
      }
      auto w = adj[next++];
      auto m = mate[w];
      if (m == none) {
        // Flip the alternating path recorded on the stack.
        std::size_t free_right = w;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          auto lu = it->first;
          auto prev = mate[lu];
          mate[lu] = free_right;
          mate[free_right] = lu;
          free_right = prev;
        }
        return true;
      }
      if (dist[m] == dist[u] + 1) stack.emplace_back(m, 0);
    }
    return false;
  };

  while (bfs()) {
    for (auto u : left) {
      if (mate[u] == none) augment(u);
    }
  }

  Matching out;
  for (auto u : left) {
    if (mate[u] != none) out.pairs.emplace_back(std::min(u, mate[u]), std::max(u, mate[u]));
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

bool is_valid_matching(const TopeGraph& g, const Matching& m) {
  std::vector<char> used(g.vertex_count(), 0);
  for (auto [a, b] : m.pairs) {
    if (!g.has_edge(a, b) || used[a] || used[b]) return false;
    used[a] = used[b] = 1;
  }
  return true;
}

bool has_perfect_matching(const TopeGraph& g) {
  if (g.vertex_count() % 2 != 0) return false;
  return 2 * max_matching(g).pairs.size() == g.vertex_count();
}

}  // namespace hyparr
