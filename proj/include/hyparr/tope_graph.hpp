/**
 * @file tope_graph.hpp
 * @brief Tope graphs, their 2-coloring, odd-even invariants, Hamiltonian
 *        circuit search and maximum matchings.
 *
 * Vertices are topes in canonical order. A tope is burnt umber when its
 * number of positive sides is even (so the all-minus tope is burnt umber)
 * and chartreuse otherwise; adjacent topes differ in one sign, so the
 * coloring is proper.
 */

#ifndef HYPARR_TOPE_GRAPH_HPP
#define HYPARR_TOPE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyparr/arrangement.hpp"

namespace hyparr {

enum class Color { burnt_umber, chartreuse };

const char* color_name(Color c);

using Edge = std::pair<std::size_t, std::size_t>;

class TopeGraph {
 public:
  TopeGraph() = default;

  /// Topes must be distinct; edges are index pairs that must join sign
  /// vectors at Hamming distance one. Topes are sorted into canonical order
  /// and edges re-indexed accordingly.
  TopeGraph(std::vector<SignVector> topes, std::vector<Edge> edges);

  std::size_t vertex_count() const { return topes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<SignVector>& topes() const { return topes_; }
  const SignVector& tope(std::size_t v) const { return topes_[v]; }
  /// Sorted, each pair (i, j) with i < j.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Neighbors of v in increasing index order.
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  Color color(std::size_t v) const { return colors_[v]; }

  bool has_edge(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> index_of(const SignVector& s) const;

  std::size_t burnt_umber_count() const;
  std::size_t chartreuse_count() const;

 private:
  std::vector<SignVector> topes_;
  std::vector<Edge> edges_;
  std::vector<Color> colors_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Vertices from enumerate_topes, edges from facet adjacency.
TopeGraph build_graph(const Arrangement& arr);

/// Graph on the given sign vectors joining every pair at Hamming distance 1.
TopeGraph hamming_graph(std::vector<SignVector> topes);

/// Number of hyperplanes whose positive side contains the tope.
inline std::size_t sigma(const SignVector& s) { return s.plus_count(); }

/// Sum of (-1)^sigma over the given topes.
long signed_oe(std::span<const SignVector> topes);

std::size_t oe_invariant(const TopeGraph& g);
std::size_t oe_invariant(const Arrangement& arr);

/// Vertex indices in cyclic order.
struct Circuit {
  std::vector<std::size_t> order;
};

struct CircuitCheck {
  bool ok = false;
  std::string failure;  // first problem found, empty when ok

  explicit operator bool() const { return ok; }
};

/// Checks distinctness, full coverage and cyclic adjacency. A two-vertex
/// graph with its single edge counts as a circuit (the one-bit Gray code).
CircuitCheck verify_circuit(const TopeGraph& g, const Circuit& c);

/// Maps a list of sign vectors onto vertex indices of g; throws
/// std::invalid_argument for a sign vector that is not a vertex.
Circuit circuit_from_topes(const TopeGraph& g, const std::vector<SignVector>& seq);

struct SearchBudget {
  std::uint64_t max_expansions = 10'000'000;
};

enum class SearchOutcome {
  found,            // circuit attached and verified
  exhausted,        // proven: no Hamiltonian circuit
  budget_exceeded,  // unknown
};

const char* outcome_name(SearchOutcome o);

struct HamiltonResult {
  SearchOutcome outcome = SearchOutcome::budget_exceeded;
  std::optional<Circuit> circuit;
  std::uint64_t expansions = 0;
  std::string reason;
};

/// Exact backtracking from vertex 0, branching on the lowest-index unvisited
/// neighbor. A color imbalance answers "exhausted" before any search; during
/// the search, vertices with fewer than two usable neighbors, two forced
/// continuations, or a disconnected remainder cut the branch.
HamiltonResult find_hamiltonian(const TopeGraph& g, SearchBudget budget = {});

struct Matching {
  std::vector<Edge> pairs;  // (i, j) with i < j, sorted
};

/// Maximum-cardinality matching (Hopcroft-Karp across the color classes).
Matching max_matching(const TopeGraph& g);

bool is_valid_matching(const TopeGraph& g, const Matching& m);

bool has_perfect_matching(const TopeGraph& g);

}  // namespace hyparr

#endif  // HYPARR_TOPE_GRAPH_HPP
