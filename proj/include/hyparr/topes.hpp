/**
 * @file topes.hpp
 * @brief Tope feasibility, facet adjacency, enumeration and boundedness.
 *
 * A sign vector s is a tope when the open cell
 *   { x : s_i (a_i . x - b_i) > 0 for all i }
 * is nonempty. Two topes differing in entry i are adjacent when the relative
 * open facet on hyperplane i (equality on i, strict on the rest) is
 * nonempty. Both questions are answered by exact linear feasibility.
 */

#ifndef HYPARR_TOPES_HPP
#define HYPARR_TOPES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hyparr/arrangement.hpp"

namespace hyparr {

bool feasible_tope(const Arrangement& arr, const SignVector& s);

/// A rational point in the open cell of s, if the cell is nonempty.
std::optional<RationalVector> interior_point(const Arrangement& arr, const SignVector& s);

/// True iff flipping entry i of s crosses a facet of the cell of s. Implies
/// that both s and s.flipped(i) are topes.
bool crosses_facet(const Arrangement& arr, const SignVector& s, std::size_t i);

/// Throws std::invalid_argument when either input is not a tope.
bool are_adjacent(const Arrangement& arr, const SignVector& s, const SignVector& t);

/// Sign vector of a point, or nullopt when the point lies on a hyperplane.
std::optional<SignVector> sign_vector_at(const Arrangement& arr, const RationalVector& point);

/// The tope containing a sampled point off every hyperplane. Deterministic.
SignVector seed_tope(const Arrangement& arr);

struct TopeExploration {
  std::vector<SignVector> topes;  // canonical order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
};

/// Breadth-first search across facets from the seed tope. Returns topes in
/// canonical order and every facet adjacency between them.
TopeExploration explore_topes(const Arrangement& arr);

std::vector<SignVector> enumerate_topes(const Arrangement& arr);

/// Filters all 2^n sign vectors through feasible_tope. Only for small n.
std::vector<SignVector> enumerate_topes_brute_force(const Arrangement& arr);

/// True iff the recession cone of the closed cell of s is {0}.
bool is_bounded_tope(const Arrangement& arr, const SignVector& s);

struct BoundedPartition {
  std::vector<SignVector> bounded;
  std::vector<SignVector> unbounded;
};

BoundedPartition classify_bounded(const Arrangement& arr);

}  // namespace hyparr

#endif  // HYPARR_TOPES_HPP
