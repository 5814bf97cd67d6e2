/**
 * @file feasibility.hpp
 * @brief Exact decision of homogeneous linear systems with strict rows.
 *
 * A system is a list of rows g_r together with a strict flag. It is feasible
 * when some y has g_r . y > 0 on every strict row and g_r . y >= 0 on the
 * rest. The decision maximizes a slack t subject to g_r . y >= t (strict
 * rows), g_r . y >= 0 (other rows) and t <= 1, and reports feasibility iff
 * the optimum is positive. Because every right-hand side is zero the slack
 * basis is primal feasible, so a single simplex phase with Bland's rule
 * suffices and always terminates.
 *
 * Affine strict systems s_i (a_i . x - b_i) > 0 are handled by appending a
 * homogenizing coordinate lambda and the strict row lambda > 0.
 */

#ifndef HYPARR_FEASIBILITY_HPP
#define HYPARR_FEASIBILITY_HPP

#include <optional>
#include <vector>

#include "hyparr/rational.hpp"

namespace hyparr {

struct LinearSystem {
  std::size_t variables = 0;
  RationalMatrix rows;
  std::vector<bool> strict;

  void add(RationalVector row, bool is_strict) {
    rows.push_back(std::move(row));
    strict.push_back(is_strict);
  }
};

/// Returns a witness y, or nullopt when the system is infeasible.
std::optional<RationalVector> find_solution(const LinearSystem& system);

inline bool is_feasible(const LinearSystem& system) {
  return find_solution(system).has_value();
}

/// Substitutes y = B z where B is a basis of the null space of `equalities`,
/// so that the returned system lives on { y : E y = 0 }.
LinearSystem restrict_to_kernel(const LinearSystem& system,
                                const RationalMatrix& equalities);

}  // namespace hyparr

#endif  // HYPARR_FEASIBILITY_HPP
