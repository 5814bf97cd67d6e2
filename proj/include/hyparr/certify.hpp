/**
 * @file certify.hpp
 * @brief Executable checks of the structural results on tope graphs.
 *
 * Every check enumerates what it needs exactly and records both sides of
 * the relation it tests. A result is "certified" only when the hypothesis
 * held and the relation was verified; "not-applicable" when the hypothesis
 * failed; "refuted-implementation-bug" when the relation itself failed,
 * which for a proven statement can only mean a bug.
 */

#ifndef HYPARR_CERTIFY_HPP
#define HYPARR_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/tope_graph.hpp"

namespace hyparr {

enum class Verdict { certified, not_applicable, refuted };

const char* verdict_name(Verdict v);

struct Certificate {
  std::string kind;
  std::optional<std::size_t> hyperplane;
  long lhs = 0;
  long rhs = 0;
  Verdict verdict = Verdict::not_applicable;
  std::string detail;
  /// Intermediate quantities, for audit.
  std::vector<std::pair<std::string, long>> values;
};

/// Tope graphs up to this many vertices get a search cross-check; larger
/// graphs rarely finish within budget.
inline constexpr std::size_t kCrossCheckVertices = 64;

/// A found Hamiltonian circuit forces oe = 0. lhs = oe, rhs = 0.
Certificate check_thm1(const Arrangement& arr, SearchBudget budget = {});

/// Centrally simple central arrangements have oe = 0 unless n is even and
/// d is odd. lhs = oe, rhs = 0. Throws for affine input.
Certificate check_thm3(const Arrangement& arr);

/// lhs = oe(A minus H_i), rhs = |T(A / H_i)|; lhs > rhs rules out a
/// Hamiltonian circuit. Throws for affine input.
Certificate check_thm7(const Arrangement& arr, std::size_t i, SearchBudget budget = {});

/// Simple affine, d odd. For n odd all of s(T), s(T_inf), s(T_b) vanish
/// (lhs = s(T_b), rhs = 0); for n even 2 s(T_b) = -s(T(A_inf)) (lhs and rhs
/// are those two numbers). Throws when the hypothesis fails.
Certificate check_thm9(const Arrangement& arr);

/// Simple affine, d odd: oe <= 2 sum_k C(n, d-1-2k). Throws otherwise.
Certificate check_thm10_bound(const Arrangement& arr);

/// Centrally simple central: lhs = oe(A minus H_i), rhs = 2 |T(A / H_i)|;
/// lhs > rhs rules out a perfect matching. Throws for affine input or when
/// the arrangement is not centrally simple.
Certificate check_thm11(const Arrangement& arr, std::size_t i);

/// Planar: b <= 2c - 2 - sum_P (lambda(P) - 2) with b the larger color
/// class and c the smaller. Throws unless d = 2, affine, n >= 3 and some
/// two lines meet.
Certificate check_simmons_wetzel(const Arrangement& arr);

/// Small-rational normals and offsets, resampled until simple.
/// Deterministic in seed; throws std::runtime_error after 10000 attempts.
Arrangement random_simple_arrangement(std::size_t n, std::size_t d, std::uint64_t seed);

/// Fixed-width table, one row per (instance, certificate).
std::string certificate_table(const std::vector<std::pair<std::string, Certificate>>& rows);

}  // namespace hyparr

#endif  // HYPARR_CERTIFY_HPP
