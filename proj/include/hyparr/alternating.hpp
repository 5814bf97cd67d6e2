/**
 * @file alternating.hpp
 * @brief Alternating arrangements A(n, d): the sign-sequence model, the
 *        closed form of the odd-even invariant, the two explicit Hamiltonian
 *        circuit constructions, and a moment-curve realization.
 *
 * Topes of A(n, d) are the sign sequences of length n with at most d - 1
 * sign changes; two topes are adjacent iff they differ in one position.
 */

#ifndef HYPARR_ALTERNATING_HPP
#define HYPARR_ALTERNATING_HPP

#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/tope_graph.hpp"

namespace hyparr {

/// Rank-d alternating arrangement of n hyperplanes, 1 <= d <= n.
struct AltArrangement {
  std::size_t n;
  std::size_t d;

  AltArrangement(std::size_t n, std::size_t d);
};

std::size_t sign_changes(const SignVector& s);

/// Throws std::invalid_argument for an empty sequence.
bool is_alt_tope(const SignVector& s, std::size_t d);

/// All topes of A(n, d) in canonical order.
std::vector<SignVector> enumerate_alt_topes(std::size_t n, std::size_t d);

/// Hamming distance one.
bool alt_adjacent(const SignVector& s, const SignVector& t, std::size_t d);

/// 2 C(n/2 - 1, (d-1)/2) for n even and d odd, zero otherwise.
std::uint64_t oe_formula(std::size_t n, std::size_t d);

TopeGraph alt_tope_graph(std::size_t n, std::size_t d);

/// The sign sequence whose minus positions are the j cyclically consecutive
/// positions starting at k (1-based, taken modulo n). j = 0 is all plus and
/// j = n all minus.
SignVector cyclic_arc(std::size_t n, std::size_t j, std::size_t k);

/// The standard reflected Gray code on m bits as a cyclic list of sign
/// sequences (bit 0 -> '+', most significant bit first).
std::vector<SignVector> reflected_gray_code(std::size_t m);

/// Hamiltonian circuit of A(n, 3), n odd, via the n x (n-1) array of cyclic
/// arcs. Cyclic order, first entry all plus, no repeated closing entry.
std::vector<SignVector> ham_circuit_n_3(std::size_t n);

/// Hamiltonian circuit of A(n, n-1), n odd, extended from a Gray code of
/// the (n-2)-cube rotated to start at +-+-...-+.
std::vector<SignVector> ham_circuit_n_nminus1(std::size_t n);

/// Central arrangement with normals (1, a_i, a_i^2, ..., a_i^(d-1)); the
/// positive side is where the polynomial sum_k x_k a_i^k is positive.
/// Requires strictly increasing parameters, one per hyperplane.
Arrangement realize(std::size_t n, std::size_t d, const std::vector<Rational>& alphas);

}  // namespace hyparr

#endif  // HYPARR_ALTERNATING_HPP
