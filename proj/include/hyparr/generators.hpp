/**
 * @file generators.hpp
 * @brief Named arrangement families and constructions with prescribed
 *        odd-even behaviour: cubes, braid (Coxeter type A) arrangements,
 *        direct-sum products, cylinder lifts, a planar seed search, and the
 *        one-hyperplane extension used to build non-Hamiltonian examples.
 */

#ifndef HYPARR_GENERATORS_HPP
#define HYPARR_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/tope_graph.hpp"

namespace hyparr {

struct ConstructionReport {
  Arrangement arrangement;
  std::string provenance;
  /// Signed invariant forced by the construction, when one is known.
  std::optional<long> predicted_signed_oe;
  std::vector<std::string> factors;
};

/// The n coordinate hyperplanes of R^n, positive side x_i > 0.
Arrangement cube_arrangement(std::size_t n);

/// Hyperplanes x_i = x_j, 0 <= i < j <= n, inside { x_0 + ... + x_n = 0 }
/// written in the coordinates x_1..x_n (so x_0 = -(x_1 + ... + x_n)).
/// Hyperplanes are listed in lexicographic order of (i, j); the positive
/// side of H_{i,j} is x_i < x_j.
Arrangement coxeter_A(std::size_t n);

/// Sign vector of the tope of coxeter_A(n) holding the points whose
/// coordinates increase along `order` (a permutation of 0..n).
SignVector permutation_tope(const std::vector<std::size_t>& order);

/// Steinhaus-Johnson-Trotter listing of the permutations of 0..n; cyclically
/// consecutive entries differ by one adjacent transposition.
std::vector<std::vector<std::size_t>> sjt_permutations(std::size_t n);

/// The SJT order as a circuit of the tope graph of coxeter_A(n), with
/// vertex indices in canonical tope order.
Circuit sjt_circuit(std::size_t n);

/// Direct sum of affine arrangements: factor k lives on its own block of
/// coordinates. Topes are tuples of factor topes, so the signed invariant
/// is the product of the factors' signed invariants.
ConstructionReport product_construction(const std::vector<Arrangement>& factors);

/// Pads every normal with `extra` zeros. The kind is preserved.
Arrangement cylinder_lift(const Arrangement& arr, std::size_t extra);

struct PlanarSeed {
  Arrangement arrangement;
  long signed_oe = 0;
  std::size_t n_lines = 0;
};

/// Signed invariant of a simple planar arrangement of at least two lines,
/// read off the four cells around each vertex. Throws std::invalid_argument
/// when the arrangement is not simple and planar.
long planar_signed_oe(const Arrangement& arr);

/// Random search for a simple arrangement of n_lines lines with large
/// |signed invariant|. Starts from a random simple arrangement, then spends
/// `budget` candidate evaluations on restarts and single-line
/// perturbations, keeping the best. Deterministic in `seed`. The returned
/// invariant is recomputed by full tope enumeration.
PlanarSeed planar_seed_search(std::size_t n_lines, std::uint64_t budget, std::uint64_t seed);

struct ExtensionReport {
  ConstructionReport construction;
  std::size_t added_index = 0;
  std::size_t input_oe = 0;           // oe of result minus H*
  std::size_t result_oe = 0;          // oe of result
  std::size_t restriction_topes = 0;  // |T(result / H*)|
  /// input_oe > restriction_topes, so the result has no Hamiltonian circuit.
  bool certificate = false;
};

/// Appends one central hyperplane H* in general position to a central
/// arrangement with odd dim and an even number of hyperplanes: H* contains
/// no intersection of dim - 1 of the input hyperplanes. All reported
/// quantities are computed by enumeration.
ExtensionReport theorem8_assembly(const Arrangement& input, std::uint64_t seed);

/// Same, starting from a planar seed homogenized into R^3.
ExtensionReport theorem8_assembly(const PlanarSeed& seed, std::uint64_t rng_seed);

}  // namespace hyparr

#endif  // HYPARR_GENERATORS_HPP
