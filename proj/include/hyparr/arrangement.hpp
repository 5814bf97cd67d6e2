/**
 * @file arrangement.hpp
 * @brief Hyperplane arrangements with exact rational data, sign vectors, and
 *        the arrangement-level operations (deletion, restriction,
 *        homogenization, direction arrangement, genericity tests).
 */

#ifndef HYPARR_ARRANGEMENT_HPP
#define HYPARR_ARRANGEMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyparr/rational.hpp"

namespace hyparr {

/// The hyperplane { x : normal . x = offset }; its positive side is
/// { x : normal . x > offset }.
struct Hyperplane {
  RationalVector normal;
  Rational offset;

  bool operator==(const Hyperplane&) const = default;
};

enum class ArrangementKind { central, affine };

/// An indexed collection of pairwise distinct hyperplanes in R^dim.
///
/// Construction validates everything: dim >= 1, every normal has length dim
/// and is nonzero, central arrangements have zero offsets, and no two
/// hyperplanes describe the same point set (in either orientation).
class Arrangement {
 public:
  Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes,
              ArrangementKind kind);

  static Arrangement central(std::size_t dim, const RationalMatrix& normals);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  bool empty() const { return hyperplanes_.empty(); }
  ArrangementKind kind() const { return kind_; }
  bool is_central() const { return kind_ == ArrangementKind::central; }

  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_.at(i); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

  bool operator==(const Arrangement&) const = default;

 private:
  std::size_t dim_;
  std::vector<Hyperplane> hyperplanes_;
  ArrangementKind kind_;
};

/// A +1/-1 assignment, one entry per hyperplane in index order.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<std::int8_t> signs);

  /// Parses "+-+" style strings. Accepts '-' and the Unicode minus sign.
  static SignVector parse(std::string_view text);
  static SignVector constant(std::size_t n, int sign);

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  const std::vector<std::int8_t>& signs() const { return signs_; }

  /// Number of +1 entries.
  std::size_t plus_count() const;

  SignVector flipped(std::size_t i) const;
  SignVector negated() const;
  SignVector without(std::size_t i) const;

  std::size_t hamming_distance(const SignVector& other) const;

  std::string str() const;

  bool operator==(const SignVector&) const = default;
  /// Canonical order: lexicographic with +1 ranked before -1.
  bool operator<(const SignVector& other) const;

 private:
  std::vector<std::int8_t> signs_;
};

/// A point of the plane lying on `multiplicity` >= 2 lines.
struct IntersectionPoint {
  RationalVector point;
  std::size_t multiplicity = 0;
  std::vector<std::size_t> lines;
};

/// Result of restricting to one hyperplane. `image_of[j]` is the index of the
/// image of original hyperplane j in the restricted arrangement, or empty
/// when j is the restricting hyperplane or is parallel to it. Coincident
/// images are merged onto the lowest original index.
struct Restriction {
  Arrangement arrangement;
  std::vector<std::optional<std::size_t>> image_of;
};

Arrangement deletion(const Arrangement& arr, std::size_t index);

Restriction restrict_to(const Arrangement& arr, std::size_t index);

inline Arrangement restriction(const Arrangement& arr, std::size_t index) {
  return restrict_to(arr, index).arrangement;
}

/// {a.x = b} in R^d becomes {(x, z) : a.x - b z = 0} in R^(d+1).
Arrangement homogenize(const Arrangement& arr);

/// Slices a central arrangement with x_d = 1. Throws std::invalid_argument
/// naming the first hyperplane whose normal vanishes on the first d-1
/// coordinates, since such a hyperplane misses the slice.
Arrangement dehomogenize(const Arrangement& arr);

/// Translates every hyperplane through the origin.
Arrangement direction_arrangement(const Arrangement& arr);

/// Every subset of at most dim normals is linearly independent.
bool is_centrally_simple(const Arrangement& arr);

/// Centrally simple normals, and no dim+1 hyperplanes share a point.
bool is_simple(const Arrangement& arr);

/// Planar arrangements only; sorted by point coordinates.
std::vector<IntersectionPoint> intersection_points(const Arrangement& arr);

}  // namespace hyparr

#endif  // HYPARR_ARRANGEMENT_HPP
