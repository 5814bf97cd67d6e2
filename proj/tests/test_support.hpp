// Small builders shared by the test binaries. Deliberately independent of
// the generator module so tests of the core do not depend on it.

#ifndef HYPARR_TEST_SUPPORT_HPP
#define HYPARR_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "hyparr/arrangement.hpp"

namespace hyparr::testing {

inline SignVector sv(const std::string& s) { return SignVector::parse(s); }

inline Arrangement affine(std::size_t dim, std::vector<Hyperplane> hs) {
  return Arrangement(dim, std::move(hs), ArrangementKind::affine);
}

inline Arrangement coordinate_planes(std::size_t n) {
  RationalMatrix normals;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, 0);
    e[i] = 1;
    normals.push_back(std::move(e));
  }
  return Arrangement::central(n, normals);
}

/// Normals (1, a, a^2, ..., a^(d-1)), one per parameter.
inline Arrangement moment_curve(const std::vector<long>& params, std::size_t d) {
  RationalMatrix normals;
  for (long a : params) {
    RationalVector v;
    Rational p = 1;
    for (std::size_t k = 0; k < d; ++k) {
      v.push_back(p);
      p *= a;
    }
    normals.push_back(std::move(v));
  }
  return Arrangement::central(d, normals);
}

inline Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Arrangement random_arrangement(std::mt19937& rng, std::size_t n, std::size_t d,
                                      bool central) {
  for (;;) {
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < n; ++i) {
      Hyperplane h;
      for (std::size_t k = 0; k < d; ++k) h.normal.push_back(small_rational(rng));
      h.offset = central ? Rational(0) : small_rational(rng);
      hs.push_back(std::move(h));
    }
    try {
      return Arrangement(d, std::move(hs),
                         central ? ArrangementKind::central : ArrangementKind::affine);
    } catch (const std::invalid_argument&) {
    }
  }
}

inline Arrangement random_simple(std::mt19937& rng, std::size_t n, std::size_t d) {
  for (;;) {
    auto arr = random_arrangement(rng, n, d, false);
    if (is_simple(arr)) return arr;
  }
}

inline Arrangement random_centrally_simple(std::mt19937& rng, std::size_t n, std::size_t d) {
  for (;;) {
    auto arr = random_arrangement(rng, n, d, true);
    if (is_centrally_simple(arr)) return arr;
  }
}

}  // namespace hyparr::testing

#endif  // HYPARR_TEST_SUPPORT_HPP
