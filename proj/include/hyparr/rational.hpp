/**
 * @file rational.hpp
 * @brief Exact rational scalars and small dense rational linear algebra.
 *
 * Every sign decision in the library goes through these types, so nothing
 * here ever rounds. Rationals are GMP fractions kept in canonical form.
 */

#ifndef HYPARR_RATIONAL_HPP
#define HYPARR_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hyparr {

using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Lowest-terms string, "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Sign of a rational: -1, 0 or +1.
inline int sign_of(const Rational& value) { return sgn(value); }

Rational dot(const RationalVector& a, const RationalVector& b);

bool is_zero_vector(const RationalVector& v);

/// Rank of a set of row vectors, by exact Gaussian elimination.
std::size_t rank_of(RationalMatrix rows);

/// Basis of { x : row . x = 0 for every row }, one basis vector per entry.
/// Columns are eliminated in index order so the basis is deterministic.
RationalMatrix null_space(const RationalMatrix& rows, std::size_t columns);

/// Positive multiple of v with coprime integer entries. Two vectors are
/// positively proportional iff their primitive forms agree.
RationalVector primitive_form(const RationalVector& v);

}  // namespace hyparr

#endif  // HYPARR_RATIONAL_HPP
