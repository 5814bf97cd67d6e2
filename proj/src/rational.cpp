#include "hyparr/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace hyparr {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view numerator = text;
  std::string_view denominator = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    numerator = text.substr(0, slash);
    denominator = text.substr(slash + 1);
  }
  if (!is_integer_literal(numerator) || !is_integer_literal(denominator) ||
      denominator[0] == '-' || denominator[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::string num(numerator);
  if (num[0] == '+') num.erase(0, 1);
  Integer p(num, 10);
  Integer q(std::string(denominator), 10);
  if (q == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
  }
  return sum;
}

bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

namespace {

// Reduces rows in place to row echelon form; returns pivot columns.
std::vector<std::size_t> echelon(RationalMatrix& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = 1 / rows[r][c];
    for (std::size_t k = c; k < columns; ++k) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t k = c; k < columns; ++k) {
        if (sgn(rows[r][k]) != 0) rows[i][k] -= f * rows[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_of(RationalMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t columns = rows.front().size();
  return echelon(rows, columns).size();
}

RationalMatrix null_space(const RationalMatrix& rows, std::size_t columns) {
  RationalMatrix work = rows;
  auto pivots = echelon(work, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivots) is_pivot[c] = true;

  RationalMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(columns, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector primitive_form(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  std::vector<Integer> ints;
  ints.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer k = x.get_num() * (l / x.get_den());
    g = gcd(g, k);
    ints.push_back(std::move(k));
  }
  RationalVector out;
  out.reserve(v.size());
  for (auto& k : ints) out.emplace_back(g == 0 ? k : Integer(k / g));
  return out;
}

}  // namespace hyparr
