#include "hyparr/alternating.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyparr/combinatorics.hpp"

namespace hyparr {

AltArrangement::AltArrangement(std::size_t n_, std::size_t d_) : n(n_), d(d_) {
  if (d < 1 || d > n) {
    throw std::invalid_argument("alternating arrangement needs 1 <= d <= n, got n = " +
                                std::to_string(n) + ", d = " + std::to_string(d));
  }
}

std::size_t sign_changes(const SignVector& s) {
  std::size_t c = 0;
  for (std::size_t i = 1; i < s.size(); ++i) c += s[i] != s[i - 1];
  return c;
}

bool is_alt_tope(const SignVector& s, std::size_t d) {
  if (s.size() == 0) throw std::invalid_argument("is_alt_tope: empty sign sequence");
  return sign_changes(s) + 1 <= d;
}

std::vector<SignVector> enumerate_alt_topes(std::size_t n, std::size_t d) {
  AltArrangement alt(n, d);
  std::vector<SignVector> out;
  // Choose the first sign and the set of positions where the sign changes.
  for (std::size_t changes = 0; changes + 1 <= d && changes < n; ++changes) {
    for_each_subset(n - 1, changes, [&](const std::vector<std::size_t>& cuts) {
      for (int first : {1, -1}) {
        std::vector<std::int8_t> signs(n);
        int current = first;
        std::size_t next_cut = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (next_cut < cuts.size() && cuts[next_cut] + 1 == i) {
            current = -current;
            ++next_cut;
          }
          signs[i] = static_cast<std::int8_t>(current);
        }
        out.emplace_back(std::move(signs));
      }
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool alt_adjacent(const SignVector& s, const SignVector& t, std::size_t) {
  return s.hamming_distance(t) == 1;
}

std::uint64_t oe_formula(std::size_t n, std::size_t d) {
  AltArrangement alt(n, d);
  if (n % 2 == 0 && d % 2 == 1) return 2 * binomial(n / 2 - 1, (d - 1) / 2);
  return 0;
}

TopeGraph alt_tope_graph(std::size_t n, std::size_t d) {
  return hamming_graph(enumerate_alt_topes(n, d));
}

SignVector cyclic_arc(std::size_t n, std::size_t j, std::size_t k) {
  if (n == 0 || j > n) throw std::invalid_argument("cyclic_arc: need j <= n");
  std::vector<std::int8_t> signs(n, 1);
  const std::size_t start = (k + n - 1) % n;  // 0-based
  for (std::size_t i = 0; i < j; ++i) signs[(start + i) % n] = -1;
  return SignVector(std::move(signs));
}

std::vector<SignVector> reflected_gray_code(std::size_t m) {
  if (m == 0 || m > 30) throw std::invalid_argument("reflected_gray_code: need 1 <= m <= 30");
  std::vector<SignVector> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i) {
    std::uint64_t g = i ^ (i >> 1);
    std::vector<std::int8_t> signs(m);
    for (std::size_t b = 0; b < m; ++b) signs[b] = (g >> (m - 1 - b)) & 1 ? -1 : 1;
    out.emplace_back(std::move(signs));
  }
  return out;
}

namespace {

void require_odd(std::size_t n, const char* who) {
  if (n % 2 == 0 || n < 3) {
    throw std::invalid_argument(std::string(who) + ": n must be odd and at least 3, got " +
                                std::to_string(n));
  }
}

SignVector concat(const SignVector& head, const char* tail) {
  std::vector<std::int8_t> signs = head.signs();
  for (const char* c = tail; *c; ++c) signs.push_back(*c == '+' ? 1 : -1);
  return SignVector(std::move(signs));
}

}  // namespace

std::vector<SignVector> ham_circuit_n_3(std::size_t n) {
  require_odd(n, "ham_circuit_n_3");
  // Column j (1..n-1) holds the arcs of length j; arc S_{j,k} sits in row
  // k + floor(j/4), so the cell at (row, j) is S_{j, row - floor(j/4)}.
  auto cell = [n](std::size_t row, std::size_t col) {
    std::size_t shift = col / 4;
    std::size_t k = ((row + n - 1 - shift % n) % n) + 1;
    return cyclic_arc(n, col, k);
  };

  std::vector<SignVector> seq;
  seq.reserve(2 + n * (n - 1));
  seq.push_back(cyclic_arc(n, 0, 1));
  // Column pairs (1,2), (3,4), ...: zig-zag down rows 1..n-1 on even pairs
  // and back up on odd pairs, leaving row n for the way home.
  for (std::size_t pair = 0; 2 * pair + 2 <= n - 1; ++pair) {
    const std::size_t left = 2 * pair + 1;
    for (std::size_t step = 0; step < n - 1; ++step) {
      std::size_t row = pair % 2 == 0 ? 1 + step : n - 1 - step;
      seq.push_back(cell(row, left));
      seq.push_back(cell(row, left + 1));
    }
  }
  seq.push_back(cyclic_arc(n, n, 1));
  for (std::size_t col = n - 1; col >= 1; --col) seq.push_back(cell(n, col));
  return seq;
}

std::vector<SignVector> ham_circuit_n_nminus1(std::size_t n) {
  require_odd(n, "ham_circuit_n_nminus1");
  if (n == 3) {
    // A(3,2) is a 6-cycle.
    std::vector<SignVector> six;
    for (const char* s : {"+++", "++-", "+--", "---", "--+", "-++"}) {
      six.push_back(SignVector::parse(s));
    }
    return six;
  }

  const std::size_t m = n - 2;
  auto gray = reflected_gray_code(m);
  std::vector<std::int8_t> alternating(m);
  for (std::size_t i = 0; i < m; ++i) alternating[i] = i % 2 == 0 ? 1 : -1;
  const SignVector v0(alternating);
  auto it = std::find(gray.begin(), gray.end(), v0);
  std::rotate(gray.begin(), it, gray.end());
  const std::size_t last = gray.size() - 1;  // N
  const auto m_it = std::find(gray.begin(), gray.end(), v0.negated());
  const std::size_t mid = static_cast<std::size_t>(m_it - gray.begin());  // M
  if (mid % 2 != 1 || mid >= last) {
    throw std::logic_error("Gray code places the complement of v0 at an even position");
  }

  std::vector<SignVector> seq;
  seq.reserve((std::size_t{1} << n) - 2);
  auto emit = [&](std::size_t k, std::initializer_list<const char*> tails) {
    for (auto t : tails) seq.push_back(concat(gray[k], t));
  };

  // v0-+ and vM+- are the two fully alternating sequences, which are not topes.
  emit(0, {"++", "+-", "--"});
  for (std::size_t k = 1; k < mid; ++k) {
    if (k % 2 == 1) emit(k, {"--", "+-", "++", "-+"});
    else emit(k, {"-+", "++", "+-", "--"});
  }
  emit(mid, {"--", "-+", "++"});
  emit(mid + 1, {"++", "+-", "--", "-+"});
  for (std::size_t k = mid + 2; k <= last; ++k) {
    if (k % 2 == 1) emit(k, {"-+", "--", "+-", "++"});
    else emit(k, {"++", "+-", "--", "-+"});
  }
  return seq;
}

Arrangement realize(std::size_t n, std::size_t d, const std::vector<Rational>& alphas) {
  AltArrangement alt(n, d);
  if (alphas.size() != n) {
    throw std::invalid_argument("realize: expected " + std::to_string(n) + " parameters, got " +
                                std::to_string(alphas.size()));
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(alphas[i - 1] < alphas[i])) {
      throw std::invalid_argument("realize: parameters must be strictly increasing");
    }
  }
  RationalMatrix normals;
  normals.reserve(n);
  for (const auto& a : alphas) {
    RationalVector v;
    v.reserve(d);
    Rational p = 1;
    for (std::size_t k = 0; k < d; ++k) {
      v.push_back(p);
      p *= a;
    }
    normals.push_back(std::move(v));
  }
  return Arrangement::central(d, normals);
}

}  // namespace hyparr
