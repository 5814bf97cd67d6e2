#include "hyparr/topes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>

#include "hyparr/feasibility.hpp"

namespace hyparr {

namespace {

void check_length(const Arrangement& arr, const SignVector& s) {
  if (s.size() != arr.size()) {
    throw std::invalid_argument("sign vector has " + std::to_string(s.size()) +
                                " entries for " + std::to_string(arr.size()) + " hyperplanes");
  }
}

// Row of hyperplane i in homogeneous coordinates: (a_i) for central
// arrangements, (a_i, -b_i) otherwise.
RationalVector homogeneous_row(const Arrangement& arr, std::size_t i) {
  RationalVector row = arr[i].normal;
  if (!arr.is_central()) row.push_back(-arr[i].offset);
  return row;
}

std::size_t homogeneous_width(const Arrangement& arr) {
  return arr.dim() + (arr.is_central() ? 0 : 1);
}

RationalVector scaled(RationalVector v, int sign) {
  if (sign < 0) {
    for (auto& x : v) x = -x;
  }
  return v;
}

// Strict rows for every hyperplane except `skip`, plus lambda > 0 for
// affine arrangements.
LinearSystem cell_system(const Arrangement& arr, const SignVector& s,
                         std::optional<std::size_t> skip = std::nullopt) {
  LinearSystem sys;
  sys.variables = homogeneous_width(arr);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (skip && *skip == i) continue;
    sys.add(scaled(homogeneous_row(arr, i), s[i]), true);
  }
  if (!arr.is_central()) {
    RationalVector lambda(sys.variables, 0);
    lambda.back() = 1;
    sys.add(std::move(lambda), true);
  }
  return sys;
}

}  // namespace

bool feasible_tope(const Arrangement& arr, const SignVector& s) {
  return interior_point(arr, s).has_value();
}

std::optional<RationalVector> interior_point(const Arrangement& arr, const SignVector& s) {
  check_length(arr, s);
  auto y = find_solution(cell_system(arr, s));
  if (!y) return std::nullopt;
  if (arr.is_central()) return y;
  RationalVector x(y->begin(), y->end() - 1);
  const Rational& lambda = y->back();
  for (auto& v : x) v /= lambda;
  return x;
}

bool crosses_facet(const Arrangement& arr, const SignVector& s, std::size_t i) {
  check_length(arr, s);
  if (i >= arr.size()) throw std::out_of_range("crosses_facet: index out of range");
  LinearSystem sys = cell_system(arr, s, i);
  return is_feasible(restrict_to_kernel(sys, {homogeneous_row(arr, i)}));
}

bool are_adjacent(const Arrangement& arr, const SignVector& s, const SignVector& t) {
  check_length(arr, s);
  check_length(arr, t);
  if (!feasible_tope(arr, s) || !feasible_tope(arr, t)) {
    throw std::invalid_argument("are_adjacent: inputs must be topes");
  }
  if (s.hamming_distance(t) != 1) return false;
  std::size_t i = 0;
  while (s[i] == t[i]) ++i;
  return crosses_facet(arr, s, i);
}

std::optional<SignVector> sign_vector_at(const Arrangement& arr, const RationalVector& point) {
  if (point.size() != arr.dim()) throw std::invalid_argument("point has wrong dimension");
  std::vector<std::int8_t> signs;
  signs.reserve(arr.size());
  for (const auto& h : arr.hyperplanes()) {
    int v = sgn(dot(h.normal, point) - h.offset);
    if (v == 0) return std::nullopt;
    signs.push_back(static_cast<std::int8_t>(v));
  }
  return SignVector(std::move(signs));
}

SignVector seed_tope(const Arrangement& arr) {
  std::mt19937_64 rng(0x5eed7095ULL);
  std::uniform_int_distribution<int> num(-97, 97);
  std::uniform_int_distribution<int> den(1, 13);
  for (int attempt = 0; attempt < 64; ++attempt) {
    RationalVector p(arr.dim());
    for (auto& x : p) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
    if (auto s = sign_vector_at(arr, p)) return *s;
  }
  // Moment-curve points (1/k, 1/k^2, ...): each hyperplane holds at most dim
  // of them, so this schedule ends within dim * n + 1 steps.
  for (long k = 1;; ++k) {
    RationalVector p(arr.dim());
    Rational t(1, k);
    Rational power = t;
    for (auto& x : p) {
      x = power;
      power *= t;
    }
    if (auto s = sign_vector_at(arr, p)) return *s;
  }
}

TopeExploration explore_topes(const Arrangement& arr) {
  const std::size_t n = arr.size();
  std::map<SignVector, std::size_t> index;
  std::vector<SignVector> found;
  std::vector<std::vector<char>> tested;  // facet already settled per (tope, i)
  std::vector<std::pair<std::size_t, std::size_t>> raw_edges;

  auto visit = [&](const SignVector& s) {
    auto [it, inserted] = index.emplace(s, found.size());
    if (inserted) {
      found.push_back(s);
      tested.emplace_back(n, 0);
    }
    return it->second;
  };

  std::deque<std::size_t> queue{visit(seed_tope(arr))};
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      if (tested[u][i]) continue;
      tested[u][i] = 1;
      SignVector s = found[u];
      if (!crosses_facet(arr, s, i)) continue;
      std::size_t before = found.size();
      std::size_t v = visit(s.flipped(i));
      tested[v][i] = 1;
      raw_edges.emplace_back(u, v);
      if (found.size() > before) queue.push_back(v);
    }
  }

  // Reindex into canonical order.
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  std::vector<std::size_t> rank(found.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  TopeExploration out;
  out.topes.reserve(found.size());
  for (auto i : order) out.topes.push_back(found[i]);
  out.edges.reserve(raw_edges.size());
  for (auto [a, b] : raw_edges) {
    auto x = rank[a];
    auto y = rank[b];
    out.edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::vector<SignVector> enumerate_topes(const Arrangement& arr) {
  return explore_topes(arr).topes;
}

std::vector<SignVector> enumerate_topes_brute_force(const Arrangement& arr) {
  const std::size_t n = arr.size();
  if (n > 24) throw std::invalid_argument("brute-force enumeration limited to 24 hyperplanes");
  std::vector<SignVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::int8_t> signs(n);
    for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
    SignVector s(std::move(signs));
    if (feasible_tope(arr, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_bounded_tope(const Arrangement& arr, const SignVector& s) {
  check_length(arr, s);
  const std::size_t d = arr.dim();
  LinearSystem cone;
  cone.variables = d;
  for (std::size_t i = 0; i < arr.size(); ++i) cone.add(scaled(arr[i].normal, s[i]), false);
  // A nonzero recession direction can be scaled so some coordinate is +-1,
  // i.e. so that sigma * x_j > 0 for some j and sigma.
  for (std::size_t j = 0; j < d; ++j) {
    for (int sigma : {1, -1}) {
      LinearSystem probe = cone;
      RationalVector e(d, 0);
      e[j] = sigma;
      probe.add(std::move(e), true);
      if (is_feasible(probe)) return false;
    }
  }
  return true;
}

BoundedPartition classify_bounded(const Arrangement& arr) {
  BoundedPartition out;
  for (auto& s : enumerate_topes(arr)) {
    if (is_bounded_tope(arr, s)) out.bounded.push_back(std::move(s));
    else out.unbounded.push_back(std::move(s));
  }
  return out;
}

}  // namespace hyparr
