#include "hyparr/certify.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hyparr/combinatorics.hpp"
#include "hyparr/topes.hpp"

namespace hyparr {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::certified:
      return "certified";
    case Verdict::not_applicable:
      return "not-applicable";
    case Verdict::refuted:
      return "refuted-implementation-bug";
  }
  return "?";
}

namespace {

long as_long(std::size_t x) { return static_cast<long>(x); }

void require_central(const Arrangement& arr, const char* who) {
  if (!arr.is_central()) throw std::invalid_argument(std::string(who) + ": arrangement must be central");
}

void require_simple_odd(const Arrangement& arr, const char* who) {
  if (arr.is_central()) throw std::invalid_argument(std::string(who) + ": arrangement must be affine");
  if (arr.dim() % 2 == 0) throw std::invalid_argument(std::string(who) + ": dimension must be odd");
  if (!is_simple(arr)) throw std::invalid_argument(std::string(who) + ": arrangement must be simple");
}

void require_index(const Arrangement& arr, std::size_t i, const char* who) {
  if (i >= arr.size()) {
    throw std::invalid_argument(std::string(who) + ": hyperplane index " + std::to_string(i) +
                                " out of range");
  }
}

// |T(A / H_i)|. Restricting a line in R^1 leaves a point: one cell.
std::size_t restriction_tope_count(const Arrangement& arr, std::size_t i) {
  if (arr.dim() == 1) return 1;
  return enumerate_topes(restriction(arr, i)).size();
}

}  // namespace

Certificate check_thm1(const Arrangement& arr, SearchBudget budget) {
  Certificate cert{"thm1", std::nullopt, 0, 0, Verdict::not_applicable, "", {}};
  auto g = build_graph(arr);
  cert.lhs = as_long(oe_invariant(g));
  auto result = find_hamiltonian(g, budget);
  cert.values = {{"topes", as_long(g.vertex_count())}, {"expansions", as_long(result.expansions)}};
  switch (result.outcome) {
    case SearchOutcome::found:
      cert.verdict = cert.lhs == 0 ? Verdict::certified : Verdict::refuted;
      cert.detail = "Hamiltonian circuit found";
      break;
    case SearchOutcome::exhausted:
      cert.detail = "no Hamiltonian circuit" + (result.reason.empty() ? "" : " (" + result.reason + ")");
      break;
    case SearchOutcome::budget_exceeded:
      cert.detail = "search budget exhausted, outcome unknown";
      break;
  }
  return cert;
}

Certificate check_thm3(const Arrangement& arr) {
  require_central(arr, "check_thm3");
  Certificate cert{"thm3", std::nullopt, 0, 0, Verdict::not_applicable, "", {}};
  cert.lhs = as_long(oe_invariant(arr));
  if (!is_centrally_simple(arr)) {
    cert.detail = "not centrally simple";
  } else if (arr.size() % 2 == 0 && arr.dim() % 2 == 1) {
    cert.detail = "n even and d odd: excluded case";
  } else {
    cert.verdict = cert.lhs == 0 ? Verdict::certified : Verdict::refuted;
  }
  return cert;
}

Certificate check_thm7(const Arrangement& arr, std::size_t i, SearchBudget budget) {
  require_central(arr, "check_thm7");
  require_index(arr, i, "check_thm7");
  Certificate cert{"thm7", i, 0, 0, Verdict::not_applicable, "", {}};
  cert.lhs = as_long(oe_invariant(deletion(arr, i)));
  cert.rhs = as_long(restriction_tope_count(arr, i));
  if (cert.lhs <= cert.rhs) {
    cert.detail = "inequality fails";
    return cert;
  }
  cert.verdict = Verdict::certified;
  cert.detail = "no Hamiltonian circuit";
  auto g = build_graph(arr);
  if (g.vertex_count() <= kCrossCheckVertices) {
    auto result = find_hamiltonian(g, budget);
    cert.values.emplace_back("cross_check_expansions", as_long(result.expansions));
    if (result.outcome == SearchOutcome::found) {
      cert.verdict = Verdict::refuted;
      cert.detail = "search found a circuit the inequality excludes";
    } else if (result.outcome == SearchOutcome::exhausted) {
      cert.detail += "; exhaustive search agrees";
    }
  }
  return cert;
}

Certificate check_thm9(const Arrangement& arr) {
  require_simple_odd(arr, "check_thm9");
  Certificate cert{"thm9", std::nullopt, 0, 0, Verdict::not_applicable, "", {}};
  auto parts = classify_bounded(arr);
  std::vector<SignVector> all = parts.bounded;
  all.insert(all.end(), parts.unbounded.begin(), parts.unbounded.end());
  const long s_all = signed_oe(all);
  const long s_bounded = signed_oe(parts.bounded);
  const long s_infinity = signed_oe(enumerate_topes(direction_arrangement(arr)));
  cert.values = {{"s(T)", s_all},
                 {"s(T_b)", s_bounded},
                 {"s(T(A_inf))", s_infinity},
                 {"bounded", as_long(parts.bounded.size())}};
  bool holds;
  if (arr.size() % 2 == 1) {
    cert.lhs = s_bounded;
    cert.rhs = 0;
    holds = s_all == 0 && s_bounded == 0 && s_infinity == 0;
    cert.detail = "n odd: all three signed sums vanish";
  } else {
    cert.lhs = 2 * s_bounded;
    cert.rhs = -s_infinity;
    holds = cert.lhs == cert.rhs;
    cert.detail = "n even: 2 s(T_b) = -s(T(A_inf))";
  }
  cert.verdict = holds ? Verdict::certified : Verdict::refuted;
  return cert;
}

Certificate check_thm10_bound(const Arrangement& arr) {
  require_simple_odd(arr, "check_thm10_bound");
  Certificate cert{"thm10", std::nullopt, 0, 0, Verdict::not_applicable, "", {}};
  const std::size_t n = arr.size();
  const std::size_t d = arr.dim();
  std::uint64_t bound = 0;
  for (std::size_t k = 0; 2 * k <= d - 1; ++k) bound += binomial(n, d - 1 - 2 * k);
  cert.lhs = as_long(oe_invariant(arr));
  cert.rhs = static_cast<long>(2 * bound);
  cert.verdict = cert.lhs <= cert.rhs ? Verdict::certified : Verdict::refuted;
  return cert;
}

Certificate check_thm11(const Arrangement& arr, std::size_t i) {
  require_central(arr, "check_thm11");
  require_index(arr, i, "check_thm11");
  if (!is_centrally_simple(arr)) {
    throw std::invalid_argument("check_thm11: arrangement must be centrally simple");
  }
  Certificate cert{"thm11", i, 0, 0, Verdict::not_applicable, "", {}};
  cert.lhs = as_long(oe_invariant(deletion(arr, i)));
  cert.rhs = 2 * as_long(restriction_tope_count(arr, i));
  if (cert.lhs <= cert.rhs) {
    cert.detail = "inequality fails";
    return cert;
  }
  cert.verdict = Verdict::certified;
  cert.detail = "no perfect matching";
  auto g = build_graph(arr);
  if (g.vertex_count() <= kCrossCheckVertices && has_perfect_matching(g)) {
    cert.verdict = Verdict::refuted;
    cert.detail = "perfect matching exists although the inequality excludes it";
  }
  return cert;
}

Certificate check_simmons_wetzel(const Arrangement& arr) {
  if (arr.dim() != 2 || arr.is_central()) {
    throw std::invalid_argument("check_simmons_wetzel: needs an affine arrangement in R^2");
  }
  if (arr.size() < 3) throw std::invalid_argument("check_simmons_wetzel: needs at least 3 lines");
  auto points = intersection_points(arr);
  if (points.empty()) throw std::invalid_argument("check_simmons_wetzel: no two lines meet");
  Certificate cert{"simmons-wetzel", std::nullopt, 0, 0, Verdict::not_applicable, "", {}};
  auto g = build_graph(arr);
  const long b = as_long(std::max(g.burnt_umber_count(), g.chartreuse_count()));
  const long c = as_long(std::min(g.burnt_umber_count(), g.chartreuse_count()));
  long correction = 0;
  for (const auto& p : points) correction += as_long(p.multiplicity) - 2;
  cert.lhs = b;
  cert.rhs = 2 * c - 2 - correction;
  cert.values = {{"b", b}, {"c", c}, {"correction", correction}};
  cert.verdict = cert.lhs <= cert.rhs ? Verdict::certified : Verdict::refuted;
  return cert;
}

Arrangement random_simple_arrangement(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n == 0 || d == 0) throw std::invalid_argument("random_simple_arrangement: need n, d >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  auto draw = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Hyperplane> hs(n);
    for (auto& h : hs) {
      h.normal.resize(d);
      for (auto& x : h.normal) x = draw();
      h.offset = draw();
    }
    if (std::any_of(hs.begin(), hs.end(), [](const Hyperplane& h) { return is_zero_vector(h.normal); })) {
      continue;
    }
    try {
      Arrangement arr(d, std::move(hs), ArrangementKind::affine);
      if (is_simple(arr)) return arr;
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::runtime_error("random_simple_arrangement: no simple arrangement after 10000 attempts");
}

std::string certificate_table(const std::vector<std::pair<std::string, Certificate>>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(28) << "instance" << std::setw(16) << "theorem" << std::setw(5)
      << "H" << std::right << std::setw(8) << "lhs" << std::setw(8) << "rhs" << "  verdict\n";
  for (const auto& [name, cert] : rows) {
    out << std::left << std::setw(28) << name << std::setw(16) << cert.kind << std::setw(5)
        << (cert.hyperplane ? std::to_string(*cert.hyperplane) : "-") << std::right << std::setw(8)
        << cert.lhs << std::setw(8) << cert.rhs << "  " << verdict_name(cert.verdict) << "\n";
  }
  return out.str();
}

}  // namespace hyparr
