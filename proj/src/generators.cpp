#include "hyparr/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "hyparr/combinatorics.hpp"
#include "hyparr/topes.hpp"

namespace hyparr {

Arrangement cube_arrangement(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cube_arrangement: n must be at least 1");
  RationalMatrix normals(n, RationalVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) normals[i][i] = 1;
  return Arrangement::central(n, normals);
}

Arrangement coxeter_A(std::size_t n) {
  if (n == 0) throw std::invalid_argument("coxeter_A: n must be at least 1");
  // Coordinate k of R^n is x_{k+1}; x_0 has gradient (-1, ..., -1).
  auto gradient = [n](std::size_t i) {
    RationalVector g(n, 0);
    if (i == 0) {
      std::fill(g.begin(), g.end(), Rational(-1));
    } else {
      g[i - 1] = 1;
    }
    return g;
  };
  RationalMatrix normals;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      auto gi = gradient(i);
      auto gj = gradient(j);
      RationalVector v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = gj[k] - gi[k];
      normals.push_back(std::move(v));
    }
  }
  return Arrangement::central(n, normals);
}

SignVector permutation_tope(const std::vector<std::size_t>& order) {
  const std::size_t m = order.size();
  std::vector<std::size_t> rank(m, m);
  for (std::size_t pos = 0; pos < m; ++pos) {
    if (order[pos] >= m || rank[order[pos]] != m) {
      throw std::invalid_argument("permutation_tope: not a permutation of 0..n");
    }
    rank[order[pos]] = pos;
  }
  std::vector<std::int8_t> signs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) signs.push_back(rank[i] < rank[j] ? 1 : -1);
  }
  return SignVector(std::move(signs));
}

std::vector<std::vector<std::size_t>> sjt_permutations(std::size_t n) {
  const std::size_t m = n + 1;
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> dir(m, -1);  // indexed by value
  std::vector<std::vector<std::size_t>> out{perm};
  for (;;) {
    // Largest mobile element: its neighbor in its direction is smaller.
    std::optional<std::size_t> pos;
    for (std::size_t p = 0; p < m; ++p) {
      long q = static_cast<long>(p) + dir[perm[p]];
      if (q < 0 || q >= static_cast<long>(m) || perm[q] > perm[p]) continue;
      if (!pos || perm[p] > perm[*pos]) pos = p;
    }
    if (!pos) break;
    const std::size_t value = perm[*pos];
    std::swap(perm[*pos], perm[*pos + dir[value]]);
    for (std::size_t v = value + 1; v < m; ++v) dir[v] = -dir[v];
    out.push_back(perm);
  }
  return out;
}

Circuit sjt_circuit(std::size_t n) {
  std::vector<SignVector> seq;
  for (const auto& p : sjt_permutations(n)) seq.push_back(permutation_tope(p));
  std::vector<SignVector> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  Circuit c;
  for (const auto& s : seq) {
    c.order.push_back(
        static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin()));
  }
  return c;
}

ConstructionReport product_construction(const std::vector<Arrangement>& factors) {
  if (factors.empty()) throw std::invalid_argument("product_construction: no factors");
  std::size_t dim = 0;
  for (const auto& f : factors) {
    if (f.is_central()) throw std::invalid_argument("product_construction: factors must be affine");
    dim += f.dim();
  }
  ConstructionReport report{Arrangement(dim, {}, ArrangementKind::affine), "product", 1, {}};
  std::vector<Hyperplane> hs;
  std::size_t block = 0;
  long predicted = 1;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& f = factors[k];
    for (const auto& h : f.hyperplanes()) {
      Hyperplane lifted{RationalVector(dim, 0), h.offset};
      std::copy(h.normal.begin(), h.normal.end(), lifted.normal.begin() + block);
      hs.push_back(std::move(lifted));
    }
    block += f.dim();
    auto topes = enumerate_topes(f);
    predicted *= signed_oe(topes);
    report.factors.push_back("factor " + std::to_string(k) + ": " + std::to_string(f.size()) +
                             " hyperplanes in R^" + std::to_string(f.dim()));
  }
  report.arrangement = Arrangement(dim, std::move(hs), ArrangementKind::affine);
  report.predicted_signed_oe = predicted;
  report.provenance = "product of " + std::to_string(factors.size()) + " factors";
  return report;
}

Arrangement cylinder_lift(const Arrangement& arr, std::size_t extra) {
  std::vector<Hyperplane> hs = arr.hyperplanes();
  for (auto& h : hs) h.normal.resize(arr.dim() + extra, 0);
  return Arrangement(arr.dim() + extra, std::move(hs), arr.kind());
}

long planar_signed_oe(const Arrangement& arr) {
  if (arr.dim() != 2 || arr.size() < 2 || !is_simple(arr)) {
    throw std::invalid_argument("planar_signed_oe: needs a simple arrangement of >= 2 lines in R^2");
  }
  // With no parallel lines every cell has a vertex on its boundary, and the
  // four cells at a vertex take all sign pairs on its two lines.
  const std::size_t n = arr.size();
  std::set<SignVector> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = arr[i];
      const auto& b = arr[j];
      Rational det = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
      RationalVector p{(a.offset * b.normal[1] - a.normal[1] * b.offset) / det,
                       (a.normal[0] * b.offset - a.offset * b.normal[0]) / det};
      std::vector<std::int8_t> signs(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        signs[k] = static_cast<std::int8_t>(sign_of(dot(arr[k].normal, p) - arr[k].offset));
      }
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          signs[i] = static_cast<std::int8_t>(si);
          signs[j] = static_cast<std::int8_t>(sj);
          cells.insert(SignVector(signs));
        }
      }
    }
  }
  std::vector<SignVector> all(cells.begin(), cells.end());
  return signed_oe(all);
}

namespace {

Hyperplane random_line(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-60, 60);
  Hyperplane h;
  do {
    h.normal = {Rational(coeff(rng)), Rational(coeff(rng))};
  } while (is_zero_vector(h.normal));
  h.offset = coeff(rng);
  return h;
}

std::optional<Arrangement> simple_or_none(std::vector<Hyperplane> hs) {
  try {
    Arrangement arr(2, std::move(hs), ArrangementKind::affine);
    if (is_simple(arr)) return arr;
  } catch (const std::invalid_argument&) {
  }
  return std::nullopt;
}

std::vector<Hyperplane> random_lines(std::mt19937_64& rng, std::size_t n) {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < n; ++i) hs.push_back(random_line(rng));
  return hs;
}

}  // namespace

PlanarSeed planar_seed_search(std::size_t n_lines, std::uint64_t budget, std::uint64_t seed) {
  if (n_lines < 3) throw std::invalid_argument("planar_seed_search: needs at least 3 lines");
  std::mt19937_64 rng(seed);

  auto fresh = [&] {
    for (;;) {
      if (auto arr = simple_or_none(random_lines(rng, n_lines))) return *arr;
    }
  };

  Arrangement best = fresh();
  long best_score = std::labs(planar_signed_oe(best));
  Arrangement current = best;
  long current_score = best_score;

  std::uniform_int_distribution<std::size_t> pick(0, n_lines - 1);
  std::uniform_int_distribution<int> nudge(-6, 6);
  std::uniform_int_distribution<int> restart(0, 49);
  for (std::uint64_t step = 0; step < budget; ++step) {
    std::optional<Arrangement> candidate;
    if (restart(rng) == 0) {
      candidate = fresh();
    } else {
      auto hs = current.hyperplanes();
      auto& h = hs[pick(rng)];
      if (restart(rng) < 10) {
        h = random_line(rng);
      } else {
        h.normal[0] += nudge(rng);
        h.normal[1] += nudge(rng);
        h.offset += nudge(rng);
      }
      if (is_zero_vector(h.normal)) continue;
      candidate = simple_or_none(std::move(hs));
      if (!candidate) continue;
    }
    long score = std::labs(planar_signed_oe(*candidate));
    if (score >= current_score || restart(rng) == 0) {
      current = *candidate;
      current_score = score;
    }
    if (score > best_score) {
      best = *candidate;
      best_score = score;
    }
  }

  auto topes = enumerate_topes(best);
  return PlanarSeed{best, signed_oe(topes), n_lines};
}

ExtensionReport theorem8_assembly(const Arrangement& input, std::uint64_t seed) {
  if (!input.is_central()) throw std::invalid_argument("theorem8_assembly: input must be central");
  if (input.dim() % 2 == 0) throw std::invalid_argument("theorem8_assembly: dimension must be odd");
  if (input.size() % 2 == 1) {
    throw std::invalid_argument("theorem8_assembly: number of hyperplanes must be even");
  }
  const std::size_t d = input.dim();
  const std::size_t n = input.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);

  auto generic = [&](const RationalVector& h) {
    if (is_zero_vector(h)) return false;
    // h must leave the span of every (d-1)-subset: H* then contains no
    // intersection of d - 1 input hyperplanes.
    bool ok = true;
    for_each_subset(n, std::min(n, d - 1), [&](const std::vector<std::size_t>& subset) {
      RationalMatrix rows;
      for (auto i : subset) rows.push_back(input[i].normal);
      const std::size_t r = rank_of(rows);
      rows.push_back(h);
      ok = rank_of(rows) == r + 1;
      return ok;
    });
    return ok;
  };

  RationalVector h(d);
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt == 10000) throw std::runtime_error("theorem8_assembly: no generic hyperplane found");
    for (auto& x : h) x = coeff(rng);
    if (generic(h)) break;
  }

  std::vector<Hyperplane> hs = input.hyperplanes();
  hs.push_back(Hyperplane{h, 0});
  ExtensionReport report{
      ConstructionReport{Arrangement(d, std::move(hs), ArrangementKind::central),
                         "one generic hyperplane appended", std::nullopt, {}},
      n, 0, 0, 0, false};
  const auto& result = report.construction.arrangement;
  report.construction.factors.push_back("input: " + std::to_string(n) + " hyperplanes in R^" +
                                        std::to_string(d));
  report.input_oe = oe_invariant(deletion(result, n));
  report.result_oe = oe_invariant(result);
  report.restriction_topes = enumerate_topes(restriction(result, n)).size();
  report.certificate = report.input_oe > report.restriction_topes;
  report.construction.predicted_signed_oe = 0;
  return report;
}

ExtensionReport theorem8_assembly(const PlanarSeed& seed, std::uint64_t rng_seed) {
  auto report = theorem8_assembly(homogenize(seed.arrangement), rng_seed);
  report.construction.factors.insert(report.construction.factors.begin(),
                                     "homogenized planar seed: " + std::to_string(seed.n_lines) +
                                         " lines, signed invariant " +
                                         std::to_string(seed.signed_oe));
  return report;
}

}  // namespace hyparr
