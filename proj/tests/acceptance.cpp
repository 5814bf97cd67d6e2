// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>

#include "hyparr/alternating.hpp"
#include "hyparr/certify.hpp"
#include "hyparr/combinatorics.hpp"
#include "hyparr/generators.hpp"
#include "hyparr/topes.hpp"

using namespace hyparr;

namespace {

// The printed A(5,3) circuit, rows as typeset, closing entry included.
const char* kPrintedA53 = R"(
+++++,\ -++++,\ --+++,\ +-+++,\ +--++,\ ++-++,\\
++--+,\ +++-+,\ +++--,\ -++--,\ -+---,\ ++---,\\
+----, \ +---+,\ ----+,\ ---++,\ ---+-,\ -----,\\
--+--,\ --++-,\ -+++-,\ ++++-, \ +++++.\\
)";

struct Outcome {
  bool pass = true;
  std::string note;
};

class Failure {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && message_.empty()) message_ = what;
  }
  bool ok() const { return message_.empty(); }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (seconds > limit_seconds) {
    out.pass = false;
    std::ostringstream msg;
    msg << "over time limit of " << limit_seconds << " s";
    out.note = out.note.empty() ? msg.str() : out.note + "; " + msg.str();
  }
  if (!out.pass) ++failures;
  std::cout << (out.pass ? "PASS" : "FAIL") << " [" << std::setw(2) << id << "] " << title << " ("
            << std::fixed << std::setprecision(2) << seconds << " s)";
  if (!out.note.empty()) std::cout << ": " << out.note;
  std::cout << std::endl;
}

Outcome from(const Failure& f, const std::string& summary) {
  return f.ok() ? Outcome{true, summary} : Outcome{false, f.message()};
}

std::string pair_name(std::size_t n, std::size_t d) {
  return "(" + std::to_string(n) + "," + std::to_string(d) + ")";
}

// Signed sum over all 2^n sequences with at most d - 1 sign changes.
long brute_signed_oe(std::size_t n, std::size_t d) {
  long sum = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::size_t changes = 0, plus = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool minus = (mask >> i) & 1;
      plus += !minus;
      if (i > 0 && minus != static_cast<bool>((mask >> (i - 1)) & 1)) ++changes;
    }
    if (changes <= d - 1) sum += plus % 2 == 0 ? 1 : -1;
  }
  return sum;
}

std::vector<Rational> spread(std::size_t n) {
  std::vector<Rational> alphas;
  for (std::size_t i = 0; i < n; ++i) alphas.emplace_back(static_cast<long>(2 * i) - static_cast<long>(n), 3);
  return alphas;
}

bool equal_up_to_dihedral(const std::vector<SignVector>& a, const std::vector<SignVector>& b) {
  if (a.size() != b.size()) return false;
  for (int reflect = 0; reflect < 2; ++reflect) {
    std::vector<SignVector> c = a;
    if (reflect) std::reverse(c.begin(), c.end());
    for (std::size_t r = 0; r < c.size(); ++r) {
      if (c == b) return true;
      std::rotate(c.begin(), c.begin() + 1, c.end());
    }
  }
  return false;
}

// Random planar arrangement from a small coefficient pool, so parallel and
// concurrent lines occur. Resampled until some two lines meet.
Arrangement random_planar(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (;;) {
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < n; ++i) {
      Hyperplane h{{Rational(coeff(rng)), Rational(coeff(rng))}, Rational(coeff(rng))};
      if (is_zero_vector(h.normal)) {
        --i;
        continue;
      }
      hs.push_back(h);
    }
    try {
      Arrangement arr(2, std::move(hs), ArrangementKind::affine);
      if (!intersection_points(arr).empty()) return arr;
    } catch (const std::invalid_argument&) {
    }
  }
}

Arrangement random_centrally_simple(std::mt19937_64& rng, std::size_t n, std::size_t d) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (;;) {
    RationalMatrix normals(n, RationalVector(d));
    for (auto& v : normals) {
      for (auto& x : v) x = coeff(rng);
    }
    try {
      auto arr = Arrangement::central(d, normals);
      if (is_centrally_simple(arr)) return arr;
    } catch (const std::invalid_argument&) {
    }
  }
}

struct Instance {
  std::string name;
  Arrangement arr;
};

std::vector<Instance> small_corpus() {
  std::vector<Instance> corpus;
  for (std::size_t n = 1; n <= 7; ++n) corpus.push_back({"cube " + std::to_string(n), cube_arrangement(n)});
  for (std::size_t n = 1; n <= 4; ++n) corpus.push_back({"coxeter " + std::to_string(n), coxeter_A(n)});
  for (std::size_t n = 2; n <= 9; ++n) {
    for (std::size_t d = 2; d <= std::min<std::size_t>(n, 5); ++d) {
      corpus.push_back({"alternating " + pair_name(n, d), realize(n, d, spread(n))});
    }
  }
  std::uint64_t seed = 100;
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t n = 1; n <= 7; ++n) {
      for (int rep = 0; rep < 2; ++rep) {
        corpus.push_back({"simple " + pair_name(n, d) + " #" + std::to_string(seed),
                          random_simple_arrangement(n, d, seed++)});
      }
    }
  }
  std::mt19937_64 rng(7);
  for (std::size_t d = 2; d <= 4; ++d) {
    for (std::size_t n = 1; n <= 8; ++n) {
      if (d == 1 && n > 1) continue;
      corpus.push_back({"central " + pair_name(n, d), random_centrally_simple(rng, n, d)});
    }
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    for (int rep = 0; rep < 3; ++rep) corpus.push_back({"planar " + std::to_string(n), random_planar(rng, n)});
  }
  corpus.push_back({"product", product_construction({random_simple_arrangement(3, 2, 1),
                                                      random_simple_arrangement(3, 2, 2)})
                                   .arrangement});
  return corpus;
}

}  // namespace

int main() {
  std::cout << "acceptance suite" << std::endl;

  criterion(1, "closed form of the odd-even invariant for A(n,d), n <= 14, d <= 7", 10, [] {
    Failure f;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 14; ++n) {
      for (std::size_t d = 1; d <= std::min<std::size_t>(n, 7); ++d) {
        const auto oe = static_cast<std::uint64_t>(std::labs(brute_signed_oe(n, d)));
        const std::uint64_t expected =
            n % 2 == 0 && d % 2 == 1 ? 2 * binomial(n / 2 - 1, (d - 1) / 2) : 0;
        f.require(oe == expected, "A" + pair_name(n, d) + ": brute force " + std::to_string(oe) +
                                      ", expected " + std::to_string(expected));
        f.require(oe_formula(n, d) == expected, "oe_formula disagrees at " + pair_name(n, d));
        ++checked;
      }
    }
    return from(f, std::to_string(checked) + " (n,d) pairs");
  });

  criterion(2, "A(n,3) circuits for n = 5..13 and the printed A(5,3) listing", 5, [] {
    Failure f;
    for (std::size_t n : {5u, 7u, 9u, 11u, 13u}) {
      auto g = alt_tope_graph(n, 3);
      auto seq = ham_circuit_n_3(n);
      f.require(seq.size() == 2 + n * (n - 1), "wrong length at n = " + std::to_string(n));
      auto check = verify_circuit(g, circuit_from_topes(g, seq));
      f.require(check.ok, "n = " + std::to_string(n) + ": " + check.failure);
    }
    std::vector<SignVector> printed;
    std::string text = kPrintedA53;
    std::regex token("[+-]{5}");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), token); it != std::sregex_iterator(); ++it) {
      printed.push_back(SignVector::parse(it->str()));
    }
    f.require(printed.size() == 23 && printed.front() == printed.back(), "listing is not closed");
    printed.pop_back();
    auto g = alt_tope_graph(5, 3);
    auto check = verify_circuit(g, circuit_from_topes(g, printed));
    f.require(check.ok, "printed listing: " + check.failure);
    const bool same = equal_up_to_dihedral(ham_circuit_n_3(5), printed);
    f.require(same, "constructed A(5,3) circuit differs from the listing");
    return from(f, "listing verified, construction identical to it");
  });

  criterion(3, "A(n,n-1) circuits for n = 3..11", 10, [] {
    Failure f;
    for (std::size_t n : {3u, 5u, 7u, 9u, 11u}) {
      auto g = alt_tope_graph(n, n - 1);
      auto seq = ham_circuit_n_nminus1(n);
      f.require(seq.size() == (std::size_t{1} << n) - 2, "wrong length at n = " + std::to_string(n));
      auto check = verify_circuit(g, circuit_from_topes(g, seq));
      f.require(check.ok, "n = " + std::to_string(n) + ": " + check.failure);
    }
    return from(f, "largest 2046 vertices");
  });

  criterion(4, "realized alternating arrangements match the sign-change model, n <= 8, d <= 4", 60, [] {
    Failure f;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
      // In R^1 all normals are (1): only n = 1 is an arrangement.
      for (std::size_t d = n == 1 ? 1 : 2; d <= std::min<std::size_t>(n, 4); ++d) {
        auto g = build_graph(realize(n, d, spread(n)));
        auto model = alt_tope_graph(n, d);
        f.require(g.topes() == model.topes(), "tope sets differ at " + pair_name(n, d));
        f.require(g.edges() == model.edges(), "adjacency differs at " + pair_name(n, d));
        ++checked;
      }
    }
    return from(f, std::to_string(checked) + " (n,d) pairs");
  });

  criterion(5, "product of planar factors multiplies tope counts and signed invariants", 60, [] {
    Failure f;
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> lines(3, 5);
    std::vector<std::string> seen;
    for (int pair = 0; pair < 6; ++pair) {
      auto a = random_simple_arrangement(lines(rng), 2, 1000 + 2 * pair);
      auto b = random_simple_arrangement(lines(rng), 2, 1001 + 2 * pair);
      auto ta = enumerate_topes(a);
      auto tb = enumerate_topes(b);
      auto report = product_construction({a, b});
      auto topes = enumerate_topes(report.arrangement);
      const long expected = signed_oe(ta) * signed_oe(tb);
      f.require(topes.size() == ta.size() * tb.size(), "tope count is not multiplicative");
      f.require(signed_oe(topes) == expected, "signed invariant is not multiplicative");
      f.require(report.predicted_signed_oe == expected, "report prediction is wrong");
      seen.push_back(std::to_string(signed_oe(ta)) + "*" + std::to_string(signed_oe(tb)) + "=" +
                     std::to_string(signed_oe(topes)));
    }
    std::string summary = "6 pairs:";
    for (const auto& s : seen) summary += " " + s;
    return from(f, summary);
  });

  criterion(6, "bounded-tope identities for 25 random simple arrangements in R^3", 60, [] {
    Failure f;
    std::size_t odd = 0, even = 0;
    for (int k = 0; k < 25; ++k) {
      const std::size_t n = 2 + static_cast<std::size_t>(k) % 6;
      auto cert = check_thm9(random_simple_arrangement(n, 3, 500 + static_cast<std::uint64_t>(k)));
      f.require(cert.verdict == Verdict::certified,
                "n = " + std::to_string(n) + ": lhs " + std::to_string(cert.lhs) + ", rhs " +
                    std::to_string(cert.rhs));
      (n % 2 ? odd : even)++;
    }
    return from(f, std::to_string(odd) + " odd-n, " + std::to_string(even) + " even-n instances");
  });

  criterion(7, "finite bound and circuit/matching contrapositives over the small corpus", 300, [] {
    Failure f;
    std::size_t used = 0, bounded = 0, circuits = 0, matchings = 0, unknown = 0;
    for (const auto& [name, arr] : small_corpus()) {
      auto g = build_graph(arr);
      if (g.vertex_count() > 200) continue;
      ++used;
      const auto oe = oe_invariant(g);
      if (!arr.is_central() && arr.dim() % 2 == 1 && is_simple(arr)) {
        auto cert = check_thm10_bound(arr);
        f.require(cert.verdict == Verdict::certified, name + ": bound violated");
        ++bounded;
      }
      auto search = find_hamiltonian(g, SearchBudget{1'000'000});
      if (search.outcome == SearchOutcome::found) {
        ++circuits;
        f.require(oe == 0, name + ": circuit found but oe = " + std::to_string(oe));
        if (arr.is_central()) {
          for (std::size_t i = 0; i < arr.size(); ++i) {
            auto cert = check_thm7(arr, i);
            f.require(cert.lhs <= cert.rhs, name + ": circuit inequality holds at H" + std::to_string(i));
          }
        }
      } else if (search.outcome == SearchOutcome::budget_exceeded) {
        ++unknown;
      }
      if (arr.is_central() && is_centrally_simple(arr) && has_perfect_matching(g)) {
        ++matchings;
        for (std::size_t i = 0; i < arr.size(); ++i) {
          auto cert = check_thm11(arr, i);
          f.require(cert.lhs <= cert.rhs, name + ": matching inequality holds at H" + std::to_string(i));
        }
      }
    }
    return from(f, std::to_string(used) + " instances; " + std::to_string(bounded) + " bound checks, " +
                       std::to_string(circuits) + " with circuits, " + std::to_string(matchings) +
                       " with perfect matchings, " + std::to_string(unknown) + " searches inconclusive");
  });

  criterion(8, "color-class inequality for 50 random planar arrangements", 30, [] {
    Failure f;
    std::mt19937_64 rng(88);
    std::uniform_int_distribution<std::size_t> lines(3, 8);
    std::size_t simple = 0, degenerate = 0;
    for (int k = 0; k < 50; ++k) {
      auto arr = k % 2 == 0 ? random_simple_arrangement(lines(rng), 2, 800 + static_cast<std::uint64_t>(k))
                            : random_planar(rng, lines(rng));
      (is_simple(arr) ? simple : degenerate)++;
      auto cert = check_simmons_wetzel(arr);
      f.require(cert.verdict == Verdict::certified,
                "b = " + std::to_string(cert.lhs) + " exceeds " + std::to_string(cert.rhs));
    }
    f.require(degenerate > 0, "no non-simple instance generated");
    return from(f, std::to_string(simple) + " simple, " + std::to_string(degenerate) + " non-simple");
  });

  criterion(9, "cube and braid arrangement families", 60, [] {
    Failure f;
    for (std::size_t n = 1; n <= 10; ++n) {
      auto arr = cube_arrangement(n);
      if (n <= 6) {
        auto g = build_graph(arr);
        f.require(g.vertex_count() == (std::size_t{1} << n), "cube tope count at n = " + std::to_string(n));
        auto search = find_hamiltonian(g);
        f.require(search.outcome == SearchOutcome::found, "no Gray code found at n = " + std::to_string(n));
      } else {
        f.require(enumerate_topes(arr).size() == (std::size_t{1} << n),
                  "cube tope count at n = " + std::to_string(n));
      }
    }
    std::size_t factorial = 1;
    for (std::size_t n = 1; n <= 4; ++n) {
      factorial *= n + 1;
      auto g = build_graph(coxeter_A(n));
      f.require(g.vertex_count() == factorial, "braid tope count at n = " + std::to_string(n));
      f.require(oe_invariant(g) == 0, "braid invariant at n = " + std::to_string(n));
      auto check = verify_circuit(g, sjt_circuit(n));
      f.require(check.ok, "SJT circuit at n = " + std::to_string(n) + ": " + check.failure);
    }
    return from(f, "cubes to n = 10, braid arrangements to n = 4");
  });

  criterion(10, "one-hyperplane extension of a searched planar seed (10 lines, budget 2000, seed 1)", 600,
            [] {
              Failure f;
              auto seed = planar_seed_search(10, 2000, 1);
              auto ext = theorem8_assembly(seed, 1);
              const auto& result = ext.construction.arrangement;
              // Independent recomputation with the 2^n filter.
              const auto input = deletion(result, ext.added_index);
              const auto input_oe =
                  static_cast<std::size_t>(std::labs(signed_oe(enumerate_topes_brute_force(input))));
              const auto cut = enumerate_topes_brute_force(restriction(result, ext.added_index)).size();
              f.require(result.size() % 2 == 1, "result has an even number of hyperplanes");
              f.require(ext.result_oe == 0 && oe_invariant(result) == 0, "result invariant is not zero");
              f.require(input == homogenize(seed.arrangement), "deleting H* does not give the input");
              f.require(ext.input_oe == input_oe && ext.restriction_topes == cut,
                        "certificate arithmetic disagrees with brute force");
              std::ostringstream note;
              note << "seed |s| = " << std::labs(seed.signed_oe) << ", oe(A minus H*) = " << input_oe
                   << ", |T(A/H*)| = " << cut;
              if (ext.certificate) {
                auto cert = check_thm7(result, ext.added_index);
                f.require(cert.verdict == Verdict::certified, "inequality not certified");
                note << ", certified: no Hamiltonian circuit despite oe = 0";
              } else {
                note << ", threshold not reached (unconditional parts checked)";
              }
              return from(f, note.str());
            });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
