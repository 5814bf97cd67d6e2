#include <algorithm>
#include <map>

#include "doctest.h"
#include "hyparr/alternating.hpp"
#include "hyparr/combinatorics.hpp"
#include "hyparr/topes.hpp"
#include "test_support.hpp"

using namespace hyparr;
using hyparr::testing::sv;

namespace {

// The A(5,3) circuit as printed, closing entry dropped.
const std::vector<std::string> kGoldenA53 = {
    "+++++", "-++++", "--+++", "+-+++", "+--++", "++-++", "++--+", "+++-+",
    "+++--", "-++--", "-+---", "++---", "+----", "+---+", "----+", "---++",
    "---+-", "-----", "--+--", "--++-", "-+++-", "++++-"};

std::vector<Rational> integers(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Independent oracle: filter all 2^n sequences by counting sign changes.
std::vector<SignVector> brute_alt_topes(std::size_t n, std::size_t d) {
  std::vector<SignVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::int8_t> s(n);
    std::size_t changes = 0;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = (mask >> i) & 1 ? -1 : 1;
      if (i > 0 && s[i] != s[i - 1]) ++changes;
    }
    if (changes <= d - 1) out.emplace_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("is_alt_tope") {
  CHECK_FALSE(is_alt_tope(sv("+-+-"), 3));
  CHECK(is_alt_tope(sv("++++"), 1));
  CHECK(is_alt_tope(sv("++---"), 3));
  CHECK_THROWS_AS(is_alt_tope(SignVector(), 3), std::invalid_argument);
}

TEST_CASE("enumerate_alt_topes") {
  CHECK(enumerate_alt_topes(5, 3).size() == 22);
  CHECK(enumerate_alt_topes(6, 6).size() == 64);
  auto a54 = enumerate_alt_topes(5, 4);
  CHECK(a54.size() == 30);
  CHECK(std::find(a54.begin(), a54.end(), sv("+-+-+")) == a54.end());
  CHECK(std::find(a54.begin(), a54.end(), sv("-+-+-")) == a54.end());
  CHECK_THROWS_AS(enumerate_alt_topes(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_alt_topes(3, 0), std::invalid_argument);

  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t d = 1; d <= n; ++d) CHECK(enumerate_alt_topes(n, d) == brute_alt_topes(n, d));
  }
}

TEST_CASE("alt_adjacent") {
  CHECK(alt_adjacent(sv("+++++"), sv("-++++"), 3));
  for (std::size_t k = 1; k <= 5; ++k) CHECK(alt_adjacent(cyclic_arc(5, 0, 1), cyclic_arc(5, 1, k), 3));
  CHECK_FALSE(alt_adjacent(sv("++--+"), sv("-+---"), 3));
}

TEST_CASE("cyclic arcs") {
  CHECK(cyclic_arc(5, 1, 3).str() == "++-++");
  CHECK(cyclic_arc(5, 3, 5).str() == "--++-");
  CHECK(cyclic_arc(4, 0, 2).str() == "++++");
  CHECK(cyclic_arc(4, 4, 2).str() == "----");
}

TEST_CASE("oe_formula agrees with the signed sum over the model") {
  CHECK(oe_formula(6, 3) == 4);
  CHECK(oe_formula(7, 3) == 0);
  CHECK(oe_formula(8, 5) == 6);
  for (std::size_t n = 1; n <= 14; ++n) {
    for (std::size_t d = 1; d <= std::min<std::size_t>(n, 7); ++d) {
      auto topes = brute_alt_topes(n, d);
      CHECK_MESSAGE(static_cast<std::uint64_t>(std::labs(signed_oe(topes))) == oe_formula(n, d),
                    "n = " << n << ", d = " << d);
    }
  }
}

TEST_CASE("graph degrees match single-flip counts") {
  for (std::size_t n = 3; n <= 10; ++n) {
    for (std::size_t d = 1; d <= n; ++d) {
      auto g = alt_tope_graph(n, d);
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::size_t flips = 0;
        for (std::size_t i = 0; i < n; ++i) {
          auto f = g.tope(v).flipped(i);
          flips += sign_changes(f) + 1 <= d;
        }
        CHECK(g.neighbors(v).size() == flips);
      }
    }
  }
  // Constant sequences reach every single flip when d >= 3.
  auto g = alt_tope_graph(7, 3);
  CHECK(g.neighbors(*g.index_of(sv("+++++++"))).size() == 7);
}

TEST_CASE("golden A(5,3) circuit from the listing") {
  auto g = alt_tope_graph(5, 3);
  std::vector<SignVector> golden;
  for (auto& s : kGoldenA53) golden.push_back(sv(s));
  auto c = circuit_from_topes(g, golden);
  CHECK(verify_circuit(g, c));

  auto built = ham_circuit_n_3(5);
  CHECK(built == golden);
}

TEST_CASE("ham_circuit_n_3") {
  for (std::size_t n : {3u, 5u, 7u, 9u, 11u, 13u}) {
    auto seq = ham_circuit_n_3(n);
    CHECK(seq.size() == 2 + n * (n - 1));
    auto g = alt_tope_graph(n, 3);
    auto check = verify_circuit(g, circuit_from_topes(g, seq));
    CHECK_MESSAGE(check.ok, "n = " << n << ": " << check.failure);
  }
  CHECK_THROWS_AS(ham_circuit_n_3(6), std::invalid_argument);
}

TEST_CASE("ham_circuit_n_nminus1") {
  for (std::size_t n : {3u, 5u, 7u, 9u, 11u, 13u, 15u}) {
    auto seq = ham_circuit_n_nminus1(n);
    CHECK(seq.size() == (std::size_t{1} << n) - 2);
    auto g = alt_tope_graph(n, n - 1);
    auto check = verify_circuit(g, circuit_from_topes(g, seq));
    CHECK_MESSAGE(check.ok, "n = " << n << ": " << check.failure);
  }
  CHECK_THROWS_AS(ham_circuit_n_nminus1(8), std::invalid_argument);

  // A(3,2) is a 6-cycle; brute force over all orderings finds a circuit.
  auto g = alt_tope_graph(3, 2);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 6);
  std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5};
  bool any = false;
  do {
    any = any || verify_circuit(g, Circuit{perm}).ok;
  } while (!any && std::next_permutation(perm.begin() + 1, perm.end()));
  CHECK(any);
}

TEST_CASE("reflected Gray code: cyclic, one bit per step") {
  for (std::size_t m = 1; m <= 8; ++m) {
    auto code = reflected_gray_code(m);
    REQUIRE(code.size() == (std::size_t{1} << m));
    for (std::size_t i = 0; i < code.size(); ++i) {
      CHECK(code[i].hamming_distance(code[(i + 1) % code.size()]) == 1);
    }
  }
}

TEST_CASE("realize") {
  auto a53 = realize(5, 3, integers({-2, -1, 0, 1, 2}));
  CHECK(enumerate_topes(a53).size() == 22);
  CHECK_THROWS_AS(realize(3, 2, integers({0, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(realize(3, 2, integers({0, 1})), std::invalid_argument);

  auto q3 = build_graph(realize(3, 3, integers({0, 1, 2})));
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);

  // Only the order of the parameters matters.
  std::vector<Rational> odd{Rational(-7, 2), Rational(-1, 3), Rational(1, 5), 4, 11};
  CHECK(enumerate_topes(realize(5, 3, odd)) == enumerate_alt_topes(5, 3));
}

TEST_CASE("realized arrangements match the model, topes and adjacency") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Rational> alphas;
    for (std::size_t i = 0; i < n; ++i) alphas.emplace_back(static_cast<long>(2 * i) - 3, 2);
    // In rank 1 every normal is (1), so only n = 1 is realizable.
    for (std::size_t d = n == 1 ? 1 : 2; d <= std::min<std::size_t>(n, 4); ++d) {
      auto g = build_graph(realize(n, d, alphas));
      auto m = alt_tope_graph(n, d);
      CHECK(g.topes() == m.topes());
      CHECK(g.edges() == m.edges());
    }
  }
}
