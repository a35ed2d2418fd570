#include <doctest.h>

#include <cmath>
#include <random>

#include "collatz_net/asymptotics.hpp"
#include "oracles.hpp"

using namespace collatz;

TEST_CASE("fib") {
  CHECK(fib(1) == 1);
  CHECK(fib(5) == 5);
  CHECK(fib(8) == 21);
  CHECK_THROWS_AS(fib(0), std::invalid_argument);
  for (unsigned n = 3; n <= 93; ++n) {
    CHECK(fib(n) == fib(n - 1) + fib(n - 2));
    CHECK(to_u64(fib(n)) == oracle::fib(n));
  }
}

TEST_CASE("a_n in log domain") {
  CHECK(a_n_log(1).value == doctest::Approx(std::log(1.5)).epsilon(1e-12));
  CHECK(a_n_log(3).value == doctest::Approx(std::log(9.0 / 8.0)).epsilon(1e-12));
  CHECK(a_n_log(12).value == doctest::Approx(144 * std::log(3.0) - 233 * std::log(2.0)).epsilon(1e-12));
  CHECK(a_n_log(12).value == doctest::Approx(-3.3031235).epsilon(1e-7));
}

TEST_CASE("a_n against 1/n") {
  CHECK(a_n_vs_inverse_n(2) == std::strong_ordering::greater);
  CHECK(a_n_vs_inverse_n(12) == std::strong_ordering::less);
  CHECK(a_n_vs_inverse_n(15) == std::strong_ordering::less);
  for (std::uint32_t n = 1; n <= 11; ++n) CHECK(a_n_vs_inverse_n(n) == std::strong_ordering::greater);
  for (std::uint32_t n = 1; n <= 25; ++n) {
    const auto log_route = a_n_vs_inverse_n_log(n);
    REQUIRE(log_route.has_value());
    CHECK(*log_route == a_n_vs_inverse_n_exact(n));
  }
  for (std::uint32_t n = 26; n <= 90; ++n) CHECK(a_n_vs_inverse_n(n) == std::strong_ordering::less);
  CHECK(lemma_crossover(90) == 12u);
}

TEST_CASE("a_n decreases once a_{n-2} < 1") {
  // a_{n+1}/a_n = a_{n-1}, so the log sequence falls exactly when a_{n-1} < 1.
  CHECK(a_n_log(5).value > a_n_log(4).value);
  for (std::uint32_t n = 5; n < 90; ++n) CHECK(a_n_log(n + 1).value < a_n_log(n).value);
  for (std::uint32_t n = 12; n <= 90; ++n) CHECK(a_n_log(n).value < -std::log(static_cast<double>(n)));
}

TEST_CASE("phi_n") {
  CHECK(phi_n(2).value == 2);
  CHECK(phi_n(1).value == 1);
  CHECK(phi_n(3).value == Rational(3, 2));
  for (std::uint32_t n = 1; n <= 90; ++n) {
    const auto v = phi_n(n).value;
    CHECK(v >= 1);
    CHECK(v <= 2);
    CHECK((v == 2) == (n == 2));
  }
}

TEST_CASE("path sum examples") {
  const OddMultiplier three(3u), five(5u);
  const auto a = path_sum_S(200, 1.0, 2.0, three);
  CHECK(std::fabs(a.value() - 1.0) <= 1e-9);
  CHECK(std::fabs(a.term_sum - 1.0) <= 1e-9);
  CHECK(path_sum_S(1, 1.0, 2.0, three).value() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(std::fabs(path_sum_S(200, 1.0, 3.0, five).value() - 1.0 / 3.0) <= 1e-9);
  CHECK_THROWS_AS(path_sum_S(0, 1.0, 2.0, three), std::invalid_argument);
  CHECK_THROWS_AS(path_sum_S(3, 1.0, 0.0, three), std::invalid_argument);
}

TEST_CASE("path sum at the singular exponent falls back to the term sum") {
  const OddMultiplier three(3u);
  const auto s = path_sum_S(10, 2.0, std::log2(3.0), three);
  CHECK(s.singular);
  CHECK_FALSE(s.closed_form.has_value());
  CHECK(s.value() == s.term_sum);
  // With 2^phi = o every inner term is 1/o: (j-1)/o + x/o.
  CHECK(s.term_sum == doctest::Approx((9.0 + 2.0) / 3.0).epsilon(1e-12));
}

TEST_CASE("closed form matches term-by-term summation on random inputs") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> xs(0.0, 100.0), phis(1.7, 4.0);
  int checked = 0;
  while (checked < 500) {
    const auto j = static_cast<std::uint32_t>(1 + rng() % 100);
    const double x = xs(rng), phi = phis(rng);
    const OddMultiplier o(std::array<std::uint64_t, 3>{3, 5, 7}[rng() % 3]);
    if (std::fabs(std::exp2(phi) - o.value().get_d()) < 1e-6) continue;
    const auto s = path_sum_S(j, x, phi, o);
    REQUIRE(s.closed_form.has_value());
    CHECK(std::fabs(*s.closed_form - s.term_sum) <= 1e-9 * std::fabs(s.term_sum));
    ++checked;
  }
}

TEST_CASE("limit_S") {
  const auto a = limit_S(2.0, OddMultiplier(3u));
  REQUIRE(std::holds_alternative<limit::Converges>(a));
  CHECK(std::get<limit::Converges>(a).value == 1.0);
  CHECK(std::holds_alternative<limit::Diverges>(limit_S(1.5, OddMultiplier(3u))));
  const auto c = limit_S(3.0, OddMultiplier(5u));
  REQUIRE(std::holds_alternative<limit::Converges>(c));
  CHECK(std::get<limit::Converges>(c).value == doctest::Approx(1.0 / 3.0));
  CHECK(std::holds_alternative<limit::Diverges>(limit_S(2.0, OddMultiplier(5u))));

  for (std::uint64_t o : {3u, 5u, 7u}) {
    double prev = INFINITY;
    for (double phi = 1.6; phi < 6.0; phi += 0.05) {
      const auto r = limit_S(phi, OddMultiplier(o));
      if (auto* cv = std::get_if<limit::Converges>(&r)) {
        CHECK(cv->value > 0);
        CHECK(cv->value < prev);
        prev = cv->value;
      }
    }
  }
}

TEST_CASE("convergence threshold") {
  const auto t3 = convergence_threshold(OddMultiplier(3u));
  CHECK(t3.value == doctest::Approx(1.58496).epsilon(1e-5));
  CHECK_FALSE(t3.exceeds_max_phi);
  const auto t5 = convergence_threshold(OddMultiplier(5u));
  CHECK(t5.value == doctest::Approx(2.32193).epsilon(1e-5));
  CHECK(t5.exceeds_max_phi);
  const auto t7 = convergence_threshold(OddMultiplier(7u));
  CHECK(t7.value == doctest::Approx(2.807).epsilon(1e-3));
  CHECK(t7.exceeds_max_phi);
}

TEST_CASE("golden gap") {
  const double inv_golden = (std::sqrt(5.0) - 1) / 2;
  CHECK(golden_gap(1) == doctest::Approx(1 - inv_golden).epsilon(1e-12));
  CHECK(golden_gap(2) == doctest::Approx(inv_golden - 0.5).epsilon(1e-12));
  CHECK(golden_gap(30) < 1e-12);
  // Direct subtraction agrees while it still has digits to spare.
  for (std::uint32_t n = 1; n <= 20; ++n) {
    const double direct = std::fabs(static_cast<double>(oracle::fib(n)) / oracle::fib(n + 1) - inv_golden);
    CHECK(golden_gap(n) == doctest::Approx(direct).epsilon(1e-6));
  }
  for (std::uint32_t n = 2; n < 90; ++n) CHECK(golden_gap(n + 1) < golden_gap(n));
}
