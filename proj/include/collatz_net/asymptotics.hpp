#pragma once

// Fibonacci numbers, the sequence a_n = 3^F(n) / 2^F(n+1), the ratios
// phi_n = F(n+1)/F(n), the sum over alternating paths with a real halving exponent,
// and its limits.

#include <compare>
#include <cstdint>
#include <optional>
#include <variant>

#include "collatz_net/collatz_core.hpp"

namespace collatz {

/// Natural logarithm of a positive real.
struct LogValue {
  double value = 0.0;
  friend auto operator<=>(const LogValue&, const LogValue&) = default;
};

/// phi_n = F(n+1)/F(n). Lies in [1, 2]; equals 2 only at n = 2.
struct PhiRatio {
  std::uint32_t n = 0;
  Rational value;
};

namespace limit {
struct Converges {
  double value;
};
struct Diverges {};
}  // namespace limit
using LimitResult = std::variant<limit::Converges, limit::Diverges>;

/// F(1) = F(2) = 1. Throws std::invalid_argument for n = 0.
Natural fib(std::uint32_t n);

/// F(n) ln 3 - F(n+1) ln 2.
LogValue a_n_log(std::uint32_t n);

/// Largest F(n+1) for which a_n is compared against 1/n with exact big integers.
inline constexpr std::uint64_t kExactExponentCap = 1'000'000;

/// How a_n compares with 1/n, e.g. `greater` means a_n > 1/n.
/// Exact (n * 3^F(n) vs 2^F(n+1)) while F(n+1) <= kExactExponentCap, log domain
/// beyond, with a margin that must exceed the floating error.
std::strong_ordering a_n_vs_inverse_n(std::uint32_t n);

/// Exact-only comparison, no cap. Used to cross-check the log route.
std::strong_ordering a_n_vs_inverse_n_exact(std::uint32_t n);

/// Log-domain comparison; nullopt when the margin is not decisive.
std::optional<std::strong_ordering> a_n_vs_inverse_n_log(std::uint32_t n);

/// First n in [1, n_max] from which a_n < 1/n holds through n_max; nullopt if none.
std::optional<std::uint32_t> lemma_crossover(std::uint32_t n_max);

PhiRatio phi_n(std::uint32_t n);

struct PathSum {
  double term_sum = 0.0;
  std::optional<double> closed_form;  // absent when 2^phi == o
  bool singular = false;

  double value() const { return closed_form.value_or(term_sum); }
};

/// S = sum_{i=1}^{j-1} o^{i-1}/2^{i phi} + o^{j-1}/2^{j phi} x, by direct summation and
/// by the closed form (1/o) 2^{-phi j} (o^j x + (o 2^{j phi} - o^j 2^phi) / (2^phi - o)).
/// Throws std::invalid_argument when j == 0 or phi <= 0.
PathSum path_sum_S(std::uint32_t j, double x, double phi, const OddMultiplier& o);

/// Converges(1/(2^phi - o)) iff phi > log(o)/log(2). Throws when phi <= 0.
LimitResult limit_S(double phi, const OddMultiplier& o);

struct Threshold {
  double value;              // log(o)/log(2)
  bool exceeds_max_phi;      // value > 2 = max phi_n
};

Threshold convergence_threshold(const OddMultiplier& o);

/// |F(n)/F(n+1) - (sqrt(5)-1)/2|, evaluated as |psi|^n / (phi F(n+1)) to avoid
/// cancellation (psi = (1 - sqrt 5)/2).
double golden_gap(std::uint32_t n);

}  // namespace collatz
