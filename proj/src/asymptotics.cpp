#include "collatz_net/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace collatz {

Natural fib(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("Fibonacci index starts at 1");
  Natural out;
  mpz_fib_ui(out.get_mpz_t(), n);
  return out;
}

namespace {

void require_index(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("sequence index starts at 1");
}

long double as_long_double(const Natural& v) {
  // mpz_get_d truncates; good to ~1e-16 relative which is all the log route needs.
  return static_cast<long double>(v.get_d());
}

}  // namespace

LogValue a_n_log(std::uint32_t n) {
  require_index(n);
  const long double fn = as_long_double(fib(n));
  const long double fn1 = as_long_double(fib(n + 1));
  const long double v = fn * std::log(3.0L) - fn1 * std::log(2.0L);
  return {static_cast<double>(v)};
}

std::strong_ordering a_n_vs_inverse_n_exact(std::uint32_t n) {
  require_index(n);
  // a_n ? 1/n  <=>  n 3^F(n) ? 2^F(n+1)
  const std::uint64_t fn = to_u64(fib(n));
  const std::uint64_t fn1 = to_u64(fib(n + 1));
  Natural lhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), 3, fn);
  lhs *= n;
  Natural rhs = 1;
  rhs <<= fn1;
  const int c = cmp(lhs, rhs);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::optional<std::strong_ordering> a_n_vs_inverse_n_log(std::uint32_t n) {
  require_index(n);
  const long double fn = as_long_double(fib(n));
  const long double fn1 = as_long_double(fib(n + 1));
  const long double lhs = fn * std::log(3.0L) + std::log(static_cast<long double>(n));
  const long double rhs = fn1 * std::log(2.0L);
  const long double diff = lhs - rhs;
  // Inputs carry ~1e-16 relative error; demand a margin well above that.
  const long double tol = 1e-12L * (std::fabs(lhs) + std::fabs(rhs)) + 1e-12L;
  if (std::fabs(diff) <= tol) return std::nullopt;
  return diff < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering a_n_vs_inverse_n(std::uint32_t n) {
  require_index(n);
  if (fib(n + 1) <= kExactExponentCap) return a_n_vs_inverse_n_exact(n);
  if (auto ord = a_n_vs_inverse_n_log(n)) return *ord;
  throw std::runtime_error("log-domain comparison undecided beyond the exact cap at n = " + std::to_string(n));
}

std::optional<std::uint32_t> lemma_crossover(std::uint32_t n_max) {
  std::optional<std::uint32_t> first;
  for (std::uint32_t n = n_max; n >= 1; --n) {
    if (a_n_vs_inverse_n(n) != std::strong_ordering::less) break;
    first = n;
  }
  return first;
}

PhiRatio phi_n(std::uint32_t n) {
  require_index(n);
  return {n, make_rational(fib(n + 1), fib(n))};
}

PathSum path_sum_S(std::uint32_t j, double x, double phi, const OddMultiplier& o) {
  if (j == 0) throw std::invalid_argument("path sum needs j >= 1");
  if (!(phi > 0)) throw std::invalid_argument("path sum needs phi > 0");
  const double om = o.value().get_d();
  const double q = std::exp2(phi);

  PathSum out;
  double term = 1.0 / q;  // o^{i-1} / 2^{i phi}
  for (std::uint32_t i = 1; i < j; ++i) {
    out.term_sum += term;
    term *= om / q;
  }
  out.term_sum += term * x;

  const double denom = q - om;
  if (std::fabs(denom) <= 1e-12 * om) {
    out.singular = true;
    return out;
  }
  // o^j 2^{-phi j}, taken in log form so large j does not overflow either power.
  const double scaled = std::exp(j * (std::log(om) - phi * std::numbers::ln2));
  out.closed_form = (scaled * x + (om - scaled * q) / denom) / om;
  return out;
}

LimitResult limit_S(double phi, const OddMultiplier& o) {
  if (!(phi > 0)) throw std::invalid_argument("limit needs phi > 0");
  const double om = o.value().get_d();
  if (phi > std::log(om) / std::numbers::ln2) {
    const double denom = std::exp2(phi) - om;
    if (denom > 0) return limit::Converges{1.0 / denom};
  }
  return limit::Diverges{};
}

Threshold convergence_threshold(const OddMultiplier& o) {
  const double v = std::log(o.value().get_d()) / std::numbers::ln2;
  return {v, v > 2.0};
}

double golden_gap(std::uint32_t n) {
  require_index(n);
  const double psi = (std::sqrt(5.0) - 1.0) / 2.0;  // |psi| = 1/phi
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  return std::pow(psi, static_cast<double>(n)) / (golden * fib(n + 1).get_d());
}

}  // namespace collatz
