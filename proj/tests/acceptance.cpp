// Acceptance suite: one line per criterion, exit status 0 only if all pass.

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "collatz_net/asymptotics.hpp"
#include "collatz_net/cli.hpp"
#include "collatz_net/fib_primes.hpp"
#include "collatz_net/path_tree.hpp"
#include "collatz_net/scanner.hpp"

using namespace collatz;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAILED " + what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string cli_out(std::vector<std::string> args) {
  args.insert(args.begin(), "collatz");
  std::ostringstream out, err;
  run_cli(args, out, err);
  return out.str();
}

Outcome table1() {
  Outcome o;
  const int red[] = {0, 1, 2, 3, 5, 8, 13, 21};
  const int blue[] = {0, 1, 1, 2, 3, 5, 8, 13};
  const char* quot[] = {"-", "1", "1/2", "2/3", "3/5", "5/8", "8/13", "13/21"};
  for (int n = 0; n <= 7; ++n) {
    const auto expected = fmt::format("iterations={} red={} blue={} quotient={}\n", n, red[n], blue[n], quot[n]);
    const auto got = cli_out({"tree", std::to_string(n)});
    o.require(got == expected, fmt::format("row {}: got '{}'", n, got));
  }
  return o;
}

Outcome golden_limit() {
  Outcome o;
  const double target = (std::sqrt(5.0) - 1) / 2;
  double worst = 0;
  for (std::uint32_t n = 30; n <= 90; ++n) {
    const auto c = edge_counts(n);
    const double gap = std::fabs(to_double(make_rational(c.blue_edges, c.red_edges)) - target);
    worst = std::max(worst, gap);
    o.require(gap < 1e-6, fmt::format("n={} gap {}", n, gap));
  }
  for (std::uint32_t n = 1; n <= 20; ++n) {
    std::uint64_t r = 0, b = 0;
    for (const auto& w : enumerate_words(n)) (w.letters.back() == EdgeColor::Red ? r : b) += 1;
    o.require(fib(n + 1) == r && fib(n) == b, fmt::format("enumeration n={}", n));
  }
  o.note(fmt::format("max gap over 30..90 = {:.3e}", worst));
  return o;
}

Outcome lemma1() {
  Outcome o;
  for (std::uint32_t n = 1; n <= 11; ++n) {
    o.require(a_n_vs_inverse_n_exact(n) == std::strong_ordering::greater, fmt::format("a_{} > 1/{}", n, n));
  }
  for (std::uint32_t n = 12; n <= 25; ++n) {
    o.require(a_n_vs_inverse_n_exact(n) == std::strong_ordering::less, fmt::format("a_{} < 1/{} exact", n, n));
  }
  for (std::uint32_t n = 12; n <= 90; ++n) {
    const auto lr = a_n_vs_inverse_n_log(n);
    o.require(lr && *lr == std::strong_ordering::less, fmt::format("log route a_{} < 1/{}", n, n));
    o.require(a_n_log(n).value < -std::log(static_cast<double>(n)), fmt::format("log a_{} < -log {}", n, n));
  }
  std::uint32_t first_rise = 0;
  for (std::uint32_t n = 4; n < 90; ++n) {
    if (!(a_n_log(n + 1).value < a_n_log(n).value) && first_rise == 0) first_rise = n;
  }
  o.require(first_rise == 0, fmt::format("log a_n strictly decreasing for n >= 4: log a_{} = {:.6f} > log a_{} = {:.6f}",
                                         first_rise + 1, a_n_log(first_rise + 1).value, first_rise,
                                         a_n_log(first_rise).value));
  bool from_five = true;
  for (std::uint32_t n = 5; n < 90; ++n) from_five = from_five && a_n_log(n + 1).value < a_n_log(n).value;
  o.note(fmt::format("strictly decreasing for 5 <= n <= 90: {}", from_five ? "yes" : "no"));
  if (auto cross = lemma_crossover(90)) o.note(fmt::format("a_n < 1/n from n = {} through 90", *cross));
  return o;
}

Outcome limitfibo5() {
  Outcome o;
  const auto s = path_sum_S(200, 1.0, 2.0, OddMultiplier(3u));
  o.require(s.value() >= 1 - 1e-9 && s.value() <= 1 + 1e-9, fmt::format("S = {:.17g}", s.value()));
  const auto lim = limit_S(2.0, OddMultiplier(3u));
  const auto* c = std::get_if<limit::Converges>(&lim);
  o.require(c && c->value == 1.0, "limit_S(2, 3) == 1 exactly");
  o.note(fmt::format("S(200) = {:.17g}", s.value()));
  return o;
}

Outcome cutoff() {
  Outcome o;
  const auto s = scan(1, 150'000, OddMultiplier::classic(), {}, 0);
  o.require(s.count(StatusKind::ReachedOne) == 150'000, "every orbit reaches 1");
  const auto [mx, arg] = ratio_extrema(s);
  o.require(mx <= Rational(5, 8), fmt::format("max B/R {} <= 5/8", rational_text(mx)));
  o.note(fmt::format("observed max B/R = {} ({:.6f}) at x = {}", rational_text(mx), to_double(mx), arg));
  return o;
}

Outcome extended_map() {
  Outcome o;
  const OddMultiplier five(5u);
  const OrbitLimits lim(10'000, Natural(1'000'000));
  const auto s = scan(1, 10'000, five, lim, 0);
  bool has13 = false;
  for (const auto& c : s.cycles) {
    has13 = has13 || std::find(c.values.begin(), c.values.end(), Natural(13)) != c.values.end();
  }
  o.require(s.count(StatusKind::CycleDetected) >= 1 && has13, "a CycleDetected orbit through 13");
  const auto r7 = orbit(Natural(7), five, lim);
  o.require(r7.kind() == StatusKind::ValueBoundExceeded && r7.peak > 1'000'000 && r7.steps() <= 10'000,
            "orbit of 7 exceeds 10^6 without reaching 1 or cycling");
  const auto th = convergence_threshold(five);
  o.require(th.exceeds_max_phi && th.value > 2, "log 5 / log 2 > 2");
  o.note(fmt::format("statuses one/cycle/value/step = {}/{}/{}/{}, {} distinct cycles, 7 exceeds after {} steps",
                     s.count(StatusKind::ReachedOne), s.count(StatusKind::CycleDetected),
                     s.count(StatusKind::ValueBoundExceeded), s.count(StatusKind::StepBoundExceeded), s.cycles.size(),
                     r7.steps()));
  return o;
}

Outcome theorem3() {
  Outcome o;
  for (std::uint32_t n = 1; n <= 20; ++n) o.require(theoremfibo_check(n).pass, fmt::format("n={}", n));
  auto eq = [](const PrimeSet& s, std::vector<std::uint64_t> v) {
    return std::vector<std::uint64_t>(s.primes().begin(), s.primes().end()) == v;
  };
  o.require(eq(new_primes(4), {7}), "new primes n=4 = {7}");
  o.require(eq(new_primes(5), {11, 13}), "new primes n=5 = {11,13}");
  o.require(eq(new_primes(6), {17, 19}), "new primes n=6 = {17,19}");
  return o;
}

Outcome gcd_lemma() {
  Outcome o;
  for (std::uint32_t n = 1; n <= 500; ++n) o.require(gcd_coprime_binomials(n) == n, fmt::format("n={}", n));
  return o;
}

Outcome reconstruction() {
  Outcome o;
  o.require(fib(27) == 196'418, "F(27) = 196418");
  const auto rebuilt = prime_reconstruction(25);
  const auto direct = sieve(196'418);
  o.require(rebuilt == direct, "union of Fibonacci intervals equals the sieve");
  o.note(fmt::format("{} primes <= 196418", direct.size()));
  return o;
}

Outcome valuations() {
  Outcome o;
  std::mt19937_64 rng(2026);
  const auto primes = sieve(100);
  for (int i = 0; i < 1000; ++i) {
    const unsigned long a = rng() % 10'001;
    const unsigned long b = rng() % (a + 1);
    const auto p = primes.primes()[rng() % primes.size()];
    const Natural A(a), B(b);
    const auto legendre = factorial_valuation(A, p) - factorial_valuation(B, p) - factorial_valuation(A - B, p);
    o.require(legendre == kummer_carries(A, B, p), fmt::format("({}, {}, {})", a, b, p));
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto one = scan(1, 100'000, OddMultiplier::classic(), {}, 1).to_json();
  const auto two = scan(1, 100'000, OddMultiplier::classic(), {}, 2).to_json();
  const auto eight = scan(1, 100'000, OddMultiplier::classic(), {}, 8).to_json();
  o.require(one == two && one == eight, "byte-identical summaries for 1, 2, 8 threads");
  o.note(fmt::format("{} bytes", one.size()));
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Table 1 reproduction", 1, table1},
      {2, "golden-ratio limit of B/R", 5, golden_limit},
      {3, "a_n versus 1/n", 30, lemma1},
      {4, "path sum limit equals 1", 1, limitfibo5},
      {5, "5/8 cutoff over the first 150000 starts", 60, cutoff},
      {6, "extended 5x+1 map classification", 30, extended_map},
      {7, "new primes divide C(F(n+2), F(n))", 10, theorem3},
      {8, "gcd of coprime binomials", 60, gcd_lemma},
      {9, "prime reconstruction from Fibonacci intervals", 10, reconstruction},
      {10, "Legendre versus Kummer valuations", 5, valuations},
      {11, "scan determinism across thread counts", 60, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out = c.body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(secs < c.budget_seconds, fmt::format("time {:.2f}s over budget {}s", secs, c.budget_seconds));
    failed += !out.pass;
    fmt::print("[{}] {:>2}. {} ({:.2f}s){}{}\n", out.pass ? "PASS" : "FAIL", c.id, c.title, secs,
               out.detail.empty() ? "" : ": ", out.detail);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
