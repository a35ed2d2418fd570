#include "collatz_net/fib_primes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "collatz_net/asymptotics.hpp"

namespace collatz {

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes, std::uint64_t bound)
    : primes_(std::move(primes)), bound_(bound) {
  if (std::adjacent_find(primes_.begin(), primes_.end(), std::greater_equal<>()) != primes_.end()) {
    throw std::invalid_argument("prime set must be strictly increasing");
  }
}

bool PrimeSet::contains(std::uint64_t p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

PrimeSet PrimeSet::slice(std::uint64_t lo, std::uint64_t hi) const {
  auto first = std::upper_bound(primes_.begin(), primes_.end(), lo);
  auto last = std::upper_bound(first, primes_.end(), hi);
  return PrimeSet({first, last}, hi);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

constexpr std::uint64_t kSegmentSpan = std::uint64_t{1} << 20;  // integers per segment

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

// Primes in [lo, hi] using base primes up to sqrt(hi).
std::vector<std::uint64_t> sieve_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> base) {
  std::vector<char> composite(hi - lo + 1, 0);
  for (auto p : base) {
    if (p * p > hi) break;
    std::uint64_t first = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t m = first; m <= hi; m += p) composite[m - lo] = 1;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = std::max<std::uint64_t>(lo, 2); v <= hi; ++v) {
    if (!composite[v - lo]) out.push_back(v);
  }
  return out;
}

// Primes in (lo, hi].
PrimeSet sieve_range(std::uint64_t lo, std::uint64_t hi, unsigned threads) {
  if (hi > kSieveCap) throw std::out_of_range("sieve limit " + std::to_string(hi) + " exceeds cap");
  if (hi <= lo) return PrimeSet({}, hi);
  const auto base = small_primes(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1);

  const std::uint64_t start = lo + 1;
  const std::uint64_t segments = (hi - start) / kSegmentSpan + 1;
  std::vector<std::vector<std::uint64_t>> found(segments);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t s = next++; s < segments; s = next++) {
      const std::uint64_t a = start + s * kSegmentSpan;
      const std::uint64_t b = std::min(hi, a + kSegmentSpan - 1);
      found[s] = sieve_segment(a, b, base);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, segments));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  pool.clear();

  std::vector<std::uint64_t> primes;
  for (auto& seg : found) primes.insert(primes.end(), seg.begin(), seg.end());
  return PrimeSet(std::move(primes), hi);
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::uint64_t fib_u64(std::uint32_t n) { return to_u64(fib(n)); }

}  // namespace

PrimeSet sieve(std::uint64_t limit, unsigned threads) {
  if (limit < 2) throw std::out_of_range("sieve limit must be >= 2");
  return sieve_range(1, limit, threads);
}

std::uint64_t factorial_valuation(const Natural& m, std::uint64_t p) {
  require_prime(p);
  std::uint64_t total = 0;
  Natural q = m;
  while (q > 0) {
    mpz_tdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), p);
    total += to_u64(q);
  }
  return total;
}

std::uint64_t kummer_carries(const Natural& a, const Natural& b, std::uint64_t p) {
  if (b > a) throw std::invalid_argument("binomial needs b <= a");
  Natural x = b;
  Natural y = a - b;
  std::uint64_t carries = 0;
  std::uint64_t carry = 0;
  while (x > 0 || y > 0 || carry > 0) {
    const std::uint64_t dx = mpz_tdiv_q_ui(x.get_mpz_t(), x.get_mpz_t(), p);
    const std::uint64_t dy = mpz_tdiv_q_ui(y.get_mpz_t(), y.get_mpz_t(), p);
    carry = (dx + dy + carry) >= p ? 1 : 0;
    carries += carry;
  }
  return carries;
}

std::uint64_t binomial_valuation(const Natural& a, const Natural& b, std::uint64_t p) {
  if (b > a) throw std::invalid_argument("binomial needs b <= a");
  require_prime(p);
  const Natural rest = a - b;
  const std::uint64_t legendre = factorial_valuation(a, p) - factorial_valuation(b, p) - factorial_valuation(rest, p);
  if (legendre != kummer_carries(a, b, p)) {
    throw std::logic_error("Legendre and Kummer valuations disagree");
  }
  return legendre;
}

PrimeValuation binomial_factorization(const Natural& a, const Natural& b, const PrimeSet& candidates) {
  PrimeValuation out{a, b, {}};
  for (auto p : candidates.primes()) {
    if (p > a) break;
    if (auto e = binomial_valuation(a, b, p); e > 0) out.entries.push_back({p, e});
  }
  return out;
}

bool theorem1_check(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("theorem checks start at n = 1");
  const std::uint64_t top = fib_u64(n + 2);
  const auto primes = sieve(top);
  const Natural m = natural_from_u64(top);
  return std::all_of(primes.primes().begin(), primes.primes().end(),
                     [&](std::uint64_t p) { return factorial_valuation(m, p) >= 1; });
}

Theorem2Witness theorem2_check(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("theorem2_check needs n >= 3");
  const std::uint64_t lo = fib_u64(n);
  const std::uint64_t hi = fib_u64(n + 1);
  Theorem2Witness w{n, fib(n), fib(n + 1), sieve_range(lo, hi, 1), false, n == 5 || n == 11};
  w.holds = !w.primes.empty();
  return w;
}

Natural gcd_coprime_binomials(std::uint32_t n) {
  if (n < 1 || n > 500) throw std::out_of_range("gcd_coprime_binomials needs 1 <= n <= 500");
  Natural g = 0;
  Natural c;
  for (std::uint32_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

bool fib_coprimality(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("Fibonacci index starts at 1");
  const Natural fn = fib(n);
  return gcd(fib(n + 2), fn) == 1 && gcd(fib(n + 1), fn) == 1;
}

PrimeSet new_primes(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("new_primes needs n >= 1");
  return sieve_range(fib_u64(n + 1), fib_u64(n + 2), 1);
}

TheoremFiboReport theoremfibo_check(std::uint32_t n) {
  const auto primes = new_primes(n);
  TheoremFiboReport r{n, fib(n + 1), fib(n + 2), {}, true};
  const Natural fn = fib(n);
  for (auto p : primes.primes()) {
    const auto e = binomial_valuation(r.interval_high, fn, p);
    r.exponents.push_back({p, e});
    r.pass = r.pass && e >= 1;
  }
  return r;
}

std::string TheoremFiboReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["interval"] = {to_u64(interval_low), to_u64(interval_high)};
  auto& ps = j["new_primes"] = nlohmann::ordered_json::array();
  auto& ex = j["exponents"] = nlohmann::ordered_json::object();
  for (const auto& e : exponents) {
    ps.push_back(e.prime);
    ex[std::to_string(e.prime)] = e.exponent;
  }
  j["pass"] = pass;
  return j.dump();
}

PrimeSet prime_reconstruction(std::uint32_t n_max) {
  if (n_max == 0) throw std::invalid_argument("prime_reconstruction needs n_max >= 1");
  std::vector<std::uint64_t> all;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    const auto part = new_primes(n);
    all.insert(all.end(), part.primes().begin(), part.primes().end());
  }
  PrimeSet rebuilt(std::move(all), fib_u64(n_max + 2));
  if (!(rebuilt == sieve(rebuilt.bound()))) {
    throw std::logic_error("Fibonacci intervals do not tile the primes up to F(n_max + 2)");
  }
  return rebuilt;
}

}  // namespace collatz
