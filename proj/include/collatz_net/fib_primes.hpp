#pragma once

// Primes against Fibonacci intervals: sieving, Legendre/Kummer valuations of factorials
// and binomials, the gcd-of-binomials lemma, Fibonacci coprimality and prime
// reconstruction from the intervals (F(n+1), F(n+2)].

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "collatz_net/natural.hpp"

namespace collatz {

inline constexpr std::uint64_t kSieveCap = 100'000'000;

/// Ascending distinct primes together with the bound they were drawn from.
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Throws std::invalid_argument unless `primes` is strictly increasing.
  PrimeSet(std::vector<std::uint64_t> primes, std::uint64_t bound);

  std::span<const std::uint64_t> primes() const { return primes_; }
  std::uint64_t bound() const { return bound_; }
  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }
  bool contains(std::uint64_t p) const;

  /// Primes in (lo, hi].
  PrimeSet slice(std::uint64_t lo, std::uint64_t hi) const;

  friend bool operator==(const PrimeSet& a, const PrimeSet& b) { return a.primes_ == b.primes_; }

 private:
  std::vector<std::uint64_t> primes_;
  std::uint64_t bound_ = 0;
};

/// All primes <= limit by a segmented sieve of Eratosthenes. Segments are spread over
/// `threads` workers (0 = hardware concurrency). Throws std::out_of_range when
/// limit < 2 or limit > kSieveCap.
PrimeSet sieve(std::uint64_t limit, unsigned threads = 1);

/// Trial division; only for small arguments and test cross-checks.
bool is_prime(std::uint64_t p);

/// Exponent of p in m! (Legendre). Throws std::invalid_argument if p is not prime.
std::uint64_t factorial_valuation(const Natural& m, std::uint64_t p);

/// Number of carries when adding b and a - b in base p (Kummer).
std::uint64_t kummer_carries(const Natural& a, const Natural& b, std::uint64_t p);

/// Exponent of p in C(a, b), by Legendre differences; checked against the Kummer carry
/// count and std::logic_error is thrown if they differ. Throws std::invalid_argument
/// when b > a or p is not prime.
std::uint64_t binomial_valuation(const Natural& a, const Natural& b, std::uint64_t p);

struct PrimeValuation {
  Natural a;
  Natural b;
  struct Entry {
    std::uint64_t prime;
    std::uint64_t exponent;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;  // exponent >= 1 only
};

/// Factorization of C(a, b) over the primes of `candidates`.
PrimeValuation binomial_factorization(const Natural& a, const Natural& b, const PrimeSet& candidates);

/// Every prime <= F(n+2) divides F(n+2)!.
bool theorem1_check(std::uint32_t n);

/// Primes in (F(n), F(n+1)]; the statement holds for n iff the set is non-empty.
/// Needs n >= 3.
struct Theorem2Witness {
  std::uint32_t n;
  Natural lower;  // F(n)
  Natural upper;  // F(n+1)
  PrimeSet primes;
  bool holds;
  /// n = 5 and n = 11 are the exceptions of the primitive-divisor result the
  /// statement leans on; they are only annotated.
  bool primitive_divisor_exception;
};
Theorem2Witness theorem2_check(std::uint32_t n);

/// gcd of C(n, k) over 1 <= k <= n with gcd(k, n) = 1. Requires 1 <= n <= 500.
Natural gcd_coprime_binomials(std::uint32_t n);

/// gcd(F(n+2), F(n)) = 1 and gcd(F(n+1), F(n)) = 1.
bool fib_coprimality(std::uint32_t n);

/// Primes p with F(n+1) < p <= F(n+2).
PrimeSet new_primes(std::uint32_t n);

struct TheoremFiboReport {
  std::uint32_t n;
  Natural interval_low;   // F(n+1), excluded
  Natural interval_high;  // F(n+2), included
  std::vector<PrimeValuation::Entry> exponents;  // v_p(C(F(n+2), F(n))) per new prime
  bool pass;

  std::string to_json() const;
};

/// For each new prime p, v_p(C(F(n+2), F(n))) >= 1.
TheoremFiboReport theoremfibo_check(std::uint32_t n);

/// Union of new_primes(1..n_max), checked against sieve(F(n_max+2)); throws
/// std::logic_error on mismatch.
PrimeSet prime_reconstruction(std::uint32_t n_max);

}  // namespace collatz
