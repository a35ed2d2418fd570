#include "collatz_net/path_tree.hpp"

#include <stdexcept>
#include <string>

#include "collatz_net/asymptotics.hpp"

namespace collatz {

std::vector<EdgeColor> admissible_children(std::optional<EdgeColor> last) {
  if (last == EdgeColor::Blue) return {EdgeColor::Red};
  return {EdgeColor::Red, EdgeColor::Blue};
}

namespace {

void extend(ColorWord& prefix, std::uint32_t remaining, std::vector<ColorWord>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  std::optional<EdgeColor> last;
  if (!prefix.empty()) last = prefix.letters.back();
  for (auto c : admissible_children(last)) {
    prefix.letters.push_back(c);
    extend(prefix, remaining - 1, out);
    prefix.letters.pop_back();
  }
}

}  // namespace

std::vector<ColorWord> enumerate_words(std::uint32_t n) {
  if (n > kEnumerationCap) {
    throw std::out_of_range("enumeration length " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kEnumerationCap));
  }
  std::vector<ColorWord> out;
  ColorWord prefix;
  prefix.letters.reserve(n);
  extend(prefix, n, out);
  return out;
}

EdgeCensus edge_counts(std::uint32_t n) {
  EdgeCensus census{n, 0, 0};
  if (n == 0) return census;

  // Nodes whose incoming edge is Red spawn Red and Blue; Blue nodes spawn Red only.
  Natural red = 1;
  Natural blue = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    Natural next_red = red + blue;
    blue = red;
    red = std::move(next_red);
  }

  if (red != fib(n + 1) || blue != fib(n)) {
    throw std::logic_error("edge census recurrence disagrees with Fibonacci closed form at depth " +
                           std::to_string(n));
  }
  census.red_edges = std::move(red);
  census.blue_edges = std::move(blue);
  return census;
}

Rational quotient(std::uint32_t n) {
  if (n == 0) throw std::domain_error("quotient undefined at depth 0");
  const auto census = edge_counts(n);
  return make_rational(census.blue_edges, census.red_edges);
}

Rational alternating_path_value(const Rational& x, std::uint32_t j, const OddMultiplier& o,
                                bool even_start) {
  if (j == 0) throw std::invalid_argument("alternating path needs j >= 1");
  const Rational om(o.value());
  Rational sum = 0;
  Rational o_pow = 1;    // o^{i-1}
  Natural two_pow = 2;   // 2^i
  for (std::uint32_t i = 1; i < j; ++i) {
    sum += o_pow / Rational(two_pow);
    o_pow *= om;
    two_pow <<= 1;
  }
  const Rational tail = even_start ? x : Rational(om * x + 1);
  sum += o_pow / Rational(two_pow) * tail;
  sum.canonicalize();
  return sum;
}

ColorWord alternating_path_word(std::uint32_t j, bool even_start) {
  ColorWord w;
  if (even_start) {
    w.letters.push_back(EdgeColor::Red);
    for (std::uint32_t i = 1; i < j; ++i) {
      w.letters.push_back(EdgeColor::Blue);
      w.letters.push_back(EdgeColor::Red);
    }
  } else {
    for (std::uint32_t i = 0; i < j; ++i) {
      w.letters.push_back(EdgeColor::Blue);
      w.letters.push_back(EdgeColor::Red);
    }
  }
  return w;
}

Natural combinations_count(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("combinations_count needs n >= 1");
  if (n > kEnumerationCap) throw std::out_of_range("combinations_count above cap");
  Natural out;
  mpz_bin_uiui(out.get_mpz_t(), to_u64(fib(n + 2)), to_u64(fib(n)));
  return out;
}

}  // namespace collatz
