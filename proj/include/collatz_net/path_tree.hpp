#pragma once

// The symbolic Collatz network: admissible Red/Blue words, per-depth edge counts,
// the B/R quotient and closed-form values along uniform alternating paths.

#include <cstdint>
#include <optional>
#include <vector>

#include "collatz_net/collatz_core.hpp"

namespace collatz {

/// Longest word length enumerate_words() accepts. F(27) = 196418 words at the cap.
inline constexpr std::uint32_t kEnumerationCap = 25;

/// Red and Blue edges entering depth n of the full tree (per level, not cumulative).
struct EdgeCensus {
  std::uint32_t depth = 0;
  Natural red_edges;
  Natural blue_edges;

  friend bool operator==(const EdgeCensus&, const EdgeCensus&) = default;
};

/// Colors allowed after `last`; nullopt stands for the root.
std::vector<EdgeColor> admissible_children(std::optional<EdgeColor> last);

/// All admissible words of length n, in lexicographic order with R < B.
/// Throws std::out_of_range when n > kEnumerationCap.
std::vector<ColorWord> enumerate_words(std::uint32_t n);

/// Census by the branching recurrence, cross-checked against R(n) = F(n+1), B(n) = F(n).
/// Depth 0 is (0, 0). Throws std::logic_error if the two routes disagree.
EdgeCensus edge_counts(std::uint32_t n);

/// B(n)/R(n) = F(n)/F(n+1). Throws std::domain_error for n = 0 (the "-" cell).
Rational quotient(std::uint32_t n);

/// Value reached after j Red edges of the uniform alternating path.
///
/// Odd start (BR)^j:   sum_{i=1}^{j-1} o^{i-1}/2^i + o^{j-1}/2^j * (o x + 1)
/// Even start R(BR)^{j-1}: same with (o x + 1) replaced by x.
/// Throws std::invalid_argument when j == 0.
Rational alternating_path_value(const Rational& x, std::uint32_t j, const OddMultiplier& o,
                                bool even_start = false);

/// The color word the closed form above follows.
ColorWord alternating_path_word(std::uint32_t j, bool even_start = false);

/// C(F(n+2), F(n)). Throws std::invalid_argument for n == 0 and std::out_of_range
/// above kEnumerationCap.
Natural combinations_count(std::uint32_t n);

}  // namespace collatz
