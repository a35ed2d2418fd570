#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace collatz {

/// Red marks a halving step (even value), Blue an ox+1 step (odd value).
enum class EdgeColor : unsigned char { Red, Blue };

constexpr char color_letter(EdgeColor c) { return c == EdgeColor::Red ? 'R' : 'B'; }

/// A path in the Collatz network, one letter per edge.
struct ColorWord {
  std::vector<EdgeColor> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  /// No Blue is ever followed by another Blue.
  bool admissible() const;

  std::size_t count(EdgeColor c) const;

  /// "RBRR..." form; the empty word prints as "".
  std::string to_string() const;

  /// Throws std::invalid_argument on letters other than R and B.
  static ColorWord parse(std::string_view text);

  friend bool operator==(const ColorWord&, const ColorWord&) = default;
  friend auto operator<=>(const ColorWord&, const ColorWord&) = default;
};

}  // namespace collatz
