#pragma once

// The (generalized) Collatz map x -> ox+1 (x odd), x/2 (x even), orbit iteration
// with termination classification, and parity-path extraction.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "collatz_net/color_word.hpp"
#include "collatz_net/natural.hpp"

namespace collatz {

/// Odd multiplier o >= 3 used on odd values. o = 3 is the classic map.
class OddMultiplier {
 public:
  /// Throws std::invalid_argument unless o is odd and o >= 3.
  explicit OddMultiplier(Natural o);
  explicit OddMultiplier(std::uint64_t o) : OddMultiplier(natural_from_u64(o)) {}

  static OddMultiplier classic() { return OddMultiplier(std::uint64_t{3}); }

  const Natural& value() const { return o_; }

  friend bool operator==(const OddMultiplier&, const OddMultiplier&) = default;

 private:
  Natural o_;
};

/// Bounds applied to every orbit. Orbits abort when a value exceeds max_value or
/// max_steps steps have been taken.
class OrbitLimits {
 public:
  static constexpr std::uint64_t kDefaultMaxSteps = 1'000'000;
  static Natural default_max_value();  // 2^128

  OrbitLimits() : OrbitLimits(kDefaultMaxSteps, default_max_value()) {}
  /// Throws std::invalid_argument unless max_steps >= 1 and max_value >= 2.
  OrbitLimits(std::uint64_t max_steps, Natural max_value);

  std::uint64_t max_steps() const { return max_steps_; }
  const Natural& max_value() const { return max_value_; }

 private:
  std::uint64_t max_steps_;
  Natural max_value_;
};

namespace status {
struct ReachedOne {
  friend bool operator==(const ReachedOne&, const ReachedOne&) = default;
};
/// `values` lists the cycle starting at the first recurring value, in orbit order.
struct CycleDetected {
  std::vector<Natural> values;
  friend bool operator==(const CycleDetected&, const CycleDetected&) = default;
};
struct ValueBoundExceeded {
  friend bool operator==(const ValueBoundExceeded&, const ValueBoundExceeded&) = default;
};
struct StepBoundExceeded {
  friend bool operator==(const StepBoundExceeded&, const StepBoundExceeded&) = default;
};
}  // namespace status

using OrbitStatus =
    std::variant<status::ReachedOne, status::CycleDetected, status::ValueBoundExceeded, status::StepBoundExceeded>;

enum class StatusKind : unsigned char { ReachedOne, CycleDetected, ValueBoundExceeded, StepBoundExceeded };
inline constexpr std::size_t kStatusKinds = 4;

StatusKind status_kind(const OrbitStatus& s);
const char* status_name(StatusKind k);

/// Full keeps every value and color; Streaming keeps only counters, peak and min.
enum class Retention : unsigned char { Full, Streaming };

/// VisitedSet remembers every value of the orbit. Brent runs in constant memory and
/// recovers the first recurrence afterwards, so both modes report identical records.
enum class CycleDetection : unsigned char { VisitedSet, Brent };

struct OrbitOptions {
  Retention retention = Retention::Full;
  CycleDetection detection = CycleDetection::VisitedSet;
};

/// Summary of one trajectory.
///
/// The orbit stops at the first of: reaching 1, revisiting an earlier value, a value
/// above limits.max_value(), or limits.max_steps() steps. The value that triggered the
/// stop is the last entry of `values` and is counted in peak and min_element.
/// A start of 1 stops immediately with zero steps.
struct OrbitRecord {
  Natural start;
  OddMultiplier multiplier = OddMultiplier::classic();
  std::vector<Natural> values;  // empty under Retention::Streaming
  ColorWord colors;             // empty under Retention::Streaming
  std::uint64_t blue_count = 0;
  std::uint64_t red_count = 0;
  Natural peak;
  Natural min_element;
  OrbitStatus status;

  std::uint64_t steps() const { return blue_count + red_count; }
  StatusKind kind() const { return status_kind(status); }

  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

/// One application of the map. Throws std::invalid_argument when x == 0.
Natural step(const Natural& x, const OddMultiplier& o);

/// Throws std::invalid_argument when x == 0.
OrbitRecord orbit(const Natural& x, const OddMultiplier& o, const OrbitLimits& limits = {},
                  OrbitOptions options = {});

/// Minimal element of the orbit, the start included.
Natural col_min(const OrbitRecord& record);

/// B/R exactly; nullopt when the orbit has no red step (only the zero-step orbit of 1).
std::optional<Rational> br_ratio(const OrbitRecord& record);

}  // namespace collatz
