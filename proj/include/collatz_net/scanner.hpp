#pragma once

// Parallel range scanner over orbit statistics with a deterministic merge.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "collatz_net/collatz_core.hpp"

namespace collatz {

inline constexpr std::size_t kRatioBins = 128;  // bin width 1/128 on [0, 1]
inline constexpr std::uint64_t kDefaultChunk = 4096;

/// Thread count used when a caller passes 0: $COLLATZ_THREADS if set to a positive
/// integer, else the hardware concurrency.
unsigned default_thread_count();

struct RatioExtremum {
  Rational ratio;
  std::uint64_t start;
  std::uint64_t blue;
  std::uint64_t red;
  friend bool operator==(const RatioExtremum&, const RatioExtremum&) = default;
};

struct PeakExtremum {
  Natural peak;
  std::uint64_t start;
  friend bool operator==(const PeakExtremum&, const PeakExtremum&) = default;
};

struct StepsExtremum {
  std::uint64_t steps;
  std::uint64_t start;
  friend bool operator==(const StepsExtremum&, const StepsExtremum&) = default;
};

/// A distinct cycle met during a scan, rotated to begin at its smallest value.
struct CycleInfo {
  std::vector<Natural> values;
  std::uint64_t first_start;  // smallest start whose orbit ran into it
  friend bool operator==(const CycleInfo&, const CycleInfo&) = default;
};

/// Aggregate over a range of starts. Extrema ties go to the smaller start; orbits
/// without a red step (the start 1) are left out of the ratio statistics.
struct ScanSummary {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  OddMultiplier multiplier = OddMultiplier::classic();
  std::array<std::uint64_t, kStatusKinds> status_counts{};
  std::optional<RatioExtremum> max_ratio;
  std::optional<PeakExtremum> max_peak;
  std::optional<StepsExtremum> max_steps;
  std::array<std::uint64_t, kRatioBins> ratio_histogram{};
  std::vector<CycleInfo> cycles;  // sorted by smallest value

  std::uint64_t orbit_count() const;
  std::uint64_t count(StatusKind k) const { return status_counts[static_cast<std::size_t>(k)]; }

  /// Folds one orbit into the summary.
  void add(std::uint64_t start, const OrbitRecord& record);

  /// Associative and commutative; `other` must cover a disjoint range of the same multiplier.
  void merge(const ScanSummary& other);

  /// Canonical JSON text; equal summaries give equal bytes.
  std::string to_json() const;

  friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

/// Histogram bin of B/R: floor(128 B / R), clamped to the last bin.
std::size_t ratio_bin(std::uint64_t blue, std::uint64_t red);

/// Scans every start in [a, b]. Same result for any thread count (0 = default).
/// Throws std::invalid_argument when a == 0 or b < a.
ScanSummary scan(std::uint64_t a, std::uint64_t b, const OddMultiplier& o, const OrbitLimits& limits = {},
                 unsigned threads = 0, std::uint64_t chunk = kDefaultChunk);

/// Maximum B/R and the smallest start attaining it. Throws std::domain_error when no
/// orbit in the summary has a red step.
std::pair<Rational, std::uint64_t> ratio_extrema(const ScanSummary& summary);

/// Per-start statistics in start order, for CSV output and figure data.
struct ScanRow {
  std::uint64_t start;
  StatusKind kind;
  std::uint64_t blue;
  std::uint64_t red;
  Natural peak;
};

std::vector<ScanRow> scan_rows(std::uint64_t a, std::uint64_t b, const OddMultiplier& o,
                               const OrbitLimits& limits = {}, unsigned threads = 0);

}  // namespace collatz
