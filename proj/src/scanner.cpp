#include "collatz_net/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace collatz {

unsigned default_thread_count() {
  if (const char* env = std::getenv("COLLATZ_THREADS")) {
    unsigned v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    if (auto [p, ec] = std::from_chars(env, end, v); ec == std::errc() && p == end && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::size_t ratio_bin(std::uint64_t blue, std::uint64_t red) {
  const auto bin = static_cast<unsigned __int128>(blue) * kRatioBins / red;
  return static_cast<std::size_t>(std::min<unsigned __int128>(bin, kRatioBins - 1));
}

std::uint64_t ScanSummary::orbit_count() const {
  return std::accumulate(status_counts.begin(), status_counts.end(), std::uint64_t{0});
}

namespace {

template <typename T, typename Better>
void keep_best(std::optional<T>& mine, const std::optional<T>& theirs, Better better) {
  if (!theirs) return;
  if (!mine || better(*theirs, *mine) || (!better(*mine, *theirs) && theirs->start < mine->start)) {
    mine = theirs;
  }
}

std::vector<Natural> canonical_rotation(const std::vector<Natural>& cycle) {
  const auto lowest = std::min_element(cycle.begin(), cycle.end());
  std::vector<Natural> out(lowest, cycle.end());
  out.insert(out.end(), cycle.begin(), lowest);
  return out;
}

void merge_cycle(std::vector<CycleInfo>& cycles, CycleInfo info) {
  auto it = std::lower_bound(cycles.begin(), cycles.end(), info,
                             [](const CycleInfo& a, const CycleInfo& b) { return a.values.front() < b.values.front(); });
  if (it != cycles.end() && it->values.front() == info.values.front()) {
    it->first_start = std::min(it->first_start, info.first_start);
  } else {
    cycles.insert(it, std::move(info));
  }
}

}  // namespace

void ScanSummary::add(std::uint64_t start, const OrbitRecord& record) {
  if (orbit_count() == 0) {
    first = last = start;
  } else {
    first = std::min(first, start);
    last = std::max(last, start);
  }
  status_counts[static_cast<std::size_t>(record.kind())] += 1;
  if (auto* c = std::get_if<status::CycleDetected>(&record.status)) {
    merge_cycle(cycles, CycleInfo{canonical_rotation(c->values), start});
  }

  ScanSummary one;
  one.first = one.last = start;
  if (auto r = br_ratio(record)) {
    one.max_ratio = RatioExtremum{*r, start, record.blue_count, record.red_count};
    ratio_histogram[ratio_bin(record.blue_count, record.red_count)] += 1;
  }
  one.max_peak = PeakExtremum{record.peak, start};
  one.max_steps = StepsExtremum{record.steps(), start};
  keep_best(max_ratio, one.max_ratio, [](const auto& a, const auto& b) { return a.ratio > b.ratio; });
  keep_best(max_peak, one.max_peak, [](const auto& a, const auto& b) { return a.peak > b.peak; });
  keep_best(max_steps, one.max_steps, [](const auto& a, const auto& b) { return a.steps > b.steps; });
}

void ScanSummary::merge(const ScanSummary& other) {
  if (other.orbit_count() == 0) return;
  if (!(other.multiplier == multiplier)) throw std::invalid_argument("cannot merge scans of different multipliers");
  if (orbit_count() == 0) {
    first = other.first;
    last = other.last;
  } else {
    first = std::min(first, other.first);
    last = std::max(last, other.last);
  }
  for (std::size_t i = 0; i < kStatusKinds; ++i) status_counts[i] += other.status_counts[i];
  for (std::size_t i = 0; i < kRatioBins; ++i) ratio_histogram[i] += other.ratio_histogram[i];
  for (const auto& c : other.cycles) merge_cycle(cycles, c);
  keep_best(max_ratio, other.max_ratio, [](const auto& a, const auto& b) { return a.ratio > b.ratio; });
  keep_best(max_peak, other.max_peak, [](const auto& a, const auto& b) { return a.peak > b.peak; });
  keep_best(max_steps, other.max_steps, [](const auto& a, const auto& b) { return a.steps > b.steps; });
}

std::string ScanSummary::to_json() const {
  nlohmann::ordered_json j;
  j["range"] = {first, last};
  j["multiplier"] = multiplier.value().get_str();
  auto& counts = j["status_counts"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < kStatusKinds; ++i) counts[status_name(static_cast<StatusKind>(i))] = status_counts[i];
  if (max_ratio) {
    j["max_ratio"] = {{"ratio", rational_text(max_ratio->ratio)},
                      {"decimal", to_double(max_ratio->ratio)},
                      {"start", max_ratio->start},
                      {"blue", max_ratio->blue},
                      {"red", max_ratio->red}};
  } else {
    j["max_ratio"] = nullptr;
  }
  j["max_peak"] = max_peak ? nlohmann::ordered_json{{"peak", max_peak->peak.get_str()}, {"start", max_peak->start}}
                           : nlohmann::ordered_json(nullptr);
  j["max_steps"] = max_steps ? nlohmann::ordered_json{{"steps", max_steps->steps}, {"start", max_steps->start}}
                             : nlohmann::ordered_json(nullptr);
  j["ratio_histogram"] = ratio_histogram;
  auto& cyc = j["cycles"] = nlohmann::ordered_json::array();
  for (const auto& c : cycles) {
    nlohmann::ordered_json entry;
    entry["length"] = c.values.size();
    entry["first_start"] = c.first_start;
    auto& v = entry["values"] = nlohmann::ordered_json::array();
    for (const auto& x : c.values) v.push_back(x.get_str());
    cyc.push_back(std::move(entry));
  }
  return j.dump();
}

namespace {

// Runs fn(chunk_index, lo, hi) for fixed-size chunks of [a, b] on `threads` workers.
template <typename Fn>
void for_each_chunk(std::uint64_t a, std::uint64_t b, std::uint64_t chunk, unsigned threads, Fn fn) {
  const std::uint64_t chunks = (b - a) / chunk + 1;
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t lo = a + c * chunk;
      const std::uint64_t hi = (b - lo < chunk - 1) ? b : lo + chunk - 1;
      fn(c, lo, hi);
    }
  };
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
}

void check_range(std::uint64_t a, std::uint64_t b) {
  if (a == 0) throw std::invalid_argument("scan range must start at 1 or above");
  if (b < a) throw std::invalid_argument("empty scan range");
}

constexpr OrbitOptions kStreaming{Retention::Streaming, CycleDetection::Brent};

}  // namespace

ScanSummary scan(std::uint64_t a, std::uint64_t b, const OddMultiplier& o, const OrbitLimits& limits,
                 unsigned threads, std::uint64_t chunk) {
  check_range(a, b);
  if (chunk == 0) throw std::invalid_argument("chunk size must be positive");
  const std::uint64_t chunks = (b - a) / chunk + 1;
  ScanSummary total;
  total.multiplier = o;
  std::vector<ScanSummary> parts(chunks, total);
  for_each_chunk(a, b, chunk, threads, [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
    ScanSummary& s = parts[c];
    for (std::uint64_t x = lo;; ++x) {
      s.add(x, orbit(natural_from_u64(x), o, limits, kStreaming));
      if (x == hi) break;
    }
  });
  for (const auto& p : parts) total.merge(p);
  return total;
}

std::pair<Rational, std::uint64_t> ratio_extrema(const ScanSummary& summary) {
  if (!summary.max_ratio) throw std::domain_error("no orbit with a red step in the scanned range");
  return {summary.max_ratio->ratio, summary.max_ratio->start};
}

std::vector<ScanRow> scan_rows(std::uint64_t a, std::uint64_t b, const OddMultiplier& o, const OrbitLimits& limits,
                               unsigned threads) {
  check_range(a, b);
  std::vector<ScanRow> rows(b - a + 1);
  for_each_chunk(a, b, kDefaultChunk, threads, [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t x = lo;; ++x) {
      const auto rec = orbit(natural_from_u64(x), o, limits, kStreaming);
      rows[x - a] = ScanRow{x, rec.kind(), rec.blue_count, rec.red_count, rec.peak};
      if (x == hi) break;
    }
  });
  return rows;
}

}  // namespace collatz
