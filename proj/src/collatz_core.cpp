#include "collatz_net/collatz_core.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace collatz {

bool ColorWord::admissible() const {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i - 1] == EdgeColor::Blue && letters[i] == EdgeColor::Blue) return false;
  }
  return true;
}

std::size_t ColorWord::count(EdgeColor c) const {
  std::size_t n = 0;
  for (auto l : letters) n += (l == c);
  return n;
}

std::string ColorWord::to_string() const {
  std::string out;
  out.reserve(letters.size());
  for (auto l : letters) out.push_back(color_letter(l));
  return out;
}

ColorWord ColorWord::parse(std::string_view text) {
  ColorWord w;
  w.letters.reserve(text.size());
  for (char c : text) {
    if (c == 'R') w.letters.push_back(EdgeColor::Red);
    else if (c == 'B') w.letters.push_back(EdgeColor::Blue);
    else throw std::invalid_argument("color word letters must be R or B");
  }
  return w;
}

OddMultiplier::OddMultiplier(Natural o) : o_(std::move(o)) {
  if (o_ < 3 || mpz_even_p(o_.get_mpz_t())) {
    throw std::invalid_argument("multiplier must be odd and >= 3, got " + o_.get_str());
  }
}

Natural OrbitLimits::default_max_value() {
  Natural v = 1;
  v <<= 128;
  return v;
}

OrbitLimits::OrbitLimits(std::uint64_t max_steps, Natural max_value)
    : max_steps_(max_steps), max_value_(std::move(max_value)) {
  if (max_steps_ < 1) throw std::invalid_argument("max_steps must be >= 1");
  if (max_value_ < 2) throw std::invalid_argument("max_value must be >= 2");
}

StatusKind status_kind(const OrbitStatus& s) { return static_cast<StatusKind>(s.index()); }

const char* status_name(StatusKind k) {
  switch (k) {
    case StatusKind::ReachedOne: return "ReachedOne";
    case StatusKind::CycleDetected: return "CycleDetected";
    case StatusKind::ValueBoundExceeded: return "ValueBoundExceeded";
    case StatusKind::StepBoundExceeded: return "StepBoundExceeded";
  }
  return "?";
}

namespace {

bool is_odd(const Natural& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

// In-place map application; x must be >= 1.
void advance(Natural& x, const Natural& o) {
  if (is_odd(x)) {
    x *= o;
    x += 1;
  } else {
    mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
  }
}

// Collects counters, and values/colors when retention is Full.
class Accumulator {
 public:
  Accumulator(const Natural& start, Retention retention) : keep_(retention == Retention::Full) {
    reset(start);
  }

  void reset(const Natural& start) {
    blue_ = red_ = 0;
    peak_ = start;
    min_ = start;
    values_.clear();
    colors_.letters.clear();
    if (keep_) values_.push_back(start);
  }

  // Records the step prev -> next.
  void push(const Natural& prev, const Natural& next) {
    const EdgeColor c = is_odd(prev) ? EdgeColor::Blue : EdgeColor::Red;
    (c == EdgeColor::Blue ? blue_ : red_) += 1;
    if (next > peak_) peak_ = next;
    if (next < min_) min_ = next;
    if (keep_) {
      values_.push_back(next);
      colors_.letters.push_back(c);
    }
  }

  std::uint64_t steps() const { return blue_ + red_; }

  OrbitRecord finish(const Natural& start, const OddMultiplier& o, OrbitStatus status) && {
    OrbitRecord r;
    r.start = start;
    r.multiplier = o;
    r.values = std::move(values_);
    r.colors = std::move(colors_);
    r.blue_count = blue_;
    r.red_count = red_;
    r.peak = std::move(peak_);
    r.min_element = std::move(min_);
    r.status = std::move(status);
    return r;
  }

 private:
  bool keep_;
  std::uint64_t blue_ = 0;
  std::uint64_t red_ = 0;
  Natural peak_;
  Natural min_;
  std::vector<Natural> values_;
  ColorWord colors_;
};

OrbitRecord orbit_visited_set(const Natural& start, const OddMultiplier& o, const OrbitLimits& limits,
                              Retention retention) {
  Accumulator acc(start, retention);
  std::unordered_set<Natural, NaturalHash> seen;
  seen.insert(start);
  Natural x = start;
  Natural prev;
  while (true) {
    prev = x;
    advance(x, o.value());
    acc.push(prev, x);
    if (x == 1) return std::move(acc).finish(start, o, status::ReachedOne{});
    if (seen.contains(x)) {
      // Rebuild the cycle by walking from the recurring value until it comes back.
      status::CycleDetected cyc;
      Natural y = x;
      do {
        cyc.values.push_back(y);
        advance(y, o.value());
      } while (y != x);
      return std::move(acc).finish(start, o, std::move(cyc));
    }
    if (x > limits.max_value()) return std::move(acc).finish(start, o, status::ValueBoundExceeded{});
    if (acc.steps() >= limits.max_steps()) return std::move(acc).finish(start, o, status::StepBoundExceeded{});
    seen.insert(x);
  }
}

// Brent's power-of-two cycle finder state. `saved` is the value at the last checkpoint.
struct BrentState {
  Natural saved;
  std::uint64_t power = 1;
  std::uint64_t lam = 0;

  // Called after each step with the new value; returns the cycle length on a hit.
  std::optional<std::uint64_t> observe(const Natural& x) {
    ++lam;
    if (x == saved) return lam;
    if (lam == power) {
      saved = x;
      power *= 2;
      lam = 0;
    }
    return std::nullopt;
  }
};

// Index of the first value that recurs, given the cycle length.
std::uint64_t cycle_offset(const Natural& start, const Natural& o, std::uint64_t cycle_len) {
  Natural tortoise = start;
  Natural hare = start;
  for (std::uint64_t i = 0; i < cycle_len; ++i) advance(hare, o);
  std::uint64_t mu = 0;
  while (tortoise != hare) {
    advance(tortoise, o);
    advance(hare, o);
    ++mu;
  }
  return mu;
}

OrbitRecord replay_cycle(const Natural& start, const OddMultiplier& o, Accumulator acc, std::uint64_t cycle_len) {
  const std::uint64_t mu = cycle_offset(start, o.value(), cycle_len);
  acc.reset(start);
  Natural x = start;
  Natural prev;
  status::CycleDetected cyc;
  for (std::uint64_t i = 0; i < mu + cycle_len; ++i) {
    if (i >= mu) cyc.values.push_back(x);
    prev = x;
    advance(x, o.value());
    acc.push(prev, x);
  }
  return std::move(acc).finish(start, o, std::move(cyc));
}

OrbitRecord orbit_brent(const Natural& start, const OddMultiplier& o, const OrbitLimits& limits,
                        Retention retention) {
  Accumulator acc(start, retention);
  BrentState brent{start};
  Natural x = start;
  Natural prev;
  while (true) {
    prev = x;
    advance(x, o.value());
    acc.push(prev, x);
    if (x == 1) return std::move(acc).finish(start, o, status::ReachedOne{});
    if (auto len = brent.observe(x)) return replay_cycle(start, o, std::move(acc), *len);
    if (x > limits.max_value()) return std::move(acc).finish(start, o, status::ValueBoundExceeded{});
    if (acc.steps() >= limits.max_steps()) break;
  }

  // Step bound hit. A recurrence may already have happened without Brent noticing;
  // the checkpoint scheme finds any cycle with offset + length <= max_steps within
  // 3 * max_steps further steps. Values inside a cycle never exceed the bound.
  const std::uint64_t budget = 4 * limits.max_steps();
  for (std::uint64_t i = 0; i < budget; ++i) {
    advance(x, o.value());
    if (x == 1 || x > limits.max_value()) break;
    if (auto len = brent.observe(x)) {
      const std::uint64_t mu = cycle_offset(start, o.value(), *len);
      if (mu + *len <= limits.max_steps()) return replay_cycle(start, o, std::move(acc), *len);
      break;
    }
  }
  return std::move(acc).finish(start, o, status::StepBoundExceeded{});
}

}  // namespace

Natural step(const Natural& x, const OddMultiplier& o) {
  if (x == 0) throw std::invalid_argument("the map is defined on positive integers only");
  Natural y = x;
  advance(y, o.value());
  return y;
}

OrbitRecord orbit(const Natural& x, const OddMultiplier& o, const OrbitLimits& limits, OrbitOptions options) {
  if (x <= 0) throw std::invalid_argument("orbit start must be >= 1");
  if (x == 1) return Accumulator(x, options.retention).finish(x, o, status::ReachedOne{});
  return options.detection == CycleDetection::VisitedSet ? orbit_visited_set(x, o, limits, options.retention)
                                                         : orbit_brent(x, o, limits, options.retention);
}

Natural col_min(const OrbitRecord& record) { return record.min_element; }

std::optional<Rational> br_ratio(const OrbitRecord& record) {
  if (record.red_count == 0) return std::nullopt;
  return make_rational(natural_from_u64(record.blue_count), natural_from_u64(record.red_count));
}

}  // namespace collatz
