#include "collatz_net/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "collatz_net/asymptotics.hpp"
#include "collatz_net/collatz_core.hpp"
#include "collatz_net/figures.hpp"
#include "collatz_net/fib_primes.hpp"
#include "collatz_net/path_tree.hpp"
#include "collatz_net/scanner.hpp"

namespace collatz {

namespace {

using json = nlohmann::ordered_json;

struct LimitArgs {
  std::string mult = "3";
  std::uint64_t max_steps = OrbitLimits::kDefaultMaxSteps;
  std::string max_value;

  void attach(CLI::App* app) {
    app->add_option("--mult", mult, "odd multiplier o >= 3")->capture_default_str();
    app->add_option("--max-steps", max_steps, "abort after this many steps")->capture_default_str();
    app->add_option("--max-value", max_value, "abort when a value exceeds this (default 2^128)");
  }

  OddMultiplier multiplier() const { return OddMultiplier(parse_natural(mult)); }
  OrbitLimits limits() const {
    return OrbitLimits(max_steps, max_value.empty() ? OrbitLimits::default_max_value() : parse_natural(max_value));
  }
};

std::string join_values(const std::vector<Natural>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += vs[i].get_str();
  }
  return s;
}

json orbit_json(const OrbitRecord& r) {
  json j;
  j["start"] = r.start.get_str();
  j["multiplier"] = r.multiplier.value().get_str();
  auto& vals = j["values"] = json::array();
  for (const auto& v : r.values) vals.push_back(v.get_str());
  j["colors"] = r.colors.to_string();
  j["blue"] = r.blue_count;
  j["red"] = r.red_count;
  j["steps"] = r.steps();
  j["peak"] = r.peak.get_str();
  j["min"] = r.min_element.get_str();
  j["status"] = status_name(r.kind());
  if (auto* c = std::get_if<status::CycleDetected>(&r.status)) {
    auto& cyc = j["cycle"] = json::array();
    for (const auto& v : c->values) cyc.push_back(v.get_str());
  }
  const auto br = br_ratio(r);
  j["br"] = br ? json(rational_text(*br)) : json(nullptr);
  return j;
}

int cmd_orbit(const std::string& x, const LimitArgs& la, bool as_json, std::ostream& out) {
  const auto rec = orbit(parse_natural(x), la.multiplier(), la.limits());
  if (as_json) {
    out << orbit_json(rec).dump() << '\n';
    return kExitOk;
  }
  const auto br = br_ratio(rec);
  fmt::print(out, "{}\n", join_values(rec.values));
  fmt::print(out, "status: {}\n", status_name(rec.kind()));
  if (auto* c = std::get_if<status::CycleDetected>(&rec.status)) fmt::print(out, "cycle: {}\n", join_values(c->values));
  fmt::print(out, "steps: {} blue: {} red: {}\n", rec.steps(), rec.blue_count, rec.red_count);
  fmt::print(out, "peak: {} min: {}\n", rec.peak.get_str(), rec.min_element.get_str());
  fmt::print(out, "br: {}\n", br ? rational_text(*br) : "undefined");
  return kExitOk;
}

int cmd_scan(std::uint64_t a, std::uint64_t b, const LimitArgs& la, unsigned threads, const std::string& csv,
             std::ostream& out, std::ostream& err) {
  const auto o = la.multiplier();
  const auto limits = la.limits();
  const auto summary = scan(a, b, o, limits, threads);
  out << summary.to_json() << '\n';
  if (!csv.empty()) {
    std::ofstream f(csv);
    if (!f) throw std::runtime_error("cannot write " + csv);
    f << "x,status,steps,blue,red,br,br_decimal,peak\n";
    for (const auto& r : scan_rows(a, b, o, limits, threads)) {
      std::string br = "-,-";
      if (r.red > 0) {
        const auto q = make_rational(natural_from_u64(r.blue), natural_from_u64(r.red));
        br = rational_text(q) + "," + format_real(to_double(q));
      }
      fmt::print(f, "{},{},{},{},{},{},{}\n", r.start, status_name(r.kind), r.blue + r.red, r.blue, r.red, br,
                 r.peak.get_str());
    }
  }
  if (o == OddMultiplier::classic() && summary.max_ratio && summary.max_ratio->ratio > Rational(5, 8)) {
    fmt::print(err, "B/R = {} at start {} exceeds 5/8\n", rational_text(summary.max_ratio->ratio),
               summary.max_ratio->start);
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_tree(std::uint32_t n, bool enumerate, std::ostream& out) {
  const auto census = edge_counts(n);
  const std::string q = n == 0 ? "-" : quotient(n).get_str();
  fmt::print(out, "iterations={} red={} blue={} quotient={}\n", n, census.red_edges.get_str(),
             census.blue_edges.get_str(), q);
  if (!enumerate) return kExitOk;
  const auto words = enumerate_words(n);
  std::uint64_t ends_red = 0;
  std::uint64_t ends_blue = 0;
  for (const auto& w : words) {
    fmt::print(out, "{}\n", w.empty() ? "(empty)" : w.to_string());
    if (!w.empty()) (w.letters.back() == EdgeColor::Red ? ends_red : ends_blue) += 1;
  }
  fmt::print(out, "words={} ending_red={} ending_blue={}\n", words.size(), ends_red, ends_blue);
  const bool agree = census.red_edges == ends_red && census.blue_edges == ends_blue;
  return agree ? kExitOk : kExitViolation;
}

const char* ordering_name(std::strong_ordering o) {
  return o == std::strong_ordering::less ? "less" : o == std::strong_ordering::greater ? "greater" : "equal";
}

int cmd_seq(const std::string& kind, const std::string& arg, std::ostream& out) {
  json j;
  if (kind == "limit-S") {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("limit-S expects <phi,o>");
    const double phi = std::stod(arg.substr(0, comma));
    const OddMultiplier o(parse_natural(arg.substr(comma + 1)));
    const auto r = limit_S(phi, o);
    const auto th = convergence_threshold(o);
    j["phi"] = phi;
    j["o"] = o.value().get_str();
    j["threshold"] = th.value;
    j["threshold_exceeds_max_phi"] = th.exceeds_max_phi;
    if (auto* c = std::get_if<limit::Converges>(&r)) {
      j["result"] = "Converges";
      j["value"] = c->value;
    } else {
      j["result"] = "Diverges";
    }
    out << j.dump() << '\n';
    return kExitOk;
  }

  const auto n = static_cast<std::uint32_t>(std::stoul(arg));
  if (n == 0) throw CLI::ValidationError("index must be >= 1");
  j["n"] = n;
  if (kind == "an") {
    j["log_a_n"] = a_n_log(n).value;
    j["neg_log_n"] = -std::log(static_cast<double>(n));
    j["a_n_vs_inverse_n"] = ordering_name(a_n_vs_inverse_n(n));
  } else if (kind == "phi") {
    const auto p = phi_n(n);
    j["phi_n"] = rational_text(p.value);
    j["decimal"] = to_double(p.value);
  } else if (kind == "golden-gap") {
    j["golden_gap"] = golden_gap(n);
  } else {
    throw CLI::ValidationError("unknown sequence '" + kind + "'");
  }
  out << j.dump() << '\n';
  return kExitOk;
}

json prime_list(const PrimeSet& s) {
  json a = json::array();
  for (auto p : s.primes()) a.push_back(p);
  return a;
}

int cmd_primes(const std::string& check, std::uint32_t n, std::ostream& out) {
  if (check == "check-t3") {
    const auto r = theoremfibo_check(n);
    out << r.to_json() << '\n';
    return r.pass ? kExitOk : kExitViolation;
  }
  json j;
  j["n"] = n;
  bool pass = true;
  if (check == "check-t1") {
    pass = theorem1_check(n);
    j["bound"] = fib(n + 2).get_str();
  } else if (check == "check-t2") {
    const auto w = theorem2_check(n);
    pass = w.holds;
    j["interval"] = {w.lower.get_str(), w.upper.get_str()};
    j["primes"] = prime_list(w.primes);
    j["primitive_divisor_exception"] = w.primitive_divisor_exception;
  } else if (check == "reconstruct") {
    const auto s = prime_reconstruction(n);
    j["bound"] = s.bound();
    j["count"] = s.size();
    j["primes"] = prime_list(s);
  } else if (check == "gcd-lemma") {
    const auto g = gcd_coprime_binomials(n);
    j["gcd"] = g.get_str();
    pass = g == n;
  } else {
    throw CLI::ValidationError("unknown primes check '" + check + "'");
  }
  j["pass"] = pass;
  out << j.dump() << '\n';
  return pass ? kExitOk : kExitViolation;
}

int cmd_figure(const std::string& name, const FigureParams& params, const std::string& path, std::ostream& out) {
  const auto series = emit_figure(name, params);
  if (path.empty()) {
    write_csv(series, out);
    return kExitOk;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  write_csv(series, f);
  fmt::print(out, "wrote {} rows to {}\n", series.rows.size(), path);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collatz network workbench"};
  app.require_subcommand(1);

  LimitArgs orbit_limits;
  std::string orbit_x;
  bool orbit_json_flag = false;
  auto* orbit_cmd = app.add_subcommand("orbit", "iterate one start");
  orbit_cmd->add_option("x", orbit_x, "start value")->required();
  orbit_limits.attach(orbit_cmd);
  orbit_cmd->add_flag("--json", orbit_json_flag, "emit the record as JSON");

  LimitArgs scan_limits;
  std::uint64_t scan_a = 0;
  std::uint64_t scan_b = 0;
  unsigned scan_threads = 0;
  std::string scan_csv;
  auto* scan_cmd = app.add_subcommand("scan", "aggregate orbit statistics over [a, b]");
  scan_cmd->add_option("a", scan_a)->required();
  scan_cmd->add_option("b", scan_b)->required();
  scan_limits.attach(scan_cmd);
  scan_cmd->add_option("--threads", scan_threads, "worker threads (0 = default)");
  scan_cmd->add_option("--csv", scan_csv, "write per-start rows to this file");

  std::uint32_t tree_n = 0;
  bool tree_enumerate = false;
  auto* tree_cmd = app.add_subcommand("tree", "edge census of the Collatz network at depth n");
  tree_cmd->add_option("n", tree_n)->required();
  tree_cmd->add_flag("--enumerate", tree_enumerate, "list every admissible word");

  std::string seq_kind;
  std::string seq_arg;
  auto* seq_cmd = app.add_subcommand("seq", "sequence values: an|phi|golden-gap <n>, limit-S <phi,o>");
  seq_cmd->add_option("kind", seq_kind)->required()->check(CLI::IsMember({"an", "phi", "golden-gap", "limit-S"}));
  seq_cmd->add_option("arg", seq_arg)->required();

  std::string primes_check;
  std::uint32_t primes_n = 0;
  auto* primes_cmd = app.add_subcommand("primes", "Fibonacci/prime checks");
  primes_cmd->add_option("check", primes_check)
      ->required()
      ->check(CLI::IsMember({"check-t1", "check-t2", "check-t3", "reconstruct", "gcd-lemma"}));
  primes_cmd->add_option("n", primes_n)->required();

  std::string figure_name;
  std::string figure_out;
  FigureParams figure_params;
  std::vector<std::uint64_t> figure_range;
  auto* figure_cmd = app.add_subcommand("figure", "emit figure data as CSV");
  figure_cmd->add_option("name", figure_name)
      ->required()
      ->check(CLI::IsMember({"succ", "rb", "quotient", "table1"}));
  figure_cmd->add_option("--out", figure_out, "output file (default stdout)");
  figure_cmd->add_option("--n", figure_params.n_max, "largest index for succ, rb, table1");
  figure_cmd->add_option("--range", figure_range, "start range for quotient")->expected(2);
  figure_cmd->add_option("--threads", figure_params.threads, "worker threads (0 = default)");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "error: {}\n{}", e.what(), app.help());
    return kExitUsage;
  }

  try {
    if (*orbit_cmd) return cmd_orbit(orbit_x, orbit_limits, orbit_json_flag, out);
    if (*scan_cmd) return cmd_scan(scan_a, scan_b, scan_limits, scan_threads, scan_csv, out, err);
    if (*tree_cmd) return cmd_tree(tree_n, tree_enumerate, out);
    if (*seq_cmd) return cmd_seq(seq_kind, seq_arg, out);
    if (*primes_cmd) return cmd_primes(primes_check, primes_n, out);
    if (*figure_cmd) {
      if (!figure_range.empty()) {
        figure_params.range_first = figure_range[0];
        figure_params.range_last = figure_range[1];
      }
      return cmd_figure(figure_name, figure_params, figure_out, out);
    }
  } catch (const CLI::ValidationError& e) {
    fmt::print(err, "error: {}\n{}", e.what(), app.help());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "error: {}\n{}", e.what(), app.help());
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    fmt::print(err, "error: {}\n{}", e.what(), app.help());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    fmt::print(err, "error: {}\n{}", e.what(), app.help());
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // a cross-check inside the library disagreed
    fmt::print(err, "invariant violation: {}\n", e.what());
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace collatz
